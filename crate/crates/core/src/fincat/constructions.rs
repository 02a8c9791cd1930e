//! Products, coproducts and the object functor.

use super::{CatFunctor, FinCategory};
use crate::error::{Error, Result};
use crate::finrel::{Flavor, RelMap, RelObject};

/// `c x d` with projections. Object `(x, y)` sits at `x * |Ob d| + y`;
/// identities come first, then the remaining pairs of arrows in
/// lexicographic order.
pub fn product_with(c: &FinCategory, d: &FinCategory) -> (FinCategory, CatFunctor, CatFunctor) {
    let (nc, nd) = (c.n_obj(), d.n_obj());
    let mut pairs: Vec<(usize, usize)> = (0..nc * nd).map(|o| (o / nd, o % nd)).collect();
    for f in 0..c.n_arrows() {
        for g in 0..d.n_arrows() {
            if !(c.is_identity(f) && d.is_identity(g)) {
                pairs.push((f, g));
            }
        }
    }
    let n = pairs.len();
    let mut index = vec![0; c.n_arrows() * d.n_arrows()];
    for (k, &(f, g)) in pairs.iter().enumerate() {
        index[f * d.n_arrows() + g] = k;
    }
    let obj = |x: usize, y: usize| x * nd + y;
    let src = pairs.iter().map(|&(f, g)| obj(c.src(f), d.src(g))).collect();
    let tgt = pairs.iter().map(|&(f, g)| obj(c.tgt(f), d.tgt(g))).collect();
    let mut comp = vec![None; n * n];
    for (a, &(f, g)) in pairs.iter().enumerate() {
        for (b, &(f2, g2)) in pairs.iter().enumerate() {
            if let (Some(h), Some(k)) = (c.try_then(f, f2), d.try_then(g, g2)) {
                comp[a * n + b] = Some(index[h * d.n_arrows() + k]);
            }
        }
    }
    let cat = FinCategory::new(nc * nd, src, tgt, comp).expect("product of categories");
    let p0 = CatFunctor::new_unchecked(
        cat.clone(),
        c.clone(),
        (0..nc * nd).map(|o| o / nd).collect(),
        pairs.iter().map(|p| p.0).collect(),
    );
    let p1 = CatFunctor::new_unchecked(
        cat.clone(),
        d.clone(),
        (0..nc * nd).map(|o| o % nd).collect(),
        pairs.iter().map(|p| p.1).collect(),
    );
    (cat, p0, p1)
}

/// Arrow of `c x d` for a pair of arrows.
pub fn product_arrow(c: &FinCategory, d: &FinCategory, f: usize, g: usize) -> usize {
    let nd = d.n_obj();
    if c.is_identity(f) && d.is_identity(g) {
        return f * nd + g;
    }
    let mut k = c.n_obj() * nd;
    for f2 in 0..c.n_arrows() {
        for g2 in 0..d.n_arrows() {
            if c.is_identity(f2) && d.is_identity(g2) {
                continue;
            }
            if (f2, g2) == (f, g) {
                return k;
            }
            k += 1;
        }
    }
    unreachable!("arrow pair out of range")
}

/// `<f, g>` into a product built by [`product_with`].
pub fn pair_functors(prod: &FinCategory, f: &CatFunctor, g: &CatFunctor) -> Result<CatFunctor> {
    if f.src() != g.src() {
        return Err(Error::NotComposable);
    }
    let (c, d) = (f.tgt(), g.tgt());
    let nd = d.n_obj();
    let obj = (0..f.src().n_obj())
        .map(|x| f.on_obj(x) * nd + g.on_obj(x))
        .collect();
    let arr = (0..f.src().n_arrows())
        .map(|a| product_arrow(c, d, f.on_arr(a), g.on_arr(a)))
        .collect();
    CatFunctor::new(f.src().clone(), prod.clone(), obj, arr)
}

/// `c + d` with injections. Objects of `c` come first; identities of both
/// precede all other arrows.
pub fn coproduct(c: &FinCategory, d: &FinCategory) -> (FinCategory, CatFunctor, CatFunctor) {
    let (nc, nd) = (c.n_obj(), d.n_obj());
    let n = c.n_arrows() + d.n_arrows();
    let pos_c = |f: usize| if c.is_identity(f) { f } else { nd + f };
    let pos_d = |g: usize| {
        if d.is_identity(g) {
            nc + g
        } else {
            c.n_arrows() + g
        }
    };
    let mut src = vec![0; n];
    let mut tgt = vec![0; n];
    for f in 0..c.n_arrows() {
        src[pos_c(f)] = c.src(f);
        tgt[pos_c(f)] = c.tgt(f);
    }
    for g in 0..d.n_arrows() {
        src[pos_d(g)] = nc + d.src(g);
        tgt[pos_d(g)] = nc + d.tgt(g);
    }
    let mut comp = vec![None; n * n];
    for f in 0..c.n_arrows() {
        for f2 in c.arrows_from(c.tgt(f)) {
            comp[pos_c(f) * n + pos_c(f2)] = Some(pos_c(c.then(f, f2)));
        }
    }
    for g in 0..d.n_arrows() {
        for g2 in d.arrows_from(d.tgt(g)) {
            comp[pos_d(g) * n + pos_d(g2)] = Some(pos_d(d.then(g, g2)));
        }
    }
    let cat = FinCategory::new(nc + nd, src, tgt, comp).expect("coproduct of categories");
    let i0 = CatFunctor::new_unchecked(
        c.clone(),
        cat.clone(),
        (0..nc).collect(),
        (0..c.n_arrows()).map(pos_c).collect(),
    );
    let i1 = CatFunctor::new_unchecked(
        d.clone(),
        cat.clone(),
        (nc..nc + nd).collect(),
        (0..d.n_arrows()).map(pos_d).collect(),
    );
    (cat, i0, i1)
}

/// `(f | g)` out of a coproduct built by [`coproduct`].
pub fn copair_functors(sum: &FinCategory, f: &CatFunctor, g: &CatFunctor) -> Result<CatFunctor> {
    if f.tgt() != g.tgt() {
        return Err(Error::NotComposable);
    }
    let (c, d) = (f.src(), g.src());
    let (_, i0, i1) = coproduct(c, d);
    if i0.tgt() != sum {
        return Err(Error::NotComposable);
    }
    let mut obj = vec![0; sum.n_obj()];
    let mut arr = vec![0; sum.n_arrows()];
    for x in 0..c.n_obj() {
        obj[i0.on_obj(x)] = f.on_obj(x);
    }
    for y in 0..d.n_obj() {
        obj[i1.on_obj(y)] = g.on_obj(y);
    }
    for a in 0..c.n_arrows() {
        arr[i0.on_arr(a)] = f.on_arr(a);
    }
    for b in 0..d.n_arrows() {
        arr[i1.on_arr(b)] = g.on_arr(b);
    }
    CatFunctor::new(sum.clone(), f.tgt().clone(), obj, arr)
}

/// The set of objects.
pub fn ob(c: &FinCategory) -> RelObject {
    RelObject::discrete(Flavor::Set, c.n_obj())
}

pub fn ob_map(f: &CatFunctor) -> RelMap {
    RelMap::new(ob(f.src()), ob(f.tgt()), f.obj_map().to_vec()).expect("maps of sets")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{cat_pushout, enumerate_functors, isomorphisms, PushoutBound};
    use crate::finrel;

    const CAP: u64 = 1_000_000;

    #[test]
    fn product_counts() {
        let (p, _, _) = product_with(&FinCategory::chain2(), &FinCategory::indiscrete(2));
        assert_eq!(p.n_arrows(), 3 * 4);
        let (q, p0, _) = product_with(&FinCategory::parallel_pair(), &FinCategory::one());
        assert!(p0.is_iso());
        assert_eq!(q.n_arrows(), 4);
        let (r, _, p1) = product_with(&FinCategory::one(), &FinCategory::indiscrete(2));
        assert_eq!(r, FinCategory::indiscrete(2));
        assert!(p1.is_iso());
    }

    #[test]
    fn product_pairing_roundtrip() {
        let c = FinCategory::chain2();
        let d = FinCategory::z2();
        let (p, p0, p1) = product_with(&c, &d);
        for f in enumerate_functors(&c, &c, CAP).unwrap() {
            for g in enumerate_functors(&c, &d, CAP).unwrap() {
                let h = pair_functors(&p, &f, &g).unwrap();
                assert_eq!(h.then(&p0).unwrap(), f);
                assert_eq!(h.then(&p1).unwrap(), g);
            }
        }
    }

    #[test]
    fn coproduct_and_copair() {
        let c = FinCategory::chain2();
        let d = FinCategory::z2();
        let (s, i0, i1) = coproduct(&c, &d);
        assert_eq!(s.n_obj(), 3);
        assert_eq!(s.n_arrows(), 5);
        let z = FinCategory::indiscrete(2);
        for f in enumerate_functors(&c, &z, CAP).unwrap() {
            for g in enumerate_functors(&d, &z, CAP).unwrap() {
                let h = copair_functors(&s, &f, &g).unwrap();
                assert_eq!(i0.then(&h).unwrap(), f);
                assert_eq!(i1.then(&h).unwrap(), g);
            }
        }
    }

    #[test]
    fn ob_preserves_pushouts() {
        let d2 = FinCategory::discrete(2);
        let f = CatFunctor::new(d2, FinCategory::chain2(), vec![0, 1], vec![0, 1]).unwrap();
        let (apex, ib, ic) = cat_pushout(&f, &f, PushoutBound::default()).unwrap();
        let po = finrel::pushout(&ob_map(&f), &ob_map(&f)).unwrap();
        assert_eq!(po.apex, ob(&apex));
        assert_eq!(po.legs[0], ob_map(&ib));
        assert_eq!(po.legs[1], ob_map(&ic));
        assert!(!isomorphisms(&apex, &FinCategory::parallel_pair(), CAP).unwrap().is_empty());
    }
}
