//! Finite limits, colimits and exponentials of relational objects.

use super::search::homs;
use super::{Flavor, RelMap, RelObject};
use crate::ambient::{CoconeData, ConeData};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

pub type RelCocone = CoconeData<RelObject, RelMap>;
pub type RelCone = ConeData<RelObject, RelMap>;

fn same_flavor(x: &RelObject, y: &RelObject) -> Result<()> {
    if x.flavor() != y.flavor() {
        return Err(Error::FlavorMismatch {
            expected: x.flavor(),
            found: y.flavor(),
        });
    }
    Ok(())
}

/// `x * y` with element `(a, b)` stored at `a * |y| + b`.
pub fn product(x: &RelObject, y: &RelObject) -> Result<RelCone> {
    same_flavor(x, y)?;
    let (n, m) = (x.size(), y.size());
    let rows = (0..n * m)
        .map(|p| {
            let (a, b) = (p / m, p % m);
            Bits::from_fn(n * m, |q| x.related(a, q / m) && y.related(b, q % m))
        })
        .collect();
    let apex = RelObject::from_rows(x.flavor(), rows)?;
    let p0 = (0..n * m).map(|p| p / m).collect();
    let p1 = (0..n * m).map(|p| p % m).collect();
    Ok(ConeData {
        legs: vec![
            RelMap::new_unchecked(apex.clone(), x.clone(), p0),
            RelMap::new_unchecked(apex.clone(), y.clone(), p1),
        ],
        apex,
    })
}

pub fn pair(prod: &RelCone, f: &RelMap, g: &RelMap) -> Result<RelMap> {
    if f.src() != g.src() || f.tgt() != prod.legs[0].tgt() || g.tgt() != prod.legs[1].tgt() {
        return Err(Error::NotComposable);
    }
    let m = g.tgt().size();
    let assign = (0..f.src().size()).map(|i| f.apply(i) * m + g.apply(i)).collect();
    RelMap::new(f.src().clone(), prod.apex.clone(), assign)
}

/// `x + y` with the elements of `x` first.
pub fn coproduct(x: &RelObject, y: &RelObject) -> Result<RelCocone> {
    same_flavor(x, y)?;
    let (n, m) = (x.size(), y.size());
    let rows = (0..n + m)
        .map(|p| {
            Bits::from_fn(n + m, |q| match (p < n, q < n) {
                (true, true) => x.related(p, q),
                (false, false) => y.related(p - n, q - n),
                _ => false,
            })
        })
        .collect();
    let apex = RelObject::from_rows(x.flavor(), rows)?;
    Ok(CoconeData {
        legs: vec![
            RelMap::new_unchecked(x.clone(), apex.clone(), (0..n).collect()),
            RelMap::new_unchecked(y.clone(), apex.clone(), (n..n + m).collect()),
        ],
        apex,
    })
}

pub fn copair(sum: &RelCocone, f: &RelMap, g: &RelMap) -> Result<RelMap> {
    if f.tgt() != g.tgt() || f.src() != sum.legs[0].src() || g.src() != sum.legs[1].src() {
        return Err(Error::NotComposable);
    }
    let assign = f.assign().iter().chain(g.assign()).copied().collect();
    RelMap::new(sum.apex.clone(), f.tgt().clone(), assign)
}

/// Pushout of `f: a -> b` and `g: a -> c`. Classes of `b + c` are named by
/// their least member, so elements of `b` come first.
pub fn pushout(f: &RelMap, g: &RelMap) -> Result<RelCocone> {
    if f.src() != g.src() {
        return Err(Error::NotComposable);
    }
    let (b, c) = (f.tgt(), g.tgt());
    same_flavor(b, c)?;
    let nb = b.size();
    let mut uf = UnionFind::new(nb + c.size());
    for a in 0..f.src().size() {
        uf.union(f.apply(a), nb + g.apply(a));
    }
    let glued = |uf: &mut UnionFind| {
        let (class, k) = uf.classes();
        let mut rows = vec![Bits::new(k); k];
        for (p, q) in b.pairs() {
            rows[class[p]].insert(class[q]);
        }
        for (p, q) in c.pairs() {
            rows[class[nb + p]].insert(class[nb + q]);
        }
        (class, rows)
    };
    let (class, rows) = if b.flavor() == Flavor::Ord {
        // Ordered sets: identify elements that end up mutually related,
        // until the preorder pushout is antisymmetric.
        loop {
            let (class, mut rows) = glued(&mut uf);
            let k = rows.len();
            Flavor::Preord.close(k, &mut rows)?;
            let mut rep = vec![usize::MAX; k];
            for (x, &cl) in class.iter().enumerate() {
                if rep[cl] == usize::MAX {
                    rep[cl] = x;
                }
            }
            let mut merged = false;
            for p in 0..k {
                for q in p + 1..k {
                    if rows[p].contains(q) && rows[q].contains(p) {
                        merged |= uf.union(rep[p], rep[q]);
                    }
                }
            }
            if !merged {
                break (class, rows);
            }
        }
    } else {
        glued(&mut uf)
    };
    let apex = RelObject::from_rows(b.flavor(), rows)?;
    Ok(CoconeData {
        legs: vec![
            RelMap::new_unchecked(b.clone(), apex.clone(), class[..nb].to_vec()),
            RelMap::new_unchecked(c.clone(), apex.clone(), class[nb..].to_vec()),
        ],
        apex,
    })
}

/// Pullback of `f: b -> d` and `g: c -> d`: pairs `(x, y)` with
/// `f(x) = g(y)` in lexicographic order.
pub fn pullback(f: &RelMap, g: &RelMap) -> Result<RelCone> {
    if f.tgt() != g.tgt() {
        return Err(Error::NotComposable);
    }
    let (b, c) = (f.src(), g.src());
    let elems: Vec<(usize, usize)> = (0..b.size())
        .flat_map(|x| (0..c.size()).map(move |y| (x, y)))
        .filter(|&(x, y)| f.apply(x) == g.apply(y))
        .collect();
    let rows = elems
        .iter()
        .map(|&(x, y)| {
            Bits::from_fn(elems.len(), |q| {
                let (x2, y2) = elems[q];
                b.related(x, x2) && c.related(y, y2)
            })
        })
        .collect();
    let apex = RelObject::from_rows(b.flavor(), rows)?;
    Ok(ConeData {
        legs: vec![
            RelMap::new_unchecked(apex.clone(), b.clone(), elems.iter().map(|e| e.0).collect()),
            RelMap::new_unchecked(apex.clone(), c.clone(), elems.iter().map(|e| e.1).collect()),
        ],
        apex,
    })
}

/// `y^x` together with its evaluation map `y^x * x -> y`.
#[derive(Clone, Debug)]
pub struct Exponential {
    pub object: RelObject,
    /// The elements of `object`, in lexicographic order of assignments.
    pub maps: Vec<RelMap>,
    pub product: RelCone,
    pub eval: RelMap,
}

impl Exponential {
    pub fn index_of(&self, m: &RelMap) -> Option<usize> {
        self.maps.binary_search_by(|p| p.assign().cmp(m.assign())).ok()
    }

    /// The transpose `z -> y^x` of `h: z * x -> y`.
    pub fn transpose(&self, z: &RelObject, h: &RelMap) -> Result<RelMap> {
        let x = self.product.legs[1].tgt();
        let m = x.size();
        let mut assign = Vec::with_capacity(z.size());
        for p in 0..z.size() {
            let slice: Vec<usize> = (0..m).map(|q| h.apply(p * m + q)).collect();
            let idx = self
                .maps
                .binary_search_by(|f| f.assign().cmp(&slice[..]))
                .map_err(|_| Error::Internal("transpose of a non-map".into()))?;
            assign.push(idx);
        }
        RelMap::new(z.clone(), self.object.clone(), assign)
    }
}

pub fn exponential(x: &RelObject, y: &RelObject, cap: u64) -> Result<Exponential> {
    same_flavor(x, y)?;
    let maps = homs(x, y, cap)?;
    let related = |f: &RelMap, g: &RelMap| {
        (0..x.size()).all(|p| x.row(p).iter().all(|q| y.related(f.apply(p), g.apply(q))))
    };
    let rows = maps
        .iter()
        .map(|f| Bits::from_fn(maps.len(), |j| related(f, &maps[j])))
        .collect();
    let object = RelObject::from_rows(x.flavor(), rows)
        .map_err(|e| Error::Internal(format!("exponential relation is not closed: {e}")))?;
    let product = product(&object, x)?;
    let m = x.size();
    let eval_assign = (0..product.apex.size())
        .map(|p| maps[p / m].apply(p % m))
        .collect();
    let eval = RelMap::new(product.apex.clone(), y.clone(), eval_assign)?;
    Ok(Exponential {
        object,
        maps,
        product,
        eval,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finrel::Flavor;

    const CAP: u64 = 1_000_000;

    fn graph(n: usize, edges: &[(usize, usize)]) -> RelObject {
        RelObject::new(Flavor::Graph, n, edges).unwrap()
    }

    fn k(n: usize) -> RelObject {
        RelObject::complete(Flavor::Graph, n).unwrap()
    }

    fn test_objects(flavor: Flavor) -> Vec<RelObject> {
        let mut out = vec![RelObject::empty(flavor), RelObject::point(flavor)];
        out.push(RelObject::discrete(flavor, 2));
        if let Ok(c) = RelObject::chain(flavor, 2) {
            out.push(c);
        }
        if let Ok(c) = RelObject::complete(flavor, 2) {
            out.push(c);
        }
        if flavor == Flavor::Graph {
            out.push(graph(3, &[(0, 1)]));
        }
        out
    }

    #[test]
    fn two_times_k2_is_two_edges() {
        let p = product(&RelObject::discrete(Flavor::Graph, 2), &k(2)).unwrap();
        assert_eq!(p.apex, graph(4, &[(0, 1), (2, 3)]));
    }

    #[test]
    fn k2_times_k2_is_k4() {
        assert_eq!(product(&k(2), &k(2)).unwrap().apex, k(4));
    }

    #[test]
    fn coproduct_with_empty() {
        let x = graph(3, &[(0, 1)]);
        let s = coproduct(&x, &RelObject::empty(Flavor::Graph)).unwrap();
        assert_eq!(s.apex, x);
        assert!(s.legs[0].is_iso());
    }

    /// Oracle: mediating maps counted by brute force over all assignments.
    fn count_mediators(apex: &RelObject, target: &RelObject, legs: &[(RelMap, RelMap)]) -> usize {
        homs(apex, target, CAP)
            .unwrap()
            .into_iter()
            .filter(|d| legs.iter().all(|(l, t)| l.then(d).unwrap() == *t))
            .count()
    }

    #[test]
    fn product_universal_property() {
        for flavor in [Flavor::Graph, Flavor::Preord] {
            let objs = test_objects(flavor);
            for x in &objs {
                for y in &objs {
                    let p = product(x, y).unwrap();
                    for z in &objs {
                        for f in homs(z, x, CAP).unwrap() {
                            for g in homs(z, y, CAP).unwrap() {
                                let h = pair(&p, &f, &g).unwrap();
                                assert_eq!(h.then(&p.legs[0]).unwrap(), f);
                                assert_eq!(h.then(&p.legs[1]).unwrap(), g);
                                let count = homs(z, &p.apex, CAP)
                                    .unwrap()
                                    .into_iter()
                                    .filter(|d| {
                                        d.then(&p.legs[0]).unwrap() == f
                                            && d.then(&p.legs[1]).unwrap() == g
                                    })
                                    .count();
                                assert_eq!(count, 1);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ordered_pushouts_identify_cycles() {
        // gluing the ends of 0 <= 1 to the ends of 1 <= 0 leaves a point
        let two = RelObject::discrete(Flavor::Ord, 2);
        let chain = RelObject::chain(Flavor::Ord, 2).unwrap();
        let up = RelMap::new(two.clone(), chain.clone(), vec![0, 1]).unwrap();
        let down = RelMap::new(two, chain, vec![1, 0]).unwrap();
        let po = pushout(&up, &down).unwrap();
        assert_eq!(po.apex.size(), 1);
        // a cycle through a third element collapses all of it
        let three = RelObject::chain(Flavor::Ord, 3).unwrap();
        let ends = RelMap::new(RelObject::discrete(Flavor::Ord, 2), three, vec![0, 2]).unwrap();
        let back = RelMap::new(RelObject::discrete(Flavor::Ord, 2), RelObject::chain(Flavor::Ord, 2).unwrap(), vec![1, 0]).unwrap();
        assert_eq!(pushout(&ends, &back).unwrap().apex.size(), 1);
    }

    #[test]
    fn pushout_universal_property() {
        for flavor in [Flavor::Graph, Flavor::Preord, Flavor::EqRel, Flavor::Ord] {
            let objs = test_objects(flavor);
            let mut spans = Vec::new();
            for a in &objs {
                for b in &objs {
                    for c in &objs {
                        for f in homs(a, b, CAP).unwrap() {
                            for g in homs(a, c, CAP).unwrap() {
                                spans.push((f.clone(), g));
                            }
                        }
                    }
                }
            }
            for (f, g) in spans.iter().step_by(7) {
                let po = pushout(f, g).unwrap();
                for z in &objs {
                    for h in homs(f.tgt(), z, CAP).unwrap() {
                        for k in homs(g.tgt(), z, CAP).unwrap() {
                            let commutes = f.then(&h).unwrap() == g.then(&k).unwrap();
                            let legs = [(po.legs[0].clone(), h.clone()), (po.legs[1].clone(), k)];
                            let n = count_mediators(&po.apex, z, &legs);
                            assert_eq!(n, commutes as usize, "{f:?} {g:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pushout_along_identity() {
        let x = graph(3, &[(0, 1)]);
        let f = RelMap::new(RelObject::point(Flavor::Graph), x.clone(), vec![2]).unwrap();
        let po = pushout(&RelMap::identity(f.src()), &f).unwrap();
        assert!(po.legs[1].is_iso());
    }

    #[test]
    fn pushout_of_edge_adds_one_edge() {
        let two = RelObject::discrete(Flavor::Graph, 2);
        let edge = RelMap::new(two.clone(), k(2), vec![0, 1]).unwrap();
        let z = graph(4, &[(0, 1), (2, 3)]);
        for a in 0..4 {
            for b in 0..4 {
                let attach = RelMap::new(two.clone(), z.clone(), vec![a, b]).unwrap();
                let po = pushout(&attach, &edge).unwrap();
                // Oracle: insert the edge directly.
                let mut pairs: Vec<_> = z.pairs().collect();
                pairs.push((a, b));
                assert_eq!(po.apex, graph(4, &pairs));
            }
        }
    }

    #[test]
    fn collapse_of_k4_minus() {
        let k4m = RelObject::complete_minus_edge(4);
        let incl = RelMap::new(k4m.clone(), k(4), vec![0, 1, 2, 3]).unwrap();
        let collapse = RelMap::new(k4m, RelObject::complete_minus_edge(3), vec![0, 1, 2, 2]).unwrap();
        let po = pushout(&collapse, &incl).unwrap();
        assert_eq!(po.apex, k(3));
        assert!(po.legs[0].is_mono());
    }

    #[test]
    fn pullback_is_fibre_product() {
        let path = graph(3, &[(0, 1), (1, 2)]);
        let f = RelMap::to_point(&path);
        let pb = pullback(&f, &f).unwrap();
        assert_eq!(pb.apex, product(&path, &path).unwrap().apex);
    }

    #[test]
    fn k2_to_the_two_has_four_related_maps() {
        let e = exponential(&RelObject::discrete(Flavor::Graph, 2), &k(2), CAP).unwrap();
        assert_eq!(e.maps.len(), 4);
        assert!(e.object.is_complete());
    }

    #[test]
    fn exponential_of_point_is_base() {
        let y = graph(3, &[(0, 1)]);
        let e = exponential(&RelObject::point(Flavor::Graph), &y, CAP).unwrap();
        assert_eq!(e.object, y);
    }

    #[test]
    fn exponential_into_transitive_is_transitive() {
        let y = RelObject::new(Flavor::Graph, 3, &[(0, 1)]).unwrap();
        let x = graph(3, &[(0, 1), (1, 2)]);
        let e = exponential(&x, &y, CAP).unwrap();
        let n = e.object.size();
        let rel = |a: usize, b: usize| e.object.related(a, b);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rel(a, b) && rel(b, c) {
                        assert!(rel(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn exponential_adjunction_counts() {
        for flavor in [Flavor::Graph, Flavor::Preord, Flavor::EqRel, Flavor::Set] {
            let objs = test_objects(flavor);
            for x in &objs {
                for y in &objs {
                    for z in &objs {
                        let e = exponential(y, z, CAP).unwrap();
                        let xy = product(x, y).unwrap();
                        let left = homs(&xy.apex, z, CAP).unwrap();
                        let right = homs(x, &e.object, CAP).unwrap();
                        assert_eq!(left.len(), right.len());
                        {
                            let mut transposed: Vec<_> = left
                                .iter()
                                .map(|h| e.transpose(x, h).unwrap())
                                .collect();
                            transposed.sort_by(|a, b| a.assign().cmp(b.assign()));
                            transposed.dedup();
                            assert_eq!(transposed, right);
                        }
                    }
                }
            }
        }
    }
}
