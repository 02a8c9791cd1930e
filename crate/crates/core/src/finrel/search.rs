//! Hom-set search, lifting problems and isomorphism search for relational
//! objects, all phrased as binary constraint problems.

use std::ops::ControlFlow;
use std::sync::Arc;

use super::{RelMap, RelObject};
use crate::bits::Bits;
use crate::csp::{Csp, Table};
use crate::error::{Error, Result};

fn relation_table(x: &RelObject) -> Arc<Table> {
    Table::from_fn(x.size(), x.size(), |p, q| x.related(p, q))
}

/// Adds "variables `vars[a]`, `vars[b]` land in related elements of `x`"
/// for every related pair of `a_obj`.
fn constrain_hom(csp: &mut Csp, a_obj: &RelObject, vars: &[usize], table: &Arc<Table>) {
    let symmetric = a_obj.flavor().symmetric();
    for (p, q) in a_obj.pairs() {
        if symmetric && p > q {
            continue;
        }
        csp.constrain(vars[p], vars[q], table.clone());
    }
}

fn hom_csp(a: &RelObject, x: &RelObject) -> Csp {
    let mut csp = Csp::new(vec![Bits::full(x.size()); a.size()]);
    let vars: Vec<usize> = (0..a.size()).collect();
    constrain_hom(&mut csp, a, &vars, &relation_table(x));
    csp
}

/// All relation-preserving maps `a -> x` in lexicographic order.
pub fn homs(a: &RelObject, x: &RelObject, cap: u64) -> Result<Vec<RelMap>> {
    check_flavors(a, x)?;
    let mut out = Vec::new();
    hom_csp(a, x).for_each(cap, |s| {
        out.push(RelMap::new_unchecked(a.clone(), x.clone(), s.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn count_homs(a: &RelObject, x: &RelObject, cap: u64) -> Result<u64> {
    check_flavors(a, x)?;
    hom_csp(a, x).count(cap)
}

fn check_flavors(a: &RelObject, x: &RelObject) -> Result<()> {
    if a.flavor() != x.flavor() {
        return Err(Error::FlavorMismatch {
            expected: a.flavor(),
            found: x.flavor(),
        });
    }
    Ok(())
}

/// The lexicographically first `d: apex -> target` with `leg; d = image`
/// for every pair.
pub fn mediate(
    apex: &RelObject,
    target: &RelObject,
    legs: &[(RelMap, RelMap)],
    cap: u64,
) -> Result<Option<RelMap>> {
    let mut forced: Vec<Option<usize>> = vec![None; apex.size()];
    for (leg, image) in legs {
        if leg.tgt() != apex || image.tgt() != target || leg.src() != image.src() {
            return Err(Error::NotComposable);
        }
        for s in 0..leg.src().size() {
            let p = leg.apply(s);
            let want = image.apply(s);
            match forced[p] {
                Some(have) if have != want => return Ok(None),
                _ => forced[p] = Some(want),
            }
        }
    }
    // Jointly surjective legs leave nothing to search.
    if let Some(assign) = forced.iter().copied().collect::<Option<Vec<usize>>>() {
        let preserves = (0..apex.size())
            .all(|a| apex.row(a).iter().all(|b| target.related(assign[a], assign[b])));
        return Ok(preserves.then(|| RelMap::new_unchecked(apex.clone(), target.clone(), assign)));
    }
    let mut csp = hom_csp(apex, target);
    for (p, f) in forced.iter().enumerate() {
        if let Some(v) = f {
            csp.fix(p, *v);
        }
    }
    Ok(csp
        .first(cap)?
        .map(|s| RelMap::new_unchecked(apex.clone(), target.clone(), s)))
}

/// First diagonal of the square `left; bottom = top; right`.
pub fn find_filler(
    left: &RelMap,
    right: &RelMap,
    top: &RelMap,
    bottom: &RelMap,
    cap: u64,
) -> Result<Option<RelMap>> {
    let (b, x) = (left.tgt(), right.src());
    let mut csp = hom_csp(b, x);
    for p in 0..b.size() {
        let want = bottom.apply(p);
        csp.restrict(p, &Bits::from_fn(x.size(), |q| right.apply(q) == want));
    }
    let mut forced: Vec<Option<usize>> = vec![None; b.size()];
    for a in 0..left.src().size() {
        let p = left.apply(a);
        let want = top.apply(a);
        match forced[p] {
            Some(have) if have != want => return Ok(None),
            _ => forced[p] = Some(want),
        }
    }
    for (p, f) in forced.iter().enumerate() {
        if let Some(v) = f {
            csp.fix(p, *v);
        }
    }
    Ok(csp
        .first(cap)?
        .map(|s| RelMap::new_unchecked(b.clone(), x.clone(), s)))
}

/// Value of the bottom map at an element of the codomain of `left`.
#[derive(Clone, Copy)]
enum Slot {
    /// Determined by the top map at this element of the domain.
    Image(usize),
    /// A free variable with this index.
    Free(usize),
}

struct SquareSearch<'a> {
    left: &'a RelMap,
    right: &'a RelMap,
    slots: Vec<Slot>,
    base: Csp,
}

impl<'a> SquareSearch<'a> {
    fn new(left: &'a RelMap, right: &'a RelMap) -> Self {
        let (a, b) = (left.src(), left.tgt());
        let (x, y) = (right.src(), right.tgt());
        let na = a.size();
        let mut rep: Vec<Option<usize>> = vec![None; b.size()];
        for i in 0..na {
            rep[left.apply(i)].get_or_insert(i);
        }
        let mut slots = Vec::with_capacity(b.size());
        let mut n_free = 0;
        for r in &rep {
            slots.push(match r {
                Some(i) => Slot::Image(*i),
                None => {
                    n_free += 1;
                    Slot::Free(na + n_free - 1)
                }
            });
        }
        let mut domains = vec![Bits::full(x.size()); na];
        domains.extend(std::iter::repeat_n(Bits::full(y.size()), n_free));
        let mut base = Csp::new(domains);

        let vars: Vec<usize> = (0..na).collect();
        constrain_hom(&mut base, a, &vars, &relation_table(x));

        // Commutativity along fibres of `left`.
        let same_image = Table::from_fn(x.size(), x.size(), |p, q| right.apply(p) == right.apply(q));
        for i in 0..na {
            if let Slot::Image(r) = slots[left.apply(i)] {
                if r != i {
                    base.constrain(r, i, same_image.clone());
                }
            }
        }

        // The bottom map must preserve the relation of `b`.
        let xx = Table::from_fn(x.size(), x.size(), |p, q| y.related(right.apply(p), right.apply(q)));
        let xy = Table::from_fn(x.size(), y.size(), |p, q| y.related(right.apply(p), q));
        let yx = Table::from_fn(y.size(), x.size(), |p, q| y.related(p, right.apply(q)));
        let yy = relation_table(y);
        for (p, q) in b.pairs() {
            match (slots[p], slots[q]) {
                (Slot::Image(i), Slot::Image(j)) => base.constrain(i, j, xx.clone()),
                (Slot::Image(i), Slot::Free(w)) => base.constrain(i, w, xy.clone()),
                (Slot::Free(w), Slot::Image(j)) => base.constrain(w, j, yx.clone()),
                (Slot::Free(v), Slot::Free(w)) => base.constrain(v, w, yy.clone()),
            }
        }
        SquareSearch {
            left,
            right,
            slots,
            base,
        }
    }

    fn square(&self, sol: &[usize]) -> (RelMap, RelMap) {
        let na = self.left.src().size();
        let top = RelMap::new_unchecked(
            self.left.src().clone(),
            self.right.src().clone(),
            sol[..na].to_vec(),
        );
        let bottom_assign = self
            .slots
            .iter()
            .map(|s| match *s {
                Slot::Image(i) => self.right.apply(sol[i]),
                Slot::Free(w) => sol[w],
            })
            .collect();
        let bottom = RelMap::new_unchecked(
            self.left.tgt().clone(),
            self.right.tgt().clone(),
            bottom_assign,
        );
        (top, bottom)
    }

    fn run(&self, cap: u64) -> Result<Option<(RelMap, RelMap)>> {
        let (a, b) = (self.left.src(), self.left.tgt());
        let x = self.right.src();

        // Top map not constant on a fibre of `left`.
        let differ = Table::from_fn(x.size(), x.size(), |p, q| p != q);
        for i in 0..a.size() {
            if let Slot::Image(r) = self.slots[self.left.apply(i)] {
                if r != i {
                    let mut csp = self.base.clone();
                    csp.constrain(r, i, differ.clone());
                    if let Some(sol) = csp.first(cap)? {
                        return Ok(Some(self.square(&sol)));
                    }
                }
            }
        }

        // Forced diagonal values that are not related.
        let unrelated = Table::from_fn(x.size(), x.size(), |p, q| !x.related(p, q));
        for (p, q) in b.pairs() {
            if let (Slot::Image(i), Slot::Image(j)) = (self.slots[p], self.slots[q]) {
                if a.related(i, j) {
                    continue;
                }
                let mut csp = self.base.clone();
                csp.constrain(i, j, unrelated.clone());
                if let Some(sol) = csp.first(cap)? {
                    return Ok(Some(self.square(&sol)));
                }
            }
        }

        if self.slots.iter().all(|s| matches!(s, Slot::Image(_))) {
            return Ok(None);
        }

        // The forced part is always consistent; look for a square whose
        // free part does not extend.
        let mut found = None;
        let mut failure = None;
        let mut squares = 0u64;
        self.base.for_each(cap, |sol| {
            squares += 1;
            if squares > cap {
                failure = Some(Error::SearchCap { cap });
                return ControlFlow::Break(());
            }
            let (top, bottom) = self.square(sol);
            match find_filler(self.left, self.right, &top, &bottom, cap) {
                Ok(Some(_)) => ControlFlow::Continue(()),
                Ok(None) => {
                    found = Some((top, bottom));
                    ControlFlow::Break(())
                }
                Err(e) => {
                    failure = Some(e);
                    ControlFlow::Break(())
                }
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(found)
    }
}

/// A commuting square from `left` to `right` that admits no diagonal.
pub fn find_unfilled_square(
    left: &RelMap,
    right: &RelMap,
    cap: u64,
) -> Result<Option<(RelMap, RelMap)>> {
    check_flavors(left.src(), right.src())?;
    SquareSearch::new(left, right).run(cap)
}

fn degree_signature(x: &RelObject, p: usize) -> (usize, usize) {
    (x.out_degree(p), x.in_degree(p))
}

fn sorted_degrees(x: &RelObject) -> Vec<(usize, usize)> {
    let mut d: Vec<_> = (0..x.size()).map(|p| degree_signature(x, p)).collect();
    d.sort_unstable();
    d
}

/// Adds the constraints making `vars` a relation-isomorphism `x -> y`.
fn constrain_iso(csp: &mut Csp, x: &RelObject, y: &RelObject, vars: &[usize]) {
    for (p, &v) in vars.iter().enumerate() {
        let sig = degree_signature(x, p);
        csp.restrict(v, &Bits::from_fn(y.size(), |q| degree_signature(y, q) == sig));
    }
    let mut tables: [[Option<Arc<Table>>; 2]; 2] = Default::default();
    for p in 0..x.size() {
        for q in p + 1..x.size() {
            let (fwd, bwd) = (x.related(p, q), x.related(q, p));
            let t = tables[fwd as usize][bwd as usize].get_or_insert_with(|| {
                Table::from_fn(y.size(), y.size(), |s, t| {
                    s != t && y.related(s, t) == fwd && y.related(t, s) == bwd
                })
            });
            csp.constrain(vars[p], vars[q], t.clone());
        }
    }
}

/// An isomorphism `x -> y`, found by backtracking with degree pruning.
pub fn iso_search(x: &RelObject, y: &RelObject, cap: u64) -> Result<Option<RelMap>> {
    if x.flavor() != y.flavor()
        || x.size() != y.size()
        || x.num_pairs() != y.num_pairs()
        || sorted_degrees(x) != sorted_degrees(y)
    {
        return Ok(None);
    }
    let mut csp = Csp::new(vec![Bits::full(y.size()); x.size()]);
    let vars: Vec<usize> = (0..x.size()).collect();
    constrain_iso(&mut csp, x, y, &vars);
    Ok(csp
        .first(cap)?
        .map(|s| RelMap::new_unchecked(x.clone(), y.clone(), s)))
}

/// Isomorphisms `a: dom f -> dom g`, `b: cod f -> cod g` with `f; b = a; g`.
pub fn arrow_iso(f: &RelMap, g: &RelMap, cap: u64) -> Result<Option<(RelMap, RelMap)>> {
    let (a0, b0, a1, b1) = (f.src(), f.tgt(), g.src(), g.tgt());
    if a0.flavor() != a1.flavor()
        || a0.size() != a1.size()
        || b0.size() != b1.size()
        || a0.num_pairs() != a1.num_pairs()
        || b0.num_pairs() != b1.num_pairs()
        || sorted_degrees(a0) != sorted_degrees(a1)
        || sorted_degrees(b0) != sorted_degrees(b1)
    {
        return Ok(None);
    }
    let na = a0.size();
    let mut domains = vec![Bits::full(a1.size()); na];
    domains.extend(std::iter::repeat_n(Bits::full(b1.size()), b0.size()));
    let mut csp = Csp::new(domains);
    let avars: Vec<usize> = (0..na).collect();
    let bvars: Vec<usize> = (na..na + b0.size()).collect();
    constrain_iso(&mut csp, a0, a1, &avars);
    constrain_iso(&mut csp, b0, b1, &bvars);
    let commute = Table::from_fn(a1.size(), b1.size(), |p, q| g.apply(p) == q);
    for p in 0..na {
        csp.constrain(p, na + f.apply(p), commute.clone());
    }
    Ok(csp.first(cap)?.map(|s| {
        (
            RelMap::new_unchecked(a0.clone(), a1.clone(), s[..na].to_vec()),
            RelMap::new_unchecked(b0.clone(), b1.clone(), s[na..].to_vec()),
        )
    }))
}
