use std::fmt;
use std::ops::ControlFlow;

use super::FinCategory;
use crate::bits::Bits;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CatFunctor {
    src: FinCategory,
    tgt: FinCategory,
    obj_map: Vec<usize>,
    arr_map: Vec<usize>,
}

impl CatFunctor {
    pub fn new(
        src: FinCategory,
        tgt: FinCategory,
        obj_map: Vec<usize>,
        arr_map: Vec<usize>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidFunctor(msg));
        if obj_map.len() != src.n_obj() || arr_map.len() != src.n_arrows() {
            return bad("map lengths disagree with the source".into());
        }
        if obj_map.iter().any(|&y| y >= tgt.n_obj()) || arr_map.iter().any(|&g| g >= tgt.n_arrows())
        {
            return bad("image out of range".into());
        }
        for f in 0..src.n_arrows() {
            let g = arr_map[f];
            if tgt.src(g) != obj_map[src.src(f)] || tgt.tgt(g) != obj_map[src.tgt(f)] {
                return bad(format!("arrow {f} is sent to an arrow with the wrong endpoints"));
            }
        }
        for x in 0..src.n_obj() {
            if arr_map[x] != obj_map[x] {
                return bad(format!("identity of object {x} is not preserved"));
            }
        }
        for f in 0..src.n_arrows() {
            for g in src.arrows_from(src.tgt(f)) {
                if arr_map[src.then(f, g)] != tgt.then(arr_map[f], arr_map[g]) {
                    return bad(format!("composite {f};{g} is not preserved"));
                }
            }
        }
        Ok(CatFunctor {
            src,
            tgt,
            obj_map,
            arr_map,
        })
    }

    pub(crate) fn new_unchecked(
        src: FinCategory,
        tgt: FinCategory,
        obj_map: Vec<usize>,
        arr_map: Vec<usize>,
    ) -> Self {
        debug_assert!(
            CatFunctor::new(src.clone(), tgt.clone(), obj_map.clone(), arr_map.clone()).is_ok()
        );
        CatFunctor {
            src,
            tgt,
            obj_map,
            arr_map,
        }
    }

    pub fn identity(c: &FinCategory) -> Self {
        CatFunctor {
            src: c.clone(),
            tgt: c.clone(),
            obj_map: (0..c.n_obj()).collect(),
            arr_map: (0..c.n_arrows()).collect(),
        }
    }

    pub fn to_terminal(c: &FinCategory) -> Self {
        CatFunctor {
            src: c.clone(),
            tgt: FinCategory::one(),
            obj_map: vec![0; c.n_obj()],
            arr_map: vec![0; c.n_arrows()],
        }
    }

    pub fn from_initial(c: &FinCategory) -> Self {
        CatFunctor {
            src: FinCategory::zero(),
            tgt: c.clone(),
            obj_map: vec![],
            arr_map: vec![],
        }
    }

    /// The functor from the terminal category picking out an object.
    pub fn object(c: &FinCategory, x: usize) -> Result<Self> {
        CatFunctor::new(FinCategory::one(), c.clone(), vec![x], vec![x])
    }

    pub fn src(&self) -> &FinCategory {
        &self.src
    }

    pub fn tgt(&self) -> &FinCategory {
        &self.tgt
    }

    pub fn obj_map(&self) -> &[usize] {
        &self.obj_map
    }

    pub fn arr_map(&self) -> &[usize] {
        &self.arr_map
    }

    #[inline]
    pub fn on_obj(&self, x: usize) -> usize {
        self.obj_map[x]
    }

    #[inline]
    pub fn on_arr(&self, f: usize) -> usize {
        self.arr_map[f]
    }

    pub fn then(&self, next: &CatFunctor) -> Result<CatFunctor> {
        if self.tgt != next.src {
            return Err(Error::NotComposable);
        }
        Ok(CatFunctor {
            src: self.src.clone(),
            tgt: next.tgt.clone(),
            obj_map: self.obj_map.iter().map(|&x| next.obj_map[x]).collect(),
            arr_map: self.arr_map.iter().map(|&f| next.arr_map[f]).collect(),
        })
    }

    pub fn is_injective_on_objects(&self) -> bool {
        injective(&self.obj_map, self.tgt.n_obj())
    }

    pub fn is_injective_on_arrows(&self) -> bool {
        injective(&self.arr_map, self.tgt.n_arrows())
    }

    pub fn is_surjective_on_objects(&self) -> bool {
        surjective(&self.obj_map, self.tgt.n_obj())
    }

    /// Bijective on arrows, hence on objects.
    pub fn is_iso(&self) -> bool {
        self.is_injective_on_arrows() && surjective(&self.arr_map, self.tgt.n_arrows())
    }

    pub fn inverse(&self) -> Option<CatFunctor> {
        if !self.is_iso() {
            return None;
        }
        let mut obj = vec![0; self.tgt.n_obj()];
        for (x, &y) in self.obj_map.iter().enumerate() {
            obj[y] = x;
        }
        let mut arr = vec![0; self.tgt.n_arrows()];
        for (f, &g) in self.arr_map.iter().enumerate() {
            arr[g] = f;
        }
        Some(CatFunctor {
            src: self.tgt.clone(),
            tgt: self.src.clone(),
            obj_map: obj,
            arr_map: arr,
        })
    }

    fn hom_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.src.n_obj();
        (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
    }

    /// Surjective on every hom-set.
    pub fn is_full(&self) -> bool {
        self.hom_pairs().all(|(x, y)| {
            let image: Vec<usize> = self.src.hom(x, y).iter().map(|&f| self.arr_map[f]).collect();
            self.tgt
                .hom(self.obj_map[x], self.obj_map[y])
                .iter()
                .all(|g| image.contains(g))
        })
    }

    /// Injective on every hom-set.
    pub fn is_faithful(&self) -> bool {
        self.hom_pairs().all(|(x, y)| {
            let mut image: Vec<usize> = self.src.hom(x, y).iter().map(|&f| self.arr_map[f]).collect();
            let n = image.len();
            image.sort_unstable();
            image.dedup();
            image.len() == n
        })
    }

    pub fn is_essentially_surjective(&self) -> bool {
        (0..self.tgt.n_obj()).all(|y| {
            self.obj_map
                .iter()
                .any(|&fx| self.tgt.are_isomorphic_objects(fx, y))
        })
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_full() && self.is_faithful() && self.is_essentially_surjective()
    }
}

fn injective(map: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
}

fn surjective(map: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    for &y in map {
        seen[y] = true;
    }
    seen.into_iter().all(|s| s)
}

impl fmt::Debug for CatFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} -> {:?} obj {:?} arr {:?}",
            self.src, self.tgt, self.obj_map, self.arr_map
        )
    }
}

/// Backtracking enumeration of functors with optional per-variable domains.
///
/// Objects are assigned first, then non-identity arrows, each in index order
/// and by increasing value, so solutions come out in lexicographic order of
/// the object map and then the arrow map.
pub(crate) struct FunctorSearch<'a> {
    src: &'a FinCategory,
    tgt: &'a FinCategory,
    obj_dom: Vec<Bits>,
    arr_dom: Vec<Bits>,
    injective: bool,
    /// Composites `(f, g, f;g)` checked once the latest of them is assigned.
    checks: Vec<Vec<(usize, usize, usize)>>,
}

impl<'a> FunctorSearch<'a> {
    pub fn new(src: &'a FinCategory, tgt: &'a FinCategory) -> Self {
        let n = src.n_arrows();
        let mut checks = vec![Vec::new(); n];
        for f in src.non_identities() {
            for g in src.arrows_from(src.tgt(f)).filter(|&g| !src.is_identity(g)) {
                let h = src.then(f, g);
                let last = f.max(g).max(if src.is_identity(h) { 0 } else { h });
                checks[last].push((f, g, h));
            }
        }
        FunctorSearch {
            src,
            tgt,
            obj_dom: vec![Bits::full(tgt.n_obj()); src.n_obj()],
            arr_dom: vec![Bits::full(tgt.n_arrows()); n],
            injective: false,
            checks,
        }
    }

    pub fn injective(mut self) -> Self {
        self.injective = true;
        self
    }

    pub fn restrict_obj(&mut self, x: usize, allowed: &Bits) {
        self.obj_dom[x].intersect_with(allowed);
    }

    pub fn restrict_arr(&mut self, f: usize, allowed: &Bits) {
        self.arr_dom[f].intersect_with(allowed);
    }

    /// Forces a value; conflicting forcings leave an empty domain.
    pub fn force_obj(&mut self, x: usize, y: usize) {
        let n = self.tgt.n_obj();
        self.obj_dom[x].intersect_with(&Bits::singleton(n, y));
    }

    pub fn force_arr(&mut self, f: usize, g: usize) {
        let n = self.tgt.n_arrows();
        self.arr_dom[f].intersect_with(&Bits::singleton(n, g));
        if self.src.is_identity(f) {
            if self.tgt.is_identity(g) {
                self.force_obj(f, g);
            } else {
                self.obj_dom[f] = Bits::new(self.tgt.n_obj());
            }
        }
    }

    pub fn run(
        &self,
        cap: u64,
        mut visit: impl FnMut(&[usize], &[usize]) -> ControlFlow<()>,
    ) -> Result<()> {
        let mut state = State {
            search: self,
            nodes: 0,
            cap,
            obj: vec![0; self.src.n_obj()],
            arr: vec![0; self.src.n_arrows()],
            used: Bits::new(self.tgt.n_arrows()),
        };
        let _ = state.objects(0, &mut visit)?;
        Ok(())
    }

    pub fn first(&self, cap: u64) -> Result<Option<CatFunctor>> {
        let mut found = None;
        self.run(cap, |o, a| {
            found = Some(self.functor(o, a));
            ControlFlow::Break(())
        })?;
        Ok(found)
    }

    pub fn all(&self, cap: u64) -> Result<Vec<CatFunctor>> {
        let mut out = Vec::new();
        self.run(cap, |o, a| {
            out.push(self.functor(o, a));
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    pub fn functor(&self, obj: &[usize], arr: &[usize]) -> CatFunctor {
        CatFunctor::new_unchecked(self.src.clone(), self.tgt.clone(), obj.to_vec(), arr.to_vec())
    }
}

struct State<'s, 'a> {
    search: &'s FunctorSearch<'a>,
    nodes: u64,
    cap: u64,
    obj: Vec<usize>,
    arr: Vec<usize>,
    used: Bits,
}

impl State<'_, '_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::SearchCap { cap: self.cap });
        }
        Ok(())
    }

    fn objects(
        &mut self,
        x: usize,
        visit: &mut impl FnMut(&[usize], &[usize]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let s = self.search;
        if x == s.src.n_obj() {
            return self.arrows(s.src.n_obj(), visit);
        }
        for y in s.obj_dom[x].iter() {
            self.tick()?;
            if !s.arr_dom[x].contains(y) || (s.injective && self.used.contains(y)) {
                continue;
            }
            self.obj[x] = y;
            self.arr[x] = y;
            self.used.insert(y);
            let flow = self.objects(x + 1, visit)?;
            self.used.remove(y);
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn arrows(
        &mut self,
        f: usize,
        visit: &mut impl FnMut(&[usize], &[usize]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let s = self.search;
        if f == s.src.n_arrows() {
            return Ok(visit(&self.obj, &self.arr));
        }
        let (a, b) = (self.obj[s.src.src(f)], self.obj[s.src.tgt(f)]);
        for g in s.tgt.hom(a, b) {
            if !s.arr_dom[f].contains(g) || (s.injective && self.used.contains(g)) {
                continue;
            }
            self.tick()?;
            self.arr[f] = g;
            let ok = s.checks[f]
                .iter()
                .all(|&(p, q, r)| self.arr[r] == s.tgt.then(self.arr[p], self.arr[q]));
            if !ok {
                continue;
            }
            self.used.insert(g);
            let flow = self.arrows(f + 1, visit)?;
            self.used.remove(g);
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Every functor `c -> d` in lexicographic order.
pub fn enumerate_functors(c: &FinCategory, d: &FinCategory, cap: u64) -> Result<Vec<CatFunctor>> {
    FunctorSearch::new(c, d).all(cap)
}

/// Isomorphisms `c -> d`.
pub fn isomorphisms(c: &FinCategory, d: &FinCategory, cap: u64) -> Result<Vec<CatFunctor>> {
    if c.n_obj() != d.n_obj() || c.n_arrows() != d.n_arrows() {
        return Ok(Vec::new());
    }
    FunctorSearch::new(c, d).injective().all(cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: u64 = 1_000_000;

    #[test]
    fn functors_from_one_are_objects() {
        for c in [FinCategory::parallel_pair(), FinCategory::indiscrete(3), FinCategory::z2()] {
            assert_eq!(enumerate_functors(&FinCategory::one(), &c, CAP).unwrap().len(), c.n_obj());
        }
    }

    #[test]
    fn functors_from_walking_iso_are_isos() {
        for c in [FinCategory::parallel_pair(), FinCategory::indiscrete(3), FinCategory::z2()] {
            let isos = (0..c.n_arrows()).filter(|&f| c.is_iso_arrow(f)).count();
            let n = enumerate_functors(&FinCategory::indiscrete(2), &c, CAP).unwrap().len();
            assert_eq!(n, isos);
        }
    }

    #[test]
    fn endofunctors_of_chain2() {
        // Oracle: monotone maps of {0 < 1}: 00, 01, 11.
        let c = FinCategory::chain2();
        let fs = enumerate_functors(&c, &c, CAP).unwrap();
        let objs: Vec<_> = fs.iter().map(|f| f.obj_map().to_vec()).collect();
        assert_eq!(objs, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn functors_validate() {
        let c = FinCategory::parallel_pair();
        let d = FinCategory::indiscrete(2);
        for f in enumerate_functors(&c, &d, CAP).unwrap() {
            assert!(CatFunctor::new(c.clone(), d.clone(), f.obj_map().to_vec(), f.arr_map().to_vec()).is_ok());
        }
        // Both parallel arrows to the unique arrow 0 -> 1, or loops.
        assert_eq!(enumerate_functors(&c, &d, CAP).unwrap().len(), 4);
    }

    #[test]
    fn monoid_functors_are_homomorphisms() {
        let z2 = FinCategory::z2();
        let idem = FinCategory::idempotent();
        assert_eq!(enumerate_functors(&z2, &idem, CAP).unwrap().len(), 1);
        assert_eq!(enumerate_functors(&idem, &z2, CAP).unwrap().len(), 1);
        assert_eq!(enumerate_functors(&idem, &idem, CAP).unwrap().len(), 2);
        assert_eq!(enumerate_functors(&z2, &z2, CAP).unwrap().len(), 2);
    }

    #[test]
    fn equivalence_predicates() {
        let i2 = FinCategory::indiscrete(2);
        assert!(CatFunctor::to_terminal(&i2).is_equivalence());
        assert!(CatFunctor::identity(&FinCategory::chain2()).is_equivalence());
        let c2 = CatFunctor::to_terminal(&FinCategory::chain2());
        // Oracle: Hom(1, 0) is empty but maps to the identity of the point.
        assert!(c2.is_faithful() && c2.is_essentially_surjective() && !c2.is_full());
        assert!(!c2.is_equivalence());
    }

    #[test]
    fn automorphisms() {
        assert_eq!(isomorphisms(&FinCategory::parallel_pair(), &FinCategory::parallel_pair(), CAP).unwrap().len(), 2);
        assert_eq!(isomorphisms(&FinCategory::indiscrete(3), &FinCategory::indiscrete(3), CAP).unwrap().len(), 6);
    }
}
