use std::fmt;

use crate::error::{Error, Result};
use crate::finrel::RelObject;

/// A finite category with a dense composition table.
///
/// Arrows `0..n_obj` are the identities of the objects with the same index;
/// the remaining arrows follow in a fixed order. `then(f, g)` is "f, then g"
/// and is defined exactly when `tgt(f) == src(g)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinCategory {
    n_obj: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    comp: Vec<Option<usize>>,
}

impl FinCategory {
    /// Validates the table: typing, identity laws and associativity on
    /// every composable triple.
    pub fn new(
        n_obj: usize,
        src: Vec<usize>,
        tgt: Vec<usize>,
        comp: Vec<Option<usize>>,
    ) -> Result<Self> {
        let n = src.len();
        let bad = |msg: String| Err(Error::InvalidCategory(msg));
        if tgt.len() != n || comp.len() != n * n {
            return bad("table sizes disagree".into());
        }
        if n < n_obj {
            return bad("fewer arrows than objects".into());
        }
        if let Some(f) = (0..n).find(|&f| src[f] >= n_obj || tgt[f] >= n_obj) {
            return bad(format!("arrow {f} has an endpoint out of range"));
        }
        if let Some(x) = (0..n_obj).find(|&x| src[x] != x || tgt[x] != x) {
            return bad(format!("arrow {x} must be the identity of object {x}"));
        }
        for f in 0..n {
            for g in 0..n {
                match comp[f * n + g] {
                    Some(h) if tgt[f] != src[g] => {
                        return bad(format!("composite {f};{g} = {h} of a non-composable pair"))
                    }
                    None if tgt[f] == src[g] => return bad(format!("composite {f};{g} missing")),
                    Some(h) if h >= n || src[h] != src[f] || tgt[h] != tgt[g] => {
                        return bad(format!("composite {f};{g} = {h} has the wrong type"))
                    }
                    _ => {}
                }
            }
            if comp[src[f] * n + f] != Some(f) || comp[f * n + tgt[f]] != Some(f) {
                return bad(format!("identity law fails at arrow {f}"));
            }
        }
        let cat = FinCategory {
            n_obj,
            src,
            tgt,
            comp,
        };
        for f in 0..n {
            for g in cat.arrows_from(cat.tgt[f]) {
                let fg = cat.then(f, g);
                for h in cat.arrows_from(cat.tgt[g]) {
                    if cat.then(fg, h) != cat.then(f, cat.then(g, h)) {
                        return bad(format!("composition is not associative at ({f}, {g}, {h})"));
                    }
                }
            }
        }
        Ok(cat)
    }

    /// A preorder as a thin category; arrow `x -> y` for every `x <= y`.
    pub fn from_preorder(p: &RelObject) -> Result<Self> {
        if !p.is_transitive() {
            return Err(Error::InvalidCategory("relation is not transitive".into()));
        }
        let n_obj = p.size();
        let mut ends: Vec<(usize, usize)> = (0..n_obj).map(|x| (x, x)).collect();
        ends.extend(p.pairs());
        let n = ends.len();
        let index = |x: usize, y: usize| {
            if x == y {
                x
            } else {
                ends.iter().position(|&e| e == (x, y)).unwrap()
            }
        };
        let mut comp = vec![None; n * n];
        for f in 0..n {
            for g in 0..n {
                if ends[f].1 == ends[g].0 {
                    comp[f * n + g] = Some(index(ends[f].0, ends[g].1));
                }
            }
        }
        FinCategory::new(
            n_obj,
            ends.iter().map(|e| e.0).collect(),
            ends.iter().map(|e| e.1).collect(),
            comp,
        )
    }

    /// A one-object category from the multiplication table of a monoid whose
    /// unit is element 0.
    pub fn monoid(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        let comp = (0..n * n).map(|i| Some(table[i / n][i % n])).collect();
        FinCategory::new(1, vec![0; n], vec![0; n], comp)
    }

    pub fn zero() -> Self {
        FinCategory {
            n_obj: 0,
            src: vec![],
            tgt: vec![],
            comp: vec![],
        }
    }

    pub fn one() -> Self {
        FinCategory::discrete(1)
    }

    pub fn discrete(n: usize) -> Self {
        let mut comp = vec![None; n * n];
        for x in 0..n {
            comp[x * n + x] = Some(x);
        }
        FinCategory {
            n_obj: n,
            src: (0..n).collect(),
            tgt: (0..n).collect(),
            comp,
        }
    }

    /// The ordinal `0 -> 1 -> ... -> n-1`.
    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        let p = RelObject::new(crate::Flavor::Preord, n, &pairs).expect("chain is a preorder");
        FinCategory::from_preorder(&p).expect("chain is a category")
    }

    /// The walking arrow `0 -> 1`.
    pub fn chain2() -> Self {
        FinCategory::chain(2)
    }

    /// Two parallel arrows `0 => 1`.
    pub fn parallel_pair() -> Self {
        let n = 4;
        let mut comp = vec![None; n * n];
        comp[0] = Some(0);
        comp[n + 1] = Some(1);
        for f in [2, 3] {
            comp[f] = Some(f);
            comp[f * n + 1] = Some(f);
        }
        FinCategory::new(2, vec![0, 1, 0, 0], vec![0, 1, 1, 1], comp).expect("parallel pair")
    }

    /// The connected groupoid on `n` objects with trivial automorphism groups.
    pub fn indiscrete(n: usize) -> Self {
        let p = RelObject::complete(crate::Flavor::Preord, n).expect("indiscrete preorder");
        FinCategory::from_preorder(&p).expect("indiscrete category")
    }

    /// The group of order two as a one-object category.
    pub fn z2() -> Self {
        FinCategory::monoid(&[vec![0, 1], vec![1, 0]]).expect("Z/2")
    }

    /// The monoid `{1, e}` with `e e = e`.
    pub fn idempotent() -> Self {
        FinCategory::monoid(&[vec![0, 1], vec![1, 1]]).expect("idempotent monoid")
    }

    pub fn n_obj(&self) -> usize {
        self.n_obj
    }

    pub fn n_arrows(&self) -> usize {
        self.src.len()
    }

    #[inline]
    pub fn src(&self, f: usize) -> usize {
        self.src[f]
    }

    #[inline]
    pub fn tgt(&self, f: usize) -> usize {
        self.tgt[f]
    }

    #[inline]
    pub fn id(&self, x: usize) -> usize {
        x
    }

    pub fn is_identity(&self, f: usize) -> bool {
        f < self.n_obj
    }

    /// `f` then `g`; panics on a non-composable pair.
    #[inline]
    pub fn then(&self, f: usize, g: usize) -> usize {
        self.try_then(f, g).expect("composable arrows")
    }

    pub fn try_then(&self, f: usize, g: usize) -> Option<usize> {
        self.comp[f * self.n_arrows() + g]
    }

    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.n_arrows())
            .filter(|&f| self.src[f] == x && self.tgt[f] == y)
            .collect()
    }

    pub fn arrows_from(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n_arrows()).filter(move |&f| self.src[f] == x)
    }

    pub fn non_identities(&self) -> std::ops::Range<usize> {
        self.n_obj..self.n_arrows()
    }

    pub fn inverse(&self, f: usize) -> Option<usize> {
        self.hom(self.tgt[f], self.src[f])
            .into_iter()
            .find(|&g| self.then(f, g) == self.src[f] && self.then(g, f) == self.tgt[f])
    }

    pub fn is_iso_arrow(&self, f: usize) -> bool {
        self.inverse(f).is_some()
    }

    pub fn are_isomorphic_objects(&self, x: usize, y: usize) -> bool {
        self.hom(x, y).into_iter().any(|f| self.is_iso_arrow(f))
    }

    /// Only identities.
    pub fn is_discrete(&self) -> bool {
        self.n_arrows() == self.n_obj
    }
}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cat({} obj;", self.n_obj)?;
        for a in self.non_identities() {
            write!(f, " {a}:{}->{}", self.src[a], self.tgt[a])?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_sizes() {
        assert_eq!(FinCategory::indiscrete(2).n_arrows(), 4);
        assert_eq!(FinCategory::chain2().n_arrows(), 3);
        assert_eq!(FinCategory::parallel_pair().n_arrows(), 4);
        assert_eq!(FinCategory::zero().n_arrows(), 0);
        assert_eq!(FinCategory::one().n_arrows(), 1);
        assert_eq!(FinCategory::chain(3).n_arrows(), 6);
    }

    #[test]
    fn indiscrete_arrows_are_isos() {
        let c = FinCategory::indiscrete(3);
        assert!((0..c.n_arrows()).all(|f| c.is_iso_arrow(f)));
        let z = FinCategory::z2();
        assert_eq!(z.inverse(1), Some(1));
        assert!(!FinCategory::idempotent().is_iso_arrow(1));
    }

    #[test]
    fn rejects_non_associative_table() {
        // a;a = b, a;b = a, b;a = b, b;b = b: (a;b);a = b but a;(b;a) = a.
        let table = [vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 2]];
        assert!(matches!(FinCategory::monoid(&table), Err(Error::InvalidCategory(_))));
    }

    #[test]
    fn rejects_bad_identity() {
        let table = [vec![0, 1], vec![0, 1]];
        assert!(FinCategory::monoid(&table).is_err());
    }
}
