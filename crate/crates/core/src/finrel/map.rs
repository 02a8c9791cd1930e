use std::fmt;

use super::object::RelObject;
use crate::error::{Error, Result};

/// A relation-preserving map between objects of the same flavor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelMap {
    src: RelObject,
    tgt: RelObject,
    assign: Vec<usize>,
}

impl RelMap {
    pub fn new(src: RelObject, tgt: RelObject, assign: Vec<usize>) -> Result<Self> {
        if src.flavor() != tgt.flavor() {
            return Err(Error::FlavorMismatch {
                expected: src.flavor(),
                found: tgt.flavor(),
            });
        }
        if assign.len() != src.size() {
            return Err(Error::LengthMismatch {
                expected: src.size(),
                found: assign.len(),
            });
        }
        if let Some(&bad) = assign.iter().find(|&&y| y >= tgt.size()) {
            return Err(Error::OutOfRange {
                index: bad,
                size: tgt.size(),
            });
        }
        for (x, y) in src.pairs() {
            let (fx, fy) = (assign[x], assign[y]);
            if !tgt.related(fx, fy) {
                return Err(Error::NotPreserving { x, y, fx, fy });
            }
        }
        Ok(RelMap { src, tgt, assign })
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn new_unchecked(src: RelObject, tgt: RelObject, assign: Vec<usize>) -> Self {
        debug_assert!(RelMap::new(src.clone(), tgt.clone(), assign.clone()).is_ok());
        RelMap { src, tgt, assign }
    }

    pub fn identity(x: &RelObject) -> Self {
        RelMap {
            src: x.clone(),
            tgt: x.clone(),
            assign: (0..x.size()).collect(),
        }
    }

    pub fn to_point(x: &RelObject) -> Self {
        RelMap {
            src: x.clone(),
            tgt: RelObject::point(x.flavor()),
            assign: vec![0; x.size()],
        }
    }

    pub fn from_empty(x: &RelObject) -> Self {
        RelMap {
            src: RelObject::empty(x.flavor()),
            tgt: x.clone(),
            assign: Vec::new(),
        }
    }

    /// The map from the point picking out `x`.
    pub fn element(obj: &RelObject, x: usize) -> Result<Self> {
        RelMap::new(RelObject::point(obj.flavor()), obj.clone(), vec![x])
    }

    pub fn src(&self) -> &RelObject {
        &self.src
    }

    pub fn tgt(&self) -> &RelObject {
        &self.tgt
    }

    pub fn assign(&self) -> &[usize] {
        &self.assign
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.assign[x]
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &RelMap) -> Result<RelMap> {
        if self.tgt != next.src {
            return Err(Error::NotComposable);
        }
        Ok(RelMap {
            src: self.src.clone(),
            tgt: next.tgt.clone(),
            assign: self.assign.iter().map(|&x| next.assign[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.tgt.size()];
        self.assign.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.tgt.size()];
        for &y in &self.assign {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_mono(&self) -> bool {
        self.is_injective()
    }

    pub fn is_epi(&self) -> bool {
        self.is_surjective()
    }

    /// Reflects the relation: `f(x) ~ f(x')` implies `x ~ x'`.
    pub fn is_full(&self) -> bool {
        let n = self.src.size();
        (0..n).all(|x| {
            (0..n).all(|y| !self.tgt.related(self.assign[x], self.assign[y]) || self.src.related(x, y))
        })
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective() && self.is_full()
    }

    pub fn inverse(&self) -> Option<RelMap> {
        if !self.is_iso() {
            return None;
        }
        let mut inv = vec![0; self.tgt.size()];
        for (x, &y) in self.assign.iter().enumerate() {
            inv[y] = x;
        }
        Some(RelMap {
            src: self.tgt.clone(),
            tgt: self.src.clone(),
            assign: inv,
        })
    }

    /// Image of the map as a sorted list of target elements.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.assign.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl fmt::Debug for RelMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?} {:?}", self.src, self.tgt, self.assign)
    }
}
