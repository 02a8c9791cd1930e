use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// The five relational categories: sets, reflexive symmetric graphs,
/// preorders, partial orders and equivalence relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Set,
    Graph,
    Preord,
    Ord,
    EqRel,
}

impl Flavor {
    pub const ALL: [Flavor; 5] = [
        Flavor::Set,
        Flavor::Graph,
        Flavor::Preord,
        Flavor::Ord,
        Flavor::EqRel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Set => "set",
            Flavor::Graph => "graph",
            Flavor::Preord => "preord",
            Flavor::Ord => "ord",
            Flavor::EqRel => "eqrel",
        }
    }

    pub fn parse(s: &str) -> Option<Flavor> {
        Flavor::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn symmetric(self) -> bool {
        matches!(self, Flavor::Graph | Flavor::EqRel | Flavor::Set)
    }

    pub fn transitive(self) -> bool {
        !matches!(self, Flavor::Graph)
    }

    /// Closes `rel` under the axioms of the flavor. Sets only admit the
    /// diagonal; ordered sets report antisymmetry violations instead of
    /// quotienting.
    pub(crate) fn close(self, size: usize, rel: &mut [Bits]) -> Result<()> {
        if self == Flavor::Set {
            for (a, row) in rel.iter().enumerate() {
                if let Some(b) = row.iter().find(|&b| b != a) {
                    return Err(Error::NotAllowedPair { flavor: self, a, b });
                }
            }
        }
        for (i, row) in rel.iter_mut().enumerate() {
            row.insert(i);
        }
        if self.symmetric() {
            for a in 0..size {
                for b in 0..size {
                    if rel[a].contains(b) {
                        rel[b].insert(a);
                    }
                }
            }
        }
        if self.transitive() {
            // Warshall
            for k in 0..size {
                let row_k = rel[k].clone();
                for row in rel.iter_mut() {
                    if row.contains(k) {
                        row.union_with(&row_k);
                    }
                }
            }
        }
        if self == Flavor::Ord {
            for a in 0..size {
                for b in a + 1..size {
                    if rel[a].contains(b) && rel[b].contains(a) {
                        return Err(Error::Antisymmetry { a, b });
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite carrier `0..size` with a relation obeying the flavor's axioms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelObject {
    flavor: Flavor,
    rel: Vec<Bits>,
}

impl RelObject {
    /// Builds the smallest object of the given flavor relating every pair
    /// in `pairs`.
    pub fn new(flavor: Flavor, size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rel = vec![Bits::new(size); size];
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= size {
                    return Err(Error::OutOfRange { index: x, size });
                }
            }
            rel[a].insert(b);
        }
        flavor.close(size, &mut rel)?;
        Ok(RelObject { flavor, rel })
    }

    pub(crate) fn from_rows(flavor: Flavor, mut rel: Vec<Bits>) -> Result<Self> {
        let size = rel.len();
        flavor.close(size, &mut rel)?;
        Ok(RelObject { flavor, rel })
    }

    pub fn empty(flavor: Flavor) -> Self {
        RelObject {
            flavor,
            rel: Vec::new(),
        }
    }

    pub fn point(flavor: Flavor) -> Self {
        RelObject {
            flavor,
            rel: vec![Bits::full(1)],
        }
    }

    /// Only the diagonal: `n` for graphs, discrete preorders, plain sets.
    pub fn discrete(flavor: Flavor, n: usize) -> Self {
        RelObject {
            flavor,
            rel: (0..n).map(|i| Bits::singleton(n, i)).collect(),
        }
    }

    /// Everything related: `K_n` for graphs, indiscrete preorders.
    pub fn complete(flavor: Flavor, n: usize) -> Result<Self> {
        if flavor == Flavor::Set && n > 1 || flavor == Flavor::Ord && n > 1 {
            return Err(Error::NotAllowedPair { flavor, a: 0, b: 1 });
        }
        Ok(RelObject {
            flavor,
            rel: vec![Bits::full(n); n],
        })
    }

    /// The complete graph on `n >= 2` vertices without the edge `0 - 1`.
    pub fn complete_minus_edge(n: usize) -> Self {
        assert!(n >= 2, "K_n^- needs at least two vertices");
        let mut rel = vec![Bits::full(n); n];
        rel[0].remove(1);
        rel[1].remove(0);
        RelObject {
            flavor: Flavor::Graph,
            rel,
        }
    }

    /// The linear order `0 <= 1 <= ... <= n-1` (the walking arrow for n = 2).
    pub fn chain(flavor: Flavor, n: usize) -> Result<Self> {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        RelObject::new(flavor, n, &pairs)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn size(&self) -> usize {
        self.rel.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rel.is_empty()
    }

    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.rel[a].contains(b)
    }

    pub fn row(&self, a: usize) -> &Bits {
        &self.rel[a]
    }

    pub(crate) fn rows(&self) -> &[Bits] {
        &self.rel
    }

    /// Related pairs `(a, b)` with `a != b`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rel
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().filter(move |&b| b != a).map(move |b| (a, b)))
    }

    pub fn num_pairs(&self) -> usize {
        self.pairs().count()
    }

    pub fn out_degree(&self, a: usize) -> usize {
        self.rel[a].count()
    }

    pub fn in_degree(&self, b: usize) -> usize {
        self.rel.iter().filter(|row| row.contains(b)).count()
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| {
            self.rel[a]
                .iter()
                .all(|b| self.rel[b].is_subset(&self.rel[a]))
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(a, b)| self.related(b, a))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs().all(|(a, b)| !self.related(b, a))
    }

    /// Only the diagonal is related.
    pub fn is_discrete(&self) -> bool {
        self.num_pairs() == 0
    }

    pub fn is_complete(&self) -> bool {
        self.rel.iter().all(|r| r.count() == self.size())
    }

    /// Reinterprets the same relation in another flavor. Fails when the
    /// relation does not already satisfy the target axioms.
    pub fn reflavor(&self, flavor: Flavor) -> Result<Self> {
        let mut rel = self.rel.clone();
        flavor.close(self.size(), &mut rel)?;
        if rel != self.rel {
            let (a, b) = (0..self.size())
                .flat_map(|a| (0..self.size()).map(move |b| (a, b)))
                .find(|&(a, b)| rel[a].contains(b) != self.rel[a].contains(b))
                .unwrap();
            return Err(Error::NotAllowedPair { flavor, a, b });
        }
        Ok(RelObject { flavor, rel })
    }
}

impl fmt::Debug for RelObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}; ", self.flavor, self.size())?;
        let pairs: Vec<_> = self
            .pairs()
            .filter(|&(a, b)| !self.flavor.symmetric() || a < b)
            .collect();
        let sep = if self.flavor.symmetric() { "-" } else { "<" };
        for (i, (a, b)) in pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}{sep}{b}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_is_initial_shape() {
        let g = RelObject::new(Flavor::Graph, 0, &[]).unwrap();
        assert_eq!(g.size(), 0);
        assert!(g.is_empty());
    }

    #[test]
    fn k4_minus_has_five_edges() {
        let pairs = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = RelObject::new(Flavor::Graph, 4, &pairs).unwrap();
        assert_eq!(g.num_pairs() / 2, 5);
        assert_eq!(g, RelObject::complete_minus_edge(4));
        let deg3: Vec<_> = (0..4).filter(|&v| g.out_degree(v) - 1 == 3).collect();
        assert_eq!(deg3, vec![2, 3]);
    }

    #[test]
    fn closure_per_flavor() {
        let g = RelObject::new(Flavor::Graph, 3, &[(0, 1), (1, 2)]).unwrap();
        assert!(g.related(1, 0) && !g.related(0, 2));
        let p = RelObject::new(Flavor::Preord, 3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.related(0, 2) && !p.related(1, 0));
        let e = RelObject::new(Flavor::EqRel, 3, &[(0, 1), (1, 2)]).unwrap();
        assert!(e.related(2, 0));
    }

    #[test]
    fn ord_rejects_cycles() {
        let err = RelObject::new(Flavor::Ord, 3, &[(0, 1), (1, 2), (2, 0)]).unwrap_err();
        assert!(matches!(err, Error::Antisymmetry { .. }));
    }

    #[test]
    fn set_rejects_off_diagonal() {
        assert!(RelObject::new(Flavor::Set, 2, &[(0, 1)]).is_err());
        assert!(RelObject::new(Flavor::Set, 2, &[(1, 1)]).is_ok());
    }

    #[test]
    fn out_of_range_pair() {
        assert_eq!(
            RelObject::new(Flavor::Graph, 2, &[(0, 2)]),
            Err(Error::OutOfRange { index: 2, size: 2 })
        );
    }

    #[test]
    fn reflavor_requires_axioms() {
        let path = RelObject::new(Flavor::Graph, 3, &[(0, 1), (1, 2)]).unwrap();
        assert!(path.reflavor(Flavor::EqRel).is_err());
        let k2 = RelObject::complete(Flavor::Graph, 2).unwrap();
        assert_eq!(k2.reflavor(Flavor::EqRel).unwrap().flavor(), Flavor::EqRel);
    }
}
