//! Path components and the reflections onto full subcategories used by the
//! induced-cylinder construction.

use super::{Flavor, RelMap, RelObject};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// Components of the symmetric-transitive closure, as a discrete object
/// with its quotient map. Components are numbered by least element.
pub fn pi0(x: &RelObject) -> (RelObject, RelMap) {
    let (class, k) = component_classes(x);
    let obj = RelObject::discrete(x.flavor(), k);
    let quotient = RelMap::new_unchecked(x.clone(), obj.clone(), class);
    (obj, quotient)
}

fn component_classes(x: &RelObject) -> (Vec<usize>, usize) {
    let mut uf = UnionFind::new(x.size());
    for (a, b) in x.pairs() {
        uf.union(a, b);
    }
    uf.classes()
}

/// The induced map on components.
pub fn pi0_map(f: &RelMap) -> RelMap {
    let (src, q_src) = pi0(f.src());
    let (tgt, q_tgt) = pi0(f.tgt());
    let mut assign = vec![0; src.size()];
    for x in 0..f.src().size() {
        assign[q_src.apply(x)] = q_tgt.apply(f.apply(x));
    }
    RelMap::new_unchecked(src, tgt, assign)
}

/// A bijection on components.
pub fn pi0_bijective(f: &RelMap) -> bool {
    let m = pi0_map(f);
    m.is_injective() && m.is_surjective()
}

/// The supported reflections onto full subcategories.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReflectionKind {
    /// Graphs onto equivalence relations.
    TransitiveClosure,
    /// Preorders onto partial orders.
    Antisymmetrize,
    /// Preorders onto indiscrete preorders, a copy of `Set`.
    Indiscrete,
}

impl ReflectionKind {
    pub fn source(self) -> Flavor {
        match self {
            ReflectionKind::TransitiveClosure => Flavor::Graph,
            ReflectionKind::Antisymmetrize | ReflectionKind::Indiscrete => Flavor::Preord,
        }
    }

    pub fn target(self) -> Flavor {
        match self {
            ReflectionKind::TransitiveClosure => Flavor::EqRel,
            ReflectionKind::Antisymmetrize => Flavor::Ord,
            ReflectionKind::Indiscrete => Flavor::Preord,
        }
    }

    pub fn between(source: Flavor, target: &str) -> Result<Self> {
        match (source, target) {
            (Flavor::Graph, "eqrel") => Ok(ReflectionKind::TransitiveClosure),
            (Flavor::Preord, "ord") => Ok(ReflectionKind::Antisymmetrize),
            (Flavor::Preord, "set") => Ok(ReflectionKind::Indiscrete),
            _ => Err(Error::Unsupported(format!("no reflection from {source} to {target}"))),
        }
    }

    /// Membership of an object of the source flavor in the subcategory.
    pub fn contains(self, x: &RelObject) -> bool {
        match self {
            ReflectionKind::TransitiveClosure => x.is_transitive(),
            ReflectionKind::Antisymmetrize => x.is_antisymmetric(),
            ReflectionKind::Indiscrete => x.is_complete(),
        }
    }
}

/// A reflected object in the target flavor and the unit, which lives in the
/// source flavor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflection {
    pub object: RelObject,
    pub unit: RelMap,
}

impl Reflection {
    /// The reflected object seen inside the source flavor.
    pub fn embedded(&self) -> &RelObject {
        self.unit.tgt()
    }
}

pub fn reflect(x: &RelObject, kind: ReflectionKind) -> Result<Reflection> {
    if x.flavor() != kind.source() {
        return Err(Error::FlavorMismatch {
            expected: kind.source(),
            found: x.flavor(),
        });
    }
    let n = x.size();
    let (embedded, assign) = match kind {
        ReflectionKind::TransitiveClosure => {
            let rows = x.rows().to_vec();
            let mut closed = rows;
            Flavor::EqRel.close(n, &mut closed)?;
            (RelObject::from_rows(Flavor::Graph, closed)?, (0..n).collect())
        }
        ReflectionKind::Antisymmetrize => {
            let mut uf = UnionFind::new(n);
            for (a, b) in x.pairs() {
                if x.related(b, a) {
                    uf.union(a, b);
                }
            }
            let (class, k) = uf.classes();
            let mut rows = vec![Bits::new(k); k];
            for (a, b) in x.pairs() {
                rows[class[a]].insert(class[b]);
            }
            (RelObject::from_rows(Flavor::Preord, rows)?, class)
        }
        ReflectionKind::Indiscrete => (RelObject::complete(Flavor::Preord, n)?, (0..n).collect()),
    };
    let object = embedded.reflavor(kind.target())?;
    let unit = RelMap::new(x.clone(), embedded, assign)?;
    Ok(Reflection { object, unit })
}

/// The reflection of a map, in the target flavor.
pub fn reflect_map(f: &RelMap, kind: ReflectionKind) -> Result<RelMap> {
    let rs = reflect(f.src(), kind)?;
    let rt = reflect(f.tgt(), kind)?;
    let mut assign = vec![0; rs.object.size()];
    for x in 0..f.src().size() {
        assign[rs.unit.apply(x)] = rt.unit.apply(f.apply(x));
    }
    RelMap::new(rs.object, rt.object, assign)
}

/// Views a map of the target flavor inside the source flavor.
pub fn embed_map(f: &RelMap, kind: ReflectionKind) -> Result<RelMap> {
    let src = f.src().reflavor(kind.source())?;
    let tgt = f.tgt().reflavor(kind.source())?;
    RelMap::new(src, tgt, f.assign().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finrel::search::homs;

    const CAP: u64 = 1_000_000;

    #[test]
    fn pi0_of_discrete_is_itself() {
        let x = RelObject::discrete(Flavor::Graph, 3);
        let (p, q) = pi0(&x);
        assert_eq!(p, x);
        assert!(q.is_iso());
    }

    #[test]
    fn pi0_of_connected_is_point() {
        let kn = RelObject::complete(Flavor::Graph, 4).unwrap();
        assert_eq!(pi0(&kn).0.size(), 1);
        let path = RelObject::new(Flavor::Graph, 4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(pi0(&path).0.size(), 1);
    }

    #[test]
    fn pi0_is_idempotent() {
        let x = RelObject::new(Flavor::Graph, 5, &[(0, 1), (3, 4)]).unwrap();
        let (p, q) = pi0(&x);
        assert_eq!(p.size(), 3);
        let (pp, qq) = pi0(&p);
        assert_eq!(pp, p);
        assert!(qq.is_iso());
        assert!(pi0_map(&q).is_iso());
    }

    #[test]
    fn transitive_graph_reflects_to_itself() {
        let x = RelObject::new(Flavor::Graph, 3, &[(0, 1)]).unwrap();
        let r = reflect(&x, ReflectionKind::TransitiveClosure).unwrap();
        assert!(r.unit.is_iso());
        assert_eq!(r.object.flavor(), Flavor::EqRel);
    }

    #[test]
    fn path_reflects_to_one_class() {
        let x = RelObject::new(Flavor::Graph, 3, &[(0, 1), (1, 2)]).unwrap();
        let r = reflect(&x, ReflectionKind::TransitiveClosure).unwrap();
        assert!(r.object.is_complete());
    }

    #[test]
    fn antisymmetrize_identifies_cycle() {
        let x = RelObject::new(Flavor::Preord, 3, &[(0, 1), (1, 2), (1, 0)]).unwrap();
        let r = reflect(&x, ReflectionKind::Antisymmetrize).unwrap();
        assert_eq!(r.object.size(), 2);
        assert_eq!(r.unit.assign(), &[0, 0, 1]);
        assert_eq!(r.object.flavor(), Flavor::Ord);
    }

    /// Every map from `x` into a member of the subcategory factors uniquely
    /// through the unit.
    #[test]
    fn units_are_universal() {
        let cases = [
            (ReflectionKind::TransitiveClosure, Flavor::Graph),
            (ReflectionKind::Antisymmetrize, Flavor::Preord),
            (ReflectionKind::Indiscrete, Flavor::Preord),
        ];
        for (kind, flavor) in cases {
            let objs = vec![
                RelObject::discrete(flavor, 2),
                RelObject::chain(flavor, 3).unwrap(),
                RelObject::complete(flavor, 2).unwrap(),
                RelObject::new(flavor, 3, &[(0, 1), (1, 0)]).unwrap(),
            ];
            for x in &objs {
                let r = reflect(x, kind).unwrap();
                assert!(kind.contains(r.embedded()));
                for z in objs.iter().filter(|z| kind.contains(z)) {
                    for h in homs(x, z, CAP).unwrap() {
                        let through = homs(r.embedded(), z, CAP)
                            .unwrap()
                            .into_iter()
                            .filter(|d| r.unit.then(d).unwrap() == h)
                            .count();
                        assert_eq!(through, 1, "{kind:?} {x:?} -> {z:?}");
                    }
                }
                let again = reflect(r.embedded(), kind).unwrap();
                assert!(again.unit.is_iso());
            }
        }
    }
}
