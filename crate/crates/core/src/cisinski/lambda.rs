use super::IntervalCylinder;
use crate::ambient::Ambient;
use crate::error::{Error, Result};

/// Where a generator came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    /// The `index`-th member of `S`.
    S(usize),
    /// `I[index] ⋆ γᵏ`.
    Endpoint { index: usize, k: usize },
    /// `⋆ γ` applied to generator `parent` of the previous level.
    Boundary { parent: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator<M> {
    pub map: M,
    pub origin: Origin,
    /// Origins of pruned duplicates, isomorphic to this one as arrows.
    pub aliases: Vec<Origin>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorLevels<M> {
    pub levels: Vec<Vec<Generator<M>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LambdaConfig {
    /// Last level computed; level 0 is always present.
    pub depth: usize,
    /// Largest codomain size allowed before a pushout-product is built.
    pub size_limit: usize,
    pub cap: u64,
}

impl Default for LambdaConfig {
    fn default() -> Self {
        LambdaConfig {
            depth: 2,
            size_limit: 64,
            cap: 1_000_000,
        }
    }
}

impl<M: Clone> GeneratorLevels<M> {
    pub fn depth(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All levels as one list, with arrow-isomorphic repeats removed.
    pub fn flatten<A: Ambient<Map = M>>(&self, amb: &A, cap: u64) -> Result<Vec<M>> {
        let mut out: Vec<Generator<M>> = Vec::new();
        for g in self.levels.iter().flatten() {
            insert_pruned(amb, &mut out, g.map.clone(), g.origin, cap)?;
        }
        Ok(out.into_iter().map(|g| g.map).collect())
    }
}

fn same_shape<A: Ambient>(amb: &A, f: &A::Map, g: &A::Map) -> bool {
    amb.size(amb.dom(f)) == amb.size(amb.dom(g)) && amb.size(amb.cod(f)) == amb.size(amb.cod(g))
}

/// Adds `map` unless it is an iso or isomorphic to a kept generator, in
/// which case its origin becomes an alias.
fn insert_pruned<A: Ambient>(
    amb: &A,
    kept: &mut Vec<Generator<A::Map>>,
    map: A::Map,
    origin: Origin,
    cap: u64,
) -> Result<()> {
    if amb.is_iso(&map) {
        return Ok(());
    }
    for g in kept.iter_mut() {
        if same_shape(amb, &g.map, &map) && amb.arrow_iso(&g.map, &map, cap)?.is_some() {
            g.aliases.push(origin);
            return Ok(());
        }
    }
    kept.push(Generator {
        map,
        origin,
        aliases: Vec::new(),
    });
    Ok(())
}

fn guard<A: Ambient>(cyl: &IntervalCylinder<A>, f: &A::Map, limit: usize) -> Result<()> {
    let amb = cyl.ambient();
    let size = amb.size(amb.cod(f)) * amb.size(cyl.interval());
    if size > limit {
        return Err(Error::SizeGuard { size, limit });
    }
    Ok(())
}

/// Levels `0..=depth` of the generator set: level 0 is `S` with the
/// endpoint pushout-products of `I`, each further level the boundary
/// pushout-products of the previous one. Isos and arrow-isomorphic
/// repeats within a level are pruned.
pub fn lambda<A: Ambient>(
    cyl: &IntervalCylinder<A>,
    s: &[A::Map],
    i: &[A::Map],
    config: LambdaConfig,
) -> Result<GeneratorLevels<A::Map>> {
    let amb = cyl.ambient();
    let mut level = Vec::new();
    for (index, f) in s.iter().enumerate() {
        insert_pruned(amb, &mut level, f.clone(), Origin::S(index), config.cap)?;
    }
    for (index, f) in i.iter().enumerate() {
        guard(cyl, f, config.size_limit)?;
        for k in 0..2 {
            let m = cyl.star_gamma_k(f, k)?;
            insert_pruned(amb, &mut level, m, Origin::Endpoint { index, k }, config.cap)?;
        }
    }
    let mut levels = vec![level];
    for _ in 0..config.depth {
        let mut next = Vec::new();
        for (parent, g) in levels.last().into_iter().flatten().enumerate() {
            guard(cyl, &g.map, config.size_limit)?;
            let m = cyl.star_gamma(&g.map)?;
            insert_pruned(amb, &mut next, m, Origin::Boundary { parent }, config.cap)?;
        }
        levels.push(next);
    }
    Ok(GeneratorLevels { levels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cisinski::standard;
    use crate::finrel::RelMap;

    /// Connected in the symmetric closure of the relation.
    fn connected(x: &crate::finrel::RelObject) -> bool {
        crate::finrel::pi0(x).0.size() == 1
    }

    #[test]
    fn empty_inputs_give_empty_levels() {
        let ex = standard::rsrel();
        let levels = lambda::<crate::Flavor>(&ex.cylinder, &[], &[], LambdaConfig::default()).unwrap();
        assert_eq!(levels.depth(), 2);
        assert!(levels.is_empty());
    }

    #[test]
    fn rsrel_levels_are_connected_subgraphs_of_complete_graphs() {
        let ex = standard::rsrel();
        let levels = lambda(&ex.cylinder, &[], &ex.generators, LambdaConfig::default()).unwrap();
        assert_eq!(levels.levels.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 2, 2]);
        for g in levels.levels.iter().flatten() {
            let m: &RelMap = &g.map;
            assert!(m.is_mono());
            assert!(m.tgt().is_complete());
            assert!(!m.src().is_empty() && connected(m.src()));
        }
        // both endpoints of each generator collapse to one class
        for g in &levels.levels[0] {
            assert_eq!(g.aliases.len(), 1);
        }
    }

    #[test]
    fn size_guard_is_reported() {
        let ex = standard::rsrel();
        let config = LambdaConfig {
            size_limit: 6,
            ..LambdaConfig::default()
        };
        assert!(matches!(
            lambda(&ex.cylinder, &[], &ex.generators, config),
            Err(Error::SizeGuard { .. })
        ));
    }
}
