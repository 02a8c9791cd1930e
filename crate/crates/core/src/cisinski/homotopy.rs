use std::collections::HashMap;
use std::sync::Mutex;

use super::IntervalCylinder;
use crate::ambient::{Ambient, Cocone};
use crate::error::{Error, Result};
use crate::lifting::{has_rlp, soa_factorize, Bounds};

/// A map `h: Cyl X -> Y` with `γ_X ; h = (f | g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyWitness<M> {
    pub h: M,
}

/// A homotopy inverse `g` of `f: X -> Y` with `id_X ≃ f ; g` and
/// `id_Y ≃ g ; f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyEquivalence<M> {
    pub inverse: M,
    pub unit: HomotopyWitness<M>,
    pub counit: HomotopyWitness<M>,
}

/// `X -> 1` has the right lifting property against `gens`.
pub fn is_fibrant<A: Ambient>(amb: &A, x: &A::Obj, gens: &[A::Map], cap: u64) -> Result<bool> {
    has_rlp(amb, &amb.to_terminal(x), gens, cap)
}

/// The cylinder data of one object, prepared for repeated homotopy tests
/// between maps out of it.
#[derive(Clone, Debug)]
pub struct HomotopyProbe<'c, A: Ambient> {
    cylinder: &'c IntervalCylinder<A>,
    sum: Cocone<A>,
    gamma: A::Map,
    apex: A::Obj,
}

impl<A: Ambient> HomotopyProbe<'_, A> {
    /// `f ≃ g` for maps out of the probed object.
    pub fn homotopic(&self, f: &A::Map, g: &A::Map) -> Result<Option<HomotopyWitness<A::Map>>> {
        let amb = self.cylinder.ambient();
        if amb.dom(f) != amb.dom(g) || amb.cod(f) != amb.cod(g) {
            return Err(Error::NotComposable);
        }
        let ends = amb.copair(&self.sum, f, g)?;
        let legs = [(self.gamma.clone(), ends)];
        let h = amb.mediate(&self.apex, amb.cod(f), &legs, self.cylinder.cap())?;
        Ok(h.map(|h| HomotopyWitness { h }))
    }
}

impl<A: Ambient> IntervalCylinder<A> {
    pub fn probe(&self, x: &A::Obj) -> Result<HomotopyProbe<'_, A>> {
        let (sum, gamma) = self.gamma(x)?;
        let apex = self.cyl(x)?.apex;
        Ok(HomotopyProbe {
            cylinder: self,
            sum,
            gamma,
            apex,
        })
    }

    pub fn homotopic(&self, f: &A::Map, g: &A::Map) -> Result<Option<HomotopyWitness<A::Map>>> {
        self.probe(self.ambient().dom(f))?.homotopic(f, g)
    }

    /// The first `g: Y -> X`, in canonical order, inverting `f` up to
    /// homotopy. Meaningful when both ends are fibrant.
    pub fn is_homotopy_equivalence(
        &self,
        f: &A::Map,
    ) -> Result<Option<HomotopyEquivalence<A::Map>>> {
        let amb = self.ambient();
        let (x, y) = (amb.dom(f), amb.cod(f));
        let (id_x, id_y) = (amb.identity(x), amb.identity(y));
        let (px, py) = (self.probe(x)?, self.probe(y)?);
        for g in amb.homs(y, x, self.cap())? {
            let Some(unit) = px.homotopic(&id_x, &amb.then(f, &g)?)? else {
                continue;
            };
            if let Some(counit) = py.homotopic(&id_y, &amb.then(&g, f)?)? {
                return Ok(Some(HomotopyEquivalence {
                    inverse: g,
                    unit,
                    counit,
                }));
            }
        }
        Ok(None)
    }

    /// A section `g` of `f: X -> Y` with a homotopy `h: Cyl X -> X` from
    /// `id_X` to `f ; g` lying over `Y`, i.e. `h ; f = σ_X ; f`.
    pub fn is_dual_sdr(&self, f: &A::Map) -> Result<Option<(A::Map, A::Map)>> {
        let amb = self.ambient();
        let (x, y) = (amb.dom(f), amb.cod(f));
        let id_x = amb.identity(x);
        let id_y = amb.identity(y);
        let (sum, gamma) = self.gamma(x)?;
        let below = amb.then(&self.sigma(x)?, f)?;
        for g in amb.homs(y, x, self.cap())? {
            if amb.then(&g, f)? != id_y {
                continue;
            }
            let ends = amb.copair(&sum, &id_x, &amb.then(f, &g)?)?;
            if let Some(h) = amb.find_filler(&gamma, f, &ends, &below, self.cap())? {
                return Ok(Some((g, h)));
            }
        }
        Ok(None)
    }
}

/// Outcome of a decision that may run out of its bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// The bound that was exceeded.
    Undecided(Error),
}

impl Verdict {
    pub fn from_result(r: Result<bool>) -> Result<Verdict> {
        match r {
            Ok(true) => Ok(Verdict::Holds),
            Ok(false) => Ok(Verdict::Fails),
            Err(e) if e.is_bound() => Ok(Verdict::Undecided(e)),
            Err(e) => Err(e),
        }
    }

    pub fn decided(&self) -> Option<bool> {
        match self {
            Verdict::Holds => Some(true),
            Verdict::Fails => Some(false),
            Verdict::Undecided(_) => None,
        }
    }
}

/// A fibrant replacement `j: X -> RX` with `RX -> 1` in the right class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replacement<M> {
    pub unit: M,
    pub cells: usize,
}

/// A cylinder with a finite generator set standing in for the fibrations'
/// defining class, and a cache of fibrant replacements.
#[derive(Debug)]
pub struct ModelContext<A: Ambient> {
    pub cylinder: IntervalCylinder<A>,
    pub gens: Vec<A::Map>,
    pub bounds: Bounds,
    cache: Mutex<HashMap<A::Obj, Replacement<A::Map>>>,
}

impl<A: Ambient> ModelContext<A> {
    pub fn new(cylinder: IntervalCylinder<A>, gens: Vec<A::Map>, bounds: Bounds) -> Self {
        ModelContext {
            cylinder,
            gens,
            bounds,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn ambient(&self) -> &A {
        self.cylinder.ambient()
    }

    pub fn is_fibrant(&self, x: &A::Obj) -> Result<bool> {
        is_fibrant(self.ambient(), x, &self.gens, self.bounds.square_cap)
    }

    /// Cell-complex factorization of `X -> 1`, cached per object.
    pub fn replacement(&self, x: &A::Obj) -> Result<Replacement<A::Map>> {
        if let Some(r) = self.cache.lock().expect("cache lock").get(x) {
            return Ok(r.clone());
        }
        let amb = self.ambient();
        let fact = soa_factorize(amb, &amb.to_terminal(x), &self.gens, self.bounds)?;
        let r = Replacement {
            unit: fact.left_part,
            cells: fact.steps.len(),
        };
        self.cache
            .lock()
            .expect("cache lock")
            .insert(x.clone(), r.clone());
        Ok(r)
    }

    /// `Rf: RX -> RY` extending `f ; j_Y` along `j_X`.
    pub fn transport(&self, f: &A::Map) -> Result<A::Map> {
        let amb = self.ambient();
        let jx = self.replacement(amb.dom(f))?.unit;
        let jy = self.replacement(amb.cod(f))?.unit;
        let (rx, ry) = (amb.cod(&jx), amb.cod(&jy));
        let top = amb.then(f, &jy)?;
        amb.find_filler(
            &jx,
            &amb.to_terminal(ry),
            &top,
            &amb.to_terminal(rx),
            self.bounds.square_cap,
        )?
        .ok_or_else(|| Error::Internal("cell complex failed to lift against a fibrant object".into()))
    }

    /// Weak equivalence via fibrant replacement and homotopy inverses.
    pub fn weq(&self, f: &A::Map) -> Result<Verdict> {
        Verdict::from_result(self.weq_inner(f))
    }

    fn weq_inner(&self, f: &A::Map) -> Result<bool> {
        let rf = self.transport(f)?;
        Ok(self.cylinder.is_homotopy_equivalence(&rf)?.is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cisinski::{closed_form, standard};
    use crate::finrel::{homs, Flavor, RelMap, RelObject};

    const CAP: u64 = 1_000_000;

    fn graphs3() -> Vec<RelObject> {
        let mut out = vec![RelObject::empty(Flavor::Graph)];
        for n in 1..=3 {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            for mask in 0..1u32 << pairs.len() {
                let chosen: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| *p).collect();
                out.push(RelObject::new(Flavor::Graph, n, &chosen).unwrap());
            }
        }
        out
    }

    #[test]
    fn homotopy_matches_the_edge_condition() {
        let c = standard::rsrel().cylinder;
        let objs = graphs3();
        for x in objs.iter().step_by(2) {
            for y in &objs {
                let maps = homs(x, y, CAP).unwrap();
                for f in &maps {
                    for g in &maps {
                        let w = c.homotopic(f, g).unwrap();
                        assert_eq!(w.is_some(), closed_form::rel_homotopic(f, g));
                    }
                }
            }
        }
    }

    #[test]
    fn identity_is_a_homotopy_equivalence_and_dual_sdr() {
        let c = standard::rsrel().cylinder;
        for x in graphs3() {
            let id = RelMap::identity(&x);
            assert!(c.is_homotopy_equivalence(&id).unwrap().is_some());
            let (g, h) = c.is_dual_sdr(&id).unwrap().unwrap();
            assert_eq!(g, id);
            assert_eq!(h, c.sigma(&x).unwrap());
        }
    }

    #[test]
    fn weq_of_path_inclusion() {
        let ex = standard::rsrel();
        let ctx = ex.model(2, Bounds::default()).unwrap();
        let path = RelObject::new(Flavor::Graph, 3, &[(0, 1), (1, 2)]).unwrap();
        let end = RelMap::element(&path, 0).unwrap();
        assert_eq!(ctx.weq(&end).unwrap(), Verdict::Holds);
        let two = RelObject::discrete(Flavor::Graph, 2);
        assert_eq!(ctx.weq(&RelMap::to_point(&two)).unwrap(), Verdict::Fails);
        let r = ctx.replacement(&path).unwrap();
        assert!(r.unit.tgt().is_transitive());
    }

    #[test]
    fn bounds_make_weq_undecided() {
        let ex = standard::rsrel();
        let bounds = Bounds {
            max_steps: 0,
            ..Bounds::default()
        };
        let ctx = ex.model(2, bounds).unwrap();
        let path = RelObject::new(Flavor::Graph, 3, &[(0, 1), (1, 2)]).unwrap();
        let v = ctx.weq(&RelMap::identity(&path)).unwrap();
        assert_eq!(v, Verdict::Undecided(Error::CellBound { max_steps: 0 }));
    }
}
