//! Interval cylinders, pushout-products against the cylinder, the
//! stratified generator sets built from them, and the homotopy deciders.

pub mod closed_form;
mod homotopy;
mod lambda;
pub mod standard;

pub use homotopy::{
    is_fibrant, HomotopyEquivalence, HomotopyProbe, HomotopyWitness, ModelContext, Replacement, Verdict,
};
pub use lambda::{lambda, Generator, GeneratorLevels, LambdaConfig, Origin};

use crate::ambient::{Ambient, Cocone, CofibrationClass, Cone, ConeData};
use crate::error::{Error, Result};
use crate::finrel::{self, Flavor, RelMap, ReflectionKind};

/// The cylinder `X ↦ X × V` of an interval `V` with endpoints `g0, g1: 1 -> V`
/// and the collapse `s: V -> 1`.
#[derive(Clone, Debug)]
pub struct IntervalCylinder<A: Ambient> {
    ambient: A,
    v: A::Obj,
    g0: A::Map,
    g1: A::Map,
    s: A::Map,
    class: CofibrationClass,
    cap: u64,
}

impl<A: Ambient> IntervalCylinder<A> {
    /// Validates the endpoints and requires `(g0 | g1): 1 + 1 -> V` to be a
    /// cofibration.
    pub fn new(ambient: A, g0: A::Map, g1: A::Map, class: CofibrationClass) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidCylinder(m.into()));
        let one = ambient.terminal();
        let v = ambient.cod(&g0).clone();
        if *ambient.dom(&g0) != one || *ambient.dom(&g1) != one {
            return bad("endpoints must start at the terminal object");
        }
        if *ambient.cod(&g1) != v {
            return bad("endpoints must share a codomain");
        }
        let s = ambient.to_terminal(&v);
        let id = ambient.identity(&one);
        if ambient.then(&g0, &s)? != id || ambient.then(&g1, &s)? != id {
            return bad("the collapse must retract both endpoints");
        }
        let sum = ambient.coproduct(&one, &one)?;
        let ends = ambient.copair(&sum, &g0, &g1)?;
        if !ambient.in_class(class, &ends) {
            return bad(&format!("endpoint inclusion is not in the class {}", class.name()));
        }
        Ok(IntervalCylinder {
            ambient,
            v,
            g0,
            g1,
            s,
            class,
            cap: 1_000_000,
        })
    }

    /// Replaces the search cap used by pushout mediators and homotopy search.
    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn ambient(&self) -> &A {
        &self.ambient
    }

    pub fn interval(&self) -> &A::Obj {
        &self.v
    }

    pub fn endpoint(&self, k: usize) -> &A::Map {
        if k == 0 {
            &self.g0
        } else {
            &self.g1
        }
    }

    pub fn collapse(&self) -> &A::Map {
        &self.s
    }

    pub fn class(&self) -> CofibrationClass {
        self.class
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn is_cofibration(&self, f: &A::Map) -> bool {
        self.ambient.in_class(self.class, f)
    }

    /// `Cyl X = X × V` with projections `[X × V -> X, X × V -> V]`.
    pub fn cyl(&self, x: &A::Obj) -> Result<Cone<A>> {
        self.ambient.product(x, &self.v)
    }

    /// `γᵏ_X = <id, ! ; gᵏ>: X -> X × V`.
    pub fn gamma_k(&self, x: &A::Obj, k: usize) -> Result<A::Map> {
        let amb = &self.ambient;
        let cyl = self.cyl(x)?;
        let end = amb.then(&amb.to_terminal(x), self.endpoint(k))?;
        amb.pair(&cyl, &amb.identity(x), &end)
    }

    /// `γ_X = (γ⁰_X | γ¹_X): X + X -> X × V`, with the coproduct it starts from.
    pub fn gamma(&self, x: &A::Obj) -> Result<(Cocone<A>, A::Map)> {
        let sum = self.ambient.coproduct(x, x)?;
        let g = self
            .ambient
            .copair(&sum, &self.gamma_k(x, 0)?, &self.gamma_k(x, 1)?)?;
        Ok((sum, g))
    }

    /// `σ_X: X × V -> X`.
    pub fn sigma(&self, x: &A::Obj) -> Result<A::Map> {
        let ConeData { mut legs, .. } = self.cyl(x)?;
        Ok(legs.swap_remove(0))
    }

    /// `f × V`.
    pub fn cyl_map(&self, f: &A::Map) -> Result<A::Map> {
        self.ambient.product_map(f, &self.ambient.identity(&self.v))
    }

    /// `f ⋆ γᵏ`: the map out of `A × V ⊔_A B` induced by `f × V` and `γᵏ_B`.
    pub fn star_gamma_k(&self, f: &A::Map, k: usize) -> Result<A::Map> {
        let amb = &self.ambient;
        let (a, b) = (amb.dom(f), amb.cod(f));
        let ga = self.gamma_k(a, k)?;
        let po = amb.pushout(&ga, f)?;
        let fv = self.cyl_map(f)?;
        let gb = self.gamma_k(b, k)?;
        amb.pushout_mediator(&ga, f, &po, &fv, &gb, self.cap)
    }

    /// `f ⋆ γ`: the map out of `A × V ⊔_{A+A} (B+B)` induced by `f × V`
    /// and `γ_B`.
    pub fn star_gamma(&self, f: &A::Map) -> Result<A::Map> {
        let amb = &self.ambient;
        let (a, b) = (amb.dom(f), amb.cod(f));
        let (_, ga) = self.gamma(a)?;
        let ff = amb.coproduct_map(f, f)?;
        let po = amb.pushout(&ga, &ff)?;
        let fv = self.cyl_map(f)?;
        let (_, gb) = self.gamma(b)?;
        amb.pushout_mediator(&ga, &ff, &po, &fv, &gb, self.cap)
    }

    /// Checks that `i ⋆ γ`, `i ⋆ γ⁰` and `i ⋆ γ¹` are cofibrations for every
    /// `i` in `gens`.
    pub fn check_cartesian(&self, gens: &[A::Map]) -> Result<CartesianReport> {
        let mut report = CartesianReport::default();
        for (i, f) in gens.iter().enumerate() {
            let products = [
                (StarKind::Boundary, self.star_gamma(f)?),
                (StarKind::Endpoint(0), self.star_gamma_k(f, 0)?),
                (StarKind::Endpoint(1), self.star_gamma_k(f, 1)?),
            ];
            for (kind, m) in products {
                report.checked += 1;
                if !self.is_cofibration(&m) {
                    report.failures.push((i, kind));
                }
            }
        }
        Ok(report)
    }
}

/// Which pushout-product a cartesian check refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StarKind {
    Boundary,
    Endpoint(usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CartesianReport {
    pub checked: usize,
    /// Generator index and the pushout-product that left the class.
    pub failures: Vec<(usize, StarKind)>,
}

impl CartesianReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl IntervalCylinder<Flavor> {
    /// `γ* ⋆ g` for `g: X -> Y`: the map `X^V -> Y^V ×_{Y×Y} (X×X)` sending a
    /// path `h` to `(h ; g, (h(0), h(1)))`.
    pub fn costar(&self, g: &RelMap) -> Result<RelMap> {
        let (x, y) = (g.src(), g.tgt());
        let ex = finrel::exponential(&self.v, x, self.cap)?;
        let ey = finrel::exponential(&self.v, y, self.cap)?;
        let (v0, v1) = (self.g0.apply(0), self.g1.apply(0));
        let yy = finrel::product(y, y)?;
        let beta = RelMap::new(
            ey.object.clone(),
            yy.apex.clone(),
            ey.maps
                .iter()
                .map(|h| h.apply(v0) * y.size() + h.apply(v1))
                .collect(),
        )?;
        let gg = self.ambient.product_map(g, g)?;
        let pb = finrel::pullback(&beta, &gg)?;
        let xs = x.size();
        let mut assign = Vec::with_capacity(ex.maps.len());
        for h in &ex.maps {
            let path = ey
                .index_of(&h.then(g)?)
                .ok_or_else(|| Error::Internal("path outside the exponential".into()))?;
            let ends = h.apply(v0) * xs + h.apply(v1);
            let q = (0..pb.apex.size())
                .find(|&q| pb.legs[0].apply(q) == path && pb.legs[1].apply(q) == ends)
                .ok_or_else(|| Error::Internal("path outside the pullback".into()))?;
            assign.push(q);
        }
        RelMap::new(ex.object, pb.apex, assign)
    }

    /// The cylinder on the reflective subcategory: the interval and its
    /// endpoints are reflected, the class is given by the caller.
    pub fn induced(&self, kind: ReflectionKind, class: CofibrationClass) -> Result<Self> {
        if self.ambient != kind.source() {
            return Err(Error::FlavorMismatch {
                expected: kind.source(),
                found: self.ambient,
            });
        }
        let g0 = finrel::reflect_map(&self.g0, kind)?;
        let g1 = finrel::reflect_map(&self.g1, kind)?;
        Ok(IntervalCylinder::new(kind.target(), g0, g1, class)?.with_cap(self.cap))
    }
}
