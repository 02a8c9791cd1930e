//! Direct characterizations used to cross-check the generic deciders.
//! Never substituted for them.

use crate::error::Result;
use crate::fincat::{natural_iso, CatFunctor};
use crate::finrel::RelMap;

pub use crate::finrel::pi0_bijective;

/// `f ≃ g` for the cylinder `(-) × K₂`: `x ~ x'` implies `f(x) ~ g(x')`.
pub fn rel_homotopic(f: &RelMap, g: &RelMap) -> bool {
    let (x, y) = (f.src(), f.tgt());
    (0..x.size()).all(|a| x.row(a).iter().all(|b| y.related(f.apply(a), g.apply(b))))
}

/// `f ≃ g` for the cylinder `(-) × 2̿`: a natural isomorphism exists.
pub fn cat_homotopic(f: &CatFunctor, g: &CatFunctor, cap: u64) -> Result<bool> {
    Ok(natural_iso(f, g, cap)?.is_some())
}
