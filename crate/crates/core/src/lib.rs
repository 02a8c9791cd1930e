//! Weak factorization systems, pushout-products and homotopy on finite
//! relational structures and finite categories.

pub mod ambient;
mod arrow;
mod bits;
pub mod cisinski;
pub mod corpus;
pub mod csp;
mod error;
pub mod fincat;
pub mod finrel;
pub mod lifting;
mod unionfind;

pub use ambient::{Ambient, CoconeData, CofibrationClass, ConeData};
pub use arrow::{Arrow, Endpoint};
pub use bits::Bits;
pub use cisinski::{GeneratorLevels, HomotopyWitness, IntervalCylinder, ModelContext, Verdict};
pub use error::{Error, Result};
pub use fincat::{CatAmbient, CatFunctor, FinCategory, NatTransformation};
pub use finrel::{Flavor, RelMap, RelObject};
pub use lifting::{box_rel, has_llp, has_rlp, in_lbox_rbox, soa_factorize, Bounds, CellFactorization, LiftingProblem};
