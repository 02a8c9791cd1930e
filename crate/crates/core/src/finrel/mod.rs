//! Finite relational categories: sets, reflexive symmetric graphs, preorders,
//! partial orders and equivalence relations.

mod limits;
mod map;
mod object;
mod reflect;
mod search;

pub use limits::{
    coproduct, copair, exponential, pair, product, pullback, pushout, Exponential, RelCocone,
    RelCone,
};
pub use map::RelMap;
pub use object::{Flavor, RelObject};
pub use reflect::{
    embed_map, pi0, pi0_bijective, pi0_map, reflect, reflect_map, Reflection, ReflectionKind,
};
pub use search::{arrow_iso, count_homs, find_filler, find_unfilled_square, homs, iso_search, mediate};

use crate::ambient::{Ambient, Cocone, CofibrationClass, Cone};
use crate::error::Result;

/// Each flavor is a category; the flavor value itself is the ambient.
impl Ambient for Flavor {
    type Obj = RelObject;
    type Map = RelMap;

    fn name(&self) -> String {
        self.to_string()
    }

    fn dom<'a>(&self, f: &'a RelMap) -> &'a RelObject {
        f.src()
    }

    fn cod<'a>(&self, f: &'a RelMap) -> &'a RelObject {
        f.tgt()
    }

    fn identity(&self, x: &RelObject) -> RelMap {
        RelMap::identity(x)
    }

    fn then(&self, f: &RelMap, g: &RelMap) -> Result<RelMap> {
        f.then(g)
    }

    fn is_iso(&self, f: &RelMap) -> bool {
        f.is_iso()
    }

    fn in_class(&self, class: CofibrationClass, f: &RelMap) -> bool {
        match class {
            CofibrationClass::Monomorphisms | CofibrationClass::InjectiveOnObjects => f.is_mono(),
            CofibrationClass::All => true,
        }
    }

    fn size(&self, x: &RelObject) -> usize {
        x.size()
    }

    fn terminal(&self) -> RelObject {
        RelObject::point(*self)
    }

    fn initial(&self) -> RelObject {
        RelObject::empty(*self)
    }

    fn to_terminal(&self, x: &RelObject) -> RelMap {
        RelMap::to_point(x)
    }

    fn from_initial(&self, x: &RelObject) -> RelMap {
        RelMap::from_empty(x)
    }

    fn coproduct(&self, x: &RelObject, y: &RelObject) -> Result<Cocone<Self>> {
        coproduct(x, y)
    }

    fn copair(&self, sum: &Cocone<Self>, f: &RelMap, g: &RelMap) -> Result<RelMap> {
        copair(sum, f, g)
    }

    fn product(&self, x: &RelObject, y: &RelObject) -> Result<Cone<Self>> {
        product(x, y)
    }

    fn pair(&self, prod: &Cone<Self>, f: &RelMap, g: &RelMap) -> Result<RelMap> {
        pair(prod, f, g)
    }

    fn pushout(&self, f: &RelMap, g: &RelMap) -> Result<Cocone<Self>> {
        pushout(f, g)
    }

    fn mediate(
        &self,
        apex: &RelObject,
        target: &RelObject,
        legs: &[(RelMap, RelMap)],
        cap: u64,
    ) -> Result<Option<RelMap>> {
        mediate(apex, target, legs, cap)
    }

    fn homs(&self, a: &RelObject, x: &RelObject, cap: u64) -> Result<Vec<RelMap>> {
        homs(a, x, cap)
    }

    fn find_filler(
        &self,
        left: &RelMap,
        right: &RelMap,
        top: &RelMap,
        bottom: &RelMap,
        cap: u64,
    ) -> Result<Option<RelMap>> {
        find_filler(left, right, top, bottom, cap)
    }

    fn find_unfilled_square(
        &self,
        left: &RelMap,
        right: &RelMap,
        cap: u64,
    ) -> Result<Option<(RelMap, RelMap)>> {
        find_unfilled_square(left, right, cap)
    }

    fn arrow_iso(&self, f: &RelMap, g: &RelMap, cap: u64) -> Result<Option<(RelMap, RelMap)>> {
        arrow_iso(f, g, cap)
    }
}
