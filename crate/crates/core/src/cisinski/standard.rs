//! The cylinders and generating cofibrations of the standard examples:
//! graphs, equivalence relations, preorders, ordered sets, sets as
//! indiscrete preorders, and small categories.

use super::{lambda, IntervalCylinder, LambdaConfig, ModelContext};
use crate::ambient::{Ambient, CofibrationClass};
use crate::error::Result;
use crate::fincat::{CatAmbient, CatFunctor, FinCategory};
use crate::finrel::{Flavor, RelMap, RelObject};
use crate::lifting::Bounds;

/// A cylinder with its generating cofibrations `I`, the extra generators
/// `S`, and known members of the saturation added to a truncated `Λ`.
#[derive(Clone, Debug)]
pub struct Example<A: Ambient> {
    pub name: &'static str,
    pub cylinder: IntervalCylinder<A>,
    pub s: Vec<A::Map>,
    pub generators: Vec<A::Map>,
    pub augmentation: Vec<A::Map>,
}

impl<A: Ambient> Example<A> {
    /// Levels `0..=depth` flattened, followed by the augmentation.
    pub fn fibration_generators(&self, depth: usize) -> Result<Vec<A::Map>> {
        let config = LambdaConfig {
            depth,
            ..LambdaConfig::default()
        };
        let levels = lambda(&self.cylinder, &self.s, &self.generators, config)?;
        let mut gens = levels.flatten(self.cylinder.ambient(), config.cap)?;
        gens.extend(self.augmentation.iter().cloned());
        Ok(gens)
    }

    pub fn model(&self, depth: usize, bounds: Bounds) -> Result<ModelContext<A>> {
        let gens = self.fibration_generators(depth)?;
        Ok(ModelContext::new(self.cylinder.clone(), gens, bounds))
    }
}

fn endpoints(v: &RelObject) -> (RelMap, RelMap) {
    (
        RelMap::element(v, 0).expect("interval has two points"),
        RelMap::element(v, 1).expect("interval has two points"),
    )
}

fn rel_cylinder(v: RelObject, class: CofibrationClass) -> IntervalCylinder<Flavor> {
    let (g0, g1) = endpoints(&v);
    IntervalCylinder::new(v.flavor(), g0, g1, class).expect("standard interval")
}

fn point_inclusion(flavor: Flavor) -> RelMap {
    RelMap::from_empty(&RelObject::point(flavor))
}

/// `2 -> K₂`, `2 -> 2̲` or the like: the two points into `target`.
fn boundary_inclusion(target: RelObject) -> RelMap {
    let two = RelObject::discrete(target.flavor(), 2);
    RelMap::new(two, target, vec![0, 1]).expect("boundary inclusion")
}

/// `K₃⁻ ↪ K₃`.
pub fn transitivity_generator() -> RelMap {
    RelMap::new(
        RelObject::complete_minus_edge(3),
        RelObject::complete(Flavor::Graph, 3).expect("complete graph"),
        vec![0, 1, 2],
    )
    .expect("inclusion")
}

/// Graphs with the cylinder `(-) × K₂` and `I = {0 -> 1, 2 -> K₂}`,
/// augmented by `K₃⁻ ↪ K₃`.
pub fn rsrel() -> Example<Flavor> {
    let k2 = RelObject::complete(Flavor::Graph, 2).expect("K2");
    Example {
        name: "rsrel",
        cylinder: rel_cylinder(k2.clone(), CofibrationClass::Monomorphisms),
        s: Vec::new(),
        generators: vec![point_inclusion(Flavor::Graph), boundary_inclusion(k2)],
        augmentation: vec![transitivity_generator()],
    }
}

/// Equivalence relations with the cylinder induced from graphs.
pub fn eqrel() -> Example<Flavor> {
    let k2 = RelObject::complete(Flavor::EqRel, 2).expect("K2");
    Example {
        name: "eqrel",
        cylinder: rel_cylinder(k2.clone(), CofibrationClass::Monomorphisms),
        s: Vec::new(),
        generators: vec![point_inclusion(Flavor::EqRel), boundary_inclusion(k2)],
        augmentation: Vec::new(),
    }
}

/// Preorders with the cylinder `(-) × 2̿` and `I = {0 -> 1, 2 -> 2̲}`.
pub fn prord() -> Example<Flavor> {
    let v = RelObject::complete(Flavor::Preord, 2).expect("indiscrete");
    let arrow = RelObject::chain(Flavor::Preord, 2).expect("chain");
    Example {
        name: "prord",
        cylinder: rel_cylinder(v, CofibrationClass::Monomorphisms),
        s: Vec::new(),
        generators: vec![point_inclusion(Flavor::Preord), boundary_inclusion(arrow)],
        augmentation: Vec::new(),
    }
}

/// Ordered sets: `2̿` reflects to the point, every map is a cofibration.
pub fn ord() -> Example<Flavor> {
    let one = RelObject::point(Flavor::Ord);
    let id = RelMap::identity(&one);
    let arrow = RelObject::chain(Flavor::Ord, 2).expect("chain");
    Example {
        name: "ord",
        cylinder: IntervalCylinder::new(Flavor::Ord, id.clone(), id, CofibrationClass::All)
            .expect("point interval"),
        s: Vec::new(),
        generators: vec![point_inclusion(Flavor::Ord), boundary_inclusion(arrow)],
        augmentation: Vec::new(),
    }
}

/// Sets as indiscrete preorders, with `I = {0 -> 1}`.
pub fn set_indiscrete() -> Example<Flavor> {
    let v = RelObject::complete(Flavor::Preord, 2).expect("indiscrete");
    Example {
        name: "set-indiscrete",
        cylinder: rel_cylinder(v, CofibrationClass::Monomorphisms),
        s: Vec::new(),
        generators: vec![point_inclusion(Flavor::Preord)],
        augmentation: Vec::new(),
    }
}

/// `p: P -> 2̲`, sending both parallel arrows to the non-identity arrow.
pub fn parallel_collapse() -> CatFunctor {
    CatFunctor::new(
        FinCategory::parallel_pair(),
        FinCategory::chain2(),
        vec![0, 1],
        vec![0, 1, 2, 2],
    )
    .expect("collapse of the parallel pair")
}

/// `2 ↪ 2̲`.
pub fn cat_boundary() -> CatFunctor {
    CatFunctor::new(FinCategory::discrete(2), FinCategory::chain2(), vec![0, 1], vec![0, 1])
        .expect("boundary inclusion")
}

/// Small categories with the cylinder `(-) × 2̿` and
/// `I = {0 -> 1, 2 ↪ 2̲, P -> 2̲}`.
pub fn cat() -> Example<CatAmbient> {
    let v = FinCategory::indiscrete(2);
    let g0 = CatFunctor::object(&v, 0).expect("object");
    let g1 = CatFunctor::object(&v, 1).expect("object");
    Example {
        name: "cat-folk",
        cylinder: IntervalCylinder::new(
            CatAmbient::default(),
            g0,
            g1,
            CofibrationClass::InjectiveOnObjects,
        )
        .expect("walking isomorphism"),
        s: Vec::new(),
        generators: vec![
            CatFunctor::from_initial(&FinCategory::one()),
            cat_boundary(),
            parallel_collapse(),
        ],
        augmentation: Vec::new(),
    }
}
