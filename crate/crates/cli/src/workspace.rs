//! Named objects, maps, cylinders and generator sets.

use std::fmt;

use wfs_core::fincat::{CatAmbient, CatFunctor, FinCategory};
use wfs_core::{Arrow, CofibrationClass, Flavor, IntervalCylinder, RelMap, RelObject};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WorkspaceError {
    #[error("unknown {kind} `{name}`")]
    Unresolved { kind: &'static str, name: String },
    #[error("`{0}` is declared twice")]
    Duplicate(String),
    #[error("{0}")]
    Kind(String),
}

/// Element names of a relational object, or object and arrow names of a
/// category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Rel {
        value: RelObject,
        elements: Vec<String>,
    },
    Cat {
        value: FinCategory,
        labels: CatLabels,
    },
}

/// Names for a finite category. Identities are `id(x)`; generating arrows
/// carry plain names; every other arrow is named by its path of generators,
/// joined with `.`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatLabels {
    pub objects: Vec<String>,
    pub arrows: Vec<String>,
    /// Each arrow as a path of generating arrows (arrow indices).
    pub words: Vec<Vec<usize>>,
}

impl CatLabels {
    /// Default names: objects `o0, o1, ...`, every non-identity arrow a
    /// generator `a<index>`.
    pub fn default_for(c: &FinCategory) -> Self {
        let objects: Vec<String> = (0..c.n_obj()).map(|x| format!("o{x}")).collect();
        let arrows = (0..c.n_arrows())
            .map(|a| {
                if a < c.n_obj() {
                    format!("id({})", objects[a])
                } else {
                    format!("a{a}")
                }
            })
            .collect();
        let words = (0..c.n_arrows())
            .map(|a| if a < c.n_obj() { Vec::new() } else { vec![a] })
            .collect();
        CatLabels {
            objects,
            arrows,
            words,
        }
    }

    pub fn is_generator(&self, a: usize) -> bool {
        self.words[a] == [a]
    }

    /// The arrow named `name`, generators and composite names alike.
    pub fn arrow(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|n| n == name)
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|n| n == name)
    }
}

impl Object {
    pub fn rel(value: RelObject) -> Self {
        let elements = (0..value.size()).map(|i| i.to_string()).collect();
        Object::Rel { value, elements }
    }

    pub fn cat(value: FinCategory) -> Self {
        let labels = CatLabels::default_for(&value);
        Object::Cat { value, labels }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Object::Rel { value, .. } => value.flavor().name(),
            Object::Cat { .. } => "cat",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectEntry {
    pub name: String,
    pub object: Object,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapEntry {
    pub name: String,
    pub src: String,
    pub tgt: String,
    pub arrow: Arrow,
}

#[derive(Clone, Debug)]
pub enum AnyCylinder {
    Rel(IntervalCylinder<Flavor>),
    Cat(IntervalCylinder<CatAmbient>),
}

#[derive(Clone, Debug)]
pub struct CylinderEntry {
    pub name: String,
    pub interval: String,
    pub endpoints: [String; 2],
    pub class: CofibrationClass,
    pub cylinder: AnyCylinder,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GensetEntry {
    pub name: String,
    pub maps: Vec<String>,
}

/// Every name is unique across the four kinds of declaration, and every
/// reference resolves to an earlier declaration.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub objects: Vec<ObjectEntry>,
    pub maps: Vec<MapEntry>,
    pub cylinders: Vec<CylinderEntry>,
    pub gensets: Vec<GensetEntry>,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
            && self.maps.is_empty()
            && self.cylinders.is_empty()
            && self.gensets.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.objects.iter().any(|e| e.name == name)
            || self.maps.iter().any(|e| e.name == name)
            || self.cylinders.iter().any(|e| e.name == name)
            || self.gensets.iter().any(|e| e.name == name)
    }

    fn claim(&self, name: &str) -> Result<(), WorkspaceError> {
        if self.contains(name) {
            Err(WorkspaceError::Duplicate(name.into()))
        } else {
            Ok(())
        }
    }

    pub fn add_object(&mut self, name: &str, object: Object) -> Result<(), WorkspaceError> {
        self.claim(name)?;
        self.objects.push(ObjectEntry {
            name: name.into(),
            object,
        });
        Ok(())
    }

    /// Adds a map after checking that its endpoints are the named objects.
    pub fn add_map(
        &mut self,
        name: &str,
        src: &str,
        tgt: &str,
        arrow: Arrow,
    ) -> Result<(), WorkspaceError> {
        self.claim(name)?;
        let ok = match (&arrow, &self.object(src)?.object, &self.object(tgt)?.object) {
            (Arrow::Rel(f), Object::Rel { value: s, .. }, Object::Rel { value: t, .. }) => {
                f.src() == s && f.tgt() == t
            }
            (Arrow::Cat(f), Object::Cat { value: s, .. }, Object::Cat { value: t, .. }) => {
                f.src() == s && f.tgt() == t
            }
            _ => false,
        };
        if !ok {
            return Err(WorkspaceError::Kind(format!(
                "map `{name}` does not run from `{src}` to `{tgt}`"
            )));
        }
        self.maps.push(MapEntry {
            name: name.into(),
            src: src.into(),
            tgt: tgt.into(),
            arrow,
        });
        Ok(())
    }

    /// Builds the cylinder `(-) × V` with the endpoints named by elements
    /// (or objects) of the interval `V`.
    pub fn add_cylinder(
        &mut self,
        name: &str,
        interval: &str,
        endpoints: [&str; 2],
        class: CofibrationClass,
    ) -> Result<(), WorkspaceError> {
        self.claim(name)?;
        let core = |e: wfs_core::Error| WorkspaceError::Kind(format!("cylinder `{name}`: {e}"));
        let cylinder = match &self.object(interval)?.object {
            Object::Rel { value, elements } => {
                let ends = endpoints
                    .iter()
                    .map(|e| {
                        let i = elements.iter().position(|n| n == e).ok_or_else(|| {
                            WorkspaceError::Unresolved {
                                kind: "element",
                                name: (*e).into(),
                            }
                        })?;
                        RelMap::element(value, i).map_err(core)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let [g0, g1]: [RelMap; 2] = ends.try_into().expect("two endpoints");
                AnyCylinder::Rel(IntervalCylinder::new(value.flavor(), g0, g1, class).map_err(core)?)
            }
            Object::Cat { value, labels } => {
                let ends = endpoints
                    .iter()
                    .map(|e| {
                        let x = labels.object(e).ok_or_else(|| WorkspaceError::Unresolved {
                            kind: "object",
                            name: (*e).into(),
                        })?;
                        CatFunctor::object(value, x).map_err(core)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let [g0, g1]: [CatFunctor; 2] = ends.try_into().expect("two endpoints");
                AnyCylinder::Cat(
                    IntervalCylinder::new(CatAmbient::default(), g0, g1, class).map_err(core)?,
                )
            }
        };
        self.cylinders.push(CylinderEntry {
            name: name.into(),
            interval: interval.into(),
            endpoints: endpoints.map(String::from),
            class,
            cylinder,
        });
        Ok(())
    }

    pub fn add_genset(&mut self, name: &str, maps: Vec<String>) -> Result<(), WorkspaceError> {
        self.claim(name)?;
        for m in &maps {
            self.map(m)?;
        }
        self.gensets.push(GensetEntry {
            name: name.into(),
            maps,
        });
        Ok(())
    }

    pub fn object(&self, name: &str) -> Result<&ObjectEntry, WorkspaceError> {
        self.objects
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| unresolved("object", name))
    }

    pub fn map(&self, name: &str) -> Result<&MapEntry, WorkspaceError> {
        self.maps
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| unresolved("map", name))
    }

    pub fn cylinder(&self, name: &str) -> Result<&CylinderEntry, WorkspaceError> {
        self.cylinders
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| unresolved("cylinder", name))
    }

    pub fn genset(&self, name: &str) -> Result<&GensetEntry, WorkspaceError> {
        self.gensets
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| unresolved("genset", name))
    }

    /// The maps of a generator set, in declaration order.
    pub fn genset_maps(&self, name: &str) -> Result<Vec<&MapEntry>, WorkspaceError> {
        self.genset(name)?.maps.iter().map(|m| self.map(m)).collect()
    }

    /// A name not yet in use, built from `base`.
    pub fn fresh(&self, base: &str) -> String {
        if !self.contains(base) {
            return base.into();
        }
        (1..)
            .map(|i| format!("{base}{i}"))
            .find(|n| !self.contains(n))
            .expect("unbounded supply of names")
    }

    /// The name of an object equal to `obj`, if one is declared.
    pub fn name_of_rel(&self, obj: &RelObject) -> Option<&str> {
        self.objects.iter().find_map(|e| match &e.object {
            Object::Rel { value, .. } if value == obj => Some(e.name.as_str()),
            _ => None,
        })
    }

    pub fn name_of_cat(&self, obj: &FinCategory) -> Option<&str> {
        self.objects.iter().find_map(|e| match &e.object {
            Object::Cat { value, .. } if value == obj => Some(e.name.as_str()),
            _ => None,
        })
    }
}

fn unresolved(kind: &'static str, name: &str) -> WorkspaceError {
    WorkspaceError::Unresolved {
        kind,
        name: name.into(),
    }
}

impl fmt::Display for Workspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::dsl::emit(self))
    }
}
