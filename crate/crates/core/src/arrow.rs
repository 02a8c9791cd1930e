//! A map of either kind, for callers that handle both relational structures
//! and categories through one value type.

use std::fmt;

use crate::error::{Error, Result};
use crate::fincat::CatFunctor;
use crate::finrel::RelMap;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Arrow {
    Rel(RelMap),
    Cat(CatFunctor),
}

/// Domain or codomain of an [`Arrow`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint<'a> {
    Rel(&'a crate::finrel::RelObject),
    Cat(&'a crate::fincat::FinCategory),
}

impl Arrow {
    pub fn dom(&self) -> Endpoint<'_> {
        match self {
            Arrow::Rel(f) => Endpoint::Rel(f.src()),
            Arrow::Cat(f) => Endpoint::Cat(f.src()),
        }
    }

    pub fn cod(&self) -> Endpoint<'_> {
        match self {
            Arrow::Rel(f) => Endpoint::Rel(f.tgt()),
            Arrow::Cat(f) => Endpoint::Cat(f.tgt()),
        }
    }

    /// `self`, then `next`.
    pub fn compose(&self, next: &Arrow) -> Result<Arrow> {
        match (self, next) {
            (Arrow::Rel(f), Arrow::Rel(g)) => Ok(Arrow::Rel(f.then(g)?)),
            (Arrow::Cat(f), Arrow::Cat(g)) => Ok(Arrow::Cat(f.then(g)?)),
            _ => Err(Error::NotComposable),
        }
    }

    pub fn is_iso(&self) -> bool {
        match self {
            Arrow::Rel(f) => f.is_iso(),
            Arrow::Cat(f) => f.is_iso(),
        }
    }

    pub fn as_rel(&self) -> Option<&RelMap> {
        match self {
            Arrow::Rel(f) => Some(f),
            Arrow::Cat(_) => None,
        }
    }

    pub fn as_cat(&self) -> Option<&CatFunctor> {
        match self {
            Arrow::Cat(f) => Some(f),
            Arrow::Rel(_) => None,
        }
    }
}

impl From<RelMap> for Arrow {
    fn from(f: RelMap) -> Self {
        Arrow::Rel(f)
    }
}

impl From<CatFunctor> for Arrow {
    fn from(f: CatFunctor) -> Self {
        Arrow::Cat(f)
    }
}

impl fmt::Debug for Arrow {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arrow::Rel(m) => m.fmt(out),
            Arrow::Cat(m) => m.fmt(out),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinCategory;
    use crate::finrel::{Flavor, RelObject};

    #[test]
    fn mixed_composition_is_rejected() {
        let r = Arrow::from(RelMap::identity(&RelObject::point(Flavor::Graph)));
        let c = Arrow::from(CatFunctor::identity(&FinCategory::one()));
        assert!(r.compose(&r).unwrap().is_iso());
        assert_eq!(c.compose(&r), Err(Error::NotComposable));
        assert_eq!(r.dom(), r.cod());
    }
}
