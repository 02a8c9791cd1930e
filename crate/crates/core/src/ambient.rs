//! The interface shared by the relational categories and `Cat`.
//!
//! The lifting and homotopy machinery is written once against [`Ambient`];
//! `Flavor` and `CatAmbient` implement it.

use std::fmt;
use std::hash::Hash;

use crate::error::Result;

/// A cocone: every leg has the apex as codomain.
#[derive(Clone, Debug, PartialEq)]
pub struct CoconeData<O, M> {
    pub apex: O,
    pub legs: Vec<M>,
}

/// A cone: every leg has the apex as domain.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeData<O, M> {
    pub apex: O,
    pub legs: Vec<M>,
}

/// Which maps count as cofibrations for a given weak factorization system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CofibrationClass {
    Monomorphisms,
    InjectiveOnObjects,
    All,
}

impl CofibrationClass {
    pub fn name(self) -> &'static str {
        match self {
            CofibrationClass::Monomorphisms => "mono",
            CofibrationClass::InjectiveOnObjects => "injective-on-objects",
            CofibrationClass::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "mono" => Some(CofibrationClass::Monomorphisms),
            "injective-on-objects" => Some(CofibrationClass::InjectiveOnObjects),
            "all" => Some(CofibrationClass::All),
            _ => None,
        }
    }
}

pub type Cocone<A> = CoconeData<<A as Ambient>::Obj, <A as Ambient>::Map>;
pub type Cone<A> = ConeData<<A as Ambient>::Obj, <A as Ambient>::Map>;

/// A finitely complete and cocomplete category of finite structures in
/// which hom-sets can be searched.
///
/// Composition is written diagrammatically: `then(f, g)` is "f, then g".
/// Every `cap` bounds the number of search nodes and turns into
/// [`Error::SearchCap`](crate::Error::SearchCap) when exceeded.
pub trait Ambient: Clone + fmt::Debug + Send + Sync {
    type Obj: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;
    type Map: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn name(&self) -> String;

    fn dom<'a>(&self, f: &'a Self::Map) -> &'a Self::Obj;
    fn cod<'a>(&self, f: &'a Self::Map) -> &'a Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Map;
    fn then(&self, f: &Self::Map, g: &Self::Map) -> Result<Self::Map>;
    fn is_iso(&self, f: &Self::Map) -> bool;
    fn in_class(&self, class: CofibrationClass, f: &Self::Map) -> bool;

    /// Size used by object guards: carrier size or number of arrows.
    fn size(&self, x: &Self::Obj) -> usize;

    fn terminal(&self) -> Self::Obj;
    fn initial(&self) -> Self::Obj;
    fn to_terminal(&self, x: &Self::Obj) -> Self::Map;
    fn from_initial(&self, x: &Self::Obj) -> Self::Map;

    /// Binary coproduct with legs `[inj_x, inj_y]`.
    fn coproduct(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Cocone<Self>>;
    /// `(f | g)` out of a coproduct computed by [`Ambient::coproduct`].
    fn copair(&self, sum: &Cocone<Self>, f: &Self::Map, g: &Self::Map) -> Result<Self::Map>;

    /// Binary product with legs `[proj_x, proj_y]`.
    fn product(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Cone<Self>>;
    /// `<f, g>` into a product computed by [`Ambient::product`].
    fn pair(&self, prod: &Cone<Self>, f: &Self::Map, g: &Self::Map) -> Result<Self::Map>;

    /// Pushout of `f: A -> B` and `g: A -> C`, legs `[inj_b, inj_c]`.
    fn pushout(&self, f: &Self::Map, g: &Self::Map) -> Result<Cocone<Self>>;

    /// The first map `d: apex -> target` with `leg; d = image` for every
    /// `(leg, image)` pair, if one exists.
    fn mediate(
        &self,
        apex: &Self::Obj,
        target: &Self::Obj,
        legs: &[(Self::Map, Self::Map)],
        cap: u64,
    ) -> Result<Option<Self::Map>>;

    /// All maps `a -> x` in canonical order.
    fn homs(&self, a: &Self::Obj, x: &Self::Obj, cap: u64) -> Result<Vec<Self::Map>>;

    /// The first diagonal `d` of the square `left; bottom = top; right`
    /// with `left; d = top` and `d; right = bottom`.
    fn find_filler(
        &self,
        left: &Self::Map,
        right: &Self::Map,
        top: &Self::Map,
        bottom: &Self::Map,
        cap: u64,
    ) -> Result<Option<Self::Map>>;

    /// A commuting square `(top, bottom)` from `left` to `right` without a
    /// diagonal, if there is one.
    fn find_unfilled_square(
        &self,
        left: &Self::Map,
        right: &Self::Map,
        cap: u64,
    ) -> Result<Option<(Self::Map, Self::Map)>>;

    /// Isomorphisms `(a, b)` of the arrows with `f; b = a; g`.
    fn arrow_iso(
        &self,
        f: &Self::Map,
        g: &Self::Map,
        cap: u64,
    ) -> Result<Option<(Self::Map, Self::Map)>>;

    /// The mediating map out of a pushout computed by [`Ambient::pushout`].
    fn pushout_mediator(
        &self,
        f: &Self::Map,
        g: &Self::Map,
        po: &Cocone<Self>,
        h: &Self::Map,
        k: &Self::Map,
        cap: u64,
    ) -> Result<Self::Map> {
        let _ = (f, g);
        let legs = [(po.legs[0].clone(), h.clone()), (po.legs[1].clone(), k.clone())];
        self.mediate(&po.apex, self.cod(h), &legs, cap)?
            .ok_or(crate::Error::NoMediator)
    }

    /// `f x g` between products.
    fn product_map(&self, f: &Self::Map, g: &Self::Map) -> Result<Self::Map> {
        let src = self.product(self.dom(f), self.dom(g))?;
        let tgt = self.product(self.cod(f), self.cod(g))?;
        let a = self.then(&src.legs[0], f)?;
        let b = self.then(&src.legs[1], g)?;
        self.pair(&tgt, &a, &b)
    }

    /// `f + g` between coproducts.
    fn coproduct_map(&self, f: &Self::Map, g: &Self::Map) -> Result<Self::Map> {
        let src = self.coproduct(self.dom(f), self.dom(g))?;
        let tgt = self.coproduct(self.cod(f), self.cod(g))?;
        let a = self.then(f, &tgt.legs[0])?;
        let b = self.then(g, &tgt.legs[1])?;
        self.copair(&src, &a, &b)
    }

    /// Decides whether a square commutes.
    fn commutes(
        &self,
        left: &Self::Map,
        right: &Self::Map,
        top: &Self::Map,
        bottom: &Self::Map,
    ) -> Result<bool> {
        Ok(self.then(left, bottom)? == self.then(top, right)?)
    }
}
