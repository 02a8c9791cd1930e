//! Finite categories, functors and natural transformations.

mod category;
mod constructions;
mod functor;
mod nat;
mod presentation;

pub use category::FinCategory;
pub use constructions::{
    copair_functors, coproduct, ob, ob_map, pair_functors, product_arrow, product_with,
};
pub use functor::{enumerate_functors, isomorphisms, CatFunctor};
pub use nat::{enumerate_nat_transformations, natural_iso, NatTransformation};
pub use presentation::{cat_pushout, CatPresentation, Presented, PushoutBound, Word};

use std::ops::ControlFlow;

use crate::ambient::{Ambient, Cocone, CoconeData, CofibrationClass, Cone, ConeData};
use crate::bits::Bits;
use crate::error::{Error, Result};
use functor::FunctorSearch;

/// `Cat` restricted to finite categories. Pushouts are computed under
/// `pushout_bound` and fail loudly when they do not stabilize.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CatAmbient {
    pub pushout_bound: PushoutBound,
}

fn force_legs(search: &mut FunctorSearch<'_>, legs: &[(CatFunctor, CatFunctor)]) -> Result<()> {
    for (leg, image) in legs {
        if leg.src() != image.src() {
            return Err(Error::NotComposable);
        }
        for x in 0..leg.src().n_obj() {
            search.force_obj(leg.on_obj(x), image.on_obj(x));
        }
        for a in 0..leg.src().n_arrows() {
            search.force_arr(leg.on_arr(a), image.on_arr(a));
        }
    }
    Ok(())
}

impl Ambient for CatAmbient {
    type Obj = FinCategory;
    type Map = CatFunctor;

    fn name(&self) -> String {
        "cat".into()
    }

    fn dom<'a>(&self, f: &'a CatFunctor) -> &'a FinCategory {
        f.src()
    }

    fn cod<'a>(&self, f: &'a CatFunctor) -> &'a FinCategory {
        f.tgt()
    }

    fn identity(&self, x: &FinCategory) -> CatFunctor {
        CatFunctor::identity(x)
    }

    fn then(&self, f: &CatFunctor, g: &CatFunctor) -> Result<CatFunctor> {
        f.then(g)
    }

    fn is_iso(&self, f: &CatFunctor) -> bool {
        f.is_iso()
    }

    fn in_class(&self, class: CofibrationClass, f: &CatFunctor) -> bool {
        match class {
            CofibrationClass::InjectiveOnObjects => f.is_injective_on_objects(),
            CofibrationClass::Monomorphisms => f.is_injective_on_arrows(),
            CofibrationClass::All => true,
        }
    }

    fn size(&self, x: &FinCategory) -> usize {
        x.n_arrows()
    }

    fn terminal(&self) -> FinCategory {
        FinCategory::one()
    }

    fn initial(&self) -> FinCategory {
        FinCategory::zero()
    }

    fn to_terminal(&self, x: &FinCategory) -> CatFunctor {
        CatFunctor::to_terminal(x)
    }

    fn from_initial(&self, x: &FinCategory) -> CatFunctor {
        CatFunctor::from_initial(x)
    }

    fn coproduct(&self, x: &FinCategory, y: &FinCategory) -> Result<Cocone<Self>> {
        let (apex, i0, i1) = coproduct(x, y);
        Ok(CoconeData {
            apex,
            legs: vec![i0, i1],
        })
    }

    fn copair(&self, sum: &Cocone<Self>, f: &CatFunctor, g: &CatFunctor) -> Result<CatFunctor> {
        copair_functors(&sum.apex, f, g)
    }

    fn product(&self, x: &FinCategory, y: &FinCategory) -> Result<Cone<Self>> {
        let (apex, p0, p1) = product_with(x, y);
        Ok(ConeData {
            apex,
            legs: vec![p0, p1],
        })
    }

    fn pair(&self, prod: &Cone<Self>, f: &CatFunctor, g: &CatFunctor) -> Result<CatFunctor> {
        pair_functors(&prod.apex, f, g)
    }

    fn pushout(&self, f: &CatFunctor, g: &CatFunctor) -> Result<Cocone<Self>> {
        let (apex, ib, ic) = cat_pushout(f, g, self.pushout_bound)?;
        Ok(CoconeData {
            apex,
            legs: vec![ib, ic],
        })
    }

    fn mediate(
        &self,
        apex: &FinCategory,
        target: &FinCategory,
        legs: &[(CatFunctor, CatFunctor)],
        cap: u64,
    ) -> Result<Option<CatFunctor>> {
        let mut search = FunctorSearch::new(apex, target);
        force_legs(&mut search, legs)?;
        search.first(cap)
    }

    fn homs(&self, a: &FinCategory, x: &FinCategory, cap: u64) -> Result<Vec<CatFunctor>> {
        enumerate_functors(a, x, cap)
    }

    fn find_filler(
        &self,
        left: &CatFunctor,
        right: &CatFunctor,
        top: &CatFunctor,
        bottom: &CatFunctor,
        cap: u64,
    ) -> Result<Option<CatFunctor>> {
        let (b, x) = (left.tgt(), right.src());
        let mut search = FunctorSearch::new(b, x);
        for o in 0..b.n_obj() {
            let want = bottom.on_obj(o);
            search.restrict_obj(o, &Bits::from_fn(x.n_obj(), |p| right.on_obj(p) == want));
        }
        for a in 0..b.n_arrows() {
            let want = bottom.on_arr(a);
            search.restrict_arr(a, &Bits::from_fn(x.n_arrows(), |p| right.on_arr(p) == want));
        }
        force_legs(&mut search, &[(left.clone(), top.clone())])?;
        search.first(cap)
    }

    fn find_unfilled_square(
        &self,
        left: &CatFunctor,
        right: &CatFunctor,
        cap: u64,
    ) -> Result<Option<(CatFunctor, CatFunctor)>> {
        let tops = enumerate_functors(left.src(), right.src(), cap)?;
        let mut squares = 0u64;
        for top in tops {
            let forced = top.then(right)?;
            let mut search = FunctorSearch::new(left.tgt(), right.tgt());
            force_legs(&mut search, &[(left.clone(), forced)])?;
            let mut found = None;
            let mut failure = None;
            search.run(cap, |o, a| {
                squares += 1;
                if squares > cap {
                    failure = Some(Error::SearchCap { cap });
                    return ControlFlow::Break(());
                }
                let bottom = search.functor(o, a);
                match self.find_filler(left, right, &top, &bottom, cap) {
                    Ok(Some(_)) => ControlFlow::Continue(()),
                    Ok(None) => {
                        found = Some(bottom);
                        ControlFlow::Break(())
                    }
                    Err(e) => {
                        failure = Some(e);
                        ControlFlow::Break(())
                    }
                }
            })?;
            if let Some(e) = failure {
                return Err(e);
            }
            if let Some(bottom) = found {
                return Ok(Some((top, bottom)));
            }
        }
        Ok(None)
    }

    fn arrow_iso(
        &self,
        f: &CatFunctor,
        g: &CatFunctor,
        cap: u64,
    ) -> Result<Option<(CatFunctor, CatFunctor)>> {
        for a in isomorphisms(f.src(), g.src(), cap)? {
            let forced = a.then(g)?;
            let mut search = FunctorSearch::new(f.tgt(), g.tgt()).injective();
            force_legs(&mut search, &[(f.clone(), forced)])?;
            if f.tgt().n_arrows() != g.tgt().n_arrows() {
                return Ok(None);
            }
            if let Some(b) = search.first(cap)? {
                return Ok(Some((a, b)));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: u64 = 1_000_000;

    fn inclusion_2() -> CatFunctor {
        CatFunctor::new(FinCategory::discrete(2), FinCategory::chain2(), vec![0, 1], vec![0, 1]).unwrap()
    }

    #[test]
    fn lifting_against_walking_iso_to_point() {
        // Functors with the right lifting property against 0 -> 1 are
        // surjective on objects.
        let cat = CatAmbient::default();
        let zero_one = CatFunctor::from_initial(&FinCategory::one());
        let to_point = CatFunctor::to_terminal(&FinCategory::indiscrete(2));
        assert!(cat.find_unfilled_square(&zero_one, &to_point, CAP).unwrap().is_none());
        let into_two = CatFunctor::object(&FinCategory::discrete(2), 0).unwrap();
        assert!(cat.find_unfilled_square(&zero_one, &into_two, CAP).unwrap().is_some());
    }

    #[test]
    fn boundary_inclusion_against_full_functors() {
        let cat = CatAmbient::default();
        let full = CatFunctor::to_terminal(&FinCategory::indiscrete(2));
        assert!(cat.find_unfilled_square(&inclusion_2(), &full, CAP).unwrap().is_none());
        let not_full = CatFunctor::to_terminal(&FinCategory::discrete(2));
        assert!(cat.find_unfilled_square(&inclusion_2(), &not_full, CAP).unwrap().is_some());
    }

    #[test]
    fn arrow_iso_of_endpoints() {
        let cat = CatAmbient::default();
        let i2 = FinCategory::indiscrete(2);
        let g0 = CatFunctor::object(&i2, 0).unwrap();
        let g1 = CatFunctor::object(&i2, 1).unwrap();
        assert!(cat.arrow_iso(&g0, &g1, CAP).unwrap().is_some());
        let c0 = CatFunctor::object(&FinCategory::chain2(), 0).unwrap();
        let c1 = CatFunctor::object(&FinCategory::chain2(), 1).unwrap();
        assert!(cat.arrow_iso(&c0, &c1, CAP).unwrap().is_none());
    }

    #[test]
    fn mediator_out_of_parallel_pair() {
        let cat = CatAmbient::default();
        let f = inclusion_2();
        let po = cat.pushout(&f, &f).unwrap();
        let z = FinCategory::chain2();
        let id = CatFunctor::identity(&z);
        let m = cat.pushout_mediator(&f, &f, &po, &id, &id, CAP).unwrap();
        assert_eq!(po.legs[0].then(&m).unwrap(), id);
    }
}
