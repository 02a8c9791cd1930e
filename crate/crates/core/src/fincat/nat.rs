use std::ops::ControlFlow;

use super::CatFunctor;
use crate::error::{Error, Result};

/// A natural transformation `src => tgt` between parallel functors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NatTransformation {
    src: CatFunctor,
    tgt: CatFunctor,
    components: Vec<usize>,
}

impl NatTransformation {
    pub fn new(src: CatFunctor, tgt: CatFunctor, components: Vec<usize>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidTransformation(m));
        if src.src() != tgt.src() || src.tgt() != tgt.tgt() {
            return bad("functors are not parallel".into());
        }
        let (c, d) = (src.src(), src.tgt());
        if components.len() != c.n_obj() {
            return bad("one component per object expected".into());
        }
        for (x, &a) in components.iter().enumerate() {
            if a >= d.n_arrows() || d.src(a) != src.on_obj(x) || d.tgt(a) != tgt.on_obj(x) {
                return bad(format!("component at {x} has the wrong type"));
            }
        }
        for f in 0..c.n_arrows() {
            let (x, y) = (c.src(f), c.tgt(f));
            if d.then(src.on_arr(f), components[y]) != d.then(components[x], tgt.on_arr(f)) {
                return bad(format!("naturality fails at arrow {f}"));
            }
        }
        Ok(NatTransformation {
            src,
            tgt,
            components,
        })
    }

    pub fn src(&self) -> &CatFunctor {
        &self.src
    }

    pub fn tgt(&self) -> &CatFunctor {
        &self.tgt
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    pub fn is_iso(&self) -> bool {
        let d = self.src.tgt();
        self.components.iter().all(|&a| d.is_iso_arrow(a))
    }
}

fn search(
    f: &CatFunctor,
    g: &CatFunctor,
    only_iso: bool,
    cap: u64,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<()> {
    if f.src() != g.src() || f.tgt() != g.tgt() {
        return Err(Error::NotComposable);
    }
    let (c, d) = (f.src(), f.tgt());
    let n = c.n_obj();
    // Naturality at an arrow is checked once both endpoints are assigned.
    let mut checks = vec![Vec::new(); n];
    for a in 0..c.n_arrows() {
        checks[c.src(a).max(c.tgt(a))].push(a);
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            d.hom(f.on_obj(x), g.on_obj(x))
                .into_iter()
                .filter(|&a| !only_iso || d.is_iso_arrow(a))
                .collect()
        })
        .collect();
    let mut comp = vec![0; n];
    let mut nodes = 0u64;
    fn go(
        x: usize,
        comp: &mut Vec<usize>,
        nodes: &mut u64,
        cap: u64,
        ctx: (&CatFunctor, &CatFunctor, &[Vec<usize>], &[Vec<usize>]),
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let (f, g, candidates, checks) = ctx;
        if x == comp.len() {
            return Ok(visit(comp));
        }
        let (c, d) = (f.src(), f.tgt());
        for &a in &candidates[x] {
            *nodes += 1;
            if *nodes > cap {
                return Err(Error::SearchCap { cap });
            }
            comp[x] = a;
            let natural = checks[x].iter().all(|&h| {
                let (s, t) = (c.src(h), c.tgt(h));
                d.then(f.on_arr(h), comp[t]) == d.then(comp[s], g.on_arr(h))
            });
            if natural && go(x + 1, comp, nodes, cap, ctx, visit)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }
    let _ = go(0, &mut comp, &mut nodes, cap, (f, g, &candidates, &checks), &mut visit)?;
    Ok(())
}

pub fn enumerate_nat_transformations(
    f: &CatFunctor,
    g: &CatFunctor,
    cap: u64,
) -> Result<Vec<NatTransformation>> {
    let mut out = Vec::new();
    search(f, g, false, cap, |comp| {
        out.push(NatTransformation {
            src: f.clone(),
            tgt: g.clone(),
            components: comp.to_vec(),
        });
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The first natural isomorphism `f => g`, if any.
pub fn natural_iso(f: &CatFunctor, g: &CatFunctor, cap: u64) -> Result<Option<NatTransformation>> {
    let mut out = None;
    search(f, g, true, cap, |comp| {
        out = Some(NatTransformation {
            src: f.clone(),
            tgt: g.clone(),
            components: comp.to_vec(),
        });
        ControlFlow::Break(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{enumerate_functors, FinCategory};

    const CAP: u64 = 1_000_000;

    #[test]
    fn transformations_between_points_of_chain() {
        let c = FinCategory::chain2();
        let p0 = CatFunctor::object(&c, 0).unwrap();
        let p1 = CatFunctor::object(&c, 1).unwrap();
        assert_eq!(enumerate_nat_transformations(&p0, &p1, CAP).unwrap().len(), 1);
        assert!(enumerate_nat_transformations(&p1, &p0, CAP).unwrap().is_empty());
        assert!(natural_iso(&p0, &p1, CAP).unwrap().is_none());
    }

    #[test]
    fn points_of_walking_iso_are_isomorphic() {
        let c = FinCategory::indiscrete(2);
        let p0 = CatFunctor::object(&c, 0).unwrap();
        let p1 = CatFunctor::object(&c, 1).unwrap();
        let t = natural_iso(&p0, &p1, CAP).unwrap().unwrap();
        assert!(t.is_iso());
    }

    #[test]
    fn every_enumerated_transformation_validates() {
        let c = FinCategory::chain2();
        let d = FinCategory::chain(3);
        let fs = enumerate_functors(&c, &d, CAP).unwrap();
        for f in &fs {
            for g in &fs {
                for t in enumerate_nat_transformations(f, g, CAP).unwrap() {
                    assert!(NatTransformation::new(f.clone(), g.clone(), t.components().to_vec()).is_ok());
                }
            }
        }
    }
}
