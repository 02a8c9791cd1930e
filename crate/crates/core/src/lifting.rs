//! The lifting relation, lifting classes of finite generator sets and the
//! small object argument.

use crate::ambient::Ambient;
use crate::error::{Error, Result};

/// Search limits shared by the lifting deciders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bounds {
    /// Cap on search nodes and on enumerated squares.
    pub square_cap: u64,
    /// Cap on attached cells in the small object argument.
    pub max_steps: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            square_cap: 1_000_000,
            max_steps: 64,
        }
    }
}

/// A commuting square `left; bottom = top; right` awaiting a diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftingProblem<M> {
    pub left: M,
    pub right: M,
    pub top: M,
    pub bottom: M,
}

impl<M: Clone> LiftingProblem<M> {
    pub fn new<A: Ambient<Map = M>>(amb: &A, left: M, right: M, top: M, bottom: M) -> Result<Self> {
        if !amb.commutes(&left, &right, &top, &bottom)? {
            return Err(Error::NotCommuting);
        }
        Ok(LiftingProblem {
            left,
            right,
            top,
            bottom,
        })
    }

    pub fn solve<A: Ambient<Map = M>>(&self, amb: &A, cap: u64) -> Result<Option<M>> {
        amb.find_filler(&self.left, &self.right, &self.top, &self.bottom, cap)
    }

    /// Checks both triangles of a proposed diagonal.
    pub fn is_filler<A: Ambient<Map = M>>(&self, amb: &A, d: &M) -> Result<bool>
    where
        M: PartialEq,
    {
        Ok(amb.then(&self.left, d)? == self.top && amb.then(d, &self.right)? == self.bottom)
    }
}

/// `f ⧄ g`: every commuting square from `f` to `g` has a diagonal.
pub fn box_rel<A: Ambient>(amb: &A, f: &A::Map, g: &A::Map, cap: u64) -> Result<bool> {
    Ok(amb.find_unfilled_square(f, g, cap)?.is_none())
}

/// The first generator with a square against `g` that does not fill.
pub fn rlp_witness<A: Ambient>(
    amb: &A,
    g: &A::Map,
    gens: &[A::Map],
    cap: u64,
) -> Result<Option<(usize, LiftingProblem<A::Map>)>> {
    for (i, f) in gens.iter().enumerate() {
        if let Some((top, bottom)) = amb.find_unfilled_square(f, g, cap)? {
            let problem = LiftingProblem {
                left: f.clone(),
                right: g.clone(),
                top,
                bottom,
            };
            return Ok(Some((i, problem)));
        }
    }
    Ok(None)
}

/// `g` lies in the right class of `gens`.
pub fn has_rlp<A: Ambient>(amb: &A, g: &A::Map, gens: &[A::Map], cap: u64) -> Result<bool> {
    Ok(rlp_witness(amb, g, gens, cap)?.is_none())
}

/// `f` lies in the left class of `gens`.
pub fn has_llp<A: Ambient>(amb: &A, f: &A::Map, gens: &[A::Map], cap: u64) -> Result<bool> {
    for g in gens {
        if !box_rel(amb, f, g, cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One attached cell: the pushout of generator `generator` along `attach`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellStep<O, M> {
    pub generator: usize,
    /// The top of the unfilled square, `dom(generator) -> previous object`.
    pub attach: M,
    /// The bottom of the unfilled square, `cod(generator) -> target`.
    pub bottom: M,
    pub object: O,
    /// Pushout leg from the previous object.
    pub leg: M,
    /// Pushout leg from the codomain of the generator.
    pub cell: M,
}

/// `f = left_part; right_part` with `left_part` a finite composite of
/// pushouts of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellFactorization<O, M> {
    pub steps: Vec<CellStep<O, M>>,
    pub left_part: M,
    pub right_part: M,
}

pub type Factorization<A> = CellFactorization<<A as Ambient>::Obj, <A as Ambient>::Map>;

impl<O: Clone + PartialEq, M: Clone + PartialEq> CellFactorization<O, M> {
    /// Recomputes every pushout and composite and checks the recorded data,
    /// including the lifting property of the right part.
    pub fn revalidate<A: Ambient<Obj = O, Map = M>>(
        &self,
        amb: &A,
        f: &M,
        gens: &[M],
        cap: u64,
    ) -> Result<bool> {
        if amb.then(&self.left_part, &self.right_part)? != *f {
            return Ok(false);
        }
        let mut current = amb.identity(amb.dom(f));
        for step in &self.steps {
            let gen = gens.get(step.generator).ok_or(Error::OutOfRange {
                index: step.generator,
                size: gens.len(),
            })?;
            if amb.cod(&current) != amb.cod(&step.attach) {
                return Ok(false);
            }
            let po = amb.pushout(&step.attach, gen)?;
            if po.apex != step.object || po.legs[0] != step.leg || po.legs[1] != step.cell {
                return Ok(false);
            }
            current = amb.then(&current, &step.leg)?;
        }
        if current != self.left_part {
            return Ok(false);
        }
        has_rlp(amb, &self.right_part, gens, cap)
    }
}

/// Factors `f` as a finite cell complex followed by a map with the right
/// lifting property against `gens`.
///
/// Passes over the generators in order; each generator that still has an
/// unfilled square against the current right part gets one cell, namely the
/// pushout along the first such square. Stops after a pass that attaches
/// nothing.
pub fn soa_factorize<A: Ambient>(
    amb: &A,
    f: &A::Map,
    gens: &[A::Map],
    bounds: Bounds,
) -> Result<Factorization<A>> {
    let mut left = amb.identity(amb.dom(f));
    let mut right = f.clone();
    let mut steps = Vec::new();
    loop {
        let mut attached = false;
        for (i, gen) in gens.iter().enumerate() {
            let Some((top, bottom)) = amb.find_unfilled_square(gen, &right, bounds.square_cap)?
            else {
                continue;
            };
            if steps.len() == bounds.max_steps {
                return Err(Error::CellBound {
                    max_steps: bounds.max_steps,
                });
            }
            let po = amb.pushout(&top, gen)?;
            let next_right =
                amb.pushout_mediator(&top, gen, &po, &right, &bottom, bounds.square_cap)?;
            left = amb.then(&left, &po.legs[0])?;
            right = next_right;
            steps.push(CellStep {
                generator: i,
                attach: top,
                bottom,
                object: po.apex,
                leg: po.legs[0].clone(),
                cell: po.legs[1].clone(),
            });
            attached = true;
        }
        if !attached {
            break;
        }
    }
    Ok(CellFactorization {
        steps,
        left_part: left,
        right_part: right,
    })
}

/// Membership in the left class of the right class of `gens`, by the
/// retract argument: `f` lifts against the right part of its own cell
/// factorization exactly when it is a retract of the left part.
pub fn in_lbox_rbox<A: Ambient>(
    amb: &A,
    f: &A::Map,
    gens: &[A::Map],
    bounds: Bounds,
) -> Result<bool> {
    let fact = soa_factorize(amb, f, gens, bounds)?;
    box_rel(amb, f, &fact.right_part, bounds.square_cap)
}
