//! Exhaustive enumerations of small structures, used by property checks,
//! the acceptance suite and the example runner.

use crate::error::Result;
use crate::fincat::{coproduct, isomorphisms, FinCategory};
use crate::finrel::{iso_search, Flavor, RelObject};

const CAP: u64 = 1_000_000;

/// Every object of the flavor on the carrier `0..n`, in order of the bit
/// mask over off-diagonal pairs.
pub fn labelled(flavor: Flavor, n: usize) -> Vec<RelObject> {
    let pairs: Vec<(usize, usize)> = match flavor {
        Flavor::Set => Vec::new(),
        Flavor::Graph | Flavor::EqRel => (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect(),
        Flavor::Preord | Flavor::Ord => (0..n)
            .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect(),
    };
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        // Keep only relations already closed, so each object appears once.
        let Ok(x) = RelObject::new(flavor, n, &chosen) else {
            continue;
        };
        if x.num_pairs() == closed_count(flavor, chosen.len()) {
            out.push(x);
        }
    }
    out
}

fn closed_count(flavor: Flavor, chosen: usize) -> usize {
    if flavor.symmetric() {
        2 * chosen
    } else {
        chosen
    }
}

/// All labelled objects with at most `max` elements.
pub fn labelled_up_to(flavor: Flavor, max: usize) -> Vec<RelObject> {
    (0..=max).flat_map(|n| labelled(flavor, n)).collect()
}

/// One representative per isomorphism class, first in enumeration order.
pub fn up_to_iso(objs: Vec<RelObject>) -> Result<Vec<RelObject>> {
    let mut reps: Vec<RelObject> = Vec::new();
    for x in objs {
        let mut seen = false;
        for r in &reps {
            if r.size() == x.size()
                && r.num_pairs() == x.num_pairs()
                && iso_search(r, &x, CAP)?.is_some()
            {
                seen = true;
                break;
            }
        }
        if !seen {
            reps.push(x);
        }
    }
    Ok(reps)
}

/// Isomorphism classes of objects with at most `max` elements.
pub fn classes_up_to(flavor: Flavor, max: usize) -> Result<Vec<RelObject>> {
    up_to_iso(labelled_up_to(flavor, max))
}

/// Small categories: every one has at most three objects and eight arrows.
pub fn categories() -> Vec<(&'static str, FinCategory)> {
    let span = FinCategory::from_preorder(
        &RelObject::new(Flavor::Ord, 3, &[(0, 1), (0, 2)]).expect("span"),
    )
    .expect("span");
    let cospan = FinCategory::from_preorder(
        &RelObject::new(Flavor::Ord, 3, &[(0, 2), (1, 2)]).expect("cospan"),
    )
    .expect("cospan");
    vec![
        ("0", FinCategory::zero()),
        ("1", FinCategory::one()),
        ("2", FinCategory::discrete(2)),
        ("3", FinCategory::discrete(3)),
        ("chain2", FinCategory::chain2()),
        ("chain3", FinCategory::chain(3)),
        ("parallel", FinCategory::parallel_pair()),
        ("iso", FinCategory::indiscrete(2)),
        ("z2", FinCategory::z2()),
        ("idempotent", FinCategory::idempotent()),
        ("1+chain2", coproduct(&FinCategory::one(), &FinCategory::chain2()).0),
        ("z2+1", coproduct(&FinCategory::z2(), &FinCategory::one()).0),
        ("iso+1", coproduct(&FinCategory::indiscrete(2), &FinCategory::one()).0),
        ("span", span),
        ("cospan", cospan),
    ]
}

/// Isomorphism-class representatives of [`categories`].
pub fn category_classes() -> Result<Vec<(&'static str, FinCategory)>> {
    let mut reps: Vec<(&'static str, FinCategory)> = Vec::new();
    for (name, c) in categories() {
        let mut seen = false;
        for (_, r) in &reps {
            if r.n_obj() == c.n_obj()
                && r.n_arrows() == c.n_arrows()
                && !isomorphisms(r, &c, CAP)?.is_empty()
            {
                seen = true;
                break;
            }
        }
        if !seen {
            reps.push((name, c));
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reflexive relations on `n` points checked directly for the axioms.
    fn brute(n: usize, ok: impl Fn(&[Vec<bool>]) -> bool) -> usize {
        let off: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect();
        (0u32..1 << off.len())
            .filter(|mask| {
                let mut r = vec![vec![false; n]; n];
                for (i, row) in r.iter_mut().enumerate() {
                    row[i] = true;
                }
                for (i, &(a, b)) in off.iter().enumerate() {
                    r[a][b] = mask >> i & 1 == 1;
                }
                ok(&r)
            })
            .count()
    }

    fn transitive(r: &[Vec<bool>]) -> bool {
        let n = r.len();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(r[a][b] && r[b][c]) || r[a][c])))
    }

    fn symmetric(r: &[Vec<bool>]) -> bool {
        let n = r.len();
        (0..n).all(|a| (0..n).all(|b| r[a][b] == r[b][a]))
    }

    fn antisymmetric(r: &[Vec<bool>]) -> bool {
        let n = r.len();
        (0..n).all(|a| (0..n).all(|b| a == b || !(r[a][b] && r[b][a])))
    }

    #[test]
    fn labelled_counts_match_brute_force() {
        for n in 0..=3 {
            assert_eq!(labelled(Flavor::Preord, n).len(), brute(n, transitive));
            assert_eq!(
                labelled(Flavor::Ord, n).len(),
                brute(n, |r| transitive(r) && antisymmetric(r))
            );
            assert_eq!(labelled(Flavor::Graph, n).len(), brute(n, symmetric));
            assert_eq!(
                labelled(Flavor::EqRel, n).len(),
                brute(n, |r| symmetric(r) && transitive(r))
            );
            assert_eq!(labelled(Flavor::Set, n).len(), 1);
        }
        assert_eq!(labelled(Flavor::Preord, 3).len(), 29);
    }

    #[test]
    fn iso_class_counts() {
        let graphs: Vec<usize> = (0..=4)
            .map(|n| up_to_iso(labelled(Flavor::Graph, n)).unwrap().len())
            .collect();
        assert_eq!(graphs, vec![1, 1, 2, 4, 11]);
        assert_eq!(up_to_iso(labelled(Flavor::Ord, 3)).unwrap().len(), 5);
        assert_eq!(up_to_iso(labelled(Flavor::EqRel, 4)).unwrap().len(), 5);
    }

    #[test]
    fn category_corpus_is_small_and_distinct() {
        let all = categories();
        for (_, c) in &all {
            assert!(c.n_obj() <= 3 && c.n_arrows() <= 8);
        }
        assert_eq!(category_classes().unwrap().len(), all.len());
    }
}
