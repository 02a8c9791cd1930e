//! Categories given by generators and relations, and pushouts of functors.
//!
//! Elements are enumerated by coset enumeration on the right action of the
//! path category: every element is a class of paths out of some object, new
//! classes are defined on demand while relations are traced from every
//! class, and coincidences are merged with a union-find. The enumeration is
//! exact when it finishes; if a defining path grows beyond the length bound
//! or the live classes exceed the class bound, the presented category is
//! reported as possibly infinite.

use super::{CatFunctor, FinCategory};
use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// Bounds for coset enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PushoutBound {
    pub max_len: usize,
    pub max_classes: usize,
}

impl Default for PushoutBound {
    fn default() -> Self {
        PushoutBound {
            max_len: 8,
            max_classes: 512,
        }
    }
}

/// A composable path of generators starting at `src`; empty paths are
/// identities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub src: usize,
    pub gens: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatPresentation {
    n_obj: usize,
    gens: Vec<(usize, usize)>,
    relations: Vec<(Word, Word)>,
}

/// The category presented, with the arrow denoted by each generator.
#[derive(Clone, Debug)]
pub struct Presented {
    pub category: FinCategory,
    pub generator_arrows: Vec<usize>,
    /// A path of generators denoting each arrow.
    pub words: Vec<Word>,
}

impl CatPresentation {
    pub fn new(n_obj: usize) -> Self {
        CatPresentation {
            n_obj,
            ..Default::default()
        }
    }

    pub fn n_obj(&self) -> usize {
        self.n_obj
    }

    pub fn add_generator(&mut self, src: usize, tgt: usize) -> Result<usize> {
        if src >= self.n_obj || tgt >= self.n_obj {
            return Err(Error::InvalidCategory("generator endpoint out of range".into()));
        }
        self.gens.push((src, tgt));
        Ok(self.gens.len() - 1)
    }

    fn word_tgt(&self, w: &Word) -> Result<usize> {
        let mut at = w.src;
        if at >= self.n_obj {
            return Err(Error::InvalidCategory("word starts out of range".into()));
        }
        for &g in &w.gens {
            match self.gens.get(g) {
                Some(&(s, t)) if s == at => at = t,
                _ => return Err(Error::InvalidCategory(format!("word {:?} is not a path", w.gens))),
            }
        }
        Ok(at)
    }

    pub fn add_relation(&mut self, lhs: Word, rhs: Word) -> Result<()> {
        if lhs.src != rhs.src || self.word_tgt(&lhs)? != self.word_tgt(&rhs)? {
            return Err(Error::InvalidCategory(
                "relation between paths with different endpoints".into(),
            ));
        }
        self.relations.push((lhs, rhs));
        Ok(())
    }

    pub fn build(&self, bound: PushoutBound) -> Result<Presented> {
        Enumeration::new(self, bound).run()
    }
}

struct Enumeration<'a> {
    pres: &'a CatPresentation,
    bound: PushoutBound,
    uf: UnionFind,
    table: Vec<Vec<Option<usize>>>,
    /// Source object and defining path of every class.
    words: Vec<Word>,
    ends: Vec<usize>,
    live: usize,
}

impl<'a> Enumeration<'a> {
    fn new(pres: &'a CatPresentation, bound: PushoutBound) -> Self {
        let n = pres.n_obj;
        Enumeration {
            pres,
            bound,
            uf: UnionFind::new(n),
            table: vec![vec![None; pres.gens.len()]; n],
            words: (0..n).map(|x| Word { src: x, gens: vec![] }).collect(),
            ends: (0..n).collect(),
            live: n,
        }
    }

    fn unstable(&self) -> Error {
        Error::PushoutUnstable {
            max_len: self.bound.max_len,
            max_classes: self.bound.max_classes,
        }
    }

    fn define(&mut self, c: usize, g: usize) -> Result<usize> {
        let mut word = self.words[c].clone();
        word.gens.push(g);
        if word.gens.len() > self.bound.max_len || self.live >= self.bound.max_classes {
            return Err(self.unstable());
        }
        let d = self.words.len();
        self.words.push(word);
        self.ends.push(self.pres.gens[g].1);
        self.table.push(vec![None; self.pres.gens.len()]);
        self.uf.grow(d + 1);
        self.table[c][g] = Some(d);
        self.live += 1;
        Ok(d)
    }

    fn trace(&mut self, c: usize, gens: &[usize]) -> Result<usize> {
        let mut at = self.uf.find(c);
        for &g in gens {
            at = match self.table[at][g] {
                Some(d) => self.uf.find(d),
                None => self.define(at, g)?,
            };
        }
        Ok(at)
    }

    fn coincide(&mut self, a: usize, b: usize) {
        let mut queue = vec![(a, b)];
        while let Some((a, b)) = queue.pop() {
            let (a, b) = (self.uf.find(a), self.uf.find(b));
            if a == b {
                continue;
            }
            let (keep, drop) = (a.min(b), a.max(b));
            self.uf.union(keep, drop);
            self.live -= 1;
            for g in 0..self.pres.gens.len() {
                if let Some(t) = self.table[drop][g] {
                    match self.table[keep][g] {
                        Some(t2) => queue.push((t, t2)),
                        None => self.table[keep][g] = Some(t),
                    }
                }
            }
        }
    }

    fn run(mut self) -> Result<Presented> {
        let pres = self.pres;
        let mut i = 0;
        while i < self.words.len() {
            if self.uf.find(i) == i {
                let end = self.ends[i];
                for (lhs, rhs) in &pres.relations {
                    if lhs.src != end {
                        continue;
                    }
                    let a = self.trace(i, &lhs.gens)?;
                    let b = self.trace(i, &rhs.gens)?;
                    self.coincide(a, b);
                    if self.uf.find(i) != i {
                        break;
                    }
                }
            }
            if self.uf.find(i) == i {
                for (g, &(s, _)) in pres.gens.iter().enumerate() {
                    if s == self.ends[i] && self.table[i][g].is_none() {
                        self.define(i, g)?;
                    }
                }
            }
            i += 1;
        }
        self.finish()
    }

    fn finish(mut self) -> Result<Presented> {
        let total = self.words.len();
        let reps: Vec<usize> = (0..total).filter(|&c| self.uf.find(c) == c).collect();
        let mut index = vec![usize::MAX; total];
        for (k, &c) in reps.iter().enumerate() {
            index[c] = k;
        }
        let n = reps.len();
        let arrow_of = |uf: &mut UnionFind, c: usize| index[uf.find(c)];
        let src: Vec<usize> = reps.iter().map(|&c| self.words[c].src).collect();
        let tgt: Vec<usize> = reps.iter().map(|&c| self.ends[c]).collect();
        let mut comp = vec![None; n * n];
        for (f, &cf) in reps.iter().enumerate() {
            for (g, &cg) in reps.iter().enumerate() {
                if tgt[f] != src[g] {
                    continue;
                }
                let gens = self.words[cg].gens.clone();
                let mut at = cf;
                for h in gens {
                    at = self.uf.find(self.table[at][h].ok_or_else(|| {
                        Error::Internal("incomplete coset table".into())
                    })?);
                }
                comp[f * n + g] = Some(arrow_of(&mut self.uf, at));
            }
        }
        let category = FinCategory::new(self.pres.n_obj, src, tgt, comp)?;
        let mut generator_arrows = Vec::with_capacity(self.pres.gens.len());
        for (g, &(s, _)) in self.pres.gens.iter().enumerate() {
            let c = self.table[s][g].ok_or_else(|| Error::Internal("undefined generator".into()))?;
            generator_arrows.push(arrow_of(&mut self.uf, c));
        }
        let words = reps.iter().map(|&c| self.words[c].clone()).collect();
        Ok(Presented {
            category,
            generator_arrows,
            words,
        })
    }
}

/// The pushout of `f: a -> b` and `g: a -> c`, with legs `[inj_b, inj_c]`.
pub fn cat_pushout(
    f: &CatFunctor,
    g: &CatFunctor,
    bound: PushoutBound,
) -> Result<(FinCategory, CatFunctor, CatFunctor)> {
    if f.src() != g.src() {
        return Err(Error::NotComposable);
    }
    let (a, b, c) = (f.src(), f.tgt(), g.tgt());
    let nb = b.n_obj();
    let mut uf = UnionFind::new(nb + c.n_obj());
    for x in 0..a.n_obj() {
        uf.union(f.on_obj(x), nb + g.on_obj(x));
    }
    let (class, k) = uf.classes();
    let mut pres = CatPresentation::new(k);
    // Generator for every non-identity arrow of b, then of c.
    let mut gen_b = vec![usize::MAX; b.n_arrows()];
    for h in b.non_identities() {
        gen_b[h] = pres.add_generator(class[b.src(h)], class[b.tgt(h)])?;
    }
    let mut gen_c = vec![usize::MAX; c.n_arrows()];
    for h in c.non_identities() {
        gen_c[h] = pres.add_generator(class[nb + c.src(h)], class[nb + c.tgt(h)])?;
    }
    let word = |cat: &FinCategory, gens: &[usize], offset: usize, h: usize| Word {
        src: class[offset + cat.src(h)],
        gens: if cat.is_identity(h) { vec![] } else { vec![gens[h]] },
    };
    for (cat, gens, offset) in [(b, &gen_b, 0), (c, &gen_c, nb)] {
        for h in cat.non_identities() {
            for l in cat.arrows_from(cat.tgt(h)).filter(|&l| !cat.is_identity(l)) {
                let lhs = Word {
                    src: class[offset + cat.src(h)],
                    gens: vec![gens[h], gens[l]],
                };
                pres.add_relation(lhs, word(cat, gens, offset, cat.then(h, l)))?;
            }
        }
    }
    for h in a.non_identities() {
        let lhs = word(b, &gen_b, 0, f.on_arr(h));
        let rhs = word(c, &gen_c, nb, g.on_arr(h));
        if lhs != rhs {
            pres.add_relation(lhs, rhs)?;
        }
    }
    let presented = pres.build(bound)?;
    let apex = presented.category;
    let leg = |cat: &FinCategory, gens: &[usize], offset: usize| {
        let obj: Vec<usize> = (0..cat.n_obj()).map(|x| class[offset + x]).collect();
        let arr = (0..cat.n_arrows())
            .map(|h| {
                if cat.is_identity(h) {
                    obj[h]
                } else {
                    presented.generator_arrows[gens[h]]
                }
            })
            .collect();
        CatFunctor::new(cat.clone(), apex.clone(), obj, arr)
    };
    let inj_b = leg(b, &gen_b, 0)?;
    let inj_c = leg(c, &gen_c, nb)?;
    Ok((apex, inj_b, inj_c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{enumerate_functors, isomorphisms, FinCategory};

    const CAP: u64 = 1_000_000;

    fn two_into_chain() -> CatFunctor {
        let d2 = FinCategory::discrete(2);
        CatFunctor::new(d2, FinCategory::chain2(), vec![0, 1], vec![0, 1]).unwrap()
    }

    #[test]
    fn free_category_on_a_graph() {
        let mut p = CatPresentation::new(3);
        p.add_generator(0, 1).unwrap();
        p.add_generator(1, 2).unwrap();
        let c = p.build(PushoutBound::default()).unwrap().category;
        assert_eq!(c.n_arrows(), 6);
    }

    #[test]
    fn presented_monoids() {
        let mut p = CatPresentation::new(1);
        let t = p.add_generator(0, 0).unwrap();
        p.add_relation(Word { src: 0, gens: vec![t, t] }, Word { src: 0, gens: vec![] })
            .unwrap();
        let z2 = p.build(PushoutBound::default()).unwrap().category;
        assert_eq!(isomorphisms(&z2, &FinCategory::z2(), CAP).unwrap().len(), 1);

        let mut q = CatPresentation::new(1);
        let e = q.add_generator(0, 0).unwrap();
        q.add_relation(Word { src: 0, gens: vec![e, e, e] }, Word { src: 0, gens: vec![e] })
            .unwrap();
        assert_eq!(q.build(PushoutBound::default()).unwrap().category.n_arrows(), 3);
    }

    #[test]
    fn free_loop_is_unstable() {
        let mut p = CatPresentation::new(1);
        p.add_generator(0, 0).unwrap();
        assert!(matches!(
            p.build(PushoutBound::default()),
            Err(Error::PushoutUnstable { .. })
        ));
    }

    #[test]
    fn pushout_along_identity() {
        let f = two_into_chain();
        let (apex, _, inj) = cat_pushout(&CatFunctor::identity(f.src()), &f, PushoutBound::default()).unwrap();
        assert!(inj.is_iso());
        assert_eq!(apex.n_arrows(), 3);
    }

    #[test]
    fn gluing_two_arrows_gives_parallel_pair() {
        let f = two_into_chain();
        let (apex, ib, ic) = cat_pushout(&f, &f, PushoutBound::default()).unwrap();
        assert_eq!(
            isomorphisms(&apex, &FinCategory::parallel_pair(), CAP).unwrap().len(),
            2
        );
        // Universal property against small test categories.
        let tests = [
            FinCategory::parallel_pair(),
            FinCategory::indiscrete(2),
            FinCategory::chain(3),
            FinCategory::z2(),
        ];
        for z in &tests {
            for h in enumerate_functors(f.tgt(), z, CAP).unwrap() {
                for k in enumerate_functors(f.tgt(), z, CAP).unwrap() {
                    let commutes = f.then(&h).unwrap() == f.then(&k).unwrap();
                    let through = enumerate_functors(&apex, z, CAP)
                        .unwrap()
                        .into_iter()
                        .filter(|d| ib.then(d).unwrap() == h && ic.then(d).unwrap() == k)
                        .count();
                    assert_eq!(through, commutes as usize);
                }
            }
        }
    }

    #[test]
    fn reversed_gluing_is_unstable() {
        // Gluing 0 -> 1 to 1 -> 0 freely generates a cycle.
        let d2 = FinCategory::discrete(2);
        let f = CatFunctor::new(d2.clone(), FinCategory::chain2(), vec![0, 1], vec![0, 1]).unwrap();
        let g = CatFunctor::new(d2, FinCategory::chain2(), vec![1, 0], vec![1, 0]).unwrap();
        assert!(matches!(
            cat_pushout(&f, &g, PushoutBound::default()),
            Err(Error::PushoutUnstable { .. })
        ));
    }
}
