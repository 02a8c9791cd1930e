//! A small binary constraint solver.
//!
//! Variables take values in finite domains `0..n`. Constraints are either
//! tables of allowed value pairs or disequalities. Search assigns variables
//! in index order and values in increasing order, so the first solution is
//! the lexicographically least one; forward checking prunes the remaining
//! domains after every assignment.

use std::ops::ControlFlow;
use std::sync::Arc;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Allowed pairs `(a, b)` of a binary constraint, indexed both ways.
#[derive(Debug)]
pub struct Table {
    rows: Vec<Bits>,
    cols: Vec<Bits>,
}

impl Table {
    pub fn from_fn(n_a: usize, n_b: usize, mut allowed: impl FnMut(usize, usize) -> bool) -> Arc<Self> {
        let mut rows = vec![Bits::new(n_b); n_a];
        let mut cols = vec![Bits::new(n_a); n_b];
        for (a, row) in rows.iter_mut().enumerate() {
            for b in 0..n_b {
                if allowed(a, b) {
                    row.insert(b);
                    cols[b].insert(a);
                }
            }
        }
        Arc::new(Table { rows, cols })
    }

    pub fn allows(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }
}

#[derive(Debug, Clone)]
enum Link {
    Table {
        other: usize,
        table: Arc<Table>,
        forward: bool,
    },
    Neq {
        other: usize,
    },
}

impl Link {
    fn other(&self) -> usize {
        match self {
            Link::Table { other, .. } | Link::Neq { other } => *other,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Csp {
    domains: Vec<Bits>,
    links: Vec<Vec<Link>>,
}

struct SearchState<'a> {
    nodes: u64,
    cap: u64,
    assignment: Vec<usize>,
    domains: Vec<Bits>,
    trail: Vec<(usize, Bits)>,
    csp: &'a Csp,
}

impl Csp {
    pub fn new(domains: Vec<Bits>) -> Self {
        let n = domains.len();
        Csp {
            domains,
            links: vec![Vec::new(); n],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.domains.len()
    }

    pub fn domain(&self, var: usize) -> &Bits {
        &self.domains[var]
    }

    pub fn restrict(&mut self, var: usize, allowed: &Bits) {
        self.domains[var].intersect_with(allowed);
    }

    pub fn fix(&mut self, var: usize, value: usize) {
        let keep = self.domains[var].contains(value);
        let len = self.domains[var].len();
        self.domains[var] = Bits::new(len);
        if keep {
            self.domains[var].insert(value);
        }
    }

    /// Requires `(value(a), value(b))` to be allowed by `table`.
    pub fn constrain(&mut self, a: usize, b: usize, table: Arc<Table>) {
        if a == b {
            let d = &mut self.domains[a];
            let keep = Bits::from_fn(d.len(), |x| table.allows(x, x));
            d.intersect_with(&keep);
            return;
        }
        self.links[a].push(Link::Table {
            other: b,
            table: table.clone(),
            forward: true,
        });
        self.links[b].push(Link::Table {
            other: a,
            table,
            forward: false,
        });
    }

    pub fn distinct(&mut self, a: usize, b: usize) {
        if a == b {
            let len = self.domains[a].len();
            self.domains[a] = Bits::new(len);
            return;
        }
        self.links[a].push(Link::Neq { other: b });
        self.links[b].push(Link::Neq { other: a });
    }

    /// Arc consistency over the table constraints. Returns false on a wipeout.
    fn arc_consistency(&self, domains: &mut [Bits]) -> bool {
        let n = domains.len();
        let mut queue: Vec<usize> = (0..n).collect();
        let mut queued = vec![true; n];
        while let Some(x) = queue.pop() {
            queued[x] = false;
            for link in &self.links[x] {
                let y = link.other();
                let mut support = Bits::new(domains[y].len());
                match link {
                    Link::Table { table, forward, .. } => {
                        for v in domains[x].iter() {
                            let row = if *forward { &table.rows[v] } else { &table.cols[v] };
                            support.union_with(row);
                        }
                    }
                    Link::Neq { .. } => {
                        if domains[x].count() == 1 {
                            support = Bits::full(domains[y].len());
                            support.remove(domains[x].first().unwrap());
                        } else {
                            continue;
                        }
                    }
                }
                if domains[y].intersect_with(&support) {
                    if domains[y].is_empty() {
                        return false;
                    }
                    if !queued[y] {
                        queued[y] = true;
                        queue.push(y);
                    }
                }
            }
        }
        true
    }

    /// The lexicographically least solution, if any.
    pub fn first(&self, cap: u64) -> Result<Option<Vec<usize>>> {
        let mut found = None;
        self.for_each(cap, |s| {
            found = Some(s.to_vec());
            ControlFlow::Break(())
        })?;
        Ok(found)
    }

    pub fn count(&self, cap: u64) -> Result<u64> {
        let mut n = 0;
        self.for_each(cap, |_| {
            n += 1;
            ControlFlow::Continue(())
        })?;
        Ok(n)
    }

    /// Visits solutions in lexicographic order until the visitor breaks.
    /// `cap` bounds the number of search nodes.
    pub fn for_each(
        &self,
        cap: u64,
        mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<()> {
        let n = self.domains.len();
        let mut domains = self.domains.clone();
        if domains.iter().any(Bits::is_empty) {
            return Ok(());
        }
        if !self.arc_consistency(&mut domains) {
            return Ok(());
        }
        if n == 0 {
            let _ = visit(&[]);
            return Ok(());
        }
        let mut state = SearchState {
            nodes: 0,
            cap,
            assignment: vec![0; n],
            domains,
            trail: Vec::new(),
            csp: self,
        };
        let _ = state.search(0, &mut visit)?;
        Ok(())
    }
}

impl SearchState<'_> {
    fn search(
        &mut self,
        var: usize,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        if var == self.assignment.len() {
            return Ok(visit(&self.assignment));
        }
        let candidates: Vec<usize> = self.domains[var].iter().collect();
        for value in candidates {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::SearchCap { cap: self.cap });
            }
            self.assignment[var] = value;
            let mark = self.trail.len();
            if self.forward_check(var, value) {
                if let ControlFlow::Break(()) = self.search(var + 1, visit)? {
                    return Ok(ControlFlow::Break(()));
                }
            }
            while self.trail.len() > mark {
                let (v, old) = self.trail.pop().unwrap();
                self.domains[v] = old;
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn forward_check(&mut self, var: usize, value: usize) -> bool {
        for link in &self.csp.links[var] {
            let other = link.other();
            if other <= var {
                continue;
            }
            let dom = &self.domains[other];
            let changed = match link {
                Link::Table { table, forward, .. } => {
                    let allowed = if *forward { &table.rows[value] } else { &table.cols[value] };
                    !dom.is_subset(allowed)
                }
                Link::Neq { .. } => dom.contains(value),
            };
            if !changed {
                continue;
            }
            let old = dom.clone();
            let dom = &mut self.domains[other];
            match link {
                Link::Table { table, forward, .. } => {
                    let allowed = if *forward { &table.rows[value] } else { &table.cols[value] };
                    dom.intersect_with(allowed);
                }
                Link::Neq { .. } => dom.remove(value),
            }
            let empty = dom.is_empty();
            self.trail.push((other, old));
            if empty {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pairs_brute(n: usize, k: usize, ok: impl Fn(&[usize]) -> bool) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let total = k.pow(n as u32);
        for mut code in 0..total {
            let mut a = vec![0; n];
            for slot in a.iter_mut() {
                *slot = code % k;
                code /= k;
            }
            a.reverse();
            if ok(&a) {
                out.push(a);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumerates_proper_colourings_in_order() {
        // Path 0-1-2-3 coloured with 3 colours.
        let mut csp = Csp::new(vec![Bits::full(3); 4]);
        let neq = Table::from_fn(3, 3, |a, b| a != b);
        for i in 0..3 {
            csp.constrain(i, i + 1, neq.clone());
        }
        let mut got = Vec::new();
        csp.for_each(u64::MAX, |s| {
            got.push(s.to_vec());
            ControlFlow::Continue(())
        })
        .unwrap();
        let expected = all_pairs_brute(4, 3, |a| a.windows(2).all(|w| w[0] != w[1]));
        assert_eq!(got, expected);
        assert_eq!(got.len(), 24);
    }

    #[test]
    fn distinct_gives_permutations() {
        let mut csp = Csp::new(vec![Bits::full(3); 3]);
        for a in 0..3 {
            for b in a + 1..3 {
                csp.distinct(a, b);
            }
        }
        assert_eq!(csp.count(u64::MAX).unwrap(), 6);
        assert_eq!(csp.first(u64::MAX).unwrap(), Some(vec![0, 1, 2]));
    }

    #[test]
    fn cap_is_reported() {
        let csp = Csp::new(vec![Bits::full(4); 6]);
        assert_eq!(csp.count(10), Err(Error::SearchCap { cap: 10 }));
    }

    #[test]
    fn empty_domain_has_no_solution() {
        let mut csp = Csp::new(vec![Bits::full(2), Bits::full(2)]);
        csp.fix(0, 1);
        csp.constrain(0, 1, Table::from_fn(2, 2, |a, _| a == 0));
        assert_eq!(csp.first(100).unwrap(), None);
    }

    #[test]
    fn zero_variables_have_one_solution() {
        let csp = Csp::new(vec![]);
        assert_eq!(csp.count(1).unwrap(), 1);
    }
}
