//! Strict partial orders on `0..n`, stored transitively closed.
//!
//! Storing the closure makes comparability queries single lookups and keeps
//! transitivity audits cheap, at the cost of quadratic memory on dense
//! orders. The constructions in this crate only materialize their orders at
//! dense scales when explicitly asked to.

use crate::bitset::BitRow;
use crate::error::{Error, Result};

/// A strict partial order: irreflexive, antisymmetric, transitive.
///
/// The relation is kept transitively closed; `lt(u, v)` answers "u < v"
/// directly from the stored successor lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictOrder {
    n: usize,
    succ: Vec<Vec<u32>>,
}

impl StrictOrder {
    /// The smallest strict partial order containing `pairs`, or
    /// `CycleDetected` if the closure would have to relate a vertex to
    /// itself.
    pub fn transitive_closure(n: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        let mut direct: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, v) in pairs {
            for x in [u, v] {
                if x as usize >= n {
                    return Err(Error::IndexOutOfRange {
                        what: "vertex",
                        got: x as usize,
                        limit: n,
                    });
                }
            }
            if u == v {
                return Err(Error::CycleDetected(u));
            }
            direct[u as usize].push(v);
        }

        let mut succ: Vec<Vec<u32>> = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        for start in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            stack.extend_from_slice(&direct[start]);
            let mut reach = Vec::new();
            while let Some(v) = stack.pop() {
                if seen[v as usize] {
                    continue;
                }
                seen[v as usize] = true;
                reach.push(v);
                stack.extend_from_slice(&direct[v as usize]);
            }
            if seen[start] {
                return Err(Error::CycleDetected(start as u32));
            }
            reach.sort_unstable();
            succ.push(reach);
        }
        Ok(StrictOrder { n, succ })
    }

    /// Builds from successor lists that are already transitively closed.
    /// Callers are expected to hold a proof; debug builds verify small
    /// instances.
    pub(crate) fn from_closed(n: usize, mut succ: Vec<Vec<u32>>) -> Self {
        assert_eq!(succ.len(), n);
        for list in &mut succ {
            list.sort_unstable();
            list.dedup();
        }
        let order = StrictOrder { n, succ };
        debug_assert!(n > 512 || order.validate().ok(), "relation is not closed");
        order
    }

    pub fn empty(n: usize) -> Self {
        StrictOrder {
            n,
            succ: vec![Vec::new(); n],
        }
    }

    /// The total order 0 < 1 < ... < n-1.
    pub fn chain(n: usize) -> Self {
        let succ = (0..n)
            .map(|v| (v as u32 + 1..n as u32).collect())
            .collect();
        StrictOrder { n, succ }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of related pairs.
    pub fn pair_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    #[inline]
    pub fn lt(&self, u: u32, v: u32) -> bool {
        self.succ[u as usize].binary_search(&v).is_ok()
    }

    #[inline]
    pub fn comparable(&self, u: u32, v: u32) -> bool {
        self.lt(u, v) || self.lt(v, u)
    }

    pub fn successors(&self, u: u32) -> &[u32] {
        &self.succ[u as usize]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u as u32, v)))
    }

    /// Predecessor lists, derived by inverting the successor lists.
    pub fn predecessors(&self) -> Vec<Vec<u32>> {
        let mut pred: Vec<Vec<u32>> = vec![Vec::new(); self.n];
        for (u, v) in self.pairs() {
            pred[v as usize].push(u);
        }
        pred
    }

    /// Audits this relation against the three partial-order axioms.
    pub fn validate(&self) -> OrderReport {
        check_closed_lists(self.n, &self.succ)
    }
}

/// Violations found by [`check_partial_order`]. `ok()` iff all lists are
/// empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrderReport {
    /// Vertices v with (v, v) in the relation.
    pub irreflexive_violations: Vec<u32>,
    /// Pairs {u, v} related in both directions, reported once with u < v.
    pub antisymmetry_violations: Vec<(u32, u32)>,
    /// Triples (u, v, w) with u < v and v < w but not u < w.
    pub transitivity_violations: Vec<(u32, u32, u32)>,
}

impl OrderReport {
    pub fn ok(&self) -> bool {
        self.irreflexive_violations.is_empty()
            && self.antisymmetry_violations.is_empty()
            && self.transitivity_violations.is_empty()
    }
}

/// Checks an arbitrary pair set against the partial-order axioms and reports
/// every violation.
pub fn check_partial_order(n: usize, pairs: &[(u32, u32)]) -> OrderReport {
    let mut succ: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut report = OrderReport::default();
    for &(u, v) in pairs {
        if u == v {
            report.irreflexive_violations.push(u);
            continue;
        }
        succ[u as usize].push(v);
    }
    report.irreflexive_violations.sort_unstable();
    report.irreflexive_violations.dedup();
    for list in &mut succ {
        list.sort_unstable();
        list.dedup();
    }
    let mut sub = check_closed_lists(n, &succ);
    report.antisymmetry_violations = std::mem::take(&mut sub.antisymmetry_violations);
    report.transitivity_violations = std::mem::take(&mut sub.transitivity_violations);
    report
}

// Bitset rows up to this many vertices; sorted-merge subset checks beyond.
const BITSET_VALIDATION_LIMIT: usize = 4096;

fn check_closed_lists(n: usize, succ: &[Vec<u32>]) -> OrderReport {
    let mut report = OrderReport::default();
    for (u, list) in succ.iter().enumerate() {
        if list.binary_search(&(u as u32)).is_ok() {
            report.irreflexive_violations.push(u as u32);
        }
    }

    if n <= BITSET_VALIDATION_LIMIT {
        let rows: Vec<BitRow> = succ
            .iter()
            .map(|list| {
                let mut row = BitRow::zeros(n);
                for &v in list {
                    row.set(v as usize);
                }
                row
            })
            .collect();
        for (u, list) in succ.iter().enumerate() {
            for &v in list {
                let v = v as usize;
                if v > u && rows[v].get(u) {
                    report.antisymmetry_violations.push((u as u32, v as u32));
                }
                if !rows[u].contains_all(&rows[v]) {
                    for w in rows[v].iter_ones() {
                        if w != u && !rows[u].get(w) {
                            report
                                .transitivity_violations
                                .push((u as u32, v as u32, w as u32));
                        }
                    }
                }
            }
        }
    } else {
        for (u, list) in succ.iter().enumerate() {
            for &v in list {
                let vs = &succ[v as usize];
                if v as usize > u && vs.binary_search(&(u as u32)).is_ok() {
                    report.antisymmetry_violations.push((u as u32, v as u32));
                }
                // succ[v] \ succ[u] must be contained in {u}
                let mut iu = list.iter().peekable();
                for &w in vs {
                    while iu.peek().is_some_and(|&&x| x < w) {
                        iu.next();
                    }
                    if iu.peek() != Some(&&w) && w as usize != u {
                        report
                            .transitivity_violations
                            .push((u as u32, v as u32, w));
                    }
                }
            }
        }
    }
    report
}
