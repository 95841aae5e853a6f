//! Exhaustive reference solvers, used only to verify the fast paths.
//!
//! Everything here is deliberately brute force: subset enumeration for
//! domination and interval stability, full row-permutation search for the
//! consecutiveness properties. Budgets reject oversized calls up front
//! rather than silently truncating.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::cobiconvex::IntervalModel;
use crate::domination::{Derivation, DominationResult, DominationValue};
use crate::graph::Graph;
use crate::matrix::ZeroOneMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance size {size} exceeds the oracle budget {limit}")]
    BudgetExceeded { size: usize, limit: usize },
    #[error("oracle ran past its time limit")]
    TimeLimit,
}

/// Caps for the exhaustive solvers.
#[derive(Debug, Clone)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_rows: usize,
    pub max_intervals: usize,
    pub time_limit: Duration,
}

impl Default for OracleBudget {
    fn default() -> OracleBudget {
        OracleBudget {
            max_vertices: 14,
            max_rows: 7,
            max_intervals: 20,
            time_limit: Duration::from_secs(60),
        }
    }
}

/// Minimum k-tuple dominating set by pruned subset enumeration, iterating
/// the cardinality upward from the counting lower bound `⌈kn/(Δ+1)⌉`.
/// Enumeration is lexicographic, so witnesses are reproducible.
pub fn oracle_min_ktuple(
    g: &Graph,
    k: usize,
    budget: &OracleBudget,
) -> Result<DominationResult, OracleError> {
    let n = g.vertex_count();
    if n > budget.max_vertices || n > 60 {
        return Err(OracleError::BudgetExceeded { size: n, limit: budget.max_vertices.min(60) });
    }
    if k == 0 {
        return Ok(DominationResult {
            k,
            value: DominationValue::Finite(0),
            witness: Vec::new(),
            derivation: Derivation::ZeroK,
        });
    }
    if k > g.min_degree() + 1 {
        return Ok(DominationResult::infeasible(k, Derivation::Oracle));
    }

    let closed: Vec<u64> = (1..=n)
        .map(|v| {
            g.closed_neighborhood(v)
                .unwrap()
                .iter()
                .fold(0u64, |acc, &w| acc | 1 << (w - 1))
        })
        .collect();

    let lower = k.max((k * n).div_ceil(g.max_degree() + 1));
    let deadline = Instant::now() + budget.time_limit;
    let mut search = Search {
        closed: &closed,
        n,
        deadline,
        ticks: 0,
        chosen: Vec::new(),
        deficiency: vec![k as i64; n],
    };
    for size in lower..=n {
        if let Some(witness) = search.run(size)? {
            debug_assert!(g.verify_ktuple(&witness, k).unwrap());
            return Ok(DominationResult {
                k,
                value: DominationValue::Finite(size),
                witness,
                derivation: Derivation::Oracle,
            });
        }
    }
    unreachable!("the whole vertex set dominates when k <= min degree + 1");
}

struct Search<'a> {
    closed: &'a [u64],
    n: usize,
    deadline: Instant,
    ticks: u32,
    chosen: Vec<usize>,
    /// `k` minus the coverage so far; satisfied at zero or below.
    deficiency: Vec<i64>,
}

impl Search<'_> {
    fn run(&mut self, size: usize) -> Result<Option<Vec<usize>>, OracleError> {
        self.chosen.clear();
        self.dfs(0, size)
    }

    fn dfs(&mut self, from: usize, size: usize) -> Result<Option<Vec<usize>>, OracleError> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 4096 == 0 && Instant::now() > self.deadline {
            return Err(OracleError::TimeLimit);
        }
        let left = size - self.chosen.len();
        if left == 0 {
            if self.deficiency.iter().all(|&d| d <= 0) {
                return Ok(Some(self.chosen.iter().map(|&v0| v0 + 1).collect()));
            }
            return Ok(None);
        }
        // A pick helps each vertex at most once, and only picks among the
        // remaining candidates can still cover a deficient vertex.
        let available = (!0u64 << from) & ((1u64 << self.n) - 1);
        for v0 in 0..self.n {
            let d = self.deficiency[v0];
            if d > left as i64 || d > i64::from((self.closed[v0] & available).count_ones()) {
                return Ok(None);
            }
        }
        for v0 in from..self.n {
            self.chosen.push(v0);
            let mut bits = self.closed[v0];
            while bits != 0 {
                self.deficiency[bits.trailing_zeros() as usize] -= 1;
                bits &= bits - 1;
            }
            let found = self.dfs(v0 + 1, size)?;
            self.chosen.pop();
            let mut bits = self.closed[v0];
            while bits != 0 {
                self.deficiency[bits.trailing_zeros() as usize] += 1;
                bits &= bits - 1;
            }
            if let Some(found) = found {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// Maximum number of pairwise disjoint intervals by subset enumeration.
pub fn oracle_interval_mis(
    model: &IntervalModel,
    budget: &OracleBudget,
) -> Result<usize, OracleError> {
    let m = model.len();
    if m > budget.max_intervals || m > 60 {
        return Err(OracleError::BudgetExceeded { size: m, limit: budget.max_intervals.min(60) });
    }
    let conflicts: Vec<u64> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && model.intervals[i].intersects(&model.intervals[j]))
                .fold(0u64, |acc, j| acc | 1 << j)
        })
        .collect();
    let mut best = 0usize;
    // Depth-first over include/exclude decisions.
    fn go(i: usize, taken: usize, banned: u64, conflicts: &[u64], best: &mut usize) {
        if i == conflicts.len() {
            *best = (*best).max(taken);
            return;
        }
        if taken + (conflicts.len() - i) <= *best {
            return;
        }
        if banned & (1 << i) == 0 {
            go(i + 1, taken + 1, banned | conflicts[i], conflicts, best);
        }
        go(i + 1, taken, banned, conflicts, best);
    }
    go(0, 0, 0, &conflicts, &mut best);
    Ok(best)
}

/// Calls `visit` on every permutation of `items`, stopping early on `Some`.
pub(crate) fn for_each_permutation<T: Copy, R>(
    items: &mut [T],
    visit: &mut impl FnMut(&[T]) -> Option<R>,
) -> Option<R> {
    fn rec<T: Copy, R>(
        items: &mut [T],
        at: usize,
        visit: &mut impl FnMut(&[T]) -> Option<R>,
    ) -> Option<R> {
        if at == items.len() {
            return visit(items);
        }
        for i in at..items.len() {
            items.swap(at, i);
            if let Some(r) = rec(items, at + 1, visit) {
                return Some(r);
            }
            items.swap(at, i);
        }
        None
    }
    rec(items, 0, visit)
}

/// Exhaustive consecutive-ones test: tries every row permutation.
pub fn oracle_c1p(
    m: &ZeroOneMatrix,
    budget: &OracleBudget,
) -> Result<Option<Vec<usize>>, OracleError> {
    if m.rows() > budget.max_rows {
        return Err(OracleError::BudgetExceeded { size: m.rows(), limit: budget.max_rows });
    }
    let mut rows: Vec<usize> = (0..m.rows()).collect();
    Ok(for_each_permutation(&mut rows, &mut |order| {
        m.is_c1p_order(order).then(|| order.to_vec())
    }))
}

/// Exhaustive consecutive-zeros test.
pub fn oracle_c0p(
    m: &ZeroOneMatrix,
    budget: &OracleBudget,
) -> Result<Option<Vec<usize>>, OracleError> {
    oracle_c1p(&m.complement(), budget)
}

/// Exhaustive circular-ones test.
pub fn oracle_circ1p(
    m: &ZeroOneMatrix,
    budget: &OracleBudget,
) -> Result<Option<Vec<usize>>, OracleError> {
    if m.rows() > budget.max_rows {
        return Err(OracleError::BudgetExceeded { size: m.rows(), limit: budget.max_rows });
    }
    let mut rows: Vec<usize> = (0..m.rows()).collect();
    Ok(for_each_permutation(&mut rows, &mut |order| {
        m.is_circ1p_order(order).then(|| order.to_vec())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobiconvex::Interval;
    use crate::fixtures;

    #[test]
    fn oracle_matches_known_values() {
        let budget = OracleBudget::default();
        let g = fixtures::cobiconvex7();
        assert_eq!(
            oracle_min_ktuple(&g, 2, &budget).unwrap().value,
            DominationValue::Finite(3)
        );
        let k9 = Graph::complete(9);
        assert_eq!(
            oracle_min_ktuple(&k9, 4, &budget).unwrap().value,
            DominationValue::Finite(4)
        );
    }

    #[test]
    fn oracle_edge_contracts() {
        let budget = OracleBudget::default();
        let g = fixtures::cobiconvex7();
        let zero = oracle_min_ktuple(&g, 0, &budget).unwrap();
        assert_eq!(zero.value, DominationValue::Finite(0));
        assert!(zero.witness.is_empty());
        assert!(oracle_min_ktuple(&g, 10, &budget).unwrap().value.is_infeasible());
        let big = Graph::complete(15);
        assert!(matches!(
            oracle_min_ktuple(&big, 1, &budget),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn oracle_monotone_in_k() {
        let budget = OracleBudget::default();
        let g = fixtures::cobiconvex7();
        let mut prev = 0;
        for k in 0..=g.min_degree() + 1 {
            let v = oracle_min_ktuple(&g, k, &budget).unwrap().value.finite().unwrap();
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn interval_oracle_small() {
        let budget = OracleBudget::default();
        let one = IntervalModel { intervals: vec![Interval { owner: 1, lo: 2, hi: 4 }] };
        assert_eq!(oracle_interval_mis(&one, &budget).unwrap(), 1);
        let chain = IntervalModel {
            intervals: vec![
                Interval { owner: 1, lo: 1, hi: 2 },
                Interval { owner: 2, lo: 2, hi: 3 },
                Interval { owner: 3, lo: 3, hi: 4 },
            ],
        };
        assert_eq!(oracle_interval_mis(&chain, &budget).unwrap(), 2);
    }

    #[test]
    fn c1p_oracle_trivial_cases() {
        let budget = OracleBudget::default();
        let tiny = ZeroOneMatrix::ones(1, 1);
        assert!(oracle_c1p(&tiny, &budget).unwrap().is_some());
        let m = fixtures::cobiconvex7().augmented_adjacency();
        assert!(oracle_c0p(&m, &budget).unwrap().is_some());
        let too_big = ZeroOneMatrix::ones(8, 2);
        assert!(oracle_c1p(&too_big, &budget).is_err());
    }
}
