//! k-tuple domination on co-biconvex graphs for `1 ≤ k ≤ |U| + 3`.
//!
//! After peeling the universal vertices (each contributes exactly one to the
//! optimum), the residual instance is decided by the independence numbers of
//! two auxiliary interval graphs: the zero runs of each clique's vertices
//! inside the opposite clique's segment of the ordering. Stable sets there
//! are exactly the sets dominating the opposite side at one below their own
//! cardinality, which pins the optimum for the residual levels 1, 2 and 3.

use thiserror::Error;

use crate::domination::{Derivation, DominationResult, DominationValue};
use crate::graph::Graph;
use crate::oracle::{self, OracleBudget};
use crate::recognition::{decompose_cobiconvex, CoBiconvexDecomposition, DecomposeError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph is not co-biconvex")]
    NotCoBiconvex,
    #[error("co-biconvex block structure could not be realized")]
    StructureViolation,
    #[error("k = {k} exceeds the supported range (at most |U| + 3 = {max})")]
    UnsupportedK { k: usize, max: usize },
    #[error("optimum is {value} but no witness of that size was constructed")]
    WitnessNotConstructed { value: usize },
    #[error("auxiliary intervals need a universal-free decomposition")]
    UniversalLeaked,
    #[error("interval model is empty")]
    EmptyModel,
}

impl From<DecomposeError> for SolveError {
    fn from(e: DecomposeError) -> SolveError {
        match e {
            DecomposeError::NotCoBiconvex => SolveError::NotCoBiconvex,
            DecomposeError::StructureViolation => SolveError::StructureViolation,
        }
    }
}

/// Integer interval `[lo, hi]` owned by a vertex; endpoints are 1-indexed
/// positions into the decomposition ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub owner: usize,
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// Interval model of one auxiliary graph: one interval per vertex of the
/// owning clique, spanning the positions of its zero run in the opposite
/// clique's segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalModel {
    pub intervals: Vec<Interval>,
}

impl IntervalModel {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Independence numbers of the two auxiliary graphs with realizing stable
/// sets (listed as owner vertices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaPair {
    pub alpha1: usize,
    pub alpha2: usize,
    pub witness1: Vec<usize>,
    pub witness2: Vec<usize>,
}

/// Builds the auxiliary interval models from a universal-free decomposition.
/// The first model belongs to `c1` (intervals inside `c2`'s positions), the
/// second to `c2`.
pub fn build_auxiliary_intervals(
    d: &CoBiconvexDecomposition,
    g: &Graph,
) -> Result<(IntervalModel, IntervalModel), SolveError> {
    if !d.u.is_empty() {
        return Err(SolveError::UniversalLeaked);
    }
    let mut position = vec![0usize; g.vertex_count()]; // 1-indexed positions
    for (p, &v) in d.ordering.iter().enumerate() {
        position[v - 1] = p + 1;
    }
    let r = d.c1.len();
    let n = d.ordering.len();
    let model_for = |class: &[usize], lo_bound: usize, hi_bound: usize| {
        let mut intervals = Vec::with_capacity(class.len());
        for &v in class {
            let mut lo = usize::MAX;
            let mut hi = 0;
            let mut count = 0usize;
            for w in g.vertices() {
                if w != v && !g.has_edge(v, w) {
                    let p = position[w - 1];
                    lo = lo.min(p);
                    hi = hi.max(p);
                    count += 1;
                }
            }
            if count == 0 {
                return Err(SolveError::UniversalLeaked);
            }
            debug_assert_eq!(hi - lo + 1, count, "zero run of {v} not consecutive");
            debug_assert!(lo >= lo_bound && hi <= hi_bound);
            intervals.push(Interval { owner: v, lo, hi });
        }
        Ok(IntervalModel { intervals })
    };
    Ok((model_for(&d.c1, r + 1, n)?, model_for(&d.c2, 1, r)?))
}

/// Maximum set of pairwise disjoint intervals by the earliest-right-endpoint
/// sweep. Returns the independence number and the owners of a realizing set.
pub fn interval_mis(model: &IntervalModel) -> Result<(usize, Vec<usize>), SolveError> {
    if model.is_empty() {
        return Err(SolveError::EmptyModel);
    }
    let mut sorted = model.intervals.clone();
    sorted.sort_by_key(|iv| (iv.hi, iv.lo, iv.owner));
    let mut witness = Vec::new();
    let mut last_hi = 0usize;
    for iv in &sorted {
        if witness.is_empty() || iv.lo > last_hi {
            witness.push(iv.owner);
            last_hi = iv.hi;
        }
    }
    Ok((witness.len(), witness))
}

/// Computes both independence numbers for a universal-free decomposition.
pub fn alpha_pair(d: &CoBiconvexDecomposition, g: &Graph) -> Result<AlphaPair, SolveError> {
    let (h1, h2) = build_auxiliary_intervals(d, g)?;
    let (alpha1, witness1) = interval_mis(&h1)?;
    let (alpha2, witness2) = interval_mis(&h2)?;
    Ok(AlphaPair { alpha1, alpha2, witness1, witness2 })
}

/// The general bracket for a universal-free decomposition: the optimum lies
/// in `[k + 1, 2k]`, the upper bound being available once both cliques have
/// at least `k` vertices.
pub fn tuple_bound_pair(d: &CoBiconvexDecomposition, k: usize) -> (usize, Option<usize>) {
    debug_assert!(d.u.is_empty());
    let upper = (d.c1.len() >= k && d.c2.len() >= k).then_some(2 * k);
    (k + 1, upper)
}

/// Exact k-tuple domination on a co-biconvex graph, `0 ≤ k ≤ |U| + 3`.
///
/// Disconnected inputs are recognized and solved per component, summing the
/// optima. Returns an infeasible result when `k` exceeds the minimum degree
/// plus one.
pub fn solve_cobiconvex(g: &Graph, k: usize) -> Result<DominationResult, SolveError> {
    if k == 0 {
        return Ok(DominationResult {
            k,
            value: DominationValue::Finite(0),
            witness: Vec::new(),
            derivation: Derivation::ZeroK,
        });
    }

    let components = g.connected_components();
    if components.len() > 1 {
        let mut total = 0usize;
        let mut witness = Vec::new();
        for comp in &components {
            let (sub, map) = g.induced_subgraph(comp).expect("component is nonempty");
            let res = solve_connected(&sub, k)?;
            match res.value {
                DominationValue::Infeasible => {
                    return Ok(DominationResult::infeasible(k, Derivation::DegreeBound));
                }
                DominationValue::Finite(v) => {
                    total += v;
                    witness.extend(res.witness.iter().map(|&x| map[x - 1]));
                }
            }
        }
        witness.sort_unstable();
        debug_assert!(g.verify_ktuple(&witness, k).unwrap());
        return Ok(DominationResult {
            k,
            value: DominationValue::Finite(total),
            witness,
            derivation: Derivation::ComponentSum,
        });
    }

    solve_connected(g, k)
}

fn solve_connected(g: &Graph, k: usize) -> Result<DominationResult, SolveError> {
    debug_assert!(k >= 1);
    let d = decompose_cobiconvex(g)?;

    if d.u.len() >= k {
        // Feasibility is automatic here: every vertex neighbors all
        // universal vertices besides itself, so the minimum degree is at
        // least |U| (or n - 1 on complete graphs).
        let witness: Vec<usize> = d.u[..k].to_vec();
        debug_assert!(g.verify_ktuple(&witness, k).unwrap());
        return Ok(DominationResult {
            k,
            value: DominationValue::Finite(k),
            witness,
            derivation: Derivation::UniversalCount,
        });
    }

    let residual_k = k - d.u.len();
    if residual_k > 3 {
        return Err(SolveError::UnsupportedK { k, max: d.u.len() + 3 });
    }
    if k > g.min_degree() + 1 {
        return Ok(DominationResult::infeasible(k, Derivation::DegreeBound));
    }

    // Peel the universal vertices; the optimum grows by exactly their count.
    let (inner_graph, map): (Graph, Vec<usize>) = if d.u.is_empty() {
        (g.clone(), g.vertices().collect())
    } else {
        let keep: Vec<usize> = g
            .vertices()
            .filter(|&v| g.degree(v) != g.vertex_count() - 1)
            .collect();
        g.induced_subgraph(&keep).expect("non-universal vertices exist")
    };
    let inner = solve_universal_free(&inner_graph, residual_k)?;

    let mut witness: Vec<usize> = d.u.clone();
    witness.extend(inner.witness.iter().map(|&x| map[x - 1]));
    witness.sort_unstable();
    let value = d.u.len() + inner.value;
    assert!(
        g.verify_ktuple(&witness, k).unwrap(),
        "constructed witness failed verification (k = {k})"
    );
    assert_eq!(witness.len(), value);
    Ok(DominationResult {
        k,
        value: DominationValue::Finite(value),
        witness,
        derivation: inner.derivation,
    })
}

struct InnerSolution {
    value: usize,
    witness: Vec<usize>,
    derivation: Derivation,
}

/// Case analysis on a universal-free co-biconvex graph for levels 1..=3.
/// The graph may be disconnected (peeling can disconnect it); the clique
/// partition arguments never use connectivity.
fn solve_universal_free(g: &Graph, k: usize) -> Result<InnerSolution, SolveError> {
    debug_assert!((1..=3).contains(&k));
    debug_assert!(k <= g.min_degree() + 1);
    let d = decompose_cobiconvex(g)?;
    debug_assert!(d.u.is_empty(), "peeling must remove all universal vertices");

    if k == 1 {
        // One vertex per clique dominates everything once.
        let witness = vec![smallest(&d.c1), smallest(&d.c2)];
        return Ok(InnerSolution { value: 2, witness, derivation: Derivation::OnePerSide });
    }

    let alphas = alpha_pair(&d, g)?;
    let sum = alphas.alpha1 + alphas.alpha2;
    let (value, witness, derivation) = match (k, sum) {
        (2, 3..) => (3, trim_stable_union(&alphas, 3), Derivation::TwoTupleStableSets),
        (2, _) => (4, per_side(&d, 2)?, Derivation::TwoTupleBothSides),
        (3, 4..) => (4, trim_stable_union(&alphas, 4), Derivation::ThreeTupleStableSets),
        (3, 2) => (6, per_side(&d, 3)?, Derivation::ThreeTupleBothSides),
        (3, _) => (5, sum_three_witness(g, &d, &alphas)?, Derivation::ThreeTupleSumThree),
        _ => unreachable!("k is 2 or 3 here"),
    };
    debug_assert!(g.verify_ktuple(&witness, k).unwrap());
    debug_assert_eq!(witness.len(), value);
    Ok(InnerSolution { value, witness, derivation })
}

fn smallest(class: &[usize]) -> usize {
    *class.iter().min().expect("clique side is nonempty")
}

/// Stable sets of total size `target` drawn from the two maximum stable
/// sets, trimmed with a preference for balance.
fn trim_stable_union(alphas: &AlphaPair, target: usize) -> Vec<usize> {
    debug_assert!(alphas.alpha1 + alphas.alpha2 >= target);
    let lower = target.saturating_sub(alphas.alpha2).max(1);
    let upper = alphas.alpha1.min(target - 1);
    let take1 = target.div_ceil(2).clamp(lower, upper);
    let take2 = target - take1;
    let mut witness: Vec<usize> = alphas.witness1[..take1].to_vec();
    witness.extend_from_slice(&alphas.witness2[..take2]);
    witness.sort_unstable();
    witness
}

/// `k` smallest vertices from each clique.
fn per_side(d: &CoBiconvexDecomposition, k: usize) -> Result<Vec<usize>, SolveError> {
    if d.c1.len() < k || d.c2.len() < k {
        return Err(SolveError::WitnessNotConstructed { value: 2 * k });
    }
    let mut witness = Vec::with_capacity(2 * k);
    for class in [&d.c1, &d.c2] {
        let mut side = class.to_vec();
        side.sort_unstable();
        witness.extend_from_slice(&side[..k]);
    }
    witness.sort_unstable();
    Ok(witness)
}

/// Witness of size 5 for level 3 when the independence numbers sum to 3:
/// both maximum stable sets plus one extra vertex per side. If a side has
/// no vertex outside its stable set, fall back to bounded augmentation and
/// then to exhaustive search.
fn sum_three_witness(
    g: &Graph,
    d: &CoBiconvexDecomposition,
    alphas: &AlphaPair,
) -> Result<Vec<usize>, SolveError> {
    let mut base: Vec<usize> = alphas.witness1.iter().chain(alphas.witness2.iter()).copied().collect();
    let extra1 = d.c1.iter().filter(|v| !alphas.witness1.contains(v)).min();
    let extra2 = d.c2.iter().filter(|v| !alphas.witness2.contains(v)).min();
    if let (Some(&w1), Some(&w2)) = (extra1, extra2) {
        base.push(w1);
        base.push(w2);
        base.sort_unstable();
        return Ok(base);
    }

    // A clique equal to its own stable set: try every augmentation of the
    // stable union by two vertices, then ask the exhaustive solver.
    let outside: Vec<usize> = g.vertices().filter(|v| !base.contains(v)).collect();
    for (i, &x) in outside.iter().enumerate() {
        for &y in &outside[i + 1..] {
            let mut cand = base.clone();
            cand.push(x);
            cand.push(y);
            cand.sort_unstable();
            if g.verify_ktuple(&cand, 3).unwrap() {
                return Ok(cand);
            }
        }
    }
    let budget = OracleBudget::default();
    if g.vertex_count() <= budget.max_vertices {
        if let Ok(res) = oracle::oracle_min_ktuple(g, 3, &budget) {
            if res.value == DominationValue::Finite(5) {
                return Ok(res.witness);
            }
        }
    }
    Err(SolveError::WitnessNotConstructed { value: 5 })
}
