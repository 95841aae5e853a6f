//! Seeded instance generators for tests and the CLI.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::matrix::ZeroOneMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("clique sizes must be positive")]
    EmptyClique,
    #[error("without universal vertices both cliques need at least 2 vertices")]
    TooSmallWithoutUniversal,
}

/// Random co-biconvex graph: two cliques of the given sizes whose crossing
/// non-edges form a monotone staircase of zero runs, plus `universal`
/// vertices adjacent to everything.
///
/// Per column `j` of the second clique the run `[a_j, b_j]` of non-neighbors
/// in the first clique satisfies `a_j <= a_{j+1} <= b_j + 1` and
/// `b_j <= b_{j+1}`, so the runs are consecutive in both directions and
/// jointly cover the first clique. Every listed vertex therefore has a
/// non-neighbor and the universal count comes out exactly as requested.
pub fn random_cobiconvex(
    c1_size: usize,
    c2_size: usize,
    universal: usize,
    seed: u64,
) -> Result<Graph, GenError> {
    if c1_size == 0 || c2_size == 0 {
        return Err(GenError::EmptyClique);
    }
    if universal == 0 && (c1_size < 2 || c2_size < 2) {
        return Err(GenError::TooSmallWithoutUniversal);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut runs = Vec::with_capacity(c2_size);
    let mut prev_a = 1usize;
    let mut prev_b = 0usize; // b of the previous column; 0 before the first
    for j in 0..c2_size {
        let a_hi = if j == 0 { 1 } else { (prev_b + 1).min(c1_size) };
        let a = rng.random_range(prev_a..=a_hi);
        let b_lo = a.max(prev_b);
        // Bias runs short so the graphs stay connected and varied.
        let b_hi = c1_size.min(b_lo + rng.random_range(0..=c1_size / 2 + 1));
        let mut b = rng.random_range(b_lo..=b_hi);
        if j == c2_size - 1 {
            b = c1_size; // cover the tail of the first clique
        }
        runs.push((a, b));
        prev_a = a;
        prev_b = b;
    }
    // Keep at least one crossing edge when nothing else joins the cliques.
    if universal == 0 && runs.iter().all(|&(a, b)| (a, b) == (1, c1_size)) {
        runs[c2_size - 1].0 = 2;
    }

    let n = c1_size + c2_size + universal;
    let mut edges = Vec::new();
    for clique in [(1, c1_size), (c1_size + 1, c1_size + c2_size)] {
        for v in clique.0..=clique.1 {
            for w in v + 1..=clique.1 {
                edges.push((v, w));
            }
        }
    }
    for (j, &(a, b)) in runs.iter().enumerate() {
        let col = c1_size + 1 + j;
        for i in 1..=c1_size {
            if i < a || i > b {
                edges.push((i, col));
            }
        }
    }
    for x in c1_size + c2_size + 1..=n {
        for v in 1..=n {
            if v != x {
                edges.push((v.min(x), v.max(x)));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("generator emits valid edges"))
}

/// Uniform random 0,1-matrix with fair-coin entries.
pub fn random_matrix(rows: usize, cols: usize, seed: u64) -> ZeroOneMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = ZeroOneMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, rng.random_bool(0.5));
        }
    }
    m
}

/// Erdős–Rényi style random graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..=n {
        for w in v + 1..=n {
            if rng.random_bool(p) {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generator emits valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::decompose_cobiconvex;

    #[test]
    fn generated_instances_decompose() {
        for seed in 0..50 {
            let g = random_cobiconvex(2 + (seed as usize % 4), 2 + (seed as usize % 3), seed as usize % 3, seed)
                .unwrap();
            let d = decompose_cobiconvex(&g).unwrap();
            d.verify(&g).unwrap();
            assert_eq!(d.u.len(), seed as usize % 3);
        }
    }

    #[test]
    fn generated_sizes_are_exact() {
        // The clique split is not unique when the crossing non-edges fall
        // apart into several pieces, but the universal count is.
        let g = random_cobiconvex(4, 3, 2, 7).unwrap();
        assert_eq!(g.vertex_count(), 9);
        let d = decompose_cobiconvex(&g).unwrap();
        assert_eq!(d.c1.len() + d.c2.len(), 7);
        assert_eq!(d.u.len(), 2);
    }

    #[test]
    fn degenerate_parameters_rejected() {
        assert_eq!(random_cobiconvex(0, 3, 1, 1), Err(GenError::EmptyClique));
        assert_eq!(
            random_cobiconvex(1, 3, 0, 1),
            Err(GenError::TooSmallWithoutUniversal)
        );
        // Width-1 cliques are fine once a universal vertex joins them.
        assert!(random_cobiconvex(1, 1, 1, 1).unwrap().is_connected());
    }
}
