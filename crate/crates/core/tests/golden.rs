//! Golden values for the named fixtures: the seven-vertex co-biconvex
//! example, the figure matrices, and the 15-vertex web with its full value
//! table.

use tupledom::cobiconvex::{alpha_pair, build_auxiliary_intervals, solve_cobiconvex};
use tupledom::domination::DominationValue;
use tupledom::fixtures;
use tupledom::graph::Graph;
use tupledom::oracle::{oracle_min_ktuple, OracleBudget};
use tupledom::recognition::{c0p_columns, c1p_columns, circ1p_columns, decompose_cobiconvex};
use tupledom::web::{class_sequence, dom, verify_ktuple_arith, web_graph, WebParams};
use tupledom::{algorithm1, DecomposeError};

#[test]
fn cobiconvex7_solve_table() {
    let g = fixtures::cobiconvex7();
    for (k, want) in [(1, 1), (2, 3), (3, 4), (4, 6)] {
        let res = solve_cobiconvex(&g, k).unwrap();
        assert_eq!(res.value, DominationValue::Finite(want), "k = {k}");
        assert!(g.verify_ktuple(&res.witness, k).unwrap());
        assert_eq!(res.witness.len(), want);
    }
}

#[test]
fn cobiconvex7_oracle_agrees() {
    let g = fixtures::cobiconvex7();
    let budget = OracleBudget::default();
    for (k, want) in [(1, 1), (2, 3), (3, 4), (4, 6)] {
        let res = oracle_min_ktuple(&g, k, &budget).unwrap();
        assert_eq!(res.value, DominationValue::Finite(want), "k = {k}");
    }
}

#[test]
fn cobiconvex7_partition_and_alphas() {
    let g = fixtures::cobiconvex7();
    let d = decompose_cobiconvex(&g).unwrap();
    let mut c1 = d.c1.clone();
    let mut c2 = d.c2.clone();
    c1.sort_unstable();
    c2.sort_unstable();
    assert_eq!((c1, c2, d.u.clone()), (vec![1, 2, 3], vec![4, 5, 6], vec![7]));

    // Auxiliary graphs live on the peeled instance.
    let (peeled, _) = g.induced_subgraph(&[1, 2, 3, 4, 5, 6]).unwrap();
    let dp = decompose_cobiconvex(&peeled).unwrap();
    let alphas = alpha_pair(&dp, &peeled).unwrap();
    let (a1, a2) = if dp.c1.contains(&1) {
        (alphas.alpha1, alphas.alpha2)
    } else {
        (alphas.alpha2, alphas.alpha1)
    };
    assert_eq!((a1, a2), (2, 1));
}

#[test]
fn cobiconvex7_intervals_match_zero_runs() {
    // Intervals must be exactly the positional spans of the zero runs read
    // off the augmented adjacency matrix column by column.
    let g = fixtures::cobiconvex7();
    let (peeled, _) = g.induced_subgraph(&[1, 2, 3, 4, 5, 6]).unwrap();
    let d = decompose_cobiconvex(&peeled).unwrap();
    let (h1, h2) = build_auxiliary_intervals(&d, &peeled).unwrap();
    let m = peeled.augmented_adjacency();
    let mut position = vec![0usize; 6];
    for (p, &v) in d.ordering.iter().enumerate() {
        position[v - 1] = p + 1;
    }
    for iv in h1.intervals.iter().chain(h2.intervals.iter()) {
        let mut run: Vec<usize> = (0..6)
            .filter(|&w| !m.get(w, iv.owner - 1) )
            .map(|w| position[w])
            .collect();
        run.sort_unstable();
        assert_eq!(iv.lo, run[0], "owner {}", iv.owner);
        assert_eq!(iv.hi, *run.last().unwrap(), "owner {}", iv.owner);
        assert_eq!(iv.hi - iv.lo + 1, run.len(), "owner {}", iv.owner);
    }
}

#[test]
fn figure_matrices_recognition() {
    // Proper interval example: consecutive ones holds for the columns.
    let b = fixtures::proper_interval5_matrix();
    let order = c1p_columns(&b).expect("proper interval matrix has C1P");
    assert!(b.is_c1p_order(&order));
    // It is not consecutive-zeros: the zero pattern is triangle-like.
    assert!(c0p_columns(&b).is_none());

    // The co-biconvex matrix is printed in block form: identity works.
    let m = fixtures::cobiconvex7_matrix();
    let identity: Vec<usize> = (0..7).collect();
    assert!(m.is_c0p_order(&identity));
    assert!(c0p_columns(&m).is_some());

    // The web matrix is circular under the identity.
    let w = web_graph(&WebParams::new(7, 2).unwrap()).augmented_adjacency();
    assert!(w.is_circ1p_order(&(0..7).collect::<Vec<_>>()));
    assert!(circ1p_columns(&w).is_some());
    assert!(c0p_columns(&w).is_none());

    // The concave-round example is circular-ones but not co-biconvex.
    let s = fixtures::concave_round6();
    assert!(circ1p_columns(&s.augmented_adjacency()).is_some());
    assert_eq!(
        decompose_cobiconvex(&s),
        Err(DecomposeError::NotCoBiconvex)
    );
}

#[test]
fn web15_4_value_table() {
    let p = WebParams::new(15, 4).unwrap();
    let g = web_graph(&p);
    let values = [2, 4, 5, 7, 9, 10, 12, 14, 15];
    for (k, &want) in (1..=9).zip(values.iter()) {
        let res = algorithm1(&p, k);
        assert_eq!(res.value, DominationValue::Finite(want), "k = {k}");
        assert_eq!(res.witness.len(), want);
        assert!(g.verify_ktuple(&res.witness, k).unwrap());
        assert!(verify_ktuple_arith(&p, &res.witness, k));
    }

    // Deterministic witness sets for the prefix cases and the full set.
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    assert_eq!(sorted(algorithm1(&p, 1).witness), vec![1, 10]);
    assert_eq!(sorted(algorithm1(&p, 2).witness), vec![1, 4, 10, 13]);
    assert_eq!(sorted(algorithm1(&p, 3).witness), vec![1, 4, 7, 10, 13]);
    assert_eq!(sorted(algorithm1(&p, 9).witness), (1..=15).collect::<Vec<_>>());
}

#[test]
fn web15_4_known_dominating_sets_verify() {
    let p = WebParams::new(15, 4).unwrap();
    let g = web_graph(&p);
    // Level-8 witness of size 14 and the level-7 set of size 12.
    let k8 = vec![1, 10, 4, 13, 7, 2, 11, 5, 14, 8, 3, 12, 6, 15];
    assert!(g.verify_ktuple(&k8, 8).unwrap());
    let k7 = vec![1, 10, 4, 13, 7, 2, 11, 5, 14, 8, 3, 12];
    assert!(g.verify_ktuple(&k7, 7).unwrap());
    // {1, 10} dominates once but not twice: label 5 sees only one of them.
    assert!(g.verify_ktuple(&[1, 10], 1).unwrap());
    assert!(!g.verify_ktuple(&[1, 10], 2).unwrap());
    let deficient = g.ktuple_deficiencies(&[1, 10], 2).unwrap();
    assert!(deficient.iter().any(|&(v, c)| v == 5 && c == 1));
}

#[test]
fn web_closed_neighborhood_span() {
    let p = WebParams::new(15, 4).unwrap();
    let g = web_graph(&p);
    assert_eq!(
        g.closed_neighborhood(5).unwrap(),
        vec![1, 2, 3, 4, 5, 6, 7, 8, 9]
    );
}

#[test]
fn dom_worked_run() {
    let p = WebParams::new(15, 4).unwrap();
    let s1 = class_sequence(&p, 1).unwrap();
    let g = web_graph(&p);
    for alpha in 0..=3usize {
        let d = dom(&p, &s1, alpha).unwrap();
        assert!(g.verify_ktuple(&d, alpha).unwrap(), "alpha = {alpha}");
        assert_eq!(d.len(), (alpha * 15).div_ceil(9));
    }
    assert_eq!(dom(&p, &s1, 3).unwrap(), vec![1, 10, 4, 13, 7]);
}

#[test]
fn k9_complete_web() {
    // W(9, 4) is the complete graph on 9 vertices.
    let p = WebParams::new(9, 4).unwrap();
    let res = algorithm1(&p, 4);
    assert_eq!(res.value, DominationValue::Finite(4));
    let g = web_graph(&p);
    assert!(g.is_complete());
    let budget = OracleBudget::default();
    assert_eq!(
        oracle_min_ktuple(&g, 4, &budget).unwrap().value,
        DominationValue::Finite(4)
    );
}

#[test]
fn webs_have_no_universal_vertices_beyond_complete() {
    for (n, m) in [(15usize, 4usize), (7, 2), (11, 3), (18, 4)] {
        let g = web_graph(&WebParams::new(n, m).unwrap());
        if n > 2 * m + 1 {
            assert!(g.universal_vertices().is_empty(), "W({n},{m})");
        } else {
            assert_eq!(g.universal_vertices().len(), n);
        }
        assert_eq!(g.connected_components().len(), 1);
    }
}

#[test]
fn two_full_cliques_have_full_span_intervals() {
    // Every vertex of one clique non-adjacent to all of the other: the
    // intervals cover the whole opposite segment.
    let mut edges = Vec::new();
    for (lo, hi) in [(1usize, 3usize), (4, 6)] {
        for v in lo..=hi {
            for w in v + 1..=hi {
                edges.push((v, w));
            }
        }
    }
    let g = Graph::from_edges(6, &edges).unwrap();
    let d = decompose_cobiconvex(&g).unwrap();
    let (h1, h2) = build_auxiliary_intervals(&d, &g).unwrap();
    for iv in &h1.intervals {
        assert_eq!((iv.lo, iv.hi), (4, 6));
    }
    for iv in &h2.intervals {
        assert_eq!((iv.lo, iv.hi), (1, 3));
    }
    let alphas = alpha_pair(&d, &g).unwrap();
    assert_eq!((alphas.alpha1, alphas.alpha2), (1, 1));
}
