//! Parametric web graphs and the linear-time k-tuple domination solver.
//!
//! `W(n, m)` has vertices `1..=n` on a cycle, each adjacent to the `m`
//! nearest on either side. With `n = c(2m+1) + r` and `μ = gcd(2m+1, r)`,
//! the residue classes `S_i = [i]_μ ∩ [1, n]` partition the vertices into μ
//! sets of size `n/μ`, each of which meets every closed neighborhood exactly
//! `l₂ = (2m+1)/μ` times. Walking a class by steps of `2m+1` (the
//! 1-contiguous order) and taking prefixes yields optimal dominating sets,
//! giving `γ×k = ⌈kn/(2m+1)⌉` for every `k ≤ 2m+1`.

use thiserror::Error;

use crate::domination::{Derivation, DominationResult, DominationValue};
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WebError {
    #[error("web graph needs m >= 1 and n >= 2m+1, got n={n}, m={m}")]
    InvalidParams { n: usize, m: usize },
    #[error("class index {0} out of range 1..={1}")]
    ClassOutOfRange(usize, usize),
    #[error("dom level {alpha} exceeds l2 = {l2}")]
    AlphaTooLarge { alpha: usize, l2: usize },
}

/// Validated web parameters with the derived modular quantities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WebParams {
    n: usize,
    m: usize,
    quotient: usize,
    remainder: usize,
    mu: usize,
    l1: usize,
    l2: usize,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl WebParams {
    pub fn new(n: usize, m: usize) -> Result<WebParams, WebError> {
        if m == 0 || n < 2 * m + 1 {
            return Err(WebError::InvalidParams { n, m });
        }
        let window = 2 * m + 1;
        let quotient = n / window;
        let remainder = n % window;
        // gcd(w, 0) = w, so r = 0 yields singleton residue classes.
        let mu = gcd(window, remainder);
        Ok(WebParams {
            n,
            m,
            quotient,
            remainder,
            mu,
            l1: remainder / mu,
            l2: window / mu,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `2m + 1`, the size of every closed neighborhood.
    pub fn window(&self) -> usize {
        2 * self.m + 1
    }

    pub fn quotient(&self) -> usize {
        self.quotient
    }

    pub fn remainder(&self) -> usize {
        self.remainder
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn l1(&self) -> usize {
        self.l1
    }

    pub fn l2(&self) -> usize {
        self.l2
    }

    /// Number of labels in each residue class.
    pub fn class_size(&self) -> usize {
        self.n / self.mu
    }

    /// Residue class of a label, in `1..=μ`.
    pub fn class_of(&self, label: usize) -> usize {
        debug_assert!(label >= 1 && label <= self.n);
        let r = label % self.mu;
        if r == 0 {
            self.mu
        } else {
            r
        }
    }

    /// Closed neighborhood of `v` as labels, in cyclic order around `v`.
    pub fn closed_neighborhood(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let (n, m) = (self.n, self.m);
        debug_assert!(v >= 1 && v <= n);
        (0..=2 * m).map(move |off| (v + n - 1 - m + off) % n + 1)
    }

    /// `v_(m+j)` relabeled as `j`: the original index of a shifted label.
    pub fn original_index(&self, label: usize) -> usize {
        (label - 1 + self.m) % self.n + 1
    }
}

/// Materializes the web graph. Costs `O(n·m)`; the solver itself never
/// needs it.
pub fn web_graph(p: &WebParams) -> Graph {
    let mut edges = Vec::with_capacity(p.n * p.m);
    for v in 1..=p.n {
        for l in 1..=p.m {
            edges.push((v, (v - 1 + l) % p.n + 1));
        }
    }
    Graph::from_edges(p.n, &edges).expect("web parameters produce a simple graph")
}

/// A residue class listed in the 1-contiguous order: each label follows the
/// previous one by a step of `2m + 1` around the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContiguousSequence {
    class_index: usize,
    labels: Vec<usize>,
    n: usize,
    step: usize,
    mu: usize,
}

impl ContiguousSequence {
    pub fn class_index(&self) -> usize {
        self.class_index
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Position of a label in the walk, solved arithmetically: with
    /// `q = n/μ`, the step count `t` satisfies `t·l₂ ≡ (label - i)/μ (mod q)`
    /// and `l₂` is invertible because `gcd(l₂, q) = 1`.
    pub fn position_of(&self, label: usize) -> Option<usize> {
        if label == 0 || label > self.n {
            return None;
        }
        let i = self.class_index;
        if label % self.mu != i % self.mu {
            return None;
        }
        let q = self.labels.len();
        let l2 = self.step / self.mu;
        let delta = (label + self.n - i) % self.n / self.mu;
        let t = delta * mod_inverse(l2, q)? % q;
        debug_assert_eq!(self.labels[t], label);
        Some(t)
    }
}

/// Inverse of `a` modulo `q`, when `gcd(a, q) = 1`.
fn mod_inverse(a: usize, q: usize) -> Option<usize> {
    if q == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128, q as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(q as i128) as usize)
}

/// Builds `⟨S_i⟩`: start at label `i` and repeatedly add `2m+1` modulo `n`,
/// collecting the whole residue class.
pub fn class_sequence(p: &WebParams, i: usize) -> Result<ContiguousSequence, WebError> {
    if i == 0 || i > p.mu {
        return Err(WebError::ClassOutOfRange(i, p.mu));
    }
    let step = p.window();
    let size = p.class_size();
    let mut labels = Vec::with_capacity(size);
    let mut cur = i;
    for _ in 0..size {
        labels.push(cur);
        cur = (cur - 1 + step) % p.n + 1;
    }
    debug_assert_eq!(cur, i, "walk must return to its start");
    Ok(ContiguousSequence { class_index: i, labels, n: p.n, step, mu: p.mu })
}

/// The prefix of the 1-contiguous walk that `alpha`-tuple dominates the web:
/// its first `⌈alpha·n/(2m+1)⌉` labels. `alpha = 0` gives the empty set.
pub fn dom(p: &WebParams, seq: &ContiguousSequence, alpha: usize) -> Result<Vec<usize>, WebError> {
    if alpha > p.l2 {
        return Err(WebError::AlphaTooLarge { alpha, l2: p.l2 });
    }
    let count = (alpha * p.n).div_ceil(p.window());
    debug_assert!(count <= seq.len());
    Ok(seq.labels()[..count].to_vec())
}

/// Witness in construction order: the dom prefix of `⟨S_1⟩` when `k ≤ l₂`,
/// otherwise the prefix for the remainder plus whole classes `S_2, ...`,
/// indices wrapping back into `1..=μ`. `None` when `k` is infeasible.
pub fn witness_walk(p: &WebParams, k: usize) -> Option<Vec<usize>> {
    if k > p.window() {
        return None;
    }
    let s1 = class_sequence(p, 1).expect("class 1 always exists");
    if k <= p.l2 {
        return Some(dom(p, &s1, k).expect("k <= l2 here"));
    }
    let whole_classes = k / p.l2;
    let rest = k % p.l2;
    let mut walk = dom(p, &s1, rest).expect("remainder < l2");
    for idx in 2..=whole_classes + 1 {
        let class = (idx - 1) % p.mu + 1;
        walk.extend(class_sequence(p, class).expect("class in range").labels());
    }
    Some(walk)
}

/// Minimum k-tuple dominating set of the web: value `⌈kn/(2m+1)⌉` with a
/// verified witness, infeasible when `k > 2m+1`.
pub fn algorithm1(p: &WebParams, k: usize) -> DominationResult {
    if k == 0 {
        return DominationResult {
            k,
            value: DominationValue::Finite(0),
            witness: Vec::new(),
            derivation: Derivation::ZeroK,
        };
    }
    let Some(mut witness) = witness_walk(p, k) else {
        return DominationResult::infeasible(k, Derivation::DegreeBound);
    };
    let value = (k * p.n).div_ceil(p.window());
    debug_assert_eq!(witness.len(), value);
    witness.sort_unstable();
    let derivation = if k <= p.l2 {
        Derivation::WebDomPrefix
    } else {
        Derivation::WebClassesPlusPrefix
    };
    debug_assert!(verify_ktuple_arith(p, &witness, k));
    DominationResult { k, value: DominationValue::Finite(value), witness, derivation }
}

/// Self-test for the class partition: the μ classes are disjoint, cover
/// `[1, n]`, have `n/μ` labels each, and every closed neighborhood meets
/// every class exactly `l₂` times.
pub fn class_partition_check(p: &WebParams) -> bool {
    let mut owner = vec![0usize; p.n];
    for i in 1..=p.mu {
        let Ok(seq) = class_sequence(p, i) else {
            return false;
        };
        if seq.len() != p.class_size() {
            return false;
        }
        for &label in seq.labels() {
            if owner[label - 1] != 0 {
                return false; // classes overlap
            }
            owner[label - 1] = i;
        }
    }
    if owner.iter().any(|&c| c == 0) {
        return false; // not a cover
    }
    let mut counts = vec![0usize; p.mu + 1];
    for v in 1..=p.n {
        counts.iter_mut().for_each(|c| *c = 0);
        for w in p.closed_neighborhood(v) {
            counts[owner[w - 1]] += 1;
        }
        if counts[1..].iter().any(|&c| c != p.l2) {
            return false;
        }
    }
    true
}

/// Per-vertex coverage counts `|N[v] ∩ d|` in `O(n + |d|)` via a circular
/// difference array; no adjacency lists are materialized. Duplicates in
/// `d` count once; labels out of range are rejected as `None`.
pub fn ktuple_coverage_arith(p: &WebParams, d: &[usize]) -> Option<Vec<usize>> {
    let n = p.n;
    let mut member = vec![false; n];
    for &v in d {
        if v == 0 || v > n {
            return None;
        }
        member[v - 1] = true;
    }
    let mut diff = vec![0i64; n + 1];
    for v in member.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i + 1) {
        let lo = (v + n - 1 - p.m) % n;
        let len = p.window().min(n);
        if lo + len <= n {
            diff[lo] += 1;
            diff[lo + len] -= 1;
        } else {
            diff[lo] += 1;
            diff[n] -= 1;
            diff[0] += 1;
            diff[lo + len - n] -= 1;
        }
    }
    let mut cover = 0i64;
    let mut out = Vec::with_capacity(n);
    for v in 0..n {
        cover += diff[v];
        out.push(cover as usize);
    }
    Some(out)
}

/// Arithmetic k-tuple verification in `O(n + |d|)` via a circular
/// difference array; no adjacency lists are materialized.
pub fn verify_ktuple_arith(p: &WebParams, d: &[usize], k: usize) -> bool {
    let n = p.n;
    let mut member = vec![false; n];
    for &v in d {
        if v == 0 || v > n {
            return false;
        }
        member[v - 1] = true;
    }
    let mut diff = vec![0i64; n + 1];
    for v in member.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i + 1) {
        // v covers the circular window [v - m, v + m].
        let lo = (v + n - 1 - p.m) % n; // 0-indexed start
        let len = p.window().min(n);
        if lo + len <= n {
            diff[lo] += 1;
            diff[lo + len] -= 1;
        } else {
            diff[lo] += 1;
            diff[n] -= 1;
            diff[0] += 1;
            diff[lo + len - n] -= 1;
        }
    }
    let mut cover = 0i64;
    for v in 0..n {
        cover += diff[v];
        if cover < k as i64 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w15_4() -> WebParams {
        WebParams::new(15, 4).unwrap()
    }

    #[test]
    fn derived_quantities() {
        let p = w15_4();
        assert_eq!(
            (p.quotient(), p.remainder(), p.mu(), p.l1(), p.l2()),
            (1, 6, 3, 2, 3)
        );
        assert_eq!(gcd(p.l2(), p.quotient() * p.l2() + p.l1()), 1);
        // r = 0 convention: singleton classes.
        let q = WebParams::new(18, 4).unwrap();
        assert_eq!((q.mu(), q.l1(), q.l2()), (9, 0, 1));
        assert!(WebParams::new(6, 3).is_err());
        assert!(WebParams::new(10, 0).is_err());
    }

    #[test]
    fn class_walks_match_worked_example() {
        let p = w15_4();
        let s1 = class_sequence(&p, 1).unwrap();
        assert_eq!(s1.labels(), &[1, 10, 4, 13, 7]);
        let s3 = class_sequence(&p, 3).unwrap();
        assert_eq!(s3.labels(), &[3, 12, 6, 15, 9]);
        assert!(class_sequence(&p, 4).is_err());
        // r = 0 family: class 5 of W(18, 4) is {5, 14}.
        let q = WebParams::new(18, 4).unwrap();
        assert_eq!(class_sequence(&q, 5).unwrap().labels(), &[5, 14]);
    }

    #[test]
    fn one_contiguity_invariant() {
        for (n, m) in [(15, 4), (18, 4), (13, 3), (9, 4)] {
            let p = WebParams::new(n, m).unwrap();
            for i in 1..=p.mu() {
                let seq = class_sequence(&p, i).unwrap();
                for pair in seq.labels().windows(2) {
                    assert_eq!(pair[1], (pair[0] - 1 + p.window()) % n + 1);
                }
                for (t, &label) in seq.labels().iter().enumerate() {
                    assert_eq!(seq.position_of(label), Some(t));
                }
                assert_eq!(seq.position_of(n + 1), None);
            }
        }
    }

    #[test]
    fn dom_prefixes_match_worked_run() {
        let p = w15_4();
        let s1 = class_sequence(&p, 1).unwrap();
        assert_eq!(dom(&p, &s1, 0).unwrap(), Vec::<usize>::new());
        assert_eq!(dom(&p, &s1, 1).unwrap(), vec![1, 10]);
        assert_eq!(dom(&p, &s1, 2).unwrap(), vec![1, 10, 4, 13]);
        assert_eq!(dom(&p, &s1, 3).unwrap(), vec![1, 10, 4, 13, 7]);
        assert_eq!(
            dom(&p, &s1, 4),
            Err(WebError::AlphaTooLarge { alpha: 4, l2: 3 })
        );
    }

    #[test]
    fn algorithm1_values_on_small_webs() {
        let p = w15_4();
        let expected = [2, 4, 5, 7, 9, 10, 12, 14, 15];
        for (k, &want) in (1..=9).zip(expected.iter()) {
            let res = algorithm1(&p, k);
            assert_eq!(res.value, DominationValue::Finite(want), "k={k}");
            assert_eq!(res.witness.len(), want);
            assert!(verify_ktuple_arith(&p, &res.witness, k));
        }
        assert!(algorithm1(&p, 10).value.is_infeasible());
        assert_eq!(algorithm1(&p, 0).value, DominationValue::Finite(0));
    }

    #[test]
    fn witness_walks_match_table_prefixes() {
        let p = w15_4();
        assert_eq!(witness_walk(&p, 1).unwrap(), vec![1, 10]);
        assert_eq!(witness_walk(&p, 2).unwrap(), vec![1, 10, 4, 13]);
        assert_eq!(witness_walk(&p, 3).unwrap(), vec![1, 10, 4, 13, 7]);
        // k = 7 -> remainder prefix {1, 10} plus classes 2 and 3.
        let w7 = witness_walk(&p, 7).unwrap();
        assert_eq!(w7.len(), 12);
        assert_eq!(&w7[..2], &[1, 10]);
        // k = 2m+1 wraps the class indices and returns every vertex.
        let mut w9 = witness_walk(&p, 9).unwrap();
        w9.sort_unstable();
        assert_eq!(w9, (1..=15).collect::<Vec<_>>());
    }

    #[test]
    fn neighborhood_of_relabeled_web() {
        let p = w15_4();
        let around5: Vec<usize> = p.closed_neighborhood(5).collect();
        assert_eq!(around5, vec![1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(p.original_index(1), 5);
        assert_eq!(p.original_index(10), 14);
    }

    #[test]
    fn partition_check_small_and_complete() {
        assert!(class_partition_check(&w15_4()));
        assert!(class_partition_check(&WebParams::new(9, 4).unwrap()));
        assert!(class_partition_check(&WebParams::new(18, 4).unwrap()));
        assert!(class_partition_check(&WebParams::new(100, 7).unwrap()));
    }

    #[test]
    fn arithmetic_verifier_agrees_with_graph_verifier() {
        let p = w15_4();
        let g = web_graph(&p);
        for (d, k) in [
            (vec![1, 10], 1usize),
            (vec![1, 10], 2),
            (vec![1, 10, 4, 13, 7], 3),
            (vec![], 0),
            ((1..=15).collect::<Vec<_>>(), 9),
            ((1..=15).collect::<Vec<_>>(), 10),
        ] {
            assert_eq!(
                verify_ktuple_arith(&p, &d, k),
                g.verify_ktuple(&d, k).unwrap(),
                "d={d:?} k={k}"
            );
        }
    }

    #[test]
    fn web_graph_is_regular() {
        let p = WebParams::new(11, 3).unwrap();
        let g = web_graph(&p);
        for v in g.vertices() {
            assert_eq!(g.degree(v), 2 * p.m());
        }
        // W(2m+1, m) is complete.
        assert!(web_graph(&WebParams::new(9, 4).unwrap()).is_complete());
    }
}
