//! Shared result types for the exact solvers.

use std::fmt;

/// Value of a k-tuple domination instance: the optimum, or infeasible when
/// `k` exceeds the minimum degree plus one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominationValue {
    Finite(usize),
    Infeasible,
}

impl DominationValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            DominationValue::Finite(v) => Some(v),
            DominationValue::Infeasible => None,
        }
    }

    pub fn is_infeasible(self) -> bool {
        matches!(self, DominationValue::Infeasible)
    }
}

impl fmt::Display for DominationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominationValue::Finite(v) => write!(f, "{v}"),
            DominationValue::Infeasible => write!(f, "infeasible"),
        }
    }
}

/// Which case of the solver produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivation {
    /// k = 0: the empty set works for every graph.
    ZeroK,
    /// k exceeds the minimum degree plus one.
    DegreeBound,
    /// k universal vertices suffice (and are necessary) when |U| >= k.
    UniversalCount,
    /// Universal-free solve for k' = 1: one vertex from each clique side.
    OnePerSide,
    /// k' = 2 with alpha1 + alpha2 >= 3: stable sets of total size 3.
    TwoTupleStableSets,
    /// k' = 2 with alpha1 = alpha2 = 1: two vertices per side.
    TwoTupleBothSides,
    /// k' = 3 with alpha1 + alpha2 >= 4: stable sets of total size 4.
    ThreeTupleStableSets,
    /// k' = 3 with alpha1 + alpha2 = 3: maximum stable sets plus one
    /// extra vertex per side.
    ThreeTupleSumThree,
    /// k' = 3 with alpha1 = alpha2 = 1: three vertices per side.
    ThreeTupleBothSides,
    /// Disconnected input: sum of per-component optima.
    ComponentSum,
    /// Web solver, k <= l2: prefix of the first class walk.
    WebDomPrefix,
    /// Web solver, k > l2: whole classes plus a prefix of the first walk.
    WebClassesPlusPrefix,
    /// Exhaustive search.
    Oracle,
}

impl Derivation {
    pub fn as_str(self) -> &'static str {
        match self {
            Derivation::ZeroK => "zero-k",
            Derivation::DegreeBound => "degree-bound",
            Derivation::UniversalCount => "universal-count",
            Derivation::OnePerSide => "one-per-side",
            Derivation::TwoTupleStableSets => "two-tuple-stable-sets",
            Derivation::TwoTupleBothSides => "two-tuple-both-sides",
            Derivation::ThreeTupleStableSets => "three-tuple-stable-sets",
            Derivation::ThreeTupleSumThree => "three-tuple-sum-three",
            Derivation::ThreeTupleBothSides => "three-tuple-both-sides",
            Derivation::ComponentSum => "component-sum",
            Derivation::WebDomPrefix => "web-dom-prefix",
            Derivation::WebClassesPlusPrefix => "web-classes-plus-prefix",
            Derivation::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of an exact solve: the optimum for the given `k`, a witness set
/// (sorted, 1-indexed, empty exactly when the value is infeasible or zero),
/// and the case that fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub k: usize,
    pub value: DominationValue,
    pub witness: Vec<usize>,
    pub derivation: Derivation,
}

impl DominationResult {
    pub fn infeasible(k: usize, derivation: Derivation) -> DominationResult {
        DominationResult { k, value: DominationValue::Infeasible, witness: Vec::new(), derivation }
    }
}
