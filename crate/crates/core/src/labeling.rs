//! The labeling type and the three distance verifiers.
//!
//! A labeling assigns distinct 64-bit integers to the vertices of a graph;
//! the quantity of interest is the gap `|L(u) - L(v)|` across each edge.
//! Three predicates are checked:
//!
//! * **product-k**: every edge gap has at most `k` prime factors counted
//!   with multiplicity, and gaps of 0 or 1 are forbidden. The forbidden-gap
//!   rule is applied to adjacent pairs by default; [`GapRule::AllPairs`]
//!   extends it to every distinct vertex pair (the stricter reading of the
//!   definition — the two readings disagree on some published examples, so
//!   both are available).
//! * **power-k**: every edge gap is `p^j` for a prime `p` and `1 <= j <= k`.
//! * **strict-k**: every edge gap is `p^k` exactly.
//!
//! Reports enumerate every violation rather than stopping at the first, so
//! the verifiers double as debugging tools for the constructors.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::ntheory;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("vertex {0} has no label")]
    MissingVertex(usize),
    #[error("label domain does not match the graph: expected {expected} vertices, got {got}")]
    DomainMismatch { expected: usize, got: usize },
    #[error("anchor and sign vertices must be distinct")]
    AnchorEqualsSign,
    #[error("sign vertex label equals the anchor label; labeling is not injective")]
    SignVertexTied,
    #[error("label arithmetic overflowed 64 bits")]
    Overflow,
}

/// An injective assignment of integers to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labeling {
    values: BTreeMap<usize, i64>,
}

impl Labeling {
    pub fn new() -> Self {
        Labeling::default()
    }

    /// Labels `values[i]` assigned to vertex `i`.
    pub fn from_values(values: &[i64]) -> Self {
        Labeling {
            values: values.iter().copied().enumerate().collect(),
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        Labeling {
            values: pairs.into_iter().collect(),
        }
    }

    pub fn get(&self, v: usize) -> Option<i64> {
        self.values.get(&v).copied()
    }

    pub fn set(&mut self, v: usize, label: i64) {
        self.values.insert(v, label);
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.values.iter().map(|(&v, &l)| (v, l))
    }

    pub fn labels(&self) -> impl Iterator<Item = i64> + '_ {
        self.values.values().copied()
    }

    /// Sum of absolute label values; the constructors use this to pick
    /// primes large enough to dominate everything assigned so far.
    pub fn abs_sum(&self) -> i64 {
        self.labels().map(i64::abs).sum()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen: Vec<i64> = self.labels().collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    fn check_domain(&self, g: &Graph) -> Result<(), LabelingError> {
        if self.values.len() != g.vertex_count() {
            return Err(LabelingError::DomainMismatch {
                expected: g.vertex_count(),
                got: self.values.len(),
            });
        }
        for v in 0..g.vertex_count() {
            if !self.values.contains_key(&v) {
                return Err(LabelingError::MissingVertex(v));
            }
        }
        Ok(())
    }
}

/// `|L(u) - L(v)|`.
pub fn edge_gap(l: &Labeling, u: usize, v: usize) -> Result<u64, LabelingError> {
    let lu = l.get(u).ok_or(LabelingError::MissingVertex(u))?;
    let lv = l.get(v).ok_or(LabelingError::MissingVertex(v))?;
    Ok(lu.abs_diff(lv))
}

/// Whether the forbidden-gap rule (`|L(u) - L(v)| > 1`) applies to adjacent
/// pairs only or to every distinct pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GapRule {
    AdjacentOnly,
    AllPairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PredicateKind {
    Product,
    Power,
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub gap: u64,
    pub reason: ViolationReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationReason {
    DuplicateLabel,
    GapNotGreaterThanOne,
    TooManyPrimeFactors { omega: u32, max: u32 },
    NotAPrimePower { max_exponent: u32 },
    NotAStrictKthPower { exponent: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: PredicateKind,
    pub k: u32,
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn from_violations(kind: PredicateKind, k: u32, violations: Vec<Violation>) -> Self {
        VerificationReport {
            kind,
            k,
            ok: violations.is_empty(),
            violations,
        }
    }
}

fn injectivity_violations(l: &Labeling) -> Vec<Violation> {
    let mut out = Vec::new();
    let entries: Vec<(usize, i64)> = l.iter().collect();
    for (i, &(u, lu)) in entries.iter().enumerate() {
        for &(v, lv) in &entries[i + 1..] {
            if lu == lv {
                out.push(Violation {
                    u,
                    v,
                    gap: 0,
                    reason: ViolationReason::DuplicateLabel,
                });
            }
        }
    }
    out
}

/// Product predicate: edge gaps have at most `k` prime factors with
/// multiplicity; the gap-greater-than-one rule follows `rule`.
pub fn verify_product_with(
    g: &Graph,
    l: &Labeling,
    k: u32,
    rule: GapRule,
) -> Result<VerificationReport, LabelingError> {
    l.check_domain(g)?;
    let mut violations = injectivity_violations(l);
    let pairs: Vec<(usize, usize)> = match rule {
        GapRule::AdjacentOnly => g.edges().collect(),
        GapRule::AllPairs => {
            let n = g.vertex_count();
            (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect()
        }
    };
    for (u, v) in pairs {
        let gap = edge_gap(l, u, v)?;
        if gap <= 1 {
            if gap == 1 {
                violations.push(Violation {
                    u,
                    v,
                    gap,
                    reason: ViolationReason::GapNotGreaterThanOne,
                });
            }
            continue; // gap 0 already reported as a duplicate
        }
        if g.has_edge(u, v) {
            let omega = ntheory::count_prime_factors(gap).expect("gap >= 2");
            if omega > k {
                violations.push(Violation {
                    u,
                    v,
                    gap,
                    reason: ViolationReason::TooManyPrimeFactors { omega, max: k },
                });
            }
        }
    }
    Ok(VerificationReport::from_violations(
        PredicateKind::Product,
        k,
        violations,
    ))
}

/// Product predicate under the default adjacent-pairs gap rule.
pub fn verify_product(g: &Graph, l: &Labeling, k: u32) -> Result<VerificationReport, LabelingError> {
    verify_product_with(g, l, k, GapRule::AdjacentOnly)
}

/// Power predicate: every edge gap is `p^j` with `p` prime and `j <= k`.
pub fn verify_power(g: &Graph, l: &Labeling, k: u32) -> Result<VerificationReport, LabelingError> {
    l.check_domain(g)?;
    let mut violations = injectivity_violations(l);
    for (u, v) in g.edges() {
        let gap = edge_gap(l, u, v)?;
        let ok = gap >= 2
            && ntheory::classify_prime_power(gap, k)
                .expect("gap >= 2")
                .is_some();
        if !ok {
            violations.push(Violation {
                u,
                v,
                gap,
                reason: ViolationReason::NotAPrimePower { max_exponent: k },
            });
        }
    }
    Ok(VerificationReport::from_violations(
        PredicateKind::Power,
        k,
        violations,
    ))
}

/// Strict predicate: every edge gap is exactly `p^k` for a prime `p`.
pub fn verify_strict(g: &Graph, l: &Labeling, k: u32) -> Result<VerificationReport, LabelingError> {
    l.check_domain(g)?;
    let mut violations = injectivity_violations(l);
    for (u, v) in g.edges() {
        let gap = edge_gap(l, u, v)?;
        let ok = gap >= 2
            && ntheory::strict_kth_power_base(gap, k)
                .expect("gap >= 2")
                .is_some();
        if !ok {
            violations.push(Violation {
                u,
                v,
                gap,
                reason: ViolationReason::NotAStrictKthPower { exponent: k },
            });
        }
    }
    Ok(VerificationReport::from_violations(
        PredicateKind::Strict,
        k,
        violations,
    ))
}

/// Dispatch by predicate kind.
pub fn verify(
    g: &Graph,
    l: &Labeling,
    kind: PredicateKind,
    k: u32,
    rule: GapRule,
) -> Result<VerificationReport, LabelingError> {
    match kind {
        PredicateKind::Product => verify_product_with(g, l, k, rule),
        PredicateKind::Power => verify_power(g, l, k),
        PredicateKind::Strict => verify_strict(g, l, k),
    }
}

/// Translates labels so `anchor` maps to 0, then negates everything if
/// needed so `sign_vertex` gets a positive label. Gaps are unchanged.
pub fn normalize(l: &Labeling, anchor: usize, sign_vertex: usize) -> Result<Labeling, LabelingError> {
    if anchor == sign_vertex {
        return Err(LabelingError::AnchorEqualsSign);
    }
    let base = l.get(anchor).ok_or(LabelingError::MissingVertex(anchor))?;
    let sign_label = l
        .get(sign_vertex)
        .ok_or(LabelingError::MissingVertex(sign_vertex))?;
    let shifted = sign_label.checked_sub(base).ok_or(LabelingError::Overflow)?;
    if shifted == 0 {
        return Err(LabelingError::SignVertexTied);
    }
    let flip = shifted < 0;
    let mut out = Labeling::new();
    for (v, label) in l.iter() {
        let mut shifted = label.checked_sub(base).ok_or(LabelingError::Overflow)?;
        if flip {
            shifted = shifted.checked_neg().ok_or(LabelingError::Overflow)?;
        }
        out.set(v, shifted);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn edge_gap_examples() {
        let l = Labeling::from_pairs([(0, 0), (1, 2)]);
        assert_eq!(edge_gap(&l, 0, 1).unwrap(), 2);
        let l = Labeling::from_pairs([(0, -5), (1, 5)]);
        assert_eq!(edge_gap(&l, 0, 1).unwrap(), 10);
        let l = Labeling::from_pairs([(0, 3485), (1, 3124)]);
        assert_eq!(edge_gap(&l, 0, 1).unwrap(), 361);
        assert!(edge_gap(&l, 0, 9).is_err());
    }

    #[test]
    fn product_accepts_k122_fixture() {
        let (g, _, l) = fixtures::k122_prime();
        assert!(verify_product(&g, &l, 1).unwrap().ok);
        assert!(verify_product_with(&g, &l, 1, GapRule::AllPairs).unwrap().ok);
    }

    #[test]
    fn product_rejects_unit_gap_on_edge() {
        // 0, 2, 3, 5 on the complete graph: the pair (2, 3) has gap 1.
        let g = Graph::complete(4).unwrap();
        let l = Labeling::from_values(&[0, 2, 3, 5]);
        let report = verify_product(&g, &l, 1).unwrap();
        assert!(!report.ok);
        assert!(report
            .violations
            .iter()
            .any(|v| v.gap == 1 && v.reason == ViolationReason::GapNotGreaterThanOne));
    }

    #[test]
    fn product_consecutive_evens_on_k6() {
        let g = Graph::complete(6).unwrap();
        let l = Labeling::from_values(&[0, 2, 4, 6, 8, 10]);
        assert!(verify_product(&g, &l, 3).unwrap().ok);
        assert!(verify_product_with(&g, &l, 3, GapRule::AllPairs).unwrap().ok);
        // 8 = 2^3 needs three factors.
        assert!(!verify_product(&g, &l, 2).unwrap().ok);
    }

    #[test]
    fn power_accepts_fixtures() {
        let (g, l) = fixtures::k6_power_squares();
        assert!(verify_power(&g, &l, 2).unwrap().ok);
        let (g, l) = fixtures::k4_prime();
        assert!(verify_power(&g, &l, 1).unwrap().ok);
    }

    #[test]
    fn power_rejects_non_prime_power_gap() {
        let g = Graph::complete(4).unwrap();
        let l = Labeling::from_values(&[0, 2, 4, 6]);
        let report = verify_power(&g, &l, 2).unwrap();
        assert!(!report.ok);
        assert!(report.violations.iter().any(|v| v.gap == 6));
    }

    #[test]
    fn strict_accepts_c7_fixture() {
        let (g, l) = fixtures::c7_strict_square();
        assert!(verify_strict(&g, &l, 2).unwrap().ok);
    }

    #[test]
    fn strict_rejects_fourth_power_for_k2() {
        let g = Graph::cycle(3).unwrap();
        let l = Labeling::from_values(&[0, 9, 25]);
        let report = verify_strict(&g, &l, 2).unwrap();
        assert!(!report.ok);
        // 16 = 2^4 is a prime power but not a square of a prime.
        assert!(report.violations.iter().any(|v| v.gap == 16));
    }

    #[test]
    fn strict_accepts_c4_squares() {
        let g = Graph::cycle(4).unwrap();
        let l = Labeling::from_values(&[0, 4, 13, 9]);
        assert!(verify_strict(&g, &l, 2).unwrap().ok);
    }

    #[test]
    fn duplicate_labels_reported() {
        let g = Graph::complete(3).unwrap();
        let l = Labeling::from_values(&[0, 5, 5]);
        let report = verify_power(&g, &l, 1).unwrap();
        assert!(!report.ok);
        assert!(report
            .violations
            .iter()
            .any(|v| v.reason == ViolationReason::DuplicateLabel));
    }

    #[test]
    fn domain_mismatch_is_an_error() {
        let g = Graph::complete(3).unwrap();
        let l = Labeling::from_values(&[0, 2]);
        assert!(matches!(
            verify_power(&g, &l, 1),
            Err(LabelingError::DomainMismatch { .. })
        ));
    }

    #[test]
    fn normalize_examples() {
        let l = Labeling::from_pairs([(0, 5), (1, 7)]);
        let n = normalize(&l, 0, 1).unwrap();
        assert_eq!(n.get(0), Some(0));
        assert_eq!(n.get(1), Some(2));

        let l = Labeling::from_pairs([(0, 0), (1, -3)]);
        let n = normalize(&l, 0, 1).unwrap();
        assert_eq!(n.get(1), Some(3));

        assert!(normalize(&l, 0, 0).is_err());
    }

    #[test]
    fn normalize_preserves_c7_verification() {
        let (g, l) = fixtures::c7_strict_square();
        let n = normalize(&l, 2, 0).unwrap();
        assert!(verify_strict(&g, &n, 2).unwrap().ok);
        for v in 0..7 {
            for u in 0..7 {
                if u != v {
                    assert_eq!(
                        edge_gap(&l, u, v).unwrap(),
                        edge_gap(&n, u, v).unwrap()
                    );
                }
            }
        }
    }

    proptest! {
        // Translation/negation invariance of all three verifiers over
        // random labelings of a small fixed graph.
        #[test]
        fn reports_invariant_under_normalize(
            raw in proptest::collection::vec(-500i64..500, 5),
            anchor in 0usize..5,
            sign in 0usize..5,
            k in 1u32..4,
        ) {
            prop_assume!(anchor != sign);
            let mut labels = raw;
            labels.sort_unstable();
            labels.dedup();
            prop_assume!(labels.len() == 5);
            let (g, _) = Graph::complete_multipartite(&[2, 2, 1]).unwrap();
            let l = Labeling::from_values(&labels);
            let n = normalize(&l, anchor, sign).unwrap();
            for kind in [PredicateKind::Product, PredicateKind::Power, PredicateKind::Strict] {
                let before = verify(&g, &l, kind, k, GapRule::AllPairs).unwrap();
                let after = verify(&g, &n, kind, k, GapRule::AllPairs).unwrap();
                prop_assert_eq!(before.ok, after.ok);
                prop_assert_eq!(before.violations.len(), after.violations.len());
            }
        }

        // Strict implies power implies the product factor-count condition
        // on edges.
        #[test]
        fn predicate_hierarchy_on_random_cycles(
            seed in proptest::collection::vec(1u64..40, 4..8),
            k in 1u32..3,
        ) {
            // Build a cycle labeling from prime gaps raised to the k-th
            // power, walking up then closing arbitrarily; only test the
            // implication, not validity.
            let n = seed.len() + 1;
            let g = Graph::cycle(n).unwrap();
            let mut vals = vec![0i64];
            for s in &seed {
                let p = crate::ntheory::primes_up_to(200)[(*s % 40) as usize];
                vals.push(vals.last().unwrap() + (p as i64).pow(k));
            }
            let l = Labeling::from_values(&vals);
            let strict = verify_strict(&g, &l, k).unwrap();
            if strict.ok {
                prop_assert!(verify_power(&g, &l, k).unwrap().ok);
                prop_assert!(verify_product(&g, &l, k).unwrap().ok);
            }
        }
    }
}
