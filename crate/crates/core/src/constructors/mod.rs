//! Constructive labelers. Each function implements a known construction
//! for its graph family and re-verifies the produced labeling before
//! returning it; a construction that fails its own verification is a hard
//! internal error, never a silently returned value.

mod cycles;
mod outerplanar;

pub use cycles::{
    existence_candidate, existence_cycle, extend_odd_cycle, label_cycle_strict, label_even_cycle,
    label_even_cycle_with_primes, BezoutCandidate,
};
pub use outerplanar::label_outerplanar;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Partition};
use crate::labeling::{
    self, normalize, verify_product_with, verify_strict, GapRule, Labeling, LabelingError,
};
use crate::ntheory::{self, ceil_log2, is_prime, NtError, PrimeAp};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("graph too small: need at least {needed} vertices, got {got}")]
    TooSmall { needed: usize, got: usize },
    #[error(transparent)]
    Ntheory(#[from] NtError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("the supplied parts are not a proper coloring of the graph")]
    NotAProperColoring,
    #[error("prime arithmetic progression of length {required_length} not found within budget {budget}")]
    ApBudgetExhausted { required_length: u32, budget: u64 },
    #[error("progression too short: need length {needed}, got {got}")]
    ApTooShort { needed: u32, got: u32 },
    #[error("seeded progression fails term-wise verification")]
    ApInvalid,
    #[error("no index assignment of the parts yields a verifiable labeling")]
    NoConsistentAssignment,
    #[error("ascending and descending label runs collide at {value}")]
    LabelCollision { value: u64 },
    #[error("no collision-free coefficient pair found for exponent {k}")]
    NoValidCoefficients { k: u32 },
    #[error("invalid coefficients: {0}")]
    BadCoefficients(String),
    #[error("base labeling does not pass strict verification")]
    BaseNotStrict,
    #[error("cycle length {n} is not constructible for exponent {k} (and search found nothing)")]
    CycleNotObtained { n: usize, k: u32 },
    #[error("no cycle base recorded for exponent {k}; build the table with a larger maximum")]
    TableMissingExponent { k: u32 },
    #[error("girth must be at least {needed}, found {found:?}")]
    GirthTooSmall { needed: usize, found: Option<usize> },
    #[error("label arithmetic overflowed 64 bits")]
    Overflow,
    #[error("constructed labeling failed verification ({context}); this is a bug")]
    InternalVerification { context: String },
}

/// Known base odd cycles for strict kth-power labelings: for each exponent,
/// the smallest odd cycle with a recorded labeling. Even cycles are always
/// constructible, and odd cycles extend upward from the base, so every
/// cycle of length at least the base length is labelable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleBase {
    pub length: usize,
    pub labeling: Labeling,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleLabelerTable {
    bases: BTreeMap<u32, CycleBase>,
}

impl CycleLabelerTable {
    /// Builds the table for exponents `1..=k_max`. Exponent 1 uses the
    /// 3-cycle 0, 2, 5; exponent 2 the 7-cycle square labeling; higher
    /// exponents take the odd cycle produced by [`existence_cycle`].
    pub fn with_max_exponent(k_max: u32) -> Result<Self, ConstructError> {
        let mut bases = BTreeMap::new();
        if k_max >= 1 {
            bases.insert(
                1,
                CycleBase {
                    length: 3,
                    labeling: Labeling::from_values(&[0, 2, 5]),
                },
            );
        }
        if k_max >= 2 {
            let (_, l) = crate::fixtures::c7_strict_square();
            bases.insert(2, CycleBase { length: 7, labeling: l });
        }
        for k in 3..=k_max {
            let (n, l) = existence_cycle(k)?;
            bases.insert(k, CycleBase { length: n, labeling: l });
        }
        for (&k, base) in &bases {
            let g = Graph::cycle(base.length)?;
            if !verify_strict(&g, &base.labeling, k)?.ok {
                return Err(ConstructError::InternalVerification {
                    context: format!("cycle base for exponent {k}"),
                });
            }
        }
        Ok(CycleLabelerTable { bases })
    }

    pub fn base(&self, k: u32) -> Option<&CycleBase> {
        self.bases.get(&k)
    }

    /// The upper bound in use for the least cycle length from which every
    /// longer cycle is labelable.
    pub fn ppc_upper(&self, k: u32) -> Option<usize> {
        self.base(k).map(|b| b.length)
    }

    pub fn max_exponent(&self) -> u32 {
        self.bases.keys().next_back().copied().unwrap_or(0)
    }
}

impl Default for CycleLabelerTable {
    fn default() -> Self {
        CycleLabelerTable::with_max_exponent(4).expect("default table")
    }
}

/// Labels the complete graph on `n >= 3` vertices: vertex `i` (1-based)
/// gets `2i` in the lower half and `2i + 1` in the upper half, so gaps
/// within a half are small and even while cross gaps are odd and below
/// `2n`. The result is a product labeling at `ceil(log2 n) - 1`.
///
/// Verified pair-by-pair up to 256 vertices; beyond that the structural
/// facts (no two labels consecutive, even gaps below `n`, odd gaps below
/// `2n`) are checked instead, which bound the factor counts directly.
pub fn label_complete(n: usize) -> Result<Labeling, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooSmall { needed: 3, got: n });
    }
    let half = n as f64 / 2.0;
    let values: Vec<i64> = (1..=n as i64)
        .map(|i| if i as f64 <= half { 2 * i } else { 2 * i + 1 })
        .collect();
    let l = Labeling::from_values(&values);
    let k = ceil_log2(n as u64) - 1;
    if n <= 256 {
        let g = Graph::complete(n)?;
        let report = verify_product_with(&g, &l, k, GapRule::AllPairs)?;
        if !report.ok {
            return Err(ConstructError::InternalVerification {
                context: format!("complete graph on {n} vertices"),
            });
        }
    } else {
        let ok = structural_complete_check(&values, n);
        if !ok {
            return Err(ConstructError::InternalVerification {
                context: format!("complete graph on {n} vertices (structural)"),
            });
        }
    }
    Ok(l)
}

fn structural_complete_check(values: &[i64], n: usize) -> bool {
    // Two ascending runs in steps of 2: evens, then odds. Within a run
    // every gap is even and below n; across the runs every gap is odd (so
    // never 1 apart wrongly: the closest cross pair differs by at least 3)
    // and below 2n. Checking the run shape and the extreme cross pairs
    // covers every pair.
    let split = values.iter().position(|&v| v % 2 == 1).unwrap_or(values.len());
    let (evens, odds) = values.split_at(split);
    let run_ok = |run: &[i64], parity: i64| {
        run.iter().all(|&v| v.rem_euclid(2) == parity)
            && run.windows(2).all(|w| w[1] - w[0] == 2)
            && run.last().is_none_or(|&hi| hi - run[0] < n as i64)
    };
    let cross_ok = match (evens.last(), odds.first(), evens.first(), odds.last()) {
        (Some(&emax), Some(&omin), Some(&emin), Some(&omax)) => {
            (omin - emax).abs() > 1 && omax - emin < 2 * n as i64
        }
        _ => true, // a single run: nothing to cross-check
    };
    run_ok(evens, 0) && run_ok(odds, 1) && cross_ok
}

/// The fixed prime-distance labeling of the complete 3-partite graph
/// K_{1,2,2}: 0 on the singleton, +-2 on one pair, +-5 on the other.
pub fn label_k122() -> (Graph, Partition, Labeling) {
    let (g, parts, l) = crate::fixtures::k122_prime();
    debug_assert!(verify_product_with(&g, &l, 1, GapRule::AllPairs)
        .map(|r| r.ok)
        .unwrap_or(false));
    (g, parts, l)
}

/// Labels K_{1,1,c} using the first `c` twin prime pairs: 0 and 2 on the
/// two singletons, `p_i + 2` on the third part. Every edge gap is then 2,
/// an upper twin, or a lower twin.
pub fn label_k11c(c: usize, sieve_budget: u64) -> Result<Labeling, ConstructError> {
    let twins = ntheory::twin_primes(c, sieve_budget)?;
    let mut values = vec![0i64, 2];
    values.extend(twins.iter().map(|t| t.lower as i64 + 2));
    let l = Labeling::from_values(&values);
    let (g, _) = Graph::complete_multipartite(&[1, 1, c])?;
    let report = verify_product_with(&g, &l, 1, GapRule::AllPairs)?;
    if !report.ok {
        return Err(ConstructError::InternalVerification {
            context: format!("twin-prime labeling of K_{{1,1,{c}}}"),
        });
    }
    Ok(l)
}

/// Labels a properly colored graph through a prime arithmetic progression:
/// the vertex with index `r` in the `x`th part gets `x*p + r*(K! * d)`,
/// making every edge gap `|x - y|` times a progression term. Parts are
/// reordered and indices permuted until every edge pairs same-signed part
/// and index differences; the progression must have length at least
/// `j*K! + 1` where `j` is the largest part size.
pub fn label_multipartite_with_ap(
    g: &Graph,
    parts: &Partition,
    ap: &PrimeAp,
) -> Result<Labeling, ConstructError> {
    if !parts.is_proper_coloring(g) {
        return Err(ConstructError::NotAProperColoring);
    }
    if !ap.verify() {
        return Err(ConstructError::ApInvalid);
    }
    let part_count = parts.part_count();
    let largest = parts.max_part_size();
    let k_factorial: u64 = (1..=part_count as u64).product();
    let needed_len: u64 = largest as u64 * k_factorial + 1;
    let needed: u32 = needed_len.try_into().map_err(|_| ConstructError::Overflow)?;
    if ap.length < needed {
        return Err(ConstructError::ApTooShort {
            needed,
            got: ap.length,
        });
    }

    let p = ap.first as i64;
    let block = (k_factorial as i64)
        .checked_mul(ap.step as i64)
        .ok_or(ConstructError::Overflow)?;
    let max_factors = ceil_log2(part_count as u64).max(1);

    let build = |order: &[usize], index: &BTreeMap<usize, usize>| -> Option<Labeling> {
        let mut l = Labeling::new();
        for (x0, &pi) in order.iter().enumerate() {
            for &v in &parts.parts()[pi] {
                let x = x0 as i64 + 1;
                let r = index[&v] as i64;
                let label = x.checked_mul(p)?.checked_add(r.checked_mul(block)?)?;
                l.set(v, label);
            }
        }
        Some(l)
    };

    // Sign consistency: for every edge, the part-position difference and
    // the index difference must not oppose; then every gap is
    // |x - y| * (p + a*d) with the progression term in range.
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best_fallback: Option<Labeling> = None;

    let orders = if part_count <= 7 {
        permutations(part_count)
    } else {
        vec![(0..part_count).collect()]
    };
    for order in &orders {
        let mut pos_of_part = vec![0usize; part_count];
        for (x0, &pi) in order.iter().enumerate() {
            pos_of_part[pi] = x0 + 1;
        }
        for index in index_assignments(parts) {
            let consistent = edges.iter().all(|&(u, v)| {
                let (xu, xv) = (
                    pos_of_part[part_of(parts, u)] as i64,
                    pos_of_part[part_of(parts, v)] as i64,
                );
                let (ru, rv) = (index[&u] as i64, index[&v] as i64);
                (xu - xv) * (ru - rv) >= 0
            });
            if !consistent {
                if best_fallback.is_none() {
                    if let Some(l) = build(order, &index) {
                        if verified(g, &l, max_factors) {
                            best_fallback = Some(l);
                        }
                    }
                }
                continue;
            }
            let l = build(order, &index).ok_or(ConstructError::Overflow)?;
            if verified(g, &l, max_factors) {
                return Ok(l);
            }
            return Err(ConstructError::InternalVerification {
                context: "sign-consistent multipartite labeling".into(),
            });
        }
    }
    best_fallback.ok_or(ConstructError::NoConsistentAssignment)
}

fn verified(g: &Graph, l: &Labeling, max_factors: u32) -> bool {
    l.is_injective()
        && labeling::verify_product(g, l, max_factors)
            .map(|r| r.ok)
            .unwrap_or(false)
}

fn part_of(parts: &Partition, v: usize) -> usize {
    parts
        .parts()
        .iter()
        .position(|p| p.contains(&v))
        .expect("vertex in some part")
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product::<usize>().max(1)
}

/// Ways of assigning indices `1..=|part|` within each part. Capped: past
/// the cap only the identity assignment is tried.
fn index_assignments(parts: &Partition) -> Vec<BTreeMap<usize, usize>> {
    const CAP: usize = 20_000;
    let total: usize = parts
        .parts()
        .iter()
        .map(|p| factorial(p.len()))
        .fold(1usize, |acc, f| acc.saturating_mul(f));
    if total > CAP {
        let identity = parts
            .parts()
            .iter()
            .flat_map(|p| p.iter().enumerate().map(|(i, &v)| (v, i + 1)))
            .collect();
        return vec![identity];
    }
    let mut assignments: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new()];
    for part in parts.parts() {
        let perms = permutations(part.len());
        let mut next = Vec::with_capacity(assignments.len() * perms.len());
        for base in &assignments {
            for perm in &perms {
                let mut a = base.clone();
                for (v, &r) in part.iter().zip(perm.iter()) {
                    a.insert(*v, r + 1);
                }
                next.push(a);
            }
        }
        assignments = next;
    }
    assignments
}

/// Searches a progression within `ap_budget` candidate pairs, then labels.
/// Failure names the progression length the coloring requires.
pub fn label_multipartite_via_ap(
    g: &Graph,
    parts: &Partition,
    ap_budget: u64,
) -> Result<Labeling, ConstructError> {
    if !parts.is_proper_coloring(g) {
        return Err(ConstructError::NotAProperColoring);
    }
    let k_factorial: u64 = (1..=parts.part_count() as u64).product();
    let needed_len = parts.max_part_size() as u64 * k_factorial + 1;
    let needed: u32 = needed_len.try_into().map_err(|_| ConstructError::Overflow)?;
    let ap = ntheory::find_prime_ap(needed, ap_budget).ok_or(
        ConstructError::ApBudgetExhausted {
            required_length: needed,
            budget: ap_budget,
        },
    )?;
    label_multipartite_with_ap(g, parts, &ap)
}

/// Smallest prime `p` with `p > floor` and `p^k > threshold`.
pub(crate) fn next_prime_power_above(
    floor: u64,
    k: u32,
    threshold: i64,
) -> Result<u64, ConstructError> {
    // Jump near the smallest value whose kth power can clear the
    // threshold; the loop below rechecks, so the estimate only needs to be
    // a lower bound minus rounding slack.
    fn pow_exceeds(r: u64, k: u32, threshold: i64) -> bool {
        match r.checked_pow(k) {
            Some(v) => i64::try_from(v).map(|vi| vi > threshold).unwrap_or(true),
            None => true,
        }
    }
    let mut p = floor.max(1) + 1;
    if threshold > 0 {
        let mut root = (threshold as f64).powf(1.0 / k as f64) as u64;
        while root > 0 && pow_exceeds(root, k, threshold) {
            root -= 1;
        }
        p = p.max(root + 1);
    }
    loop {
        if is_prime(p) {
            let pow = (p as i64).checked_pow(k).ok_or(ConstructError::Overflow)?;
            if pow > threshold {
                return Ok(p);
            }
        }
        p += 1;
    }
}

pub(crate) fn pow_i64(base: u64, k: u32) -> Result<i64, ConstructError> {
    (base as i64).checked_pow(k).ok_or(ConstructError::Overflow)
}

pub(crate) fn normalize_for(
    l: &Labeling,
    anchor: usize,
    sign: usize,
) -> Result<Labeling, ConstructError> {
    Ok(normalize(l, anchor, sign)?)
}
