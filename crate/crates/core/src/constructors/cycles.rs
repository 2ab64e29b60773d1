//! Strict kth-power labelings of cycles.
//!
//! Even cycles: walk up through prefix sums of prime kth powers and back
//! down through the suffix sums; the largest prime dominates the rest, so
//! the two runs cannot meet. Odd cycles: splice `2j` fresh vertices into a
//! labeled odd cycle using primes whose kth powers dominate everything
//! chosen so far. Existence for every exponent: coefficients of
//! `3^k*a + 5^k*b = 2^k` describe a cycle that climbs in steps of one
//! prime's kth power and descends in the other's, with a single `2^k` seam.

use crate::graph::Graph;
use crate::labeling::{verify_strict, Labeling};
use crate::ntheory::{is_prime, strict_kth_power_base};
use crate::search::{search_labeling, Predicate, SearchConfig, SearchStatus};

use super::{next_prime_power_above, normalize_for, pow_i64, ConstructError, CycleLabelerTable};

fn verified_strict(g: &Graph, l: &Labeling, k: u32, context: &str) -> Result<(), ConstructError> {
    if verify_strict(g, l, k)?.ok {
        Ok(())
    } else {
        Err(ConstructError::InternalVerification {
            context: context.to_string(),
        })
    }
}

/// Labels the cycle on `2 * half_n` vertices with the given primes: vertex
/// labels ascend through prefix sums of `p_i^k` and descend through suffix
/// sums. Requires the defining inequality: the first `half_n - 1` powers
/// must sum below the last power.
pub fn label_even_cycle_with_primes(
    half_n: usize,
    k: u32,
    primes: &[u64],
) -> Result<Labeling, ConstructError> {
    if half_n < 2 {
        return Err(ConstructError::TooSmall {
            needed: 4,
            got: 2 * half_n,
        });
    }
    if primes.len() != half_n {
        return Err(ConstructError::BadCoefficients(format!(
            "need {half_n} primes, got {}",
            primes.len()
        )));
    }
    for &p in primes {
        if !is_prime(p) {
            return Err(ConstructError::BadCoefficients(format!("{p} is not prime")));
        }
    }
    let powers: Vec<i64> = primes
        .iter()
        .map(|&p| pow_i64(p, k))
        .collect::<Result<_, _>>()?;
    let head: i64 = powers[..half_n - 1]
        .iter()
        .try_fold(0i64, |acc, &v| acc.checked_add(v))
        .ok_or(ConstructError::Overflow)?;
    if head >= powers[half_n - 1] {
        return Err(ConstructError::BadCoefficients(format!(
            "sum of the first {} powers ({head}) must stay below the last ({})",
            half_n - 1,
            powers[half_n - 1]
        )));
    }

    let mut values = Vec::with_capacity(2 * half_n);
    let mut acc = 0i64;
    for &pw in powers.iter().take(half_n) {
        values.push(acc);
        acc = acc.checked_add(pw).ok_or(ConstructError::Overflow)?;
    }
    // Suffix sums from each index to the end, starting with the full sum.
    let mut suffix = acc;
    for &pw in powers.iter().take(half_n) {
        values.push(suffix);
        suffix -= pw;
    }

    let l = Labeling::from_values(&values);
    let g = Graph::cycle(2 * half_n)?;
    verified_strict(&g, &l, k, "even cycle labeling")?;
    Ok(l)
}

/// Picks the primes itself: the first `half_n - 1` primes at or above
/// `min_prime`, then the smallest prime whose kth power dominates their
/// sum. `min_prime` makes the labels arbitrarily large.
pub fn label_even_cycle(half_n: usize, k: u32, min_prime: u64) -> Result<Labeling, ConstructError> {
    if half_n < 2 {
        return Err(ConstructError::TooSmall {
            needed: 4,
            got: 2 * half_n,
        });
    }
    let mut primes = Vec::with_capacity(half_n);
    let mut p = min_prime.saturating_sub(1);
    let mut sum = 0i64;
    for _ in 0..half_n - 1 {
        p = next_prime_power_above(p, 1, 0)?; // next prime above p
        primes.push(p);
        sum = sum
            .checked_add(pow_i64(p, k)?)
            .ok_or(ConstructError::Overflow)?;
    }
    let last = next_prime_power_above(p.max(min_prime.saturating_sub(1)), k, sum)?;
    primes.push(last);
    label_even_cycle_with_primes(half_n, k, &primes)
}

/// Extends a strict kth-power labeling of an odd cycle by `2j` vertices.
///
/// The base is renormalized so its first vertex is 0 and its second
/// positive; each splice prime `q_i` is the smallest prime exceeding every
/// base gap prime whose kth power also exceeds twice the base label mass
/// plus all previous splice powers, which keeps every new label distinct.
pub fn extend_odd_cycle(base: &Labeling, j: usize, k: u32) -> Result<Labeling, ConstructError> {
    let len = base.len();
    if len < 3 || len.is_multiple_of(2) {
        return Err(ConstructError::BadCoefficients(format!(
            "base must label an odd cycle, got {len} vertices"
        )));
    }
    if j == 0 {
        return Ok(base.clone());
    }
    let g = Graph::cycle(len)?;
    if !verify_strict(&g, base, k)?.ok {
        return Err(ConstructError::BaseNotStrict);
    }
    let base = normalize_for(base, 0, 1)?;

    let mut max_gap_prime = 0u64;
    for i in 0..len {
        let gap = crate::labeling::edge_gap(&base, i, (i + 1) % len)?;
        let p = strict_kth_power_base(gap, k)?.expect("strict gap");
        max_gap_prime = max_gap_prime.max(p);
    }

    let mass = base.abs_sum();
    let mut splice_powers = Vec::with_capacity(j);
    let mut chosen = 0i64;
    let mut prev = max_gap_prime;
    for _ in 0..j {
        let threshold = mass
            .checked_mul(2)
            .and_then(|m| m.checked_add(chosen))
            .ok_or(ConstructError::Overflow)?;
        let q = next_prime_power_above(prev, k, threshold)?;
        let qk = pow_i64(q, k)?;
        splice_powers.push(qk);
        chosen = chosen.checked_add(qk).ok_or(ConstructError::Overflow)?;
        prev = q;
    }
    let prefix: Vec<i64> = splice_powers
        .iter()
        .scan(0i64, |acc, &v| {
            *acc += v;
            Some(*acc)
        })
        .collect();
    let q_total = *prefix.last().unwrap();

    // Five segments around the larger cycle, anchored at 0.
    let n2 = len - 1; // 2n in the even-count sense: gaps 1..=2n on the base path
    let mut values = Vec::with_capacity(len + 2 * j);
    values.push(0);
    values.push(base.get(1).unwrap());
    for t in 1..=j {
        values.push(
            base.get(1)
                .unwrap()
                .checked_add(prefix[t - 1])
                .ok_or(ConstructError::Overflow)?,
        );
    }
    for s in 2..=n2 {
        values.push(
            base.get(s)
                .unwrap()
                .checked_add(q_total)
                .ok_or(ConstructError::Overflow)?,
        );
    }
    for t in 1..=j {
        let tail = q_total - if t == 1 { 0 } else { prefix[t - 2] };
        values.push(tail);
    }
    debug_assert_eq!(values.len(), len + 2 * j);

    let l = Labeling::from_values(&values);
    if !l.is_injective() {
        return Err(ConstructError::InternalVerification {
            context: "odd cycle extension produced duplicate labels".into(),
        });
    }
    let g2 = Graph::cycle(len + 2 * j)?;
    verified_strict(&g2, &l, k, "odd cycle extension")?;
    Ok(l)
}

/// A coefficient pair for the existence construction: the cycle ascends in
/// multiples of `ascending^k` (`b + 1` labels including 0) and descends in
/// multiples of `descending^k` (`-a` labels), joined by a single `2^k` gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BezoutCandidate {
    pub ascending: u64,
    pub descending: u64,
    pub a: i64,
    pub b: i64,
}

impl BezoutCandidate {
    pub fn cycle_length(&self) -> usize {
        (self.b - self.a + 1) as usize
    }
}

/// Builds the labeling for one coefficient pair, rejecting pairs whose two
/// label runs collide (the runs share a value exactly when `b` reaches
/// `descending^k` and `-a` reaches `ascending^k`; the collision value is
/// `(ascending * descending)^k`).
pub fn existence_candidate(k: u32, cand: &BezoutCandidate) -> Result<Labeling, ConstructError> {
    let asc = pow_i64(cand.ascending, k)?;
    let desc = pow_i64(cand.descending, k)?;
    let two_k = pow_i64(2, k)?;
    if !is_prime(cand.ascending) || !is_prime(cand.descending) {
        return Err(ConstructError::BadCoefficients(
            "run step roots must be prime".into(),
        ));
    }
    if cand.a >= 0 || cand.b <= 0 {
        return Err(ConstructError::BadCoefficients(
            "need a < 0 < b".into(),
        ));
    }
    if cand.a % 2 != 0 || cand.b % 2 != 0 {
        return Err(ConstructError::BadCoefficients("a and b must be even".into()));
    }
    let seam = desc
        .checked_mul(cand.a)
        .and_then(|x| asc.checked_mul(cand.b).and_then(|y| x.checked_add(y)))
        .ok_or(ConstructError::Overflow)?;
    if seam != two_k {
        return Err(ConstructError::BadCoefficients(format!(
            "{desc}*a + {asc}*b = {seam}, expected {two_k}"
        )));
    }
    if cand.b >= desc && -cand.a >= asc {
        let value = (asc as u64)
            .checked_mul(desc as u64)
            .ok_or(ConstructError::Overflow)?;
        return Err(ConstructError::LabelCollision { value });
    }

    let mut values = Vec::with_capacity(cand.cycle_length());
    for i in 0..=cand.b {
        values.push(i.checked_mul(asc).ok_or(ConstructError::Overflow)?);
    }
    for i in (1..=-cand.a).rev() {
        values.push(i.checked_mul(desc).ok_or(ConstructError::Overflow)?);
    }
    debug_assert_eq!(values.len(), cand.cycle_length());
    let l = Labeling::from_values(&values);
    if !l.is_injective() {
        return Err(ConstructError::InternalVerification {
            context: "existence candidate passed the collision check but repeats a label".into(),
        });
    }
    Ok(l)
}

/// Finds the smallest odd cycle labelable by the coefficient family, over
/// both role assignments of 3 and 5 and all shifted representatives, and
/// returns its verified labeling. Exactly one gap equals `2^k`.
pub fn existence_cycle(k: u32) -> Result<(usize, Labeling), ConstructError> {
    let mut best: Option<(usize, BezoutCandidate)> = None;
    for (ascending, descending) in [(5u64, 3u64), (3u64, 5u64)] {
        let asc = pow_i64(ascending, k)? as i128;
        let desc = pow_i64(descending, k)? as i128;
        let two_k = pow_i64(2, k)? as i128;
        // Particular solution of desc*a + asc*b = 2^k with both even:
        // scale a Bezout identity by 2^k (even for k >= 1).
        let (x, _y) = egcd(desc, asc);
        let a0 = x * two_k;
        let b0 = (two_k - desc * a0) / asc;
        debug_assert_eq!(desc * a0 + asc * b0, two_k);
        // Even-parity family: a = a0 + 2*asc*s, b = b0 - 2*desc*s.
        // Largest s keeping a < 0 (b > 0 then follows automatically).
        let step_a = 2 * asc;
        let s_max = if a0 < 0 {
            (-a0 - 1) / step_a
        } else {
            -(a0 / step_a) - 1
        };
        let mut s = s_max;
        loop {
            let a = a0 + step_a * s;
            let b = b0 - 2 * desc * s;
            debug_assert!(a < 0);
            if b <= 0 {
                s -= 1;
                continue;
            }
            let collides = b >= desc && -a >= asc;
            if !collides {
                let cand = BezoutCandidate {
                    ascending,
                    descending,
                    a: a as i64,
                    b: b as i64,
                };
                let n = cand.cycle_length();
                if best.as_ref().is_none_or(|&(bn, _)| n < bn) {
                    best = Some((n, cand));
                }
            } else if -a >= asc {
                // Both runs only grow from here on: every later shift
                // collides too.
                break;
            }
            s -= 1;
            if s < s_max - 64 {
                break; // defensive cap; the collision break fires first
            }
        }
    }
    let (n, cand) = best.ok_or(ConstructError::NoValidCoefficients { k })?;
    let l = existence_candidate(k, &cand)?;
    let g = Graph::cycle(n)?;
    verified_strict(&g, &l, k, "existence cycle")?;
    let two_k = pow_i64(2, k)? as u64;
    let seams = (0..n)
        .filter(|&i| crate::labeling::edge_gap(&l, i, (i + 1) % n).unwrap() == two_k)
        .count();
    if n % 2 == 0 || seams != 1 {
        return Err(ConstructError::InternalVerification {
            context: format!("existence cycle has {seams} seams on {n} vertices"),
        });
    }
    Ok((n, l))
}

fn egcd(a: i128, b: i128) -> (i128, i128) {
    // Returns (x, y) with a*x + b*y = gcd(a, b) = 1 for coprime inputs.
    if b == 0 {
        return (1, 0);
    }
    let (x, y) = egcd(b, a % b);
    (y, x - (a / b) * y)
}

/// Dispatcher: even lengths use the even-cycle formula; odd lengths at or
/// above the table's base extend from it; odd lengths below the base fall
/// back to bounded search (`None` means "not obtained within the
/// configured effort", never impossibility).
pub fn label_cycle_strict(
    n: usize,
    k: u32,
    table: &CycleLabelerTable,
    search: Option<&SearchConfig>,
) -> Result<Option<Labeling>, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooSmall { needed: 3, got: n });
    }
    if n.is_multiple_of(2) {
        return Ok(Some(label_even_cycle(n / 2, k, 2)?));
    }
    let base = table
        .base(k)
        .ok_or(ConstructError::TableMissingExponent { k })?;
    if n >= base.length {
        let j = (n - base.length) / 2;
        return Ok(Some(extend_odd_cycle(&base.labeling, j, k)?));
    }
    let default_cfg;
    let cfg = match search {
        Some(cfg) => cfg,
        None => {
            default_cfg = SearchConfig::new(10_000, Predicate::Strict { k });
            &default_cfg
        }
    };
    let mut cfg = cfg.clone();
    cfg.predicate = Predicate::Strict { k };
    let outcome = search_labeling(&Graph::cycle(n)?, &cfg);
    Ok(match outcome.status {
        SearchStatus::Found => outcome.certificate,
        _ => None,
    })
}
