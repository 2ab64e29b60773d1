//! Number-theoretic kernel: primality, prime-factor counting, prime-power
//! classification, twin primes, and prime arithmetic progressions.
//!
//! Everything here is deterministic and exact over the full 64-bit range.
//! Verifiers elsewhere in the crate rely on [`is_prime`] never accepting a
//! composite, so primality uses a fixed Miller-Rabin witness set that is
//! known to be correct for all inputs below 2^64.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NtError {
    #[error("argument must be at least 2, got {0}")]
    OutOfDomain(u64),
    #[error("requested count must be at least 1")]
    EmptyRequest,
    #[error("sieve budget {budget} exhausted: found {found} of {requested} twin prime pairs")]
    TwinBudgetExhausted {
        requested: usize,
        found: usize,
        budget: u64,
    },
    #[error("{base}^{exponent} does not fit in 64 bits")]
    Overflow { base: u64, exponent: u32 },
}

/// A prime power `base^exponent` with `exponent >= 1`, guaranteed to fit in
/// a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePower {
    pub base: u64,
    pub exponent: u32,
}

impl PrimePower {
    pub fn new(base: u64, exponent: u32) -> Result<Self, NtError> {
        if !is_prime(base) {
            return Err(NtError::OutOfDomain(base));
        }
        if exponent == 0 {
            return Err(NtError::EmptyRequest);
        }
        base.checked_pow(exponent)
            .ok_or(NtError::Overflow { base, exponent })?;
        Ok(PrimePower { base, exponent })
    }

    pub fn value(&self) -> u64 {
        self.base.pow(self.exponent)
    }
}

/// A pair of twin primes `(lower, lower + 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinPair {
    pub lower: u64,
    pub upper: u64,
}

/// An arithmetic progression of primes `first, first + step, ...` of the
/// given length, with `first > 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeAp {
    pub first: u64,
    pub step: u64,
    pub length: u32,
}

impl PrimeAp {
    pub fn terms(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.length as u64).map(move |i| self.first + i * self.step)
    }

    /// Re-checks every invariant: `first > 2`, positive step, every term
    /// prime, no overflow. Seeded progressions must pass this before use.
    pub fn verify(&self) -> bool {
        if self.first <= 2 || self.step == 0 || self.length == 0 {
            return false;
        }
        let span = (self.length as u64 - 1).checked_mul(self.step);
        match span.and_then(|s| self.first.checked_add(s)) {
            Some(_) => self.terms().all(is_prime),
            None => false,
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for all 64-bit inputs.
///
/// Trial division by a handful of small primes, then Miller-Rabin with the
/// witness set `{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}`, which is
/// deterministic below 3.3e24 and in particular for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    // n is odd, composite, and has no factor below 2^20 here.
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Full factorization of `n >= 2` into `(prime, exponent)` pairs in
/// increasing prime order.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 2, "factorize requires n >= 2");
    let mut out = Vec::new();
    let mut rem = n;
    let mut d = 2u64;
    while d <= 1 << 20 && d * d <= rem {
        if rem.is_multiple_of(d) {
            let mut e = 0;
            while rem.is_multiple_of(d) {
                rem /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    // Anything left is a product of primes above 2^20; split it by rho.
    let mut stack = vec![rem];
    let mut large = Vec::new();
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            large.push(m);
        } else {
            let f = pollard_rho(m);
            stack.push(f);
            stack.push(m / f);
        }
    }
    large.sort_unstable();
    for m in large {
        match out.last_mut() {
            Some((p, e)) if *p == m => *e += 1,
            _ => out.push((m, 1)),
        }
    }
    out
}

/// The number of prime factors of `n` counted with multiplicity (often
/// written Ω(n)).
pub fn count_prime_factors(n: u64) -> Result<u32, NtError> {
    if n < 2 {
        return Err(NtError::OutOfDomain(n));
    }
    Ok(factorize(n).iter().map(|&(_, e)| e).sum())
}

/// `⌈log2(n)⌉` for `n >= 1`.
pub fn ceil_log2(n: u64) -> u32 {
    assert!(n >= 1);
    if n.is_power_of_two() {
        n.ilog2()
    } else {
        n.ilog2() + 1
    }
}

/// If `n = p^j` for a prime `p` and `1 <= j <= max_exponent`, returns that
/// (unique) representation.
pub fn classify_prime_power(n: u64, max_exponent: u32) -> Result<Option<PrimePower>, NtError> {
    if n < 2 {
        return Err(NtError::OutOfDomain(n));
    }
    let factors = factorize(n);
    if factors.len() == 1 && factors[0].1 <= max_exponent {
        let (base, exponent) = factors[0];
        Ok(Some(PrimePower { base, exponent }))
    } else {
        Ok(None)
    }
}

/// If `n = p^k` exactly for a prime `p`, returns `p`. For `k = 1` this is
/// the primality test.
pub fn strict_kth_power_base(n: u64, k: u32) -> Result<Option<u64>, NtError> {
    if n < 2 {
        return Err(NtError::OutOfDomain(n));
    }
    assert!(k >= 1, "exponent must be positive");
    if k == 1 {
        return Ok(if is_prime(n) { Some(n) } else { None });
    }
    let root = integer_kth_root(n, k);
    for cand in root.saturating_sub(1)..=root + 1 {
        if cand >= 2 && cand.checked_pow(k) == Some(n) {
            return Ok(if is_prime(cand) { Some(cand) } else { None });
        }
    }
    Ok(None)
}

fn integer_kth_root(n: u64, k: u32) -> u64 {
    if k == 1 {
        return n;
    }
    if k >= 64 {
        return 1;
    }
    let mut r = (n as f64).powf(1.0 / k as f64).round() as u64;
    while r > 1 && r.checked_pow(k).is_none_or(|v| v > n) {
        r -= 1;
    }
    while (r + 1).checked_pow(k).is_some_and(|v| v <= n) {
        r += 1;
    }
    r
}

/// All primes `<= limit` by a plain sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for p in 2..=limit {
        if !composite[p] {
            primes.push(p as u64);
            let mut m = p * p;
            while m <= limit {
                composite[m] = true;
                m += p;
            }
        }
    }
    primes
}

/// The first `count` twin prime pairs whose members do not exceed `budget`,
/// in increasing order. Fails with [`NtError::TwinBudgetExhausted`] when the
/// sieve bound runs out before `count` pairs are found.
pub fn twin_primes(count: usize, budget: u64) -> Result<Vec<TwinPair>, NtError> {
    if count == 0 {
        return Err(NtError::EmptyRequest);
    }
    let primes = primes_up_to(budget);
    let mut pairs = Vec::with_capacity(count);
    for w in primes.windows(2) {
        if w[1] == w[0] + 2 {
            pairs.push(TwinPair {
                lower: w[0],
                upper: w[1],
            });
            if pairs.len() == count {
                return Ok(pairs);
            }
        }
    }
    Err(NtError::TwinBudgetExhausted {
        requested: count,
        found: pairs.len(),
        budget,
    })
}

/// Bounded search for a prime arithmetic progression of the given length
/// with `first > 2`.
///
/// For a progression of length L whose terms all exceed a prime q <= L, the
/// step must be divisible by q; the only escape is `first == q` itself. The
/// search therefore enumerates steps over multiples of the primorial of
/// primes <= L (paired with candidate first terms above L) and, when L is
/// itself prime, over multiples of the primorial with L removed (paired
/// with `first = L`). `budget` caps the number of `(first, step)` pairs
/// examined; `None` means the budget ran out.
pub fn find_prime_ap(length: u32, budget: u64) -> Option<PrimeAp> {
    const FIRST_POOL_LIMIT: u64 = 100_000;
    const VALUE_CAP: u64 = 1 << 62;

    if length == 0 {
        return None;
    }
    if length == 1 {
        return Some(PrimeAp {
            first: 3,
            step: 1,
            length: 1,
        });
    }

    let len = length as u64;
    let small: Vec<u64> = primes_up_to(len);
    let prim_full: u64 = small.iter().product();
    let len_is_prime = is_prime(len) && len > 2;
    let prim_excl = if len_is_prime { prim_full / len } else { 0 };
    let step_base = if len_is_prime { prim_excl } else { prim_full };

    let pool: Vec<u64> = primes_up_to(FIRST_POOL_LIMIT)
        .into_iter()
        .filter(|&p| p > len)
        .collect();

    let try_candidate = |first: u64, step: u64| -> Option<PrimeAp> {
        let last = first.checked_add((len - 1).checked_mul(step)?)?;
        if last > VALUE_CAP {
            return None;
        }
        let ap = PrimeAp {
            first,
            step,
            length,
        };
        if ap.terms().all(is_prime) {
            Some(ap)
        } else {
            None
        }
    };

    let mut tested: u64 = 0;
    let mut step = step_base;
    loop {
        if len_is_prime {
            if tested >= budget {
                return None;
            }
            tested += 1;
            if let Some(ap) = try_candidate(len, step) {
                debug_assert!(ap.verify());
                return Some(ap);
            }
        }
        if step % prim_full == 0 {
            for &first in &pool {
                if tested >= budget {
                    return None;
                }
                tested += 1;
                if let Some(ap) = try_candidate(first, step) {
                    debug_assert!(ap.verify());
                    return Some(ap);
                }
            }
        }
        if tested >= budget {
            return None;
        }
        step += step_base;
    }
}
