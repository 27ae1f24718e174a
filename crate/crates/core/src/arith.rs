// SPDX-License-Identifier: Apache-2.0

//! Exact integer primitives: the Kronecker symbol, deterministic primality,
//! factorization, and the divisor machinery the counting formulas are built
//! from.
//!
//! Everything works on 64-bit inputs with 128-bit intermediates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Kronecker symbol `(a|n)`, defined for every pair of integers.
///
/// Conventions for the degenerate lower arguments: `(a|0)` is 1 when
/// `a = ±1` and 0 otherwise, `(a|-1)` is -1 for negative `a` and 1 otherwise,
/// and `(a|2)` is 0 for even `a`, 1 for `a ≡ ±1 (mod 8)`, -1 for `a ≡ ±3 (mod 8)`.
///
/// ```
/// use quadrep::arith::kronecker;
/// assert_eq!(kronecker(-4, 3), -1);
/// assert_eq!(kronecker(-4, 5), 1);
/// assert_eq!(kronecker(-8, 3), 1);
/// ```
pub fn kronecker(a: i64, n: i64) -> i32 {
    if n == 0 {
        return i32::from(a == 1 || a == -1);
    }
    let mut result = 1;
    if n < 0 && a < 0 {
        result = -1;
    }
    let mut m = n.unsigned_abs();

    let twos = m.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
        m >>= twos;
    }
    if m == 1 {
        return result;
    }
    // m is odd here, so m < 2^63
    let top = a.rem_euclid(m as i64) as u64;
    result * jacobi(top, m)
}

/// Jacobi symbol `(a|m)` for odd `m > 0`.
fn jacobi(mut a: u64, mut m: u64) -> i32 {
    debug_assert!(m % 2 == 1);
    let mut result = 1;
    a %= m;
    while a != 0 {
        let twos = a.trailing_zeros();
        a >>= twos;
        if twos % 2 == 1 && matches!(m % 8, 3 | 5) {
            result = -result;
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            result = -result;
        }
        a %= m;
    }
    if m == 1 {
        result
    } else {
        0
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_unchecked(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, modulus);
        }
        b = mul_mod(b, b, modulus);
        exp >>= 1;
    }
    acc
}

/// `base^exp mod modulus` without overflow.
pub fn mod_pow(base: u64, exp: u64, modulus: u64) -> Result<u64> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(pow_mod_unchecked(base, exp, modulus))
}

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test for the whole `u64` range.
///
/// Miller-Rabin with the first twelve primes as witnesses is exact below
/// 3.3 * 10^24, which covers every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for &w in &SMALL_PRIMES {
        let mut x = pow_mod_unchecked(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factorization as sorted `(prime, exponent)` pairs.
///
/// The empty list stands for 1. Construction through [`factorize`] or
/// [`Factorization::from_pairs`] guarantees strictly increasing primes that
/// all pass [`is_prime`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u64, u32)>", into = "Vec<(u64, u32)>")]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factorization of 1.
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds a factorization from explicit pairs, checking every invariant.
    pub fn from_pairs(pairs: Vec<(u64, u32)>) -> Result<Self> {
        for w in pairs.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidFactorization(
                    "primes must be strictly increasing",
                ));
            }
        }
        for &(p, e) in &pairs {
            if e == 0 {
                return Err(Error::InvalidFactorization("exponents must be positive"));
            }
            if !is_prime(p) {
                return Err(Error::InvalidFactorization("every base must be prime"));
            }
        }
        let f = Self { pairs };
        if f.checked_value().is_none() {
            return Err(Error::InvalidFactorization(
                "product does not fit in 64 bits",
            ));
        }
        Ok(f)
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The factored integer.
    pub fn value(&self) -> u64 {
        self.checked_value()
            .expect("factorization product fits in u64")
    }

    fn checked_value(&self) -> Option<u64> {
        self.pairs
            .iter()
            .try_fold(1u64, |acc, &(p, e)| acc.checked_mul(p.checked_pow(e)?))
    }

    /// The `p`-adic valuation of the factored integer.
    pub fn valuation(&self, p: u64) -> u32 {
        self.pairs
            .binary_search_by_key(&p, |&(q, _)| q)
            .map(|i| self.pairs[i].1)
            .unwrap_or(0)
    }

    /// Removes `p^k` from the factored integer. Panics if `p^k` does not divide it.
    pub fn divide_prime_power(&self, p: u64, k: u32) -> Self {
        let mut pairs = self.pairs.clone();
        if k == 0 {
            return Self { pairs };
        }
        let i = pairs
            .binary_search_by_key(&p, |&(q, _)| q)
            .expect("prime divides the factored integer");
        assert!(pairs[i].1 >= k, "p^k divides the factored integer");
        pairs[i].1 -= k;
        if pairs[i].1 == 0 {
            pairs.remove(i);
        }
        Self { pairs }
    }

    /// Restriction to the primes selected by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(u64, u32) -> bool) -> Self {
        Self {
            pairs: self
                .pairs
                .iter()
                .copied()
                .filter(|&(p, e)| keep(p, e))
                .collect(),
        }
    }

    /// All positive divisors, unsorted.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.pairs {
            let len = out.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    out.push(out[i] * pk);
                }
            }
        }
        out
    }
}

impl TryFrom<Vec<(u64, u32)>> for Factorization {
    type Error = Error;

    fn try_from(pairs: Vec<(u64, u32)>) -> Result<Self> {
        Self::from_pairs(pairs)
    }
}

impl From<Factorization> for Vec<(u64, u32)> {
    fn from(f: Factorization) -> Self {
        f.pairs
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

const TRIAL_BOUND: u64 = 1000;

/// Factors `n >= 1`.
///
/// Small primes are removed by trial division; the cofactor is split with
/// Brent's variant of Pollard rho. Every emitted prime is re-checked with
/// [`is_prime`] and the product is re-checked against `n`.
///
/// ```
/// use quadrep::arith::factorize;
/// let f = factorize(437805).unwrap();
/// assert_eq!(f.pairs(), &[(3, 4), (5, 1), (23, 1), (47, 1)]);
/// ```
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut primes: Vec<u64> = Vec::new();
    let mut m = n;
    let tz = m.trailing_zeros();
    primes.extend(std::iter::repeat_n(2, tz as usize));
    m >>= tz;
    let mut d = 3;
    while d < TRIAL_BOUND && d * d <= m {
        while m.is_multiple_of(d) {
            primes.push(d);
            m /= d;
        }
        d += 2;
    }
    if m > 1 {
        if m < TRIAL_BOUND * TRIAL_BOUND {
            primes.push(m);
        } else {
            split_into(m, &mut primes);
        }
    }
    primes.sort_unstable();

    let mut pairs: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match pairs.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => pairs.push((p, 1)),
        }
    }
    let f = Factorization { pairs };
    assert!(
        f.pairs.iter().all(|&(p, _)| is_prime(p)) && f.checked_value() == Some(n),
        "factorization of {n} failed verification"
    );
    Ok(f)
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    if let Some(r) = exact_square_root(n) {
        split_into(r, out);
        split_into(r, out);
        return;
    }
    let mut c = 1;
    loop {
        if let Some(d) = brent_rho(n, c) {
            split_into(d, out);
            split_into(n / d, out);
            return;
        }
        c += 1;
    }
}

fn exact_square_root(n: u64) -> Option<u64> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// One run of Brent's cycle search with `x -> x^2 + c`. Returns a proper factor
/// or `None` when this `c` degenerates.
fn brent_rho(n: u64, c: u64) -> Option<u64> {
    const BATCH: u64 = 128;
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
    let (mut x, mut ys) = (0u64, 0u64);
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = gcd(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

/// Number of positive divisors: the product of `exponent + 1`.
pub fn tau(f: &Factorization) -> u64 {
    f.pairs.iter().map(|&(_, e)| u64::from(e) + 1).product()
}

/// `Σ_{c | n} (D|c)` over the positive divisors of the factored `n`.
///
/// Evaluated multiplicatively as `∏_p Σ_{j=0..v_p} (D|p)^j`.
pub fn divisor_char_sum(f: &Factorization, d: i64) -> i64 {
    f.pairs
        .iter()
        .map(|&(p, e)| match kronecker(d, p as i64) {
            1 => i64::from(e) + 1,
            0 => 1,
            _ => i64::from(e % 2 == 0),
        })
        .product()
}
