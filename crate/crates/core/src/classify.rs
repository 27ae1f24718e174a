// SPDX-License-Identifier: Apache-2.0

//! Classification of rational primes relative to a fixed coefficient `a`.
//!
//! A prime `p` splits, ramifies or stays inert in the ring of integers
//! according to `(D|p) = 1, 0, -1`. Split primes are further separated by
//! whether `p = x² + a·y²` has an integer solution; for `a ≥ 11` (and for 27)
//! this is strictly stronger than splitting, and the non-expressible split
//! primes are exactly the ones that make the odd-`n` counts differ from the
//! norm counts.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, kronecker, mod_pow, tau, Factorization};
use crate::error::{Error, Result};
use crate::rings::{form_params, FormKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PrimeClass {
    ExpressibleSplit,
    NonexpressibleSplit,
    Inert,
    Ramified,
}

impl PrimeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            PrimeClass::ExpressibleSplit => "ExpressibleSplit",
            PrimeClass::NonexpressibleSplit => "NonexpressibleSplit",
            PrimeClass::Inert => "Inert",
            PrimeClass::Ramified => "Ramified",
        }
    }
}

impl std::fmt::Display for PrimeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

fn has_representation(p: u64, a: u64) -> bool {
    let (p, a) = (p as u128, a as u128);
    (0..=(p / a).isqrt()).any(|y| {
        let r = p - a * y * y;
        let x = r.isqrt();
        x * x == r
    })
}

/// Whether the prime `p` can be written as `x² + a·y²`, decided by searching
/// `y` over `0..=√(p/a)`.
pub fn is_expressible_prime(p: u64, a: u64) -> Result<bool> {
    form_params(a)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(has_representation(p, a))
}

type ClassCache = RwLock<HashMap<(u64, u64), PrimeClass>>;

fn cache() -> &'static ClassCache {
    static CACHE: OnceLock<ClassCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Caller guarantees `p` is prime and `a` is supported.
pub(crate) fn prime_class_unchecked(p: u64, a: u64) -> PrimeClass {
    if let Some(&c) = cache().read().unwrap().get(&(p, a)) {
        return c;
    }
    let params = form_params(a).expect("supported coefficient");
    let class = match kronecker(params.discriminant, p as i64) {
        0 => PrimeClass::Ramified,
        -1 => PrimeClass::Inert,
        _ if has_representation(p, a) => PrimeClass::ExpressibleSplit,
        _ => PrimeClass::NonexpressibleSplit,
    };
    cache().write().unwrap().insert((p, a), class);
    class
}

/// Split/ramified/inert class of `p`, with split primes refined by
/// expressibility as `x² + a·y²`.
///
/// For `a = 27` the splitting behaviour is that of the Eisenstein integers
/// (`D = -3`) and expressibility refers to `x² + 27y²`.
///
/// ```
/// use quadrep::classify::{prime_class, PrimeClass};
/// assert_eq!(prime_class(5, 11).unwrap(), PrimeClass::NonexpressibleSplit);
/// assert_eq!(prime_class(47, 11).unwrap(), PrimeClass::ExpressibleSplit);
/// assert_eq!(prime_class(2, 11).unwrap(), PrimeClass::Inert);
/// ```
pub fn prime_class(p: u64, a: u64) -> Result<PrimeClass> {
    form_params(a)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(prime_class_unchecked(p, a))
}

pub(crate) fn cubic_residue_two_unchecked(q: u64) -> bool {
    mod_pow(2, (q - 1) / 3, q).expect("q is positive") == 1
}

/// Whether 2 is a cubic residue modulo the prime `q ≡ 1 (mod 3)`, by
/// Euler's criterion `2^((q-1)/3) ≡ 1 (mod q)`.
///
/// For such `q` this holds exactly when `q = x² + 27y²` is solvable.
pub fn is_cubic_residue_two(q: u64) -> Result<bool> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q % 3 != 1 {
        return Err(Error::NotOneModThree(q));
    }
    Ok(cubic_residue_two_unchecked(q))
}

/// The part of `n` built from the primes that obstruct `X(n, a) = Y(n, a)`,
/// together with its divisor count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NqPart {
    pub n_q: u64,
    pub tau_nq: u64,
}

/// Restriction of `f` to the primes counted in `n_q`.
///
/// Heegner `a`: the non-expressible split primes. `a = 27`: the primes
/// `q ≡ 1 (mod 3)` for which 2 is not a cubic residue.
pub fn n_q_factorization(f: &Factorization, a: u64) -> Result<Factorization> {
    let params = form_params(a)?;
    Ok(match params.kind {
        FormKind::Heegner => {
            f.filter(|p, _| prime_class_unchecked(p, a) == PrimeClass::NonexpressibleSplit)
        }
        FormKind::TwentySeven => f.filter(|q, _| q % 3 == 1 && !cubic_residue_two_unchecked(q)),
    })
}

/// `n_q` and `τ(n_q)` for the factored `n`.
///
/// ```
/// use quadrep::{arith::factorize, classify::n_q_part};
/// let part = n_q_part(&factorize(437805).unwrap(), 11).unwrap();
/// assert_eq!((part.n_q, part.tau_nq), (9315, 20));
/// ```
pub fn n_q_part(f: &Factorization, a: u64) -> Result<NqPart> {
    let sub = n_q_factorization(f, a)?;
    Ok(NqPart {
        n_q: sub.value(),
        tau_nq: tau(&sub),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize;
    use crate::rings::{enumerate_x, HEEGNER};

    #[test]
    fn expressibility_named_cases() {
        assert_eq!(is_expressible_prime(47, 11), Ok(true));
        assert_eq!(is_expressible_prime(5, 11), Ok(false));
        assert_eq!(is_expressible_prime(3, 11), Ok(false));
        assert_eq!(is_expressible_prime(11, 11), Ok(true));
        assert_eq!(is_expressible_prime(31, 27), Ok(true));
        assert_eq!(is_expressible_prime(7, 27), Ok(false));
        assert_eq!(is_expressible_prime(9, 11), Err(Error::NotPrime(9)));
        assert_eq!(
            is_expressible_prime(5, 5),
            Err(Error::UnsupportedCoefficient(5))
        );
    }

    #[test]
    fn class_named_cases() {
        assert_eq!(prime_class(5, 11), Ok(PrimeClass::NonexpressibleSplit));
        assert_eq!(prime_class(11, 11), Ok(PrimeClass::Ramified));
        assert_eq!(prime_class(2, 11), Ok(PrimeClass::Inert));
        assert_eq!(prime_class(2, 7), Ok(PrimeClass::NonexpressibleSplit));
        assert_eq!(prime_class(2, 1), Ok(PrimeClass::Ramified));
        assert_eq!(prime_class(3, 27), Ok(PrimeClass::Ramified));
        assert_eq!(prime_class(31, 27), Ok(PrimeClass::ExpressibleSplit));
        assert_eq!(prime_class(7, 27), Ok(PrimeClass::NonexpressibleSplit));
        assert_eq!(prime_class(1, 11), Err(Error::NotPrime(1)));
    }

    #[test]
    fn cubic_residue_named_cases() {
        assert_eq!(is_cubic_residue_two(31), Ok(true));
        assert_eq!(is_cubic_residue_two(7), Ok(false));
        assert_eq!(is_cubic_residue_two(13), Ok(false));
        assert_eq!(is_cubic_residue_two(5), Err(Error::NotOneModThree(5)));
        assert_eq!(is_cubic_residue_two(3), Err(Error::NotOneModThree(3)));
        assert_eq!(is_cubic_residue_two(49), Err(Error::NotPrime(49)));
    }

    #[test]
    fn cubic_residue_matches_brute_force_cubes() {
        for q in (7..3000u64).filter(|&q| q % 3 == 1 && is_prime(q)) {
            let is_cube = (1..q).any(|x| x * x % q * x % q == 2);
            assert_eq!(is_cubic_residue_two(q).unwrap(), is_cube, "q={q}");
        }
    }

    #[test]
    fn cubic_residue_iff_twenty_seven_form() {
        for p in (2..10_000u64).filter(|&p| p % 3 == 1 && is_prime(p)) {
            assert_eq!(
                is_cubic_residue_two(p).unwrap(),
                is_expressible_prime(p, 27).unwrap(),
                "p={p}"
            );
        }
    }

    #[test]
    fn class_agrees_with_enumeration() {
        for a in [11, 19, 43, 67, 163] {
            let d = form_params(a).unwrap().discriminant;
            for p in (2..10_000u64).filter(|&p| is_prime(p)) {
                let class = prime_class(p, a).unwrap();
                let reps = enumerate_x(p, a).unwrap();
                match class {
                    PrimeClass::ExpressibleSplit => {
                        assert!(kronecker(d, p as i64) >= 0);
                        assert!(!reps.is_empty());
                    }
                    PrimeClass::Ramified => assert!(!reps.is_empty()),
                    PrimeClass::Inert | PrimeClass::NonexpressibleSplit => {
                        assert!(reps.is_empty(), "p={p} a={a}")
                    }
                }
            }
        }
    }

    #[test]
    fn split_primes_of_small_coefficients() {
        // every split prime is expressible when the form is alone in its class
        for a in [1, 2, 3] {
            for p in (2..5000u64).filter(|&p| is_prime(p)) {
                assert_ne!(prime_class(p, a).unwrap(), PrimeClass::NonexpressibleSplit);
            }
        }
    }

    #[test]
    fn n_q_named_cases() {
        let part = n_q_part(&factorize(437805).unwrap(), 11).unwrap();
        assert_eq!(
            part,
            NqPart {
                n_q: 9315,
                tau_nq: 20
            }
        );
        for a in HEEGNER.iter().copied().chain([27]) {
            assert_eq!(
                n_q_part(&Factorization::one(), a).unwrap(),
                NqPart { n_q: 1, tau_nq: 1 }
            );
        }
        assert_eq!(
            n_q_part(&factorize(31).unwrap(), 27).unwrap(),
            NqPart { n_q: 1, tau_nq: 1 }
        );
        assert_eq!(
            n_q_part(&factorize(7 * 7 * 13 * 31).unwrap(), 27).unwrap(),
            NqPart {
                n_q: 637,
                tau_nq: 6
            }
        );
    }

    #[test]
    fn n_q_divides_n() {
        for a in [11, 19, 27, 43, 67, 163] {
            for n in 1..3000u64 {
                let f = factorize(n).unwrap();
                let part = n_q_part(&f, a).unwrap();
                assert_eq!(n % part.n_q, 0);
                assert_eq!(part.tau_nq, tau(&factorize(part.n_q).unwrap()));
            }
        }
    }
}
