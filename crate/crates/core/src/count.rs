// SPDX-License-Identifier: Apache-2.0

//! Closed-form counts of `Y(n, a)` (elements of norm `n`) and `X(n, a)`
//! (integer solutions of `x² + a·y² = n`).
//!
//! `|Y(n, a)| = u · Σ_{c | n} (D|c)` for every Heegner `a`, where `u` is the
//! number of units. `|X(n, a)|` is dispatched on `a` and on the parity and
//! 3-adic shape of `n`; see [`Branch`] for the cases.
//!
//! The odd-`n` cases for `a ≥ 11` and the `gcd(n, 6) = 1` case for `a = 27`
//! are evaluated in integers as
//!
//! ```text
//! |X(n, a)| = 2 · ∏_{expressible split p} (v_p(n) + 1) · |T(v_q(n) for non-expressible q)|
//! ```
//!
//! and cross-checked against the equivalent fractional form
//! `(1/3)·[1 + 2·(τ(n_q)|3)/τ(n_q)]·|Y(n, a)|`.

use serde::{Deserialize, Serialize};

use crate::arith::{divisor_char_sum, factorize, kronecker, Factorization};
use crate::classify::{cubic_residue_two_unchecked, n_q_part, prime_class_unchecked, PrimeClass};
use crate::error::{Error, Result};
use crate::rings::{form_params, FormKind, FormParams};

/// Which closed form produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "a1")]
    A1,
    #[serde(rename = "a2")]
    A2,
    #[serde(rename = "a3-even")]
    A3Even,
    #[serde(rename = "a3-odd")]
    A3Odd,
    #[serde(rename = "a7-div4")]
    A7Div4,
    #[serde(rename = "a7-even-not-div4")]
    A7EvenNotDiv4,
    #[serde(rename = "a7-odd")]
    A7Odd,
    #[serde(rename = "heegner-even")]
    HeegnerEven,
    #[serde(rename = "heegner-odd")]
    HeegnerOdd,
    /// An inert prime divides `n` to an odd power, so nothing has norm `n`.
    #[serde(rename = "inert-odd-valuation")]
    InertOddValuation,
    #[serde(rename = "a27-div3-not-div9")]
    A27Div3NotDiv9,
    #[serde(rename = "a27-div9")]
    A27Div9,
    #[serde(rename = "a27-even")]
    A27Even,
    #[serde(rename = "a27-coprime6")]
    A27Coprime6,
}

impl Branch {
    pub const ALL: [Branch; 14] = [
        Branch::A1,
        Branch::A2,
        Branch::A3Even,
        Branch::A3Odd,
        Branch::A7Div4,
        Branch::A7EvenNotDiv4,
        Branch::A7Odd,
        Branch::HeegnerEven,
        Branch::HeegnerOdd,
        Branch::InertOddValuation,
        Branch::A27Div3NotDiv9,
        Branch::A27Div9,
        Branch::A27Even,
        Branch::A27Coprime6,
    ];

    /// The stable token used in CSV and JSON output.
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::A1 => "a1",
            Branch::A2 => "a2",
            Branch::A3Even => "a3-even",
            Branch::A3Odd => "a3-odd",
            Branch::A7Div4 => "a7-div4",
            Branch::A7EvenNotDiv4 => "a7-even-not-div4",
            Branch::A7Odd => "a7-odd",
            Branch::HeegnerEven => "heegner-even",
            Branch::HeegnerOdd => "heegner-odd",
            Branch::InertOddValuation => "inert-odd-valuation",
            Branch::A27Div3NotDiv9 => "a27-div3-not-div9",
            Branch::A27Div9 => "a27-div9",
            Branch::A27Even => "a27-even",
            Branch::A27Coprime6 => "a27-coprime6",
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One `(n, a)` result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub n: u64,
    pub a: u64,
    pub x_count: u64,
    /// `|Y(n, a)|`; absent for `a = 27`.
    pub y_count: Option<u64>,
    pub branch: Branch,
    pub n_q: Option<u64>,
    pub tau_nq: Option<u64>,
    pub factorization: Factorization,
}

fn y_count_of(f: &Factorization, params: &FormParams) -> u64 {
    let sum = divisor_char_sum(f, params.discriminant);
    debug_assert!(sum >= 0);
    params.unit_count * sum as u64
}

/// `|Y(n, a)|` for a Heegner coefficient.
///
/// ```
/// use quadrep::count::y_count;
/// assert_eq!(y_count(437805, 11).unwrap(), 80);
/// ```
pub fn y_count(n: u64, a: u64) -> Result<u64> {
    let params = form_params(a)?;
    if !params.is_heegner() {
        return Err(Error::UnsupportedCoefficient(a));
    }
    Ok(y_count_of(&factorize(n)?, &params))
}

/// `(V|3)` for a positive `V`, which may not fit in an `i64`.
fn symbol_mod3(v: u128) -> i64 {
    i64::from(kronecker((v % 3) as i64, 3))
}

/// `|T(v₁, …, v_m)|` in closed form: `(V + 2·(V|3)) / 3` with `V = ∏ (vⱼ + 1)`.
///
/// ```
/// use quadrep::count::t_cardinality;
/// assert_eq!(t_cardinality(&[4, 1, 1]), 6);
/// ```
pub fn t_cardinality(vs: &[u32]) -> u64 {
    let v: u128 = vs.iter().map(|&v| u128::from(v) + 1).product();
    let numerator = v as i128 + 2 * symbol_mod3(v) as i128;
    debug_assert_eq!(numerator % 3, 0);
    (numerator / 3) as u64
}

/// Upper bound on the number of tuples [`t_bruteforce`] will visit.
pub const T_BRUTEFORCE_GUARD: u128 = 10_000_000;

/// `|T(v₁, …, v_m)|` by enumerating every `(b₁, …, b_m)` with `0 ≤ bⱼ ≤ vⱼ`
/// and counting those with `Σ (vⱼ + bⱼ) ≡ 0 (mod 3)`.
pub fn t_bruteforce(vs: &[u32]) -> Result<u64> {
    let product: u128 = vs.iter().map(|&v| u128::from(v) + 1).product();
    if product > T_BRUTEFORCE_GUARD {
        return Err(Error::GuardExceeded {
            product,
            limit: T_BRUTEFORCE_GUARD,
        });
    }
    let base: u64 = vs.iter().map(|&v| u64::from(v)).sum();
    let mut bs = vec![0u32; vs.len()];
    let mut count = 0;
    loop {
        let total = base + bs.iter().map(|&b| u64::from(b)).sum::<u64>();
        if total.is_multiple_of(3) {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == bs.len() {
                return Ok(count);
            }
            if bs[i] < vs[i] {
                bs[i] += 1;
                break;
            }
            bs[i] = 0;
            i += 1;
        }
    }
}

/// `|X(n, a)|` with the branch that produced it.
///
/// ```
/// use quadrep::count::{x_count, Branch};
/// let r = x_count(437805, 11).unwrap();
/// assert_eq!((r.x_count, r.y_count, r.n_q, r.tau_nq), (24, Some(80), Some(9315), Some(20)));
/// assert_eq!(r.branch, Branch::HeegnerOdd);
/// ```
pub fn x_count(n: u64, a: u64) -> Result<CountReport> {
    let params = form_params(a)?;
    let f = factorize(n)?;
    Ok(x_count_factored(n, f, &params))
}

struct Count {
    x: u64,
    branch: Branch,
    nq: Option<(u64, u64)>,
}

impl Count {
    fn plain(x: u64, branch: Branch) -> Self {
        Self {
            x,
            branch,
            nq: None,
        }
    }
}

fn x_count_factored(n: u64, f: Factorization, params: &FormParams) -> CountReport {
    let count = match params.kind {
        FormKind::Heegner => heegner_count(n, &f, params),
        FormKind::TwentySeven => twenty_seven_count(n, &f),
    };
    CountReport {
        n,
        a: params.a,
        x_count: count.x,
        y_count: params.is_heegner().then(|| y_count_of(&f, params)),
        branch: count.branch,
        n_q: count.nq.map(|(q, _)| q),
        tau_nq: count.nq.map(|(_, t)| t),
        factorization: f,
    }
}

fn heegner_count(n: u64, f: &Factorization, params: &FormParams) -> Count {
    let sum = |f: &Factorization, d: i64| divisor_char_sum(f, d) as u64;
    match params.a {
        1 => Count::plain(4 * sum(f, -4), Branch::A1),
        2 => {
            let x = 2 * sum(f, -8);
            debug_assert_eq!(x, 2 * sum(f, -2));
            Count::plain(x, Branch::A2)
        }
        3 if n.is_multiple_of(2) => Count::plain(6 * sum(f, -3), Branch::A3Even),
        3 => Count::plain(2 * sum(f, -3), Branch::A3Odd),
        7 => match f.valuation(2) {
            0 => Count::plain(2 * sum(f, -7), Branch::A7Odd),
            1 => Count::plain(0, Branch::A7EvenNotDiv4),
            _ => Count::plain(2 * sum(&f.divide_prime_power(2, 2), -7), Branch::A7Div4),
        },
        _ if n.is_multiple_of(2) => Count::plain(y_count_of(f, params), Branch::HeegnerEven),
        a => odd_count_with_obstruction(f, a, y_count_of(f, params), Branch::HeegnerOdd, |p| {
            prime_class_unchecked(p, a)
        }),
    }
}

fn twenty_seven_count(n: u64, f: &Factorization) -> Count {
    let three = form_params(3).expect("3 is supported");
    match f.valuation(3) {
        1 => Count::plain(0, Branch::A27Div3NotDiv9),
        v if v >= 2 => {
            let reduced = f.divide_prime_power(3, 2);
            let inner = heegner_count(n / 9, &reduced, &three);
            Count::plain(inner.x, Branch::A27Div9)
        }
        _ if n.is_multiple_of(2) => {
            let inner = heegner_count(n, f, &three);
            debug_assert_eq!(inner.x % 3, 0);
            Count::plain(inner.x / 3, Branch::A27Even)
        }
        _ => {
            let x3 = heegner_count(n, f, &three).x;
            odd_count_with_obstruction(f, 27, x3, Branch::A27Coprime6, |p| {
                if p % 3 == 2 {
                    PrimeClass::Inert
                } else if cubic_residue_two_unchecked(p) {
                    PrimeClass::ExpressibleSplit
                } else {
                    PrimeClass::NonexpressibleSplit
                }
            })
        }
    }
}

/// Shared evaluation for odd `n` and `a ≥ 11`, and for `gcd(n, 6) = 1` and
/// `a = 27`. `reference` is `|Y(n, a)|` resp. `|X(n, 3)|`, which the
/// fractional form is checked against.
fn odd_count_with_obstruction(
    f: &Factorization,
    a: u64,
    reference: u64,
    branch: Branch,
    class_of: impl Fn(u64) -> PrimeClass,
) -> Count {
    let part = n_q_part(f, a).expect("supported coefficient");
    let tau_nq = part.tau_nq;
    let nq = Some((part.n_q, tau_nq));

    let mut expressible = 1u64;
    let mut obstructed = Vec::new();
    for &(p, v) in f.pairs() {
        match class_of(p) {
            PrimeClass::Inert if v % 2 == 1 => {
                return Count {
                    x: 0,
                    branch: Branch::InertOddValuation,
                    nq,
                };
            }
            PrimeClass::Inert | PrimeClass::Ramified => {}
            PrimeClass::ExpressibleSplit => expressible *= u64::from(v) + 1,
            PrimeClass::NonexpressibleSplit => obstructed.push(v),
        }
    }
    let x = 2 * expressible * t_cardinality(&obstructed);

    let lhs = 3 * u128::from(tau_nq) * u128::from(x);
    let rhs = (i128::from(tau_nq) + 2 * symbol_mod3(u128::from(tau_nq)) as i128) as u128
        * u128::from(reference);
    assert_eq!(lhs, rhs, "fractional and combinatorial forms disagree");
    Count { x, branch, nq }
}

/// `|X(n, a)|` evaluated through the fractional correction factor, as the
/// exact rational `[τ(n_q) + 2·(τ(n_q)|3)] · reference / (3·τ(n_q))`.
///
/// Returns `None` when the quotient is not an integer.
pub fn fractional_form(tau_nq: u64, reference: u64) -> Option<u64> {
    let num =
        (i128::from(tau_nq) + 2 * symbol_mod3(u128::from(tau_nq)) as i128) * i128::from(reference);
    let den = 3 * i128::from(tau_nq);
    (num % den == 0).then(|| (num / den) as u64)
}

impl CountReport {
    /// Checks the report's branch against `n` and `a` alone.
    pub fn branch_is_consistent(&self) -> bool {
        let n = self.n;
        match self.branch {
            Branch::A1 => self.a == 1,
            Branch::A2 => self.a == 2,
            Branch::A3Even => self.a == 3 && n.is_multiple_of(2),
            Branch::A3Odd => self.a == 3 && n % 2 == 1,
            Branch::A7Div4 => self.a == 7 && n.is_multiple_of(4),
            Branch::A7EvenNotDiv4 => self.a == 7 && n % 4 == 2,
            Branch::A7Odd => self.a == 7 && n % 2 == 1,
            Branch::HeegnerEven => self.a >= 11 && self.a != 27 && n.is_multiple_of(2),
            Branch::HeegnerOdd => self.a >= 11 && self.a != 27 && n % 2 == 1,
            Branch::InertOddValuation => {
                self.a >= 11 && n % 2 == 1 && (self.a != 27 || !n.is_multiple_of(3))
            }
            Branch::A27Div3NotDiv9 => self.a == 27 && n.is_multiple_of(3) && !n.is_multiple_of(9),
            Branch::A27Div9 => self.a == 27 && n.is_multiple_of(9),
            Branch::A27Even => self.a == 27 && !n.is_multiple_of(3) && n.is_multiple_of(2),
            Branch::A27Coprime6 => self.a == 27 && n % 2 == 1 && !n.is_multiple_of(3),
        }
    }
}
