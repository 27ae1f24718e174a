// SPDX-License-Identifier: Apache-2.0

//! Form parameters, ring elements with their norm, and the exhaustive
//! enumeration oracles for `X(n, a)` and `Y(n, a)`.
//!
//! For `a ≡ 3 (mod 4)` the ring of integers is `Z[λ]` with
//! `λ = (-1 + √-a) / 2`. Elements are always stored in the integral basis
//! `(1, λ)`, so every coordinate is an integer and set membership is exact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Supported coefficients in ascending order.
pub const SUPPORTED: [u64; 10] = [1, 2, 3, 7, 11, 19, 27, 43, 67, 163];

/// The nine Heegner numbers.
pub const HEEGNER: [u64; 9] = [1, 2, 3, 7, 11, 19, 43, 67, 163];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// `(1, √-a)`, used when `a ≡ 1, 2 (mod 4)`.
    IntegerBasis,
    /// `(1, λ)` with `λ = (-1 + √-a) / 2`, used when `a ≡ 3 (mod 4)`.
    HalfIntegerBasis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormKind {
    Heegner,
    TwentySeven,
}

/// Per-coefficient constants.
///
/// For `a = 27` the discriminant, unit count and basis are those of the
/// Eisenstein integers `Z[λ₃]`, since every formula for 27 is evaluated
/// through the `a = 3` ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FormParams {
    pub a: u64,
    pub discriminant: i64,
    pub unit_count: u64,
    pub basis: Basis,
    pub kind: FormKind,
}

impl FormParams {
    /// The `a` whose maximal order the ring elements live in (3 for `a = 27`).
    pub fn ring_coefficient(&self) -> u64 {
        match self.kind {
            FormKind::Heegner => self.a,
            FormKind::TwentySeven => 3,
        }
    }

    pub fn is_heegner(&self) -> bool {
        self.kind == FormKind::Heegner
    }

    fn heegner(a: u64) -> Self {
        let (discriminant, basis) = if a % 4 == 3 {
            (-(a as i64), Basis::HalfIntegerBasis)
        } else {
            (-4 * a as i64, Basis::IntegerBasis)
        };
        let unit_count = match a {
            1 => 4,
            3 => 6,
            _ => 2,
        };
        Self {
            a,
            discriminant,
            unit_count,
            basis,
            kind: FormKind::Heegner,
        }
    }
}

/// Looks up the parameters for a supported coefficient.
///
/// ```
/// use quadrep::rings::{form_params, Basis};
/// let p = form_params(3).unwrap();
/// assert_eq!((p.discriminant, p.unit_count, p.basis), (-3, 6, Basis::HalfIntegerBasis));
/// assert!(form_params(5).is_err());
/// ```
pub fn form_params(a: u64) -> Result<FormParams> {
    match a {
        27 => Ok(FormParams {
            kind: FormKind::TwentySeven,
            a: 27,
            ..FormParams::heegner(3)
        }),
        _ if HEEGNER.contains(&a) => Ok(FormParams::heegner(a)),
        _ => Err(Error::UnsupportedCoefficient(a)),
    }
}

/// An integer pair `(x, y)` with `x² + a·y² = n`. Ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct Solution {
    pub x: i64,
    pub y: i64,
}

impl From<(i64, i64)> for Solution {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

impl From<Solution> for (i64, i64) {
    fn from(s: Solution) -> Self {
        (s.x, s.y)
    }
}

/// `s + t·√-a` (integer basis) or `s + t·λ` (half-integer basis).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RingElement {
    pub s: i64,
    pub t: i64,
}

impl RingElement {
    pub fn new(s: i64, t: i64) -> Self {
        Self { s, t }
    }

    /// Complex conjugate. Under the half-integer basis `λ̄ = -1 - λ`.
    pub fn conjugate(self, params: &FormParams) -> Self {
        match params.basis {
            Basis::IntegerBasis => Self::new(self.s, -self.t),
            Basis::HalfIntegerBasis => Self::new(self.s - self.t, -self.t),
        }
    }

    /// Image of `x + y·√-a` in the ring of integers.
    ///
    /// For `a = 27` the element is `x + 3y·√-3` in the Eisenstein integers.
    pub fn from_solution(sol: Solution, params: &FormParams) -> Self {
        let y = match params.kind {
            FormKind::Heegner => sol.y,
            FormKind::TwentySeven => 3 * sol.y,
        };
        match params.basis {
            Basis::IntegerBasis => Self::new(sol.x, y),
            Basis::HalfIntegerBasis => Self::new(sol.x + y, 2 * y),
        }
    }
}

/// Norm `z·z̄` of a ring element.
///
/// ```
/// use quadrep::rings::{form_params, norm, RingElement};
/// assert_eq!(norm(RingElement::new(2, 1), &form_params(11).unwrap()), 5);
/// ```
pub fn norm(z: RingElement, params: &FormParams) -> u128 {
    let a = params.ring_coefficient() as i128;
    let (s, t) = (z.s as i128, z.t as i128);
    let n = match params.basis {
        Basis::IntegerBasis => s * s + a * t * t,
        Basis::HalfIntegerBasis => s * s - s * t + (a + 1) / 4 * t * t,
    };
    n as u128
}

/// Product of two elements, using `λ² = -λ - (a + 1)/4`.
#[cfg(test)]
pub(crate) fn mul(z: RingElement, w: RingElement, params: &FormParams) -> RingElement {
    let a = params.ring_coefficient() as i64;
    match params.basis {
        Basis::IntegerBasis => RingElement::new(z.s * w.s - a * z.t * w.t, z.s * w.t + z.t * w.s),
        Basis::HalfIntegerBasis => {
            let k = (a + 1) / 4;
            RingElement::new(z.s * w.s - k * z.t * w.t, z.s * w.t + z.t * w.s - z.t * w.t)
        }
    }
}

/// All `(u, v)` with `u, v ≥ 0` and `u² + a·v² = m`.
fn nonnegative_lattice_points(m: u128, a: u128) -> impl Iterator<Item = (u64, u64)> {
    let v_max = (m / a).isqrt();
    (0..=v_max).filter_map(move |v| {
        let r = m - a * v * v;
        let u = r.isqrt();
        (u * u == r).then_some((u as u64, v as u64))
    })
}

fn with_signs(u: u64, v: u64) -> impl Iterator<Item = (i64, i64)> {
    let (u, v) = (u as i64, v as i64);
    let us: &[i64] = if u == 0 { &[1] } else { &[1, -1] };
    let vs: &[i64] = if v == 0 { &[1] } else { &[1, -1] };
    us.iter()
        .flat_map(move |&su| vs.iter().map(move |&sv| (su * u, sv * v)))
}

/// Exhaustive search for `X(n, a) = {(x, y) : x² + a·y² = n}`, sorted.
///
/// ```
/// use quadrep::rings::enumerate_x;
/// assert_eq!(enumerate_x(2, 7).unwrap(), vec![]);
/// assert_eq!(enumerate_x(437805, 11).unwrap().len(), 24);
/// ```
pub fn enumerate_x(n: u64, a: u64) -> Result<Vec<Solution>> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let params = form_params(a)?;
    let mut out: Vec<Solution> = nonnegative_lattice_points(n as u128, params.a as u128)
        .flat_map(|(x, y)| with_signs(x, y))
        .map(Solution::from)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Exhaustive search for `Y(n, a)`, the elements of norm `n`, sorted by `(s, t)`.
///
/// Half-integer bases search the doubled lattice `u² + a·v² = 4n` with
/// `u ≡ v (mod 2)`; the element `(u + v√-a)/2` has coordinates
/// `s = (u + v)/2`, `t = v`.
pub fn enumerate_y(n: u64, a: u64) -> Result<Vec<RingElement>> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let params = form_params(a)?;
    if !params.is_heegner() {
        return Err(Error::NonMaximalOrder);
    }
    let mut out: Vec<RingElement> = match params.basis {
        Basis::IntegerBasis => nonnegative_lattice_points(n as u128, a as u128)
            .flat_map(|(x, y)| with_signs(x, y))
            .map(|(s, t)| RingElement::new(s, t))
            .collect(),
        Basis::HalfIntegerBasis => nonnegative_lattice_points(4 * n as u128, a as u128)
            .filter(|(u, v)| (u ^ v) & 1 == 0)
            .flat_map(|(u, v)| with_signs(u, v))
            .map(|(u, v)| RingElement::new((u + v) / 2, v))
            .collect(),
    };
    out.sort_unstable();
    Ok(out)
}
