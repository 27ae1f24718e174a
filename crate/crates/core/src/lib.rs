// SPDX-License-Identifier: Apache-2.0

//! Exact counts of the integer solutions of `x² + a·y² = n` for
//! `a ∈ {1, 2, 3, 7, 11, 19, 27, 43, 67, 163}`.
//!
//! The nine Heegner numbers are exactly the `a` for which the ring of
//! integers of `Q(√-a)` has unique factorization; counting elements of a
//! given norm there is a divisor sum of a Kronecker character, and counting
//! the solutions `(x, y)` amounts to deciding which of those elements have
//! integer coordinates over `(1, √-a)`. The case `a = 27` reduces to the
//! Eisenstein integers together with a cubic-residue condition on 2.
//!
//! Every closed form is paired with a brute-force oracle in [`rings`], so the
//! formulas can be checked against exhaustive enumeration.
//!
//! ```
//! use quadrep::count::x_count;
//! let report = x_count(437805, 11).unwrap();
//! assert_eq!(report.x_count, 24);
//! assert_eq!(report.y_count, Some(80));
//! ```

pub mod arith;
pub mod classify;
pub mod count;
mod error;
pub mod rings;

pub use error::{Error, Result};

// Runs the Rust snippets of the guide as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/symbols.md")]
    mod symbols {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/obstruction.md")]
    mod obstruction {}
    #[doc = include_str!("../../../book/src/twenty_seven.md")]
    mod twenty_seven {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
