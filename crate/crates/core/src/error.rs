// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors produced by the counting library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "unsupported coefficient a = {0}; supported values are 1, 2, 3, 7, 11, 19, 27, 43, 67, 163"
    )]
    UnsupportedCoefficient(u64),
    #[error("Y(n, 27) is not defined; use a = 3 for the maximal order")]
    NonMaximalOrder,
    #[error("n must be a positive integer")]
    ZeroInput,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not congruent to 1 modulo 3")]
    NotOneModThree(u64),
    #[error("enumeration of {product} tuples exceeds the guard of {limit}")]
    GuardExceeded { product: u128, limit: u128 },
    #[error("invalid factorization: {0}")]
    InvalidFactorization(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
