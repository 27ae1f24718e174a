// SPDX-License-Identifier: Apache-2.0

//! Formula-versus-oracle sweep.
//!
//! Work is split across a rayon pool of the requested size; results are
//! collected in `(a, n)` order, so the output does not depend on the worker
//! count.

use quadrep::count::x_count;
use quadrep::rings::{enumerate_x, enumerate_y, form_params};
use quadrep::Error;
use rayon::prelude::*;

use crate::record::{OutputRecord, VerifySummary};

pub struct SweepOutcome {
    pub summary: VerifySummary,
    /// Failing rows in ascending `(a, n)` order.
    pub mismatches: Vec<OutputRecord>,
}

/// Compares `x_count` with `|enumerate_x|`, and `y_count` with `|enumerate_y|`
/// for Heegner `a`.
pub fn check_one(n: u64, a: u64) -> Result<OutputRecord, Error> {
    let report = x_count(n, a)?;
    let oracle = enumerate_x(n, a)?.len() as u64;
    let y_oracle = match report.y_count {
        Some(_) => Some(enumerate_y(n, a)?.len() as u64),
        None => None,
    };
    let y = report.y_count;
    let mut rec = OutputRecord::from_report(report);
    rec.y_count = y;
    Ok(rec.with_oracle(oracle, y_oracle))
}

/// Runs [`check_one`] for every `a` in `coefficients` and every `n ≤ n_max`.
pub fn run_sweep(coefficients: &[u64], n_max: u64, workers: usize) -> Result<SweepOutcome, Error> {
    for &a in coefficients {
        form_params(a)?;
    }
    let jobs: Vec<(u64, u64)> = coefficients
        .iter()
        .flat_map(|&a| (1..=n_max).map(move |n| (a, n)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let results: Vec<OutputRecord> = pool.install(|| {
        jobs.par_iter()
            .map(|&(a, n)| check_one(n, a))
            .collect::<Result<_, _>>()
    })?;
    let mismatches: Vec<OutputRecord> = results
        .into_iter()
        .filter(|r| r.matches != Some(true))
        .collect();
    Ok(SweepOutcome {
        summary: VerifySummary {
            a: coefficients.to_vec(),
            n_max,
            checked: jobs.len() as u64,
            mismatches: mismatches.len() as u64,
        },
        mismatches,
    })
}
