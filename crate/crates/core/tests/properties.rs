// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;
use quadrep::arith::{divisor_char_sum, factorize, is_prime, kronecker, tau};
use quadrep::count::{t_bruteforce, t_cardinality, x_count};
use quadrep::rings::{enumerate_x, SUPPORTED};
use rand::{Rng, SeedableRng};

const DISCRIMINANTS: [i64; 9] = [-3, -4, -7, -8, -11, -19, -43, -67, -163];

#[test]
fn kronecker_is_completely_multiplicative() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..10_000 {
        let a = rng.gen_range(-1_000_000i64..=1_000_000);
        let b = rng.gen_range(-1_000_000i64..=1_000_000);
        let mut n = rng.gen_range(-1_000_000i64..=1_000_000);
        let mut m = rng.gen_range(-1_000_000i64..=1_000_000);
        if n == 0 {
            n = 1;
        }
        if m == 0 {
            m = -1;
        }
        assert_eq!(
            kronecker(a * b, n),
            kronecker(a, n) * kronecker(b, n),
            "({a}*{b}|{n})"
        );
        assert_eq!(
            kronecker(a, n * m),
            kronecker(a, n) * kronecker(a, m),
            "({a}|{n}*{m})"
        );
    }
}

#[test]
fn kronecker_is_periodic_for_discriminants() {
    for d in DISCRIMINANTS {
        let period = d.abs();
        for n in 1..=10 * period {
            assert_eq!(kronecker(d, n), kronecker(d, n + period), "d={d} n={n}");
        }
    }
}

#[test]
fn kronecker_reciprocity_for_three_mod_four() {
    for a in [3i64, 7, 11, 19, 43, 67, 163] {
        for c in 1..=2000i64 {
            let lhs = kronecker(-a, c);
            assert_eq!(lhs, kronecker(c, a), "a={a} c={c}");
            assert_eq!(lhs == 0, num_gcd(c, a) > 1);
        }
    }
}

fn num_gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

fn naive_divisor_char_sum(n: u64, d: i64) -> i64 {
    (1..=n)
        .filter(|c| n.is_multiple_of(*c))
        .map(|c| i64::from(kronecker(d, c as i64)))
        .sum()
}

#[test]
fn divisor_char_sum_matches_divisor_loop() {
    for n in 1..=10_000u64 {
        let f = factorize(n).unwrap();
        let mut divisors = f.divisors();
        divisors.sort_unstable();
        for d in DISCRIMINANTS {
            let direct: i64 = divisors
                .iter()
                .map(|&c| i64::from(kronecker(d, c as i64)))
                .sum();
            assert_eq!(divisor_char_sum(&f, d), direct, "n={n} d={d}");
        }
        assert_eq!(divisors.len() as u64, tau(&f));
    }
    // full trial-division loop on a sample, independent of Factorization::divisors
    for n in (1..=10_000u64).step_by(37) {
        let f = factorize(n).unwrap();
        for d in DISCRIMINANTS {
            assert_eq!(divisor_char_sum(&f, d), naive_divisor_char_sum(n, d));
        }
    }
}

#[test]
fn factorize_reassembles_small_range() {
    for n in 1..=100_000u64 {
        let f = factorize(n).unwrap();
        assert_eq!(f.value(), n);
        assert!(f.pairs().iter().all(|&(p, e)| e > 0 && is_prime(p)));
        assert!(f.pairs().windows(2).all(|w| w[0].0 < w[1].0));
    }
}

#[test]
fn factorize_reassembles_random_62_bit() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(62);
    for _ in 0..1000 {
        let n = rng.gen_range(1u64 << 61..1u64 << 62);
        let f = factorize(n).unwrap();
        assert_eq!(f.value(), n);
        assert!(f.pairs().iter().all(|&(p, _)| is_prime(p)));
    }
}

#[test]
fn t_closed_form_matches_enumeration_exhaustively() {
    fn visit(prefix: &mut Vec<u32>, checked: &mut u64) {
        assert_eq!(
            t_cardinality(prefix),
            t_bruteforce(prefix).unwrap(),
            "{prefix:?}"
        );
        *checked += 1;
        if prefix.len() == 6 {
            return;
        }
        for v in 0..=6 {
            prefix.push(v);
            visit(prefix, checked);
            prefix.pop();
        }
    }
    let mut checked = 0;
    visit(&mut Vec::new(), &mut checked);
    // 1 + 7 + 7^2 + ... + 7^6
    assert_eq!(checked, 137_257);
}

#[test]
fn parity_zeros() {
    for n in (2..=20_000u64).step_by(4) {
        assert_eq!(x_count(n, 7).unwrap().x_count, 0);
    }
    for n in (3..=20_000u64).step_by(3).filter(|n| n % 9 != 0) {
        assert_eq!(x_count(n, 27).unwrap().x_count, 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn counts_match_enumeration_for_large_n(n in 1u64..50_000_000, idx in 0usize..SUPPORTED.len()) {
        let a = SUPPORTED[idx];
        let report = x_count(n, a).unwrap();
        prop_assert_eq!(report.x_count as usize, enumerate_x(n, a).unwrap().len());
        prop_assert!(report.branch_is_consistent());
    }

    #[test]
    fn counts_are_multiplicative_in_y(m in 1u64..5000, k in 1u64..5000, idx in 0usize..9) {
        let a = quadrep::rings::HEEGNER[idx];
        prop_assume!(num_gcd(m as i64, k as i64) == 1);
        let u = quadrep::rings::form_params(a).unwrap().unit_count;
        let y = |n| quadrep::count::y_count(n, a).unwrap();
        prop_assert_eq!(y(m) * y(k), u * y(m * k));
    }
}
