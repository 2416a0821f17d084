//! Exact integer arithmetic helpers: gcd/lcm folds and the guarded
//! binomial coefficient used throughout the counting formulas.
//!
//! Everything here is arbitrary precision; there is no floating point
//! anywhere in this crate.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Euclidean gcd on machine words.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// gcd of a non-empty slice.
pub fn gcd_all(values: &[u64]) -> u64 {
    assert!(!values.is_empty(), "gcd_all on empty slice");
    values.iter().fold(values[0], |acc, &v| gcd(acc, v))
}

/// lcm of a non-empty slice of positive integers, exact for any input.
pub fn lcm_all(values: &[u64]) -> BigUint {
    assert!(!values.is_empty(), "lcm_all on empty slice");
    assert!(
        values.iter().all(|&v| v > 0),
        "lcm_all needs positive values"
    );
    values
        .iter()
        .fold(BigUint::one(), |acc, &v| acc.lcm(&BigUint::from(v)))
}

/// Binomial coefficient C(m, k), exact.
///
/// Computed as the falling-factorial product with stepwise division, so
/// every intermediate value is an integer. Returns 0 when m < k.
pub fn binomial(m: &BigUint, k: u32) -> BigUint {
    let k_big = BigUint::from(k);
    if *m < k_big {
        return BigUint::zero();
    }
    let mut result = BigUint::one();
    // result after step i is C(m - k + i, i), always integral
    let base = m - &k_big;
    for i in 1..=u64::from(k) {
        result = result * (&base + BigUint::from(i)) / BigUint::from(i);
    }
    result
}

/// The guarded binomial: C(m, t) when m >= t, and 0 otherwise.
pub fn cbar(m: &BigUint, t: u32) -> BigUint {
    if *m < BigUint::from(t) {
        BigUint::zero()
    } else {
        binomial(m, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(3, 18), 3);
        assert_eq!(gcd(18, 3), 3);
        assert_eq!(gcd(5, 13), 1);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(7, 7), 7);
        assert_eq!(gcd_all(&[6, 10, 15]), 1);
        assert_eq!(gcd_all(&[4, 6]), 2);
    }

    #[test]
    fn lcm_basics() {
        assert_eq!(lcm_all(&[2, 3]), big(6));
        assert_eq!(lcm_all(&[2, 4, 5, 5, 6]), big(60));
        assert_eq!(lcm_all(&[1, 1]), big(1));
        assert_eq!(lcm_all(&[3, 4, 12]), big(12));
    }

    #[test]
    fn cbar_spec_values() {
        assert_eq!(cbar(&big(4), 2), big(6));
        assert_eq!(cbar(&big(1), 2), big(0));
        assert_eq!(cbar(&big(5), 0), big(1));
        assert_eq!(cbar(&big(0), 0), big(1));
        assert_eq!(cbar(&big(0), 1), big(0));
    }

    #[test]
    fn binomial_matches_factorial_formula() {
        // C(10, 3) = 120, C(52, 5) = 2598960
        assert_eq!(binomial(&big(10), 3), big(120));
        assert_eq!(binomial(&big(52), 5), big(2_598_960));
        // exceeds u64: C(100, 50)
        let c100_50: BigUint = "100891344545564193334812497256".parse().unwrap();
        assert_eq!(binomial(&big(100), 50), c100_50);
    }

    proptest! {
        // Pascal recurrence: cbar(m, t) = cbar(m-1, t-1) + cbar(m-1, t) for m, t >= 1.
        #[test]
        fn cbar_pascal_recurrence(m in 1u64..200, t in 1u32..16) {
            let lhs = cbar(&big(m), t);
            let rhs = cbar(&big(m - 1), t - 1) + cbar(&big(m - 1), t);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn cbar_zero_below_diagonal(m in 0u64..50, extra in 1u32..10) {
            let t = m as u32 + extra;
            prop_assert_eq!(cbar(&big(m), t), BigUint::zero());
        }
    }
}
