//! Validated coefficient tuples.
//!
//! A [`CoprimeTuple`] is a sequence a_1..a_n of positive integers with
//! gcd(a_1,..,a_n) = 1 (setwise coprimality — pairwise coprimality is NOT
//! required). Construction caches the quantities every formula needs:
//! M = lcm(a_i), the coefficient sum and product, and the per-coordinate
//! box bounds u_i = M/a_i - 1.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use thiserror::Error;

use crate::arith::{gcd_all, lcm_all};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TupleError {
    #[error("need at least two coefficients, got {0}")]
    EmptyOrSingleton(usize),
    #[error("coefficient #{position} is zero; all coefficients must be positive")]
    NonPositiveCoefficient { position: usize },
    #[error("not setwise coprime: gcd of the coefficients is {gcd}, divide through first")]
    NotSetwiseCoprime { gcd: u64 },
}

/// A validated, immutable coefficient vector for the equation
/// `a_1 x_1 + ... + a_n x_n = b` over non-negative integers.
///
/// Order is preserved and duplicates are allowed; every cached field is
/// exact. All methods are pure, so values can be shared freely across
/// threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimeTuple {
    coeffs: Vec<u64>,
    lcm: BigUint,
    sum: BigUint,
    product: BigUint,
    box_bounds: Vec<BigUint>,
}

impl CoprimeTuple {
    /// Validates and builds a tuple. Inputs that are not setwise coprime
    /// are rejected rather than silently normalized, so every count this
    /// crate reports refers to the caller's stated equation.
    pub fn new(coeffs: Vec<u64>) -> Result<Self, TupleError> {
        if coeffs.len() < 2 {
            return Err(TupleError::EmptyOrSingleton(coeffs.len()));
        }
        if let Some(position) = coeffs.iter().position(|&a| a == 0) {
            return Err(TupleError::NonPositiveCoefficient { position });
        }
        let g = gcd_all(&coeffs);
        if g != 1 {
            return Err(TupleError::NotSetwiseCoprime { gcd: g });
        }

        let lcm = lcm_all(&coeffs);
        let sum = coeffs.iter().map(|&a| BigUint::from(a)).sum();
        let product = coeffs.iter().map(|&a| BigUint::from(a)).product();
        let box_bounds: Vec<BigUint> = coeffs
            .iter()
            .map(|&a| &lcm / BigUint::from(a) - BigUint::one())
            .collect();

        let tuple = CoprimeTuple {
            coeffs,
            lcm,
            sum,
            product,
            box_bounds,
        };
        // Sum bound: sum(a_i) <= (n-1)M + 1 holds for every coprime tuple;
        // a violation here would mean the arithmetic above is broken.
        assert!(
            check_sum_bound(&tuple),
            "coefficient-sum bound violated for accepted tuple {:?}",
            tuple.coeffs
        );
        Ok(tuple)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Number of coefficients, n >= 2.
    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    /// M, the least common multiple of the coefficients.
    pub fn lcm(&self) -> &BigUint {
        &self.lcm
    }

    /// Sum of the coefficients.
    pub fn coeff_sum(&self) -> &BigUint {
        &self.sum
    }

    /// Product of the coefficients.
    pub fn coeff_product(&self) -> &BigUint {
        &self.product
    }

    /// Box bounds u_i = M/a_i - 1, one per coefficient.
    pub fn box_bounds(&self) -> &[BigUint] {
        &self.box_bounds
    }

    pub fn min_coeff(&self) -> u64 {
        *self.coeffs.iter().min().expect("tuple is non-empty")
    }

    /// True when some coefficient equals 1, i.e. every b >= 0 is representable.
    pub fn contains_unit(&self) -> bool {
        self.coeffs.contains(&1)
    }

    /// r0 = (n-1)M - sum(a_i). Signed: the sum bound allows r0 = -1
    /// (reached exactly at tuples shaped like (1, M, ..., M)).
    pub fn r_zero(&self) -> BigInt {
        let n = self.n() as u64;
        BigInt::from(&self.lcm * BigUint::from(n - 1)) - BigInt::from(self.sum.clone())
    }

    /// The regime where the count collapses to closed forms:
    /// sum(a_i) >= (n-2)M + 2.
    pub fn condition8_holds(&self) -> bool {
        self.sum >= self.condition8_threshold()
    }

    /// (n-2)M + 2, the threshold tested by [`Self::condition8_holds`].
    pub fn condition8_threshold(&self) -> BigUint {
        let n = self.n() as u64;
        &self.lcm * BigUint::from(n - 2) + BigUint::from(2u32)
    }
}

impl std::fmt::Display for CoprimeTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// sum(a_i) <= (n-1)M + 1.
///
/// Holds for every setwise-coprime tuple; exposed as a named check so the
/// property suite can assert it over sampled tuples, in addition to the
/// construction-time assertion.
pub fn check_proposition1(t: &CoprimeTuple) -> bool {
    check_sum_bound(t)
}

fn check_sum_bound(t: &CoprimeTuple) -> bool {
    let n = t.n() as u64;
    *t.coeff_sum() <= t.lcm() * BigUint::from(n - 1) + BigUint::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn example_tuple_cached_fields() {
        let t = CoprimeTuple::new(vec![2, 4, 5, 5, 6]).unwrap();
        assert_eq!(t.n(), 5);
        assert_eq!(*t.lcm(), big(60));
        assert_eq!(*t.coeff_sum(), big(22));
        assert_eq!(*t.coeff_product(), big(1200));
        assert_eq!(
            t.box_bounds(),
            &[big(29), big(14), big(11), big(11), big(9)]
        );
    }

    #[test]
    fn all_ones_tuple() {
        let t = CoprimeTuple::new(vec![1, 1]).unwrap();
        assert_eq!(*t.lcm(), big(1));
        assert_eq!(t.box_bounds(), &[big(0), big(0)]);
        assert!(t.contains_unit());
    }

    #[test]
    fn rejects_non_coprime() {
        assert_eq!(
            CoprimeTuple::new(vec![4, 6]),
            Err(TupleError::NotSetwiseCoprime { gcd: 2 })
        );
        assert!(
            CoprimeTuple::new(vec![6, 10, 15, 30]).is_ok(),
            "setwise coprime without any coprime pair"
        );
    }

    #[test]
    fn rejects_short_and_zero() {
        assert_eq!(
            CoprimeTuple::new(vec![]),
            Err(TupleError::EmptyOrSingleton(0))
        );
        assert_eq!(
            CoprimeTuple::new(vec![7]),
            Err(TupleError::EmptyOrSingleton(1))
        );
        assert_eq!(
            CoprimeTuple::new(vec![3, 0, 5]),
            Err(TupleError::NonPositiveCoefficient { position: 1 })
        );
    }

    #[test]
    fn order_and_duplicates_preserved() {
        let t = CoprimeTuple::new(vec![5, 2, 5, 3]).unwrap();
        assert_eq!(t.coeffs(), &[5, 2, 5, 3]);
    }

    #[test]
    fn proposition1_cases() {
        let t = CoprimeTuple::new(vec![2, 3]).unwrap();
        assert!(check_proposition1(&t)); // 5 <= 7

        // Equality case (1, M, M): sum = (n-1)M + 1.
        let t = CoprimeTuple::new(vec![1, 5, 5]).unwrap();
        assert!(check_proposition1(&t));
        assert_eq!(*t.coeff_sum(), big(11));
        assert_eq!(t.lcm() * big(2) + BigUint::from(1u32), big(11));
        assert_eq!(t.r_zero(), (-1).into());
    }

    #[test]
    fn condition8_examples() {
        // n = 2 always satisfies it: sum >= 2.
        assert!(CoprimeTuple::new(vec![2, 3]).unwrap().condition8_holds());
        // (3,4,12): 19 >= 14
        assert!(CoprimeTuple::new(vec![3, 4, 12])
            .unwrap()
            .condition8_holds());
        // (2,3,5): 10 < 32
        assert!(!CoprimeTuple::new(vec![2, 3, 5]).unwrap().condition8_holds());
        // (2,4,5,5,6): 22 < 182
        assert!(!CoprimeTuple::new(vec![2, 4, 5, 5, 6])
            .unwrap()
            .condition8_holds());
    }

    #[test]
    fn r_zero_values() {
        assert_eq!(
            CoprimeTuple::new(vec![3, 4, 12]).unwrap().r_zero(),
            5.into()
        );
        assert_eq!(CoprimeTuple::new(vec![2, 3]).unwrap().r_zero(), 1.into());
        assert_eq!(CoprimeTuple::new(vec![1, 1]).unwrap().r_zero(), (-1).into());
    }

    proptest! {
        // Every accepted tuple: gcd = 1, M divisible by each a_i, box bounds
        // consistent, and the sum bound holds order-free.
        #[test]
        fn accepted_tuples_satisfy_invariants(coeffs in proptest::collection::vec(1u64..=40, 2..=6)) {
            match CoprimeTuple::new(coeffs.clone()) {
                Ok(t) => {
                    prop_assert_eq!(crate::arith::gcd_all(&coeffs), 1);
                    for (i, &a) in t.coeffs().iter().enumerate() {
                        let a_big = BigUint::from(a);
                        prop_assert!((t.lcm() % &a_big).bits() == 0, "M not divisible by a_i");
                        prop_assert_eq!(&(t.lcm() / &a_big) - BigUint::from(1u32), t.box_bounds()[i].clone());
                    }
                    prop_assert!(check_proposition1(&t));
                    prop_assert!(t.r_zero() >= (-1).into());
                }
                Err(TupleError::NotSetwiseCoprime { gcd }) => {
                    prop_assert_eq!(crate::arith::gcd_all(&coeffs), gcd);
                    prop_assert!(gcd > 1);
                }
                Err(e) => prop_assert!(false, "unexpected error {e:?}"),
            }
        }
    }
}
