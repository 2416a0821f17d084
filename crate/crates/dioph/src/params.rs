//! Per-(tuple, b) derived quantities.
//!
//! For a right-hand side b, with M = lcm(a_i):
//!
//! - r  = b mod M and b' = floor(b / M), so b = b'·M + r;
//! - s  = floor(n - (sum(a_i) + r) / M), the truncation index of the
//!   structural decomposition (always within 0..=n-1);
//! - r0 = (n-1)M - sum(a_i), the case-split threshold when the
//!   closed-form regime applies.
//!
//! All floors are exact integer divisions; nothing here can fail.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::tuple::CoprimeTuple;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceParams {
    /// The right-hand side this was derived from.
    pub b: BigUint,
    /// b mod M.
    pub r: BigUint,
    /// floor(b / M).
    pub b_prime: BigUint,
    /// floor(n - (sum(a_i) + r) / M); satisfies 0 <= s <= n-1.
    pub s: u32,
    /// (n-1)M - sum(a_i); can be -1, never smaller.
    pub r0: BigInt,
}

/// Derives all per-instance parameters for `t` and right-hand side `b`.
///
/// Pure: identical inputs give identical outputs.
pub fn instance_params(t: &CoprimeTuple, b: &BigUint) -> InstanceParams {
    let (b_prime, r) = b.div_rem(t.lcm());
    let s = s_for_residue(t, &r);
    InstanceParams {
        b: b.clone(),
        r,
        b_prime,
        s,
        r0: t.r_zero(),
    }
}

/// s evaluated at a residue r (0 <= r < M). Since s depends on b only
/// through r, this is the s shared by every b in the residue class.
pub fn s_for_residue(t: &CoprimeTuple, r: &BigUint) -> u32 {
    debug_assert!(r < t.lcm(), "residue out of range");
    let n = t.n() as u64;
    // s = floor((nM - sum - r) / M); the numerator is >= 0 because
    // sum <= (n-1)M + 1 and r <= M - 1.
    let numerator = t.lcm() * BigUint::from(n) - t.coeff_sum() - r;
    (numerator / t.lcm())
        .to_u32()
        .expect("s <= n - 1 fits in u32")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuple::CoprimeTuple;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn derived_values_for_3_4_12() {
        let t = CoprimeTuple::new(vec![3, 4, 12]).unwrap();

        let p = instance_params(&t, &big(31));
        assert_eq!(p.r, big(7));
        assert_eq!(p.b_prime, big(2));
        assert_eq!(p.s, 0);
        assert_eq!(p.r0, 5.into());

        let p = instance_params(&t, &big(24));
        assert_eq!(p.r, big(0));
        assert_eq!(p.b_prime, big(2));
        assert_eq!(p.s, 1);
        assert_eq!(p.r0, 5.into());
    }

    #[test]
    fn derived_values_for_2_3_at_zero() {
        let t = CoprimeTuple::new(vec![2, 3]).unwrap();
        let p = instance_params(&t, &big(0));
        assert_eq!(p.r, big(0));
        assert_eq!(p.b_prime, big(0));
        assert_eq!(p.s, 1); // floor(2 - 5/6) = 1
        assert_eq!(p.r0, 1.into());
    }

    fn arb_tuple() -> impl Strategy<Value = CoprimeTuple> {
        proptest::collection::vec(1u64..=30, 2..=5)
            .prop_filter_map("setwise coprime", |c| CoprimeTuple::new(c).ok())
    }

    proptest! {
        #[test]
        fn decomposition_and_range(t in arb_tuple(), b in 0u64..100_000) {
            let b = big(b);
            let p = instance_params(&t, &b);
            // b = b'M + r with 0 <= r < M
            prop_assert!(&p.r < t.lcm());
            prop_assert_eq!(&p.b_prime * t.lcm() + &p.r, b);
            // 0 <= s <= n-1
            prop_assert!((p.s as usize) < t.n());
        }

        // Under the closed-form regime: s = 0 iff r > r0, s = 1 iff r <= r0.
        #[test]
        fn s_case_split_under_condition8(t in arb_tuple(), b in 0u64..100_000) {
            if t.condition8_holds() {
                let p = instance_params(&t, &big(b));
                let r_signed: num_bigint::BigInt = p.r.clone().into();
                if r_signed > p.r0 {
                    prop_assert_eq!(p.s, 0);
                } else {
                    prop_assert_eq!(p.s, 1);
                }
            }
        }
    }
}
