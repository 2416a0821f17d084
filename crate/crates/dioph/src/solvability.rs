//! Sufficient solvability conditions and the exact decision procedure.
//!
//! Five independent checkers, each sound (a `true` answer proves the
//! equation solvable) but none complete on its own:
//!
//! - `thm2`: floor(b/M) >= s;
//! - `thm3`: b >= nM - sum(a_i)              (implies thm2);
//! - `thm4`: b >= (n-1)M                     (implies thm2);
//! - `thm5`: some coprime pair (a_i, a_j) has b > a_i a_j - a_i - a_j;
//! - `thm6`: sum(a_i) >= (n-2)M + 2 and b > (n-1)M - sum(a_i).
//!
//! [`decide`] runs them all, then settles the question exactly via the
//! structural count, reporting every certificate that fired.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::denumerant::{count_structural, DenumerantError};
use crate::frobenius::bound_thm8_pair;
use crate::params::instance_params;
use crate::tuple::CoprimeTuple;

/// Why a verdict holds. `Thm5` carries the 0-based index pair; it
/// displays 1-based as `THM5(i,j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    Thm2,
    Thm3,
    Thm4,
    Thm5 { i: usize, j: usize },
    Thm6,
    ExactPositiveCount,
    ExactZeroCount,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Thm2 => write!(f, "THM2"),
            Certificate::Thm3 => write!(f, "THM3"),
            Certificate::Thm4 => write!(f, "THM4"),
            Certificate::Thm5 { i, j } => write!(f, "THM5({},{})", i + 1, j + 1),
            Certificate::Thm6 => write!(f, "THM6"),
            Certificate::ExactPositiveCount => write!(f, "EXACT_POSITIVE_COUNT"),
            Certificate::ExactZeroCount => write!(f, "EXACT_ZERO_COUNT"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvabilityVerdict {
    pub solvable: bool,
    /// Every sufficient condition that fired, plus the exact-count tag.
    pub certificates: Vec<Certificate>,
    /// The exact P(b); [`decide`] always fills it.
    pub count: Option<BigUint>,
}

/// floor(b/M) >= s.
pub fn sufficient_thm2(t: &CoprimeTuple, b: &BigUint) -> bool {
    let p = instance_params(t, b);
    p.b_prime >= BigUint::from(p.s)
}

/// b >= nM - sum(a_i).
pub fn sufficient_thm3(t: &CoprimeTuple, b: &BigUint) -> bool {
    let n = t.n() as u64;
    *b >= t.lcm() * BigUint::from(n) - t.coeff_sum()
}

/// b >= (n-1)M.
pub fn sufficient_thm4(t: &CoprimeTuple, b: &BigUint) -> bool {
    let n = t.n() as u64;
    *b >= t.lcm() * BigUint::from(n - 1)
}

/// Looks for a coprime pair with b > a_i a_j - a_i - a_j. Returns the
/// qualifying pair with the smallest a_i a_j - a_i - a_j (ties broken by
/// position), or None; None does NOT mean unsolvable.
pub fn sufficient_thm5(t: &CoprimeTuple, b: &BigUint) -> Option<(usize, usize)> {
    // If any pair qualifies, the globally minimal pair qualifies too.
    let (i, j, c) = bound_thm8_pair(t)?;
    (BigInt::from(b.clone()) > c).then_some((i, j))
}

/// sum(a_i) >= (n-2)M + 2 and b > (n-1)M - sum(a_i).
pub fn sufficient_thm6(t: &CoprimeTuple, b: &BigUint) -> bool {
    t.condition8_holds() && BigInt::from(b.clone()) > t.r_zero()
}

/// Runs every checker, then computes the exact count via the structural
/// route and sets `solvable` from it. All firing certificates are
/// reported, never just the first.
///
/// Panics if a sufficient condition fired while the exact count is zero:
/// that would mean a soundness bug, and no answer can be trusted.
pub fn decide(t: &CoprimeTuple, b: &BigUint) -> Result<SolvabilityVerdict, DenumerantError> {
    let mut certificates = Vec::new();
    if sufficient_thm2(t, b) {
        certificates.push(Certificate::Thm2);
    }
    if sufficient_thm3(t, b) {
        certificates.push(Certificate::Thm3);
    }
    if sufficient_thm4(t, b) {
        certificates.push(Certificate::Thm4);
    }
    if let Some((i, j)) = sufficient_thm5(t, b) {
        certificates.push(Certificate::Thm5 { i, j });
    }
    if sufficient_thm6(t, b) {
        certificates.push(Certificate::Thm6);
    }

    let count = count_structural(t, b)?.total;
    let solvable = !count.is_zero();
    if !solvable && !certificates.is_empty() {
        panic!(
            "soundness violation: {certificates:?} fired for {t} with b = {b}, but the exact count is 0"
        );
    }
    certificates.push(if solvable {
        Certificate::ExactPositiveCount
    } else {
        Certificate::ExactZeroCount
    });
    Ok(SolvabilityVerdict {
        solvable,
        certificates,
        count: Some(count),
    })
}
