//! Exact Frobenius numbers and upper bounds.
//!
//! Frob(a_1,..,a_n) is the largest b with P(b) = 0, or -1 when every
//! b >= 0 is representable (some a_i = 1).
//!
//! Algorithm of record: least representable number per residue class
//! modulo a_min (single-source shortest path / Apéry set); cost
//! O(a_min * n * log a_min) regardless of how large the answer is.
//! An independent downward scan ([`frobenius_exact_scan`]) exists purely
//! as a cross-check oracle for the test sweeps.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::arith::gcd;
use crate::denumerant::DenumerantError;
use crate::solvability::decide;
use crate::tuple::CoprimeTuple;

/// Ceiling on a_min for the residue shortest path (one dist entry per
/// residue class).
pub const DEFAULT_RESIDUE_CAP: u64 = 10_000_000;

/// Ceiling on candidate tests in the scan oracle.
pub const DEFAULT_SCAN_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("gcd({a1}, {a2}) != 1: need a coprime pair")]
    NotCoprimePair { a1: u64, a2: u64 },
    #[error("coefficients must be positive")]
    NonPositiveCoefficient,
    #[error("need at least two coefficients, got {0}")]
    TupleTooShort(usize),
    #[error("smallest coefficient {a_min} exceeds the residue-class limit {cap}")]
    ResidueLimitExceeded { a_min: u64, cap: u64 },
    #[error("scan would test more than {budget} candidates (upper bound {upper_bound})")]
    ScanBudgetExceeded { upper_bound: BigInt, budget: u64 },
    #[error(transparent)]
    Count(#[from] DenumerantError),
}

/// How the exact value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrobeniusMethod {
    ResidueShortestPath,
    DownwardScan,
    AllRepresentable,
}

impl FrobeniusMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            FrobeniusMethod::ResidueShortestPath => "residue_shortest_path",
            FrobeniusMethod::DownwardScan => "downward_scan",
            FrobeniusMethod::AllRepresentable => "all_representable",
        }
    }
}

/// The exact Frobenius number together with every applicable bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub exact: BigInt,
    pub method: FrobeniusMethod,
    /// min a_i a_j - a_i - a_j over coprime pairs; absent when no pair
    /// is coprime. Always an upper bound on `exact`.
    pub bound_thm8: Option<BigInt>,
    /// (n-1)M - sum(a_i), present iff sum(a_i) >= (n-2)M + 2; an upper
    /// bound on `exact`.
    pub bound_r0: Option<BigInt>,
    /// Present iff `bound_r0` is: true when the bound is attained.
    pub r0_sharp: Option<bool>,
    /// a_1 a_2 - a_1 - a_2, present iff the tuple is shaped
    /// (a_1, a_2, a_1 a_2, ..., a_1 a_2) with gcd(a_1, a_2) = 1; equals
    /// `exact` whenever present.
    pub closed_form_thm7: Option<BigInt>,
}

/// Largest non-representable b, or -1 when a coefficient equals 1.
pub fn frobenius_exact(t: &CoprimeTuple) -> Result<BigInt, FrobeniusError> {
    frobenius_exact_with_cap(t, DEFAULT_RESIDUE_CAP)
}

pub fn frobenius_exact_with_cap(
    t: &CoprimeTuple,
    residue_cap: u64,
) -> Result<BigInt, FrobeniusError> {
    if t.contains_unit() {
        return Ok(BigInt::from(-1));
    }
    let dist = apery_distances(t, residue_cap)?;
    let max = dist.iter().max().expect("a_min >= 2 residue classes");
    Ok(BigInt::from(*max) - BigInt::from(t.min_coeff()))
}

/// Least representable number in each residue class modulo a_min
/// (the Apéry set with respect to a_min). Internal to this module and
/// the tests; `max - a_min` is the Frobenius number.
fn apery_distances(t: &CoprimeTuple, residue_cap: u64) -> Result<Vec<u128>, FrobeniusError> {
    let a_min = t.min_coeff();
    if a_min > residue_cap {
        return Err(FrobeniusError::ResidueLimitExceeded {
            a_min,
            cap: residue_cap,
        });
    }
    let classes = a_min as usize;

    const UNSEEN: u128 = u128::MAX;
    let mut dist = vec![UNSEEN; classes];
    let mut heap: BinaryHeap<Reverse<(u128, usize)>> = BinaryHeap::new();
    heap.push(Reverse((0, 0)));
    while let Some(Reverse((d, class))) = heap.pop() {
        if dist[class] != UNSEEN {
            continue;
        }
        dist[class] = d;
        for &a in t.coeffs() {
            let step = a % a_min;
            if step == 0 {
                continue; // self-loop, can never improve
            }
            let next = (class + step as usize) % classes;
            if dist[next] == UNSEEN {
                heap.push(Reverse((d + u128::from(a), next)));
            }
        }
    }
    // gcd 1 makes every class reachable
    assert!(
        dist.iter().all(|&d| d != UNSEEN),
        "unreachable residue class for {t}; coprimality violated"
    );
    Ok(dist)
}

/// Independent oracle: walk down from the best available upper bound
/// (min of the coprime-pair bound, r0 when applicable, and (n-1)M - 1)
/// deciding each candidate until the first unsolvable one.
pub fn frobenius_exact_scan(t: &CoprimeTuple) -> Result<BigInt, FrobeniusError> {
    frobenius_exact_scan_with_budget(t, DEFAULT_SCAN_BUDGET)
}

pub fn frobenius_exact_scan_with_budget(
    t: &CoprimeTuple,
    budget: u64,
) -> Result<BigInt, FrobeniusError> {
    if t.contains_unit() {
        return Ok(BigInt::from(-1));
    }
    let n = t.n() as u64;
    let mut upper = BigInt::from(t.lcm() * BigUint::from(n - 1)) - BigInt::from(1);
    if let Some(c) = bound_thm8(t) {
        upper = upper.min(c);
    }
    if let Some(r0) = bound_r0(t) {
        upper = upper.min(r0);
    }
    if upper < BigInt::ZERO {
        return Ok(BigInt::from(-1));
    }
    let first =
        upper
            .to_u64()
            .filter(|&u| u < budget)
            .ok_or(FrobeniusError::ScanBudgetExceeded {
                upper_bound: upper.clone(),
                budget,
            })?;
    for b in (0..=first).rev() {
        if !decide(t, &BigUint::from(b))?.solvable {
            return Ok(BigInt::from(b));
        }
    }
    Ok(BigInt::from(-1))
}

/// The qualifying pair behind the coprime-pair bound: indices (i, j) with
/// i < j, gcd(a_i, a_j) = 1, minimizing a_i a_j - a_i - a_j (first such
/// pair in positional order on ties). None when no coprime pair exists.
pub fn bound_thm8_pair(t: &CoprimeTuple) -> Option<(usize, usize, BigInt)> {
    let coeffs = t.coeffs();
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in 0..coeffs.len() {
        for j in (i + 1)..coeffs.len() {
            if gcd(coeffs[i], coeffs[j]) != 1 {
                continue;
            }
            let c = BigInt::from(u128::from(coeffs[i]) * u128::from(coeffs[j]))
                - BigInt::from(coeffs[i])
                - BigInt::from(coeffs[j]);
            match &best {
                Some((_, _, current)) if *current <= c => {}
                _ => best = Some((i, j, c)),
            }
        }
    }
    best
}

/// Upper bound c = min a_i a_j - a_i - a_j over coprime pairs; absent
/// when no coprime pair exists (the bound says nothing there).
pub fn bound_thm8(t: &CoprimeTuple) -> Option<BigInt> {
    bound_thm8_pair(t).map(|(_, _, c)| c)
}

/// Upper bound r0 = (n-1)M - sum(a_i), valid when
/// sum(a_i) >= (n-2)M + 2; absent otherwise. When present and the
/// equation is unsolvable at r0 itself, Frob equals r0 (sharp).
pub fn bound_r0(t: &CoprimeTuple) -> Option<BigInt> {
    t.condition8_holds().then(|| t.r_zero())
}

/// Frob(a_1, a_2, a_1 a_2, ..., a_1 a_2) = a_1 a_2 - a_1 - a_2 for a
/// coprime pair, any number of appended a_1 a_2 coefficients (n >= 2
/// counts them all). Degenerate pairs containing 1 give -1.
pub fn closed_form_thm7(a1: u64, a2: u64, n: usize) -> Result<BigInt, FrobeniusError> {
    if a1 == 0 || a2 == 0 {
        return Err(FrobeniusError::NonPositiveCoefficient);
    }
    if n < 2 {
        return Err(FrobeniusError::TupleTooShort(n));
    }
    if gcd(a1, a2) != 1 {
        return Err(FrobeniusError::NotCoprimePair { a1, a2 });
    }
    Ok(BigInt::from(u128::from(a1) * u128::from(a2)) - BigInt::from(a1) - BigInt::from(a2))
}

/// The closed-form value when the tuple has the matching shape
/// (first two coprime, every later coefficient equal to their product).
pub fn thm7_shape_value(t: &CoprimeTuple) -> Option<BigInt> {
    let c = t.coeffs();
    if gcd(c[0], c[1]) != 1 {
        return None;
    }
    let product = u128::from(c[0]) * u128::from(c[1]);
    if c[2..].iter().any(|&a| u128::from(a) != product) {
        return None;
    }
    Some(BigInt::from(product) - BigInt::from(c[0]) - BigInt::from(c[1]))
}

/// Exact value, bounds, gaps and sharpness in one pass.
pub fn frobenius_report(t: &CoprimeTuple) -> Result<FrobeniusReport, FrobeniusError> {
    let (exact, method) = if t.contains_unit() {
        (BigInt::from(-1), FrobeniusMethod::AllRepresentable)
    } else {
        (frobenius_exact(t)?, FrobeniusMethod::ResidueShortestPath)
    };
    let bound_thm8 = bound_thm8(t);
    let bound_r0 = bound_r0(t);
    // Frob <= r0 whenever the bound applies, so sharpness (unsolvable at
    // r0 itself) is exactly equality.
    let r0_sharp = bound_r0.as_ref().map(|r0| exact == *r0);
    Ok(FrobeniusReport {
        exact,
        method,
        bound_thm8,
        bound_r0,
        r0_sharp,
        closed_form_thm7: thm7_shape_value(t),
    })
}
