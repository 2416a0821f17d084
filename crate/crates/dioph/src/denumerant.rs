//! Exact counting of non-negative integer solutions of
//! `a_1 x_1 + ... + a_n x_n = b` (the denumerant P(b)), by three
//! independent routes that the test suite requires to agree:
//!
//! 1. a brute-force dynamic program over right-hand sides 0..=b
//!    ([`count_bruteforce`]) — the ground-truth oracle, sharing no code
//!    with the other routes;
//! 2. the structural decomposition ([`count_structural`])
//!    `P(b) = sum_{k=0..s} l_k * cbar(b' + n - 1 - k, n - 1)`,
//!    where `l_k` counts the box-constrained solutions of
//!    `sum a_i t_i = r + kM, 0 <= t_i <= M/a_i - 1`; the l-vector is
//!    computed by a bounded DP ([`l_vector_direct`], route of record) and
//!    cross-checked by inclusion–exclusion over oracle values
//!    ([`l_vector_inclusion_exclusion`]);
//! 3. closed forms for the regime `sum(a_i) >= (n-2)M + 2`
//!    ([`count_special_case`]).
//!
//! The total l-mass satisfies `sum_k l_k = M^{n-1} / prod(a_i)` exactly
//! ([`check_mass_identity`], [`lattice_mass`]).

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{binomial, cbar};
use crate::params::{instance_params, s_for_residue, InstanceParams};
use crate::tuple::CoprimeTuple;

/// Default ceiling on the brute-force right-hand side, sized so the DP
/// table stays around 10^7 cells.
pub const DEFAULT_BRUTEFORCE_CAP: u64 = 10_000_000;

/// Ceiling on bounded-DP table cells (targets run up to nM - sum(a_i),
/// which is unbounded when M is).
pub const DP_CELL_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DenumerantError {
    #[error("right-hand side {b} exceeds the brute-force cap {cap}; use the structural route")]
    CapExceeded { b: BigUint, cap: u64 },
    #[error("bounded DP would need {cells} cells, over the limit {cap}")]
    DpLimitExceeded { cells: BigUint, cap: u64 },
    #[error("closed forms need sum(a_i) >= (n-2)M + 2, but {sum_a} < {threshold}")]
    Condition8NotSatisfied { sum_a: BigUint, threshold: BigUint },
}

/// The coefficients l_0..l_s of the structural decomposition at residue r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LVector {
    r: BigUint,
    values: Vec<BigUint>,
}

impl LVector {
    pub fn residue(&self) -> &BigUint {
        &self.r
    }

    /// l_0..l_s in order; the length is s + 1 for this residue.
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn s(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    pub fn mass(&self) -> BigUint {
        self.values.iter().sum()
    }
}

/// Which formula produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountRoute {
    Bruteforce,
    Structural,
    SpecialEq11,
    SpecialEq13,
}

impl CountRoute {
    pub fn as_str(self) -> &'static str {
        match self {
            CountRoute::Bruteforce => "bruteforce",
            CountRoute::Structural => "structural",
            CountRoute::SpecialEq11 => "special_eq11",
            CountRoute::SpecialEq13 => "special_eq13",
        }
    }
}

/// One summand `l_k * cbar(b' + n - 1 - k, n - 1)` of the structural count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralTerm {
    pub k: u32,
    pub l_k: BigUint,
    pub binomial: BigUint,
    pub value: BigUint,
}

/// A count plus how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountBreakdown {
    pub total: BigUint,
    pub route: CountRoute,
    pub params: InstanceParams,
    pub l_vector: Option<LVector>,
    pub terms: Option<Vec<StructuralTerm>>,
}

/// Ground-truth oracle: P(b) by an unbounded-knapsack DP over 0..=b,
/// one coefficient at a time. Kept deliberately independent of the
/// structural route. Uses [`DEFAULT_BRUTEFORCE_CAP`].
pub fn count_bruteforce(t: &CoprimeTuple, b: &BigUint) -> Result<BigUint, DenumerantError> {
    count_bruteforce_with_cap(t, b, DEFAULT_BRUTEFORCE_CAP)
}

pub fn count_bruteforce_with_cap(
    t: &CoprimeTuple,
    b: &BigUint,
    cap: u64,
) -> Result<BigUint, DenumerantError> {
    let b_small = match b.to_u64() {
        Some(v) if v <= cap => v,
        _ => return Err(DenumerantError::CapExceeded { b: b.clone(), cap }),
    };
    let table = bruteforce_table(t, b_small);
    Ok(table[b_small as usize].clone())
}

/// The oracle's DP table: index v holds P(v), for v in 0..=up_to.
/// Sweeps that need many P-values in a range should build this once.
pub fn bruteforce_table(t: &CoprimeTuple, up_to: u64) -> Vec<BigUint> {
    let len = up_to as usize + 1;
    let mut dp = vec![BigUint::zero(); len];
    dp[0] = BigUint::one();
    for &a in t.coeffs() {
        let a = a as usize;
        if a > up_to as usize {
            continue;
        }
        for v in a..len {
            let prev = dp[v - a].clone();
            dp[v] += prev;
        }
    }
    dp
}

/// Number of solutions of `sum a_i t_i = target` inside the box
/// `0 <= t_i <= M/a_i - 1`, by a bounded-knapsack DP with a sliding
/// window per residue class. Targets beyond `nM - sum(a_i)` (the box
/// maximum) return 0 without allocating.
pub fn count_bounded(t: &CoprimeTuple, target: &BigUint) -> Result<BigUint, DenumerantError> {
    let n = t.n() as u64;
    let box_max = t.lcm() * BigUint::from(n) - t.coeff_sum();
    if *target > box_max {
        return Ok(BigUint::zero());
    }
    let cells = target + BigUint::one();
    let target_small = match target.to_u64() {
        Some(v) if v < DP_CELL_CAP => v as usize,
        _ => {
            return Err(DenumerantError::DpLimitExceeded {
                cells,
                cap: DP_CELL_CAP,
            })
        }
    };

    let mut dp = vec![BigUint::zero(); target_small + 1];
    dp[0] = BigUint::one();
    for (i, &a) in t.coeffs().iter().enumerate() {
        let a = a as usize;
        if a > target_small {
            continue;
        }
        // effective per-coin bound: min(M/a_i - 1, target / a_i)
        let width = t.box_bounds()[i]
            .clone()
            .min(BigUint::from((target_small / a) as u64))
            .to_u64()
            .expect("window width bounded by target") as usize;
        if width == 0 {
            continue; // t_i is forced to 0
        }
        let mut next = vec![BigUint::zero(); target_small + 1];
        for class_start in 0..a.min(target_small + 1) {
            let mut window = BigUint::zero();
            let mut v = class_start;
            loop {
                window += &dp[v];
                if let Some(evict) = v.checked_sub((width + 1) * a) {
                    window -= &dp[evict];
                }
                next[v] = window.clone();
                match v.checked_add(a) {
                    Some(nv) if nv <= target_small => v = nv,
                    _ => break,
                }
            }
        }
        dp = next;
    }
    Ok(dp[target_small].clone())
}

/// The l-vector at residue r by the bounded DP (route of record):
/// `values[k] = count_bounded(t, r + kM)` for k = 0..=s.
pub fn l_vector_direct(t: &CoprimeTuple, r: &BigUint) -> Result<LVector, DenumerantError> {
    assert!(r < t.lcm(), "residue {r} out of range for M = {}", t.lcm());
    let s = s_for_residue(t, r);
    let mut values = Vec::with_capacity(s as usize + 1);
    for k in 0..=u64::from(s) {
        let target = r + t.lcm() * BigUint::from(k);
        values.push(count_bounded(t, &target)?);
    }
    Ok(LVector {
        r: r.clone(),
        values,
    })
}

/// The same l-vector by inclusion–exclusion over oracle values:
/// `l_k = sum_{j=0..k} (-1)^j C(n, j) P(r + (k-j)M)`.
///
/// Needs P up to r + sM, so the brute-force cap applies; use
/// [`l_vector_direct`] when it does not fit.
pub fn l_vector_inclusion_exclusion(
    t: &CoprimeTuple,
    r: &BigUint,
) -> Result<LVector, DenumerantError> {
    l_vector_inclusion_exclusion_with_cap(t, r, DEFAULT_BRUTEFORCE_CAP)
}

pub fn l_vector_inclusion_exclusion_with_cap(
    t: &CoprimeTuple,
    r: &BigUint,
    cap: u64,
) -> Result<LVector, DenumerantError> {
    assert!(r < t.lcm(), "residue {r} out of range for M = {}", t.lcm());
    let s = s_for_residue(t, r);
    let top = r + t.lcm() * BigUint::from(u64::from(s));
    let top_small = match top.to_u64() {
        Some(v) if v <= cap => v,
        _ => return Err(DenumerantError::CapExceeded { b: top, cap }),
    };
    let table = bruteforce_table(t, top_small);
    let p_at = |k: u64| -> &BigUint {
        let idx = r.to_u64().expect("r <= top") + k * t.lcm().to_u64().expect("M <= top");
        &table[idx as usize]
    };

    let n_big = BigUint::from(t.n() as u64);
    let mut values = Vec::with_capacity(s as usize + 1);
    for k in 0..=u64::from(s) {
        let mut acc = BigInt::zero();
        for j in 0..=k {
            let term = BigInt::from(binomial(&n_big, j as u32) * p_at(k - j));
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        assert!(
            !acc.is_negative(),
            "inclusion-exclusion produced negative l_{k} at r={r}"
        );
        values.push(acc.to_biguint().expect("non-negative"));
    }
    Ok(LVector {
        r: r.clone(),
        values,
    })
}

/// M^{n-1} / prod(a_i), the total l-mass per residue class.
///
/// The quotient is an exact integer for every setwise-coprime tuple;
/// this asserts the division leaves no remainder.
pub fn lattice_mass(t: &CoprimeTuple) -> BigUint {
    let (q, rem) = mass_div_rem(t);
    assert!(
        rem.is_zero(),
        "M^(n-1) not divisible by the coefficient product for {t}"
    );
    q
}

fn mass_div_rem(t: &CoprimeTuple) -> (BigUint, BigUint) {
    let power = t.lcm().pow(t.n() as u32 - 1);
    power.div_rem(t.coeff_product())
}

/// True iff the l-vector at r sums to exactly M^{n-1} / prod(a_i)
/// (non-divisibility counts as failure, not as an error).
pub fn check_mass_identity(t: &CoprimeTuple, r: &BigUint) -> Result<bool, DenumerantError> {
    let lv = l_vector_direct(t, r)?;
    let (q, rem) = mass_div_rem(t);
    Ok(rem.is_zero() && lv.mass() == q)
}

/// P(b) by the structural decomposition. Works for arbitrarily large b:
/// only the l-vector touches the bounded DP, and the binomials are exact
/// big integers.
pub fn count_structural(t: &CoprimeTuple, b: &BigUint) -> Result<CountBreakdown, DenumerantError> {
    let params = instance_params(t, b);
    let lv = l_vector_direct(t, &params.r)?;
    Ok(assemble_structural(t, params, &lv))
}

fn assemble_structural(t: &CoprimeTuple, params: InstanceParams, lv: &LVector) -> CountBreakdown {
    let top = t.n() as u32 - 1;
    let mut terms = Vec::with_capacity(lv.values().len());
    let mut total = BigUint::zero();
    for (k, l_k) in lv.values().iter().enumerate() {
        let index = &params.b_prime + BigUint::from(u64::from(top) - k as u64);
        let c = cbar(&index, top);
        let value = l_k * &c;
        total += &value;
        terms.push(StructuralTerm {
            k: k as u32,
            l_k: l_k.clone(),
            binomial: c,
            value,
        });
    }
    CountBreakdown {
        total,
        route: CountRoute::Structural,
        params,
        l_vector: Some(lv.clone()),
        terms: Some(terms),
    }
}

/// P(b) by the closed forms of the regime `sum(a_i) >= (n-2)M + 2`
/// (where s is 0 or 1):
///
/// - r > r0:  `P(b) = mass * C(b' + n - 1, n - 1)`;
/// - r <= r0: `P(b) = P(r) * C(b' + n - 2, n - 2) + mass * cbar(b' + n - 2, n - 1)`,
///   with P(r) from the brute-force oracle.
///
/// The r <= r0 branch also evaluates the equivalent two-term split
/// `P(r) * C(b' + n - 1, n - 1) + (mass - P(r)) * cbar(b' + n - 2, n - 1)`
/// and asserts both agree; a mismatch would be an internal arithmetic bug.
pub fn count_special_case(
    t: &CoprimeTuple,
    b: &BigUint,
) -> Result<CountBreakdown, DenumerantError> {
    count_special_case_with_cap(t, b, DEFAULT_BRUTEFORCE_CAP)
}

pub fn count_special_case_with_cap(
    t: &CoprimeTuple,
    b: &BigUint,
    cap: u64,
) -> Result<CountBreakdown, DenumerantError> {
    if !t.condition8_holds() {
        return Err(DenumerantError::Condition8NotSatisfied {
            sum_a: t.coeff_sum().clone(),
            threshold: t.condition8_threshold(),
        });
    }
    let params = instance_params(t, b);
    let mass = lattice_mass(t);
    let n = t.n() as u64;
    let top = n as u32 - 1;

    let r_signed = BigInt::from(params.r.clone());
    if r_signed > params.r0 {
        let total = &mass * cbar(&(&params.b_prime + BigUint::from(n - 1)), top);
        return Ok(CountBreakdown {
            total,
            route: CountRoute::SpecialEq11,
            params,
            l_vector: None,
            terms: None,
        });
    }

    let p_r = count_bruteforce_with_cap(t, &params.r, cap)?;
    let shifted = &params.b_prime + BigUint::from(n - 2);
    let total = &p_r * cbar(&shifted, top - 1) + &mass * cbar(&shifted, top);
    let split = &p_r * cbar(&(&params.b_prime + BigUint::from(n - 1)), top)
        + (&mass - &p_r) * cbar(&shifted, top);
    assert_eq!(
        total, split,
        "closed-form split disagrees for {t} at b = {b}; arithmetic bug"
    );
    Ok(CountBreakdown {
        total,
        route: CountRoute::SpecialEq13,
        params,
        l_vector: None,
        terms: None,
    })
}

/// Per-tuple memo of l-vectors, keyed by residue. Sweeps hit the same
/// residue for every b in its class, so this turns a 0..=3M sweep from
/// O(M) DP runs per b into one per residue. Fill is idempotent; readers
/// and first-writers may race freely.
pub struct LVectorCache<'a> {
    tuple: &'a CoprimeTuple,
    memo: RwLock<HashMap<BigUint, Arc<LVector>>>,
}

impl<'a> LVectorCache<'a> {
    pub fn new(tuple: &'a CoprimeTuple) -> Self {
        LVectorCache {
            tuple,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn tuple(&self) -> &CoprimeTuple {
        self.tuple
    }

    pub fn l_vector(&self, r: &BigUint) -> Result<Arc<LVector>, DenumerantError> {
        if let Some(hit) = self.memo.read().expect("memo lock").get(r) {
            return Ok(Arc::clone(hit));
        }
        let computed = Arc::new(l_vector_direct(self.tuple, r)?);
        let mut guard = self.memo.write().expect("memo lock");
        Ok(Arc::clone(guard.entry(r.clone()).or_insert(computed)))
    }

    /// [`count_structural`] through the memo.
    pub fn count_structural(&self, b: &BigUint) -> Result<CountBreakdown, DenumerantError> {
        let params = instance_params(self.tuple, b);
        let lv = self.l_vector(&params.r)?;
        Ok(assemble_structural(self.tuple, params, &lv))
    }
}
