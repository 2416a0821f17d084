//! Exact solvability, solution counting, and Frobenius numbers for
//! linear Diophantine equations `a_1 x_1 + ... + a_n x_n = b` over
//! non-negative integers, with setwise-coprime positive coefficients.
//!
//! Everything is exact, arbitrary-precision integer arithmetic — there is
//! no floating point in this crate, and floors are integer divisions.
//! Counts routinely exceed 64 bits, so they are [`num_bigint::BigUint`]
//! throughout.
//!
//! The crate is organized around cross-validation: each central quantity
//! is computed by at least two independent routes that the test suite
//! (and `dioph verify`) force to agree:
//!
//! - P(b), the number of solutions: brute-force DP oracle vs. the
//!   structural decomposition over residue classes mod M = lcm(a_i)
//!   vs. closed forms in the `sum(a_i) >= (n-2)M + 2` regime
//!   ([`denumerant`]);
//! - the decomposition weights l_k: bounded DP vs. inclusion–exclusion
//!   ([`denumerant`]);
//! - solvability: five sufficient conditions, each certificate-bearing,
//!   settled exactly by the structural count ([`solvability`]);
//! - Frobenius numbers: residue-class shortest path vs. downward scan,
//!   with upper bounds and a closed form for product-shaped tuples
//!   ([`frobenius`]).
//!
//! Domain types are immutable after construction and all operations are
//! pure functions, so everything can be shared and called concurrently.

pub mod arith;
pub mod denumerant;
pub mod frobenius;
pub mod params;
pub mod solvability;
pub mod tuple;
pub mod verify;

pub use denumerant::{
    check_mass_identity, count_bounded, count_bruteforce, count_special_case, count_structural,
    l_vector_direct, l_vector_inclusion_exclusion, lattice_mass, CountBreakdown, CountRoute,
    DenumerantError, LVector, LVectorCache,
};
pub use frobenius::{
    bound_r0, bound_thm8, closed_form_thm7, frobenius_exact, frobenius_exact_scan,
    frobenius_report, FrobeniusError, FrobeniusMethod, FrobeniusReport,
};
pub use params::{instance_params, InstanceParams};
pub use solvability::{
    decide, sufficient_thm2, sufficient_thm3, sufficient_thm4, sufficient_thm5, sufficient_thm6,
    Certificate, SolvabilityVerdict,
};
pub use tuple::{check_proposition1, CoprimeTuple, TupleError};
pub use verify::{run_sweep, SweepConfig, VerifyReport};
