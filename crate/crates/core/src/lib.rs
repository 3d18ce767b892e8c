//! Universal denominators for rational solutions of linear difference
//! equations with polynomial coefficients, computed as the limit of a
//! stabilizing gcd sequence, and the summation and recurrence-solving
//! algorithms built on them.
//!
//! - [`poly`], [`ratfunc`]: exact polynomials and rational functions over the rationals
//! - [`dispersion`]: resultants, integer roots, `dis(a, b)`
//! - [`convergence`]: the gcd sequence `G_k` and its limit
//! - [`denominators`]: Abramov's and Petkovšek's loops, Gosper/GP representations
//! - [`solver`]: polynomial solutions of linear recurrences
//! - [`pipelines`]: Gosper summation and rational solutions end to end
//! - [`expr`]: expression parser

pub mod convergence;
pub mod denominators;
pub mod dispersion;
pub mod error;
pub mod expr;
mod linalg;
pub mod pipelines;
pub mod poly;
pub mod ratfunc;
pub mod solver;

pub use convergence::{gcd_limit, gcd_term, order_dispersion, universal_denominator, GcdLimit};
pub use denominators::{
    abramov_reduce, check_gosper_rep, check_gp_rep, gosper_rep_from_abramov, gp_reduce,
    gp_rep_from_trace, AbramovTrace, GosperRep, GpTrace, RepCheck,
};
pub use dispersion::{dispersion, integer_roots, resultant, shifted_resultant, DispersionResult};
pub use error::{Error, Result};
pub use expr::{parse, parse_poly, parse_ratfunc, Expr};
pub use pipelines::{
    gosper, rational_solve, verify_antidifference, verify_gosper, verify_rational,
    GosperCertificate, RationalSolveResult,
};
pub use poly::{rat, Poly, Rational};
pub use ratfunc::RatFunc;
pub use solver::{degree_bound, delta_coeffs, poly_solutions, LinearRecurrence, SolutionSet};
