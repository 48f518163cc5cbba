//! Exact arithmetic in Pimenov algebras `P_n`, the commutative algebras generated by
//! nilpotent generators `i1..in` with `ik*ik = 0`.
//!
//! The crate covers element arithmetic over `Q` (and real quadratic fields), inversion,
//! the full solution set of `a*x = b`, and primality and constructive prime factorization
//! for elements supported on at most four generators.

pub mod division;
pub mod element;
pub mod error;
pub mod expr;
pub mod factor;
pub mod inverse;
mod linalg;
pub mod monomial;
pub mod scalar;
pub mod testkit;

pub use division::{mul_operator_matrix, solve_division, DivisionSolution, DivisionStatus, MulOperatorMatrix};
pub use element::{Degree, Element, MAX_GENERATORS};
pub use error::AlgebraError;
pub use expr::{from_json, parse, print, to_json};
pub use factor::{
    classify_degree2, factor, is_prime, cubic_cofactor, reduce_support, support_generators,
    verify_factorization, Degree2Pattern, FactorizationResult, Field, PatternClass, PrimalityVerdict,
    Verdict,
};
pub use inverse::{inverse_coeff_closed_form, invert, nilpotency_bound, NilpotencyBound};
pub use monomial::Monomial;
pub use scalar::Scalar;
