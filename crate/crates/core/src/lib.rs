//! Exact quadratizations of symmetric pseudo-Boolean functions.
//!
//! A pseudo-Boolean function `f: {0,1}^n → ℚ` is *symmetric* when its value
//! depends only on the Hamming weight `l = Σx`. A *quadratization* of `f` is a
//! quadratic polynomial `g(x, y)` in `x` and `m` auxiliary binary variables
//! `y` with `f(x) = min_y g(x, y)` at every `x`.
//!
//! The crate provides:
//!
//! - [`representation`]: writing `k_l` as a combination of negative parts
//!   `min(i − ε − l, 0)`;
//! - [`identities`]: the zero expressions used to make those coefficients
//!   non-negative;
//! - [`quadratize`]: constructions for general symmetric functions,
//!   monomials, threshold, exact-weight and parity functions;
//! - [`verify`]: exhaustive certification of any quadratic form;
//! - [`lift`]: embedding an arbitrary function into a symmetric one on
//!   `2^n − 1` variables and projecting quadratizations back.
//!
//! All arithmetic is exact.

pub mod cli;
pub mod error;
pub mod identities;
pub mod lift;
pub mod pbf;
pub mod poly;
pub mod quadratize;
pub mod rational;
pub mod representation;
pub mod verify;

pub use error::{Error, Result};
pub use pbf::{
    canonicalize, eval_quadform, eval_symmetric, interpolate_multilinear, MultilinearPoly,
    PseudoBoolean, QuadForm, SymmetricSpec, TruthTable,
};
pub use poly::{Monomial, Poly, Var};
pub use quadratize::{Family, QuadratizationResult};
pub use rational::Rational;
pub use representation::NegPartRep;
pub use verify::VerifyReport;
