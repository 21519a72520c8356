//! Exact computer algebra for a family of very affine surfaces.
//!
//! The crate builds, entirely over exact number types, the surfaces obtained
//! by pushing the plane `{w + y = 1, x + z = 1}` inside the torus `(C*)^4`
//! through the monomial quotient map `(w, x, y, z) -> (w^n, w/x, w*y, w*z)`
//! for odd `n`. It provides the machinery needed to certify their geometry:
//! cyclotomic field arithmetic, multivariate polynomial rings over any exact
//! field, Groebner bases with elimination and saturation, exact linear
//! algebra, and the intersection and Euler characteristic certificates built
//! on top of all that.
//!
//! Everything is deterministic: no hashing of pointers, no randomized
//! pivoting, no wall clock anywhere. Two runs with the same inputs produce
//! byte identical results.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod budget;
pub mod cyclotomic;
pub mod euler;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod report;
pub mod surface;
pub mod univariate;

pub use budget::{Budget, BudgetExhausted};
pub use cyclotomic::{CyclotomicField, CyclotomicNumber};
pub use euler::{EulerReport, IntersectionCertificate};
pub use field::{Field, Rationals};
pub use groebner::{EliminationStrategy, GroebnerError, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{MultiPoly, PolynomialRing};
pub use rational::Rat;
pub use report::{Check, CheckStatus};
pub use surface::QuotientMap;
