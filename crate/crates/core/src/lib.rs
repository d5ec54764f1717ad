//! Exact verification of the G2 analogue of Tokuyama's deformation of the Weyl
//! character formula.
//!
//! The identity equates a weighted sum over G2 Littelmann patterns with
//! `x^(theta+rho) D(x) * (Weyl numerator) / (Weyl denominator)`. This crate
//! checks it two ways:
//!
//! * [`verify`] enumerates every pattern for concrete `(l1, l2)` and compares
//!   both sides as exact Laurent polynomials;
//! * [`paramsum`] sums the patterns symbolically in `l1, l2` with closed-form
//!   boundary-weighted geometric sums, then collects the result into
//!   multi-degree tables whose coefficients must cancel to `±T(x)`.

pub mod algebra;
pub mod error;
pub mod paramsum;
pub mod patterns;
pub mod roots;
pub mod verify;
pub mod weights;

pub use algebra::{BinomialFactor, EvalAt, LaurentPoly, RationalFn, TPoly};
pub use error::{Error, Result};
pub use paramsum::{MultiDegree, MultiDegreeTable, SymSum, SymTerm};
pub use patterns::{Decoration, Entry, Pattern};
pub use roots::{RootVec, WeightParams, WeylElt};
pub use verify::VerificationReport;
pub use weights::{AdjRule, EntryStatus};
