//! Exact arithmetic: `Z[t]` coefficients, Laurent polynomials in `x, y`, and
//! rational functions over binomial denominators.

mod json;
mod laurent;
mod rational;
mod tpoly;

pub use laurent::{LaurentPoly, Monomial};
pub use rational::{sum_all, BinomialFactor, Denominator, RationalFn};
pub use tpoly::TPoly;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for an exact rational `n/d`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact evaluation at a rational point.
pub trait EvalAt {
    fn eval_at(&self, x: &BigRational, y: &BigRational, t: &BigRational) -> crate::Result<BigRational>;
}

impl EvalAt for LaurentPoly {
    fn eval_at(&self, x: &BigRational, y: &BigRational, t: &BigRational) -> crate::Result<BigRational> {
        self.eval(x, y, t)
    }
}

impl EvalAt for RationalFn {
    fn eval_at(&self, x: &BigRational, y: &BigRational, t: &BigRational) -> crate::Result<BigRational> {
        self.eval(x, y, t)
    }
}
