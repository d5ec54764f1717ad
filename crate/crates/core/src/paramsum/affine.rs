use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::patterns::{BoundExpr, Entry};

/// Summation and shape variables. `M1, M2` appear only after the parity
/// split `l_i = 2 m_i + eps_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    A,
    B,
    C,
    D,
    E,
    F,
    L1,
    L2,
    M1,
    M2,
}

pub const NVARS: usize = 10;

impl Var {
    pub const ALL: [Var; NVARS] =
        [Var::A, Var::B, Var::C, Var::D, Var::E, Var::F, Var::L1, Var::L2, Var::M1, Var::M2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["a", "b", "c", "d", "e", "f", "l1", "l2", "m1", "m2"][self.index()]
    }

    pub fn of_entry(e: Entry) -> Var {
        Var::ALL[e.index()]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `constant + sum coeffs[v] * v` with rational coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    pub constant: Rational64,
    coeffs: [Rational64; NVARS],
}

impl Default for AffineForm {
    fn default() -> Self {
        AffineForm { constant: Rational64::zero(), coeffs: [Rational64::zero(); NVARS] }
    }
}

impl AffineForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        AffineForm { constant: Rational64::from_integer(c), ..Self::default() }
    }

    pub fn var(v: Var) -> Self {
        Self::term(v, 1)
    }

    pub fn term(v: Var, k: i64) -> Self {
        let mut f = Self::default();
        f.coeffs[v.index()] = Rational64::from_integer(k);
        f
    }

    pub fn from_terms(terms: &[(Var, i64)], constant: i64) -> Self {
        let mut f = Self::constant(constant);
        for &(v, k) in terms {
            f.coeffs[v.index()] += Rational64::from_integer(k);
        }
        f
    }

    /// Convert a pattern bound (variables `a..f, l1, l2`).
    pub fn from_bound(b: &BoundExpr) -> Self {
        let mut f = Self::default();
        let den = Rational64::from_integer(b.denom);
        for (i, &c) in b.coeffs.iter().enumerate() {
            f.coeffs[i] = Rational64::from_integer(c) / den;
        }
        f.constant = Rational64::from_integer(b.constant) / den;
        f
    }

    pub fn coeff(&self, v: Var) -> Rational64 {
        self.coeffs[v.index()]
    }

    pub fn involves(&self, v: Var) -> bool {
        !self.coeffs[v.index()].is_zero()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        Var::ALL.into_iter().filter(|&v| self.involves(v))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.constant.is_integer() && self.coeffs.iter().all(Rational64::is_integer)
    }

    pub fn scale(&self, k: Rational64) -> Self {
        let mut out = *self;
        out.constant *= k;
        for c in out.coeffs.iter_mut() {
            *c *= k;
        }
        out
    }

    pub fn plus_const(&self, k: i64) -> Self {
        let mut out = *self;
        out.constant += Rational64::from_integer(k);
        out
    }

    /// Replace `v` by `by`.
    pub fn substitute(&self, v: Var, by: &AffineForm) -> Self {
        let k = self.coeff(v);
        if k.is_zero() {
            return *self;
        }
        let mut out = *self;
        out.coeffs[v.index()] = Rational64::zero();
        out + by.scale(k)
    }

    pub fn eval(&self, assign: &[(Var, i64)]) -> AffineForm {
        let mut out = *self;
        for &(v, x) in assign {
            out = out.substitute(v, &AffineForm::constant(x));
        }
        out
    }
}

impl Add for AffineForm {
    type Output = AffineForm;
    fn add(mut self, o: AffineForm) -> AffineForm {
        self.constant += o.constant;
        for (a, b) in self.coeffs.iter_mut().zip(o.coeffs) {
            *a += b;
        }
        self
    }
}

impl Neg for AffineForm {
    type Output = AffineForm;
    fn neg(self) -> AffineForm {
        self.scale(-Rational64::one())
    }
}

impl Sub for AffineForm {
    type Output = AffineForm;
    fn sub(self, o: AffineForm) -> AffineForm {
        self + (-o)
    }
}

fn fmt_ratio(r: Rational64) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for v in Var::ALL {
            let c = self.coeff(v);
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if !out.is_empty() {
                out.push_str(&format!(" {sign} "));
            } else if c.is_negative() {
                out.push('-');
            }
            let mag = c.abs();
            if mag.is_one() {
                out.push_str(v.name());
            } else {
                out.push_str(&format!("{}{}", fmt_ratio(mag), v.name()));
            }
        }
        let k = self.constant;
        if out.is_empty() {
            out = fmt_ratio(k);
        } else if !k.is_zero() {
            let sign = if k.is_negative() { "-" } else { "+" };
            out.push_str(&format!(" {sign} {}", fmt_ratio(k.abs())));
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_and_display() {
        let f = AffineForm::from_terms(&[(Var::L1, 1), (Var::D, 3), (Var::E, -2)], 0);
        assert_eq!(f.to_string(), "3d - 2e + l1");
        let g = f.substitute(Var::D, &AffineForm::var(Var::E).plus_const(1));
        assert_eq!(g.to_string(), "e + l1 + 3");
        let half = AffineForm::from_bound(&crate::patterns::bound_exprs(Entry::B).0);
        assert_eq!(half.to_string(), "1/2c");
        assert!(!half.is_integral());
        assert_eq!(f.eval(&[(Var::L1, 2), (Var::D, 1), (Var::E, 1)]), AffineForm::constant(3));
    }
}
