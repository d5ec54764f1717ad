//! Laurent polynomials in `x, y` with coefficients in `Z[t]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::TPoly;
use crate::error::{Error, Result};

/// Exponent pair `(ex, ey)` of the monomial `x^ex y^ey`. The derived ordering
/// is lexicographic, which is also the monomial order used for division.
pub type Monomial = (i64, i64);

/// A finitely supported map from monomials to nonzero `TPoly` coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, TPoly>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(TPoly::one())
    }

    pub fn constant(c: TPoly) -> Self {
        Self::term(0, 0, c)
    }

    pub fn monomial(ex: i64, ey: i64) -> Self {
        Self::term(ex, ey, TPoly::one())
    }

    pub fn term(ex: i64, ey: i64, c: TPoly) -> Self {
        let mut p = Self::zero();
        p.add_term((ex, ey), &c);
        p
    }

    /// `1 + sign * x^ex y^ey`
    pub fn binomial(ex: i64, ey: i64, sign: i64) -> Self {
        Self::one() + Self::term(ex, ey, TPoly::constant(sign))
    }

    /// `1 - t * x^ex y^ey`
    pub fn deformed_binomial(ex: i64, ey: i64) -> Self {
        Self::one() - Self::term(ex, ey, TPoly::t())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, TPoly)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &TPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, ex: i64, ey: i64) -> TPoly {
        self.terms.get(&(ex, ey)).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(&Monomial, &TPoly)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: &TPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn sub_term(&mut self, m: Monomial, c: &TPoly) {
        self.add_term(m, &-c);
    }

    pub fn shift(&self, ex: i64, ey: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + ex, b + ey), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &TPoly) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&m, a)| (m, a * c)).collect(),
        }
    }

    /// Specialize `t` to `0`.
    pub fn at_t_zero(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .map(|(&m, c)| (m, TPoly::new(vec![c.coeff(0)]))),
        )
    }

    /// Smallest and largest exponents of `x` and of `y` over the support.
    pub fn exponent_box(&self) -> Option<(Monomial, Monomial)> {
        let mut it = self.terms.keys();
        let &(x0, y0) = it.next()?;
        let (mut lo, mut hi) = ((x0, y0), (x0, y0));
        for &(a, b) in it {
            lo = (lo.0.min(a), lo.1.min(b));
            hi = (hi.0.max(a), hi.1.max(b));
        }
        Some((lo, hi))
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient by leading-term elimination in lexicographic order.
    ///
    /// Any true quotient has its support inside the box spanned by the
    /// per-variable degree differences, so a quotient term outside that box
    /// proves non-divisibility and keeps the loop finite.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        let Some((&dlead, dcoef)) = d.leading() else {
            return Err(Error::NonDivisible("division by zero".into()));
        };
        let Some((nlo, nhi)) = self.exponent_box() else {
            return Ok(LaurentPoly::zero());
        };
        let (dlo, dhi) = d.exponent_box().expect("nonzero divisor");
        let qlo = (nlo.0 - dlo.0, nlo.1 - dlo.1);
        let qhi = (nhi.0 - dhi.0, nhi.1 - dhi.1);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((&rlead, rcoef)) = rem.leading() {
            let s = (rlead.0 - dlead.0, rlead.1 - dlead.1);
            if s.0 < qlo.0 || s.0 > qhi.0 || s.1 < qlo.1 || s.1 > qhi.1 {
                return Err(Error::NonDivisible(format!("quotient term x^{}y^{} out of range", s.0, s.1)));
            }
            let Some(c) = rcoef.div_exact(dcoef) else {
                return Err(Error::NonDivisible(format!("coefficient {rcoef} not divisible by {dcoef}")));
            };
            for (&(a, b), dc) in &d.terms {
                rem.sub_term((a + s.0, b + s.1), &(&c * dc));
            }
            quot.add_term(s, &c);
        }
        Ok(quot)
    }

    /// Evaluate at exact rational `x, y, t`.
    pub fn eval(&self, x: &BigRational, y: &BigRational, t: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            acc += rational_pow(x, a)? * rational_pow(y, b)? * c.eval(t);
        }
        Ok(acc)
    }
}

pub(crate) fn rational_pow(base: &BigRational, e: i64) -> Result<BigRational> {
    if e < 0 {
        if base.is_zero() {
            return Err(Error::Pole("zero raised to a negative power".into()));
        }
        return rational_pow(&base.recip(), -e);
    }
    let mut acc = BigRational::one();
    let mut b = base.clone();
    let mut e = e as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    Ok(acc)
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&m, c) in &rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&m, c) in &rhs.terms {
            self.sub_term(m, c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(p, q), d) in &rhs.terms {
                out.add_term((a + p, b + q), &(c * d));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<TPoly> for LaurentPoly {
    fn from(c: TPoly) -> Self {
        LaurentPoly::constant(c)
    }
}

pub(crate) fn fmt_monomial(f: &mut fmt::Formatter<'_>, ex: i64, ey: i64) -> fmt::Result {
    let mut parts = Vec::new();
    for (v, e) in [("x", ex), ("y", ey)] {
        match e {
            0 => {}
            1 => parts.push(v.to_string()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    write!(f, "{}", parts.join("*"))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mono = (a, b) != (0, 0);
            match (c.is_one(), mono) {
                (true, true) => {}
                (_, false) => write!(f, "({c})")?,
                (false, true) => write!(f, "({c})*")?,
            }
            if mono {
                fmt_monomial(f, a, b)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> LaurentPoly {
        LaurentPoly::monomial(1, 0)
    }
    fn y() -> LaurentPoly {
        LaurentPoly::monomial(0, 1)
    }

    #[test]
    fn add_cancels_to_canonical_zero() {
        let one_minus_x = LaurentPoly::binomial(1, 0, -1);
        assert_eq!(&one_minus_x + &x(), LaurentPoly::one());
        assert_eq!(&one_minus_x + &LaurentPoly::zero(), one_minus_x);
        let p = &LaurentPoly::deformed_binomial(1, 0) + &LaurentPoly::deformed_binomial(0, 1);
        let expect = LaurentPoly::from_terms([
            ((0, 0), TPoly::constant(2)),
            ((1, 0), -TPoly::t()),
            ((0, 1), -TPoly::t()),
        ]);
        assert_eq!(p, expect);
        assert!((&x() - &x()).is_zero());
    }

    #[test]
    fn products() {
        let p = &LaurentPoly::binomial(1, 0, -1) * &LaurentPoly::binomial(1, 0, 1);
        assert_eq!(p, LaurentPoly::binomial(2, 0, -1));
        assert_eq!(&LaurentPoly::monomial(-1, 0) * &x(), LaurentPoly::one());
    }

    #[test]
    fn division() {
        let n = LaurentPoly::binomial(2, 0, -1);
        let q = n.div_exact(&LaurentPoly::binomial(1, 0, -1)).unwrap();
        assert_eq!(q, LaurentPoly::binomial(1, 0, 1));
        assert!(matches!(
            n.div_exact(&LaurentPoly::binomial(0, 1, -1)),
            Err(Error::NonDivisible(_))
        ));
        assert!(LaurentPoly::one().div_exact(&(&LaurentPoly::one() - &y())).is_err());
        assert!(n.div_exact(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn division_with_t_coefficients() {
        let a = LaurentPoly::deformed_binomial(1, 1);
        let b = &LaurentPoly::deformed_binomial(2, 0) * &LaurentPoly::binomial(0, 1, 1);
        let q = (&a * &b).div_exact(&b).unwrap();
        assert_eq!(q, a);
    }

    #[test]
    fn evaluation() {
        let half = BigRational::new(1.into(), 2.into());
        let two = BigRational::from_integer(2.into());
        let one = BigRational::one();
        let p = LaurentPoly::deformed_binomial(1, 0);
        assert!(p.eval(&two, &one, &half).unwrap().is_zero());
        assert!(LaurentPoly::monomial(-1, 0)
            .eval(&BigRational::zero(), &one, &one)
            .is_err());
    }
}
