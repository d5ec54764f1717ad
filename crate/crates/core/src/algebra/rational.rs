//! Rational functions whose denominators are products of binomials `1 ± x^i y^j`.
//!
//! Denominators stay factored. Reduction is by trial exact division of the
//! numerator by each denominator factor; no multivariate gcd is computed, so
//! two equal functions may have different representations and equality is
//! decided by cross-multiplication.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::{LaurentPoly, TPoly};
use crate::error::{Error, Result};

/// The binomial `1 + sign * x^ex y^ey` with `(ex, ey)` lexicographically
/// positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinomialFactor {
    pub ex: i64,
    pub ey: i64,
    pub sign: i8,
}

impl BinomialFactor {
    /// `1 - x^ex y^ey`
    pub fn minus(ex: i64, ey: i64) -> Self {
        Self::new(ex, ey, -1)
    }

    /// `1 + x^ex y^ey`
    pub fn plus(ex: i64, ey: i64) -> Self {
        Self::new(ex, ey, 1)
    }

    /// Panics unless `(ex, ey)` is lexicographically positive and `sign` is ±1;
    /// use [`BinomialFactor::normalize`] for arbitrary exponents.
    pub fn new(ex: i64, ey: i64, sign: i8) -> Self {
        assert!((ex, ey) > (0, 0), "binomial exponent must be lexicographically positive");
        assert!(sign == 1 || sign == -1);
        BinomialFactor { ex, ey, sign }
    }

    /// Write `1 + sign * x^ex y^ey` as `unit * factor` with the factor in
    /// canonical orientation. `unit` is a signed monomial.
    pub fn normalize(ex: i64, ey: i64, sign: i8) -> Result<(LaurentPoly, BinomialFactor)> {
        if (ex, ey) == (0, 0) {
            return Err(Error::Pole("binomial with trivial monomial".into()));
        }
        if (ex, ey) > (0, 0) {
            return Ok((LaurentPoly::one(), BinomialFactor::new(ex, ey, sign)));
        }
        // 1 + sX = sX (1 + s X^-1) for s = ±1.
        let unit = LaurentPoly::term(ex, ey, TPoly::constant(sign as i64));
        Ok((unit, BinomialFactor::new(-ex, -ey, sign)))
    }

    pub fn to_poly(self) -> LaurentPoly {
        LaurentPoly::binomial(self.ex, self.ey, self.sign as i64)
    }

    pub fn eval(self, x: &BigRational, y: &BigRational) -> Result<BigRational> {
        self.to_poly().eval(x, y, &BigRational::zero())
    }
}

impl fmt::Display for BinomialFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1 {} ", if self.sign < 0 { "-" } else { "+" })?;
        super::laurent::fmt_monomial(f, self.ex, self.ey)?;
        write!(f, ")")
    }
}

pub type Denominator = BTreeMap<BinomialFactor, u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalFn {
    num: LaurentPoly,
    den: Denominator,
}

impl RationalFn {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        RationalFn { num, den: Denominator::new() }
    }

    pub fn constant(c: TPoly) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// `num / prod(den)`, reduced.
    pub fn new<I: IntoIterator<Item = BinomialFactor>>(num: LaurentPoly, den: I) -> Self {
        let mut d = Denominator::new();
        for f in den {
            *d.entry(f).or_insert(0) += 1;
        }
        let mut r = RationalFn { num, den: d };
        r.reduce();
        r
    }

    /// `num / (1 + sign x^ex y^ey)` for exponents of any orientation.
    pub fn over_binomial(num: LaurentPoly, ex: i64, ey: i64, sign: i8) -> Result<Self> {
        let (unit, f) = BinomialFactor::normalize(ex, ey, sign)?;
        // unit is a signed monomial, so its inverse is the same sign at the
        // negated exponent
        let (&(ux, uy), c) = unit.leading().expect("nonzero unit");
        let inv = LaurentPoly::term(-ux, -uy, c.clone());
        Ok(RationalFn::new(&num * &inv, [f]))
    }

    /// Constructor that skips reduction; used where the caller knows no
    /// factor divides or will reduce later.
    pub(crate) fn raw(num: LaurentPoly, den: Denominator) -> Self {
        if num.is_zero() {
            return RationalFn::zero();
        }
        RationalFn { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &Denominator {
        &self.den
    }

    pub fn den_factors(&self) -> impl Iterator<Item = BinomialFactor> + '_ {
        self.den.iter().flat_map(|(&f, &k)| std::iter::repeat_n(f, k as usize))
    }

    pub fn den_contains(&self, f: BinomialFactor) -> bool {
        self.den.contains_key(&f)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn den_poly(&self) -> LaurentPoly {
        product(&self.den)
    }

    /// Divide the numerator by denominator factors while the division is
    /// exact.
    pub fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let factors: Vec<BinomialFactor> = self.den.keys().copied().collect();
        for f in factors {
            let fp = f.to_poly();
            while let Some(k) = self.den.get_mut(&f) {
                match self.num.div_exact(&fp) {
                    Ok(q) => {
                        self.num = q;
                        *k -= 1;
                        if *k == 0 {
                            self.den.remove(&f);
                        }
                    }
                    Err(_) => break,
                }
            }
        }
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        let mut r = self.add_unreduced(other);
        r.reduce();
        r
    }

    pub fn sub(&self, other: &RationalFn) -> RationalFn {
        self.add(&other.neg())
    }

    /// Sum over the union of both denominator multisets without trial
    /// division.
    pub fn add_unreduced(&self, other: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let union = union(&self.den, &other.den);
        let a = &self.num * &product(&difference(&union, &self.den));
        let b = &other.num * &product(&difference(&union, &other.den));
        RationalFn::raw(&a + &b, union)
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        let mut den = self.den.clone();
        for (&f, &k) in &other.den {
            *den.entry(f).or_insert(0) += k;
        }
        let mut r = RationalFn::raw(&self.num * &other.num, den);
        r.reduce();
        r
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> RationalFn {
        self.mul(&RationalFn::from_poly(p.clone()))
    }

    /// Multiply by a polynomial without attempting cancellation.
    pub fn mul_poly_unreduced(&self, p: &LaurentPoly) -> RationalFn {
        RationalFn::raw(&self.num * p, self.den.clone())
    }

    pub fn scale(&self, c: &TPoly) -> RationalFn {
        RationalFn::raw(self.num.scale(c), self.den.clone())
    }

    pub fn shift(&self, ex: i64, ey: i64) -> RationalFn {
        RationalFn::raw(self.num.shift(ex, ey), self.den.clone())
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn::raw(-&self.num, self.den.clone())
    }

    /// Equality by cross-multiplication after removing shared factors.
    pub fn rf_eq(&self, other: &RationalFn) -> bool {
        let common = intersection(&self.den, &other.den);
        let da = difference(&self.den, &common);
        let db = difference(&other.den, &common);
        &self.num * &product(&db) == &other.num * &product(&da)
    }

    /// Convert to a polynomial if the denominator divides exactly.
    pub fn to_poly(&self) -> Result<LaurentPoly> {
        let mut num = self.num.clone();
        for f in self.den_factors() {
            num = num.div_exact(&f.to_poly())?;
        }
        Ok(num)
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational, t: &BigRational) -> Result<BigRational> {
        let mut den = BigRational::from_integer(1.into());
        for (&f, &k) in &self.den {
            let v = f.eval(x, y)?;
            if v.is_zero() {
                return Err(Error::Pole(format!("denominator factor {f} vanishes")));
            }
            for _ in 0..k {
                den *= &v;
            }
        }
        Ok(self.num.eval(x, y, t)? / den)
    }
}

fn union(a: &Denominator, b: &Denominator) -> Denominator {
    let mut out = a.clone();
    for (&f, &k) in b {
        let e = out.entry(f).or_insert(0);
        *e = (*e).max(k);
    }
    out
}

fn intersection(a: &Denominator, b: &Denominator) -> Denominator {
    a.iter()
        .filter_map(|(f, &k)| b.get(f).map(|&j| (*f, k.min(j))))
        .collect()
}

/// `a - b` as multisets; `b` must be contained in `a`.
fn difference(a: &Denominator, b: &Denominator) -> Denominator {
    a.iter()
        .filter_map(|(f, &k)| {
            let r = k - b.get(f).copied().unwrap_or(0);
            (r > 0).then_some((*f, r))
        })
        .collect()
}

pub(crate) fn product(d: &Denominator) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for (&f, &k) in d {
        let fp = f.to_poly();
        for _ in 0..k {
            acc = &acc * &fp;
        }
    }
    acc
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ", self.num)?;
        for factor in self.den_factors() {
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Sum many rational functions exactly, grouping by denominator first so that
/// only one cross-multiplication per distinct denominator is needed.
pub fn sum_all<'a, I: IntoIterator<Item = &'a RationalFn>>(items: I) -> RationalFn {
    let mut groups: BTreeMap<Vec<(BinomialFactor, u32)>, LaurentPoly> = BTreeMap::new();
    for r in items {
        if r.is_zero() {
            continue;
        }
        let key: Vec<_> = r.den.iter().map(|(&f, &k)| (f, k)).collect();
        *groups.entry(key).or_default() += &r.num;
    }
    let mut acc = RationalFn::zero();
    for (key, num) in groups {
        if num.is_zero() {
            continue;
        }
        acc = acc.add_unreduced(&RationalFn::raw(num, key.into_iter().collect()));
    }
    acc.reduce();
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn over_binomial_any_orientation() {
        // 1 / (1 - x^-1) at x = 2 is 2; 1 / (1 + x^-1 y) at x = 3, y = 2 is 3/5
        let r = RationalFn::over_binomial(LaurentPoly::one(), -1, 0, -1).unwrap();
        assert_eq!(r.eval(&rat(2, 1), &rat(5, 1), &rat(1, 3)).unwrap(), rat(2, 1));
        let r = RationalFn::over_binomial(LaurentPoly::one(), -1, 1, 1).unwrap();
        assert_eq!(r.eval(&rat(3, 1), &rat(2, 1), &rat(0, 1)).unwrap(), rat(3, 5));
        let r = RationalFn::over_binomial(LaurentPoly::monomial(1, 0), 2, 1, -1).unwrap();
        assert_eq!(r.eval(&rat(2, 1), &rat(1, 1), &rat(0, 1)).unwrap(), rat(-2, 3));
    }

    #[test]
    fn normalize_flips_negative_exponents() {
        // 1 - x^-1 = -x^-1 (1 - x)
        let (unit, f) = BinomialFactor::normalize(-1, 0, -1).unwrap();
        assert_eq!(f, BinomialFactor::minus(1, 0));
        assert_eq!(&unit * &f.to_poly(), LaurentPoly::binomial(-1, 0, -1));
        assert!(BinomialFactor::normalize(0, 0, 1).is_err());
    }

    #[test]
    fn add_zero_is_identity() {
        let a = RationalFn::new(LaurentPoly::monomial(1, 2), [BinomialFactor::minus(1, 0)]);
        assert_eq!(a.add(&RationalFn::zero()), a);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn reduction_cancels_factor() {
        let r = RationalFn::new(LaurentPoly::binomial(2, 0, -1), [BinomialFactor::minus(1, 0)]);
        assert!(r.is_polynomial());
        assert_eq!(r.numerator(), &LaurentPoly::binomial(1, 0, 1));
    }

    #[test]
    fn geometric_sum_identity() {
        // 1/(1-x) - x/(1-x) = 1
        let f = BinomialFactor::minus(1, 0);
        let a = RationalFn::new(LaurentPoly::one(), [f]);
        let b = RationalFn::new(LaurentPoly::monomial(1, 0), [f]);
        assert!(a.sub(&b).rf_eq(&RationalFn::one()));
    }

    #[test]
    fn cross_multiplication_equality() {
        // 1/(1-x^2) == 1/((1-x)(1+x)), which trial division cannot see directly.
        let a = RationalFn::new(LaurentPoly::one(), [BinomialFactor::minus(2, 0)]);
        let b = RationalFn::new(
            LaurentPoly::one(),
            [BinomialFactor::minus(1, 0), BinomialFactor::plus(1, 0)],
        );
        assert!(a.rf_eq(&b));
        assert_ne!(a, b);
    }

    #[test]
    fn pole_detection() {
        let a = RationalFn::new(LaurentPoly::one(), [BinomialFactor::minus(1, 0)]);
        let one = BigRational::from_integer(1.into());
        let two = BigRational::from_integer(2.into());
        assert!(matches!(a.eval(&one, &two, &two), Err(Error::Pole(_))));
        assert_eq!(a.eval(&two, &one, &one).unwrap(), -one);
    }
}
