//! Closed forms for weighted geometric sums over a parameter-dependent
//! interval.
//!
//! A weight that is constant on the interior and may differ at the two
//! endpoints is split as `w_i + (w_l - w_i)[u = L] + (w_h - w_i)[u = U]`;
//! collecting by endpoint gives, for ratio `X`,
//!
//! ```text
//! sum_{u=L}^{U} w(u) X^u = X^L (w_l - (w_l - w_i) X) / (1 - X)
//!                        + X^U ((w_h - w_i) - w_h X) / (1 - X)
//! ```
//!
//! valid whenever `U >= L`, and also at `U = L` as long as
//! `w_l + w_h - w_i` is the weight of a point that is both endpoints.

use super::affine::{AffineForm, Var};
use super::parity::ParityCond;
use super::term::{SymSum, SymTerm};
use crate::algebra::{LaurentPoly, RationalFn, TPoly};
use crate::error::{Error, Result};
use crate::weights::{h, EntryStatus};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointWeights {
    pub low: TPoly,
    pub interior: TPoly,
    pub high: TPoly,
}

impl EndpointWeights {
    pub fn new(low: TPoly, interior: TPoly, high: TPoly) -> Self {
        EndpointWeights { low, interior, high }
    }

    /// Decoration weights: circled at the lower end, boxed at the upper.
    pub fn h() -> Self {
        Self::new(h(EntryStatus::Circled), h(EntryStatus::Plain), h(EntryStatus::Boxed))
    }

    /// Weight 1 strictly inside, 0 at both ends.
    pub fn interior_only() -> Self {
        Self::new(TPoly::zero(), TPoly::one(), TPoly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.low.is_zero() && self.interior.is_zero() && self.high.is_zero()
    }
}

/// `(c0 + c1 z) / (1 - z)` for `z = x^ex y^ey`.
fn anchor(c0: TPoly, c1: TPoly, ratio: (i64, i64)) -> Result<Option<RationalFn>> {
    if c0.is_zero() && c1.is_zero() {
        return Ok(None);
    }
    let mut num = LaurentPoly::constant(c0);
    num.add_term(ratio, &c1);
    RationalFn::over_binomial(num, ratio.0, ratio.1, -1).map(Some)
}

fn ratio_of(t: &SymTerm, u: Var, mult: i64) -> Result<(i64, i64)> {
    let k = num_rational::Rational64::from_integer(mult);
    let (bx, by) = (t.xexp.coeff(u) * k, t.yexp.coeff(u) * k);
    if !bx.is_integer() || !by.is_integer() {
        return Err(Error::NonAffine {
            var: u.to_string(),
            detail: format!("ratio x^({bx}) y^({by}) is not a monomial"),
        });
    }
    let r = (bx.to_integer(), by.to_integer());
    if r == (0, 0) {
        return Err(Error::NonAffine { var: u.to_string(), detail: "summand does not depend on it".into() });
    }
    Ok(r)
}

fn push_anchor(
    out: &mut Vec<SymTerm>,
    t: &SymTerm,
    u: Var,
    at: &AffineForm,
    factor: Option<RationalFn>,
    extra: Option<ParityCond>,
) -> Result<()> {
    let Some(factor) = factor else { return Ok(()) };
    let Some(mut s) = t.substitute(u, at)? else { return Ok(()) };
    if let Some(c) = extra {
        match s.conds.with(c) {
            Some(conds) => s.conds = conds,
            None => return Ok(()),
        }
    }
    s.coeff = s.coeff.mul(&factor);
    if !s.coeff.is_zero() {
        out.push(s);
    }
    Ok(())
}

fn check_bound(u: Var, b: &AffineForm) -> Result<()> {
    if b.involves(u) {
        return Err(Error::Unbounded(format!("{u} appears in its own bound {b}")));
    }
    Ok(())
}

/// Sum over `lo <= u <= hi` with endpoint weights.
pub fn sum_entry(s: &SymSum, u: Var, lo: &AffineForm, hi: &AffineForm, w: &EndpointWeights) -> Result<SymSum> {
    check_bound(u, lo)?;
    check_bound(u, hi)?;
    let (wl, wi, wh) = (&w.low, &w.interior, &w.high);
    let mut out = Vec::new();
    for t in &s.terms {
        match t.conds.isolate(u) {
            (None, _) => {
                let x = ratio_of(t, u, 1)?;
                push_anchor(&mut out, t, u, lo, anchor(wl.clone(), -&(wl - wi), x)?, None)?;
                push_anchor(&mut out, t, u, hi, anchor(wh - wi, -wh, x)?, None)?;
            }
            (Some(_), _) => {
                // Only every other u contributes: ratio Z^2, and the first or
                // last surviving point is an interior one shifted by 1.
                let z2 = ratio_of(t, u, 2)?;
                push_anchor(&mut out, t, u, lo, anchor(wl.clone(), -&(wl - wi), z2)?, None)?;
                push_anchor(&mut out, t, u, &lo.plus_const(1), anchor(wi.clone(), TPoly::zero(), z2)?, None)?;
                push_anchor(&mut out, t, u, hi, anchor(wh - wi, -wh, z2)?, None)?;
                push_anchor(&mut out, t, u, &hi.plus_const(1), anchor(-wi, TPoly::zero(), z2)?, None)?;
            }
        }
    }
    SymSum { terms: out }.checked()
}

/// Sum over `ceil(n / 2) <= u <= hi` where the lower value is weighted as
/// `w.low` only when it equals `n / 2` exactly.
pub fn sum_ceil_half(s: &SymSum, u: Var, n: &AffineForm, hi: &AffineForm, w: &EndpointWeights) -> Result<SymSum> {
    check_bound(u, n)?;
    check_bound(u, hi)?;
    let (wl, wi, wh) = (&w.low, &w.interior, &w.high);
    let half = num_rational::Rational64::new(1, 2);
    let even = ParityCond::new(n)?;
    let odd = ParityCond::new(&n.plus_const(1))?;
    let mut out = Vec::new();
    for t in &s.terms {
        if t.conds.involves(u) {
            return Err(Error::NonAffine { var: u.to_string(), detail: "parity condition on a half-bounded sum".into() });
        }
        let x = ratio_of(t, u, 1)?;
        let at_half = n.scale(half);
        let at_half_up = n.plus_const(1).scale(half);
        push_anchor(&mut out, t, u, &at_half, anchor(wl.clone(), -&(wl - wi), x)?, Some(even))?;
        push_anchor(&mut out, t, u, &at_half_up, anchor(wi.clone(), TPoly::zero(), x)?, Some(odd))?;
        push_anchor(&mut out, t, u, hi, anchor(wh - wi, -wh, x)?, None)?;
    }
    SymSum { terms: out }.checked()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LaurentPoly;

    fn l1() -> AffineForm {
        AffineForm::var(Var::L1)
    }

    fn brute(lo: i64, hi: i64, f: impl Fn(i64) -> Option<(i64, i64, TPoly)>) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for u in lo..=hi {
            if let Some((ex, ey, c)) = f(u) {
                acc.add_term((ex, ey), &c);
            }
        }
        acc
    }

    fn hw(u: i64, lo: i64, hi: i64) -> TPoly {
        h(EntryStatus::from_flags(u == lo, u == hi))
    }

    #[test]
    fn plain_sum_matches_brute_force() {
        // sum_{u=0}^{l1} h(u) x^u y^(2u)
        let base = SymSum::single(SymTerm::monomial(AffineForm::var(Var::A), AffineForm::term(Var::A, 2)));
        let s = sum_entry(&base, Var::A, &AffineForm::zero(), &l1(), &EndpointWeights::h()).unwrap();
        for n in 0..7 {
            let got = s.evaluate(&[(Var::L1, n)]).unwrap();
            let want = brute(0, n, |u| Some((u, 2 * u, hw(u, 0, n))));
            assert_eq!(got, want, "l1={n}");
        }
    }

    #[test]
    fn parity_gated_sum_matches_brute_force() {
        // sum_{u=1}^{l1+1} [u + l1 even] w(u) x^((u + l1)/2) y^u
        let w = EndpointWeights::new(TPoly::constant(3), TPoly::one_minus_t(), TPoly::from_i64s(&[0, 2]));
        let form = AffineForm::from_terms(&[(Var::A, 1), (Var::L1, 1)], 0);
        let mut t = SymTerm::monomial(form.scale(num_rational::Rational64::new(1, 2)), AffineForm::var(Var::A));
        t.conds = super::super::parity::ParitySystem::from_conds([ParityCond::new(&form).unwrap()]).unwrap();
        let s = sum_entry(&SymSum::single(t), Var::A, &AffineForm::constant(1), &l1().plus_const(1), &w).unwrap();
        for n in 0..9 {
            let got = s.evaluate(&[(Var::L1, n)]).unwrap();
            let want = brute(1, n + 1, |u| {
                let c = if u == 1 { w.low.clone() } else if u == n + 1 { w.high.clone() } else { w.interior.clone() };
                ((u + n) % 2 == 0).then(|| ((u + n) / 2, u, c))
            });
            assert_eq!(got, want, "l1={n}");
        }
    }

    #[test]
    fn ceil_half_matches_brute_force() {
        // sum_{u=ceil(c/2)}^{c+l1} x^u y^c with weight circled only at u = c/2
        let base = SymSum::single(SymTerm::monomial(AffineForm::var(Var::B), AffineForm::var(Var::C)));
        let hi = AffineForm::from_terms(&[(Var::C, 1), (Var::L1, 1)], 0);
        let s = sum_ceil_half(&base, Var::B, &AffineForm::var(Var::C), &hi, &EndpointWeights::h()).unwrap();
        for c in 0..6 {
            for n in 0..4 {
                let got = s.evaluate(&[(Var::C, c), (Var::L1, n)]).unwrap();
                let lo = (c + 1) / 2;
                let want = brute(lo, c + n, |u| Some((u, c, h(EntryStatus::from_flags(2 * u == c, u == c + n)))));
                assert_eq!(got, want, "c={c} l1={n}");
            }
        }
    }

    #[test]
    fn constant_summand_is_rejected() {
        let base = SymSum::single(SymTerm::monomial(AffineForm::var(Var::B), AffineForm::zero()));
        let e = sum_entry(&base, Var::A, &AffineForm::zero(), &l1(), &EndpointWeights::h());
        assert!(matches!(e, Err(Error::NonAffine { .. })));
    }
}
