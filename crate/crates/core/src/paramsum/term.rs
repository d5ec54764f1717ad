use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_rational::Rational64;

use super::affine::{AffineForm, Var};
use super::parity::ParitySystem;
use crate::algebra::{sum_all, LaurentPoly, RationalFn};
use crate::error::{Error, Result};

/// `coeff * x^xexp * y^yexp * prod(parity conditions)`.
#[derive(Clone, Debug)]
pub struct SymTerm {
    pub coeff: RationalFn,
    pub xexp: AffineForm,
    pub yexp: AffineForm,
    pub conds: ParitySystem,
}

impl SymTerm {
    pub fn monomial(xexp: AffineForm, yexp: AffineForm) -> Self {
        SymTerm { coeff: RationalFn::one(), xexp, yexp, conds: ParitySystem::new() }
    }

    pub fn involves(&self, v: Var) -> bool {
        self.xexp.involves(v) || self.yexp.involves(v) || self.conds.involves(v)
    }

    /// `None` when the parity conditions become contradictory.
    pub fn substitute(&self, v: Var, by: &AffineForm) -> Result<Option<SymTerm>> {
        let Some(conds) = self.conds.substitute(v, by)? else {
            return Ok(None);
        };
        Ok(Some(SymTerm {
            coeff: self.coeff.clone(),
            xexp: self.xexp.substitute(v, by),
            yexp: self.yexp.substitute(v, by),
            conds,
        }))
    }

    /// Value with every variable assigned; `None` when a condition fails.
    pub fn evaluate(&self, assign: &[(Var, i64)]) -> Result<Option<RationalFn>> {
        match self.conds.holds(assign) {
            Some(true) => {}
            Some(false) => return Ok(None),
            None => return Err(Error::UnresolvedParity(self.conds.to_string())),
        }
        let ex = integral_constant(&self.xexp.eval(assign), "x")?;
        let ey = integral_constant(&self.yexp.eval(assign), "y")?;
        Ok(Some(self.coeff.shift(ex, ey)))
    }
}

pub(crate) fn integral_constant(f: &AffineForm, what: &str) -> Result<i64> {
    if let Some(v) = f.vars().next() {
        return Err(Error::FreeVariable(format!("{v} in {what}-exponent {f}")));
    }
    if !f.constant.is_integer() {
        return Err(Error::NonAffine { var: what.into(), detail: format!("exponent {f}") });
    }
    Ok(f.constant.to_integer())
}

impl fmt::Display for SymTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] x^({}) y^({})", self.coeff, self.xexp, self.yexp)?;
        if !self.conds.is_empty() {
            write!(f, " {}", self.conds)?;
        }
        Ok(())
    }
}

pub fn term_limit() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("G2TOK_MAX_TERMS").ok().and_then(|s| s.parse().ok()).unwrap_or(1_000_000)
    })
}

#[derive(Clone, Debug, Default)]
pub struct SymSum {
    pub terms: Vec<SymTerm>,
}

type TermKey = (AffineForm, AffineForm, ParitySystem);

impl SymSum {
    pub fn single(t: SymTerm) -> Self {
        SymSum { terms: vec![t] }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn extend(&mut self, other: SymSum) {
        self.terms.extend(other.terms);
    }

    pub(crate) fn checked(self) -> Result<SymSum> {
        if self.terms.len() > term_limit() {
            return Err(Error::TermLimit(term_limit()));
        }
        Ok(self)
    }

    /// Merge terms with identical exponents and conditions; drop zeros.
    pub fn simplify(self) -> Result<SymSum> {
        let mut groups: BTreeMap<TermKey, Vec<RationalFn>> = BTreeMap::new();
        for t in self.terms {
            groups.entry((t.xexp, t.yexp, t.conds)).or_default().push(t.coeff);
        }
        let terms: Vec<SymTerm> = groups
            .into_iter()
            .filter_map(|((xexp, yexp, conds), cs)| {
                let coeff = sum_all(cs.iter());
                (!coeff.is_zero()).then_some(SymTerm { coeff, xexp, yexp, conds })
            })
            .collect();
        if terms.len() > term_limit() {
            return Err(Error::TermLimit(term_limit()));
        }
        Ok(SymSum { terms })
    }

    pub fn substitute(&self, v: Var, by: &AffineForm) -> Result<SymSum> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if let Some(s) = t.substitute(v, by)? {
                terms.push(s);
            }
        }
        Ok(SymSum { terms })
    }

    pub fn scale(&self, c: &crate::TPoly) -> SymSum {
        let terms = self
            .terms
            .iter()
            .filter_map(|t| {
                let coeff = t.coeff.scale(c);
                (!coeff.is_zero()).then(|| SymTerm { coeff, ..t.clone() })
            })
            .collect();
        SymSum { terms }
    }

    pub fn evaluate(&self, assign: &[(Var, i64)]) -> Result<LaurentPoly> {
        let mut parts = Vec::new();
        for t in &self.terms {
            if let Some(v) = t.evaluate(assign)? {
                parts.push(v);
            }
        }
        sum_all(parts.iter()).to_poly()
    }

    /// Distinct `(l1, l2)`-coefficient pairs of the exponents.
    pub fn raw_degree_count(&self) -> usize {
        self.raw_degrees().len()
    }

    pub fn raw_degrees(&self) -> std::collections::BTreeSet<[Rational64; 4]> {
        self.terms
            .iter()
            .map(|t| {
                [t.xexp.coeff(Var::L1), t.yexp.coeff(Var::L1), t.xexp.coeff(Var::L2), t.yexp.coeff(Var::L2)]
            })
            .collect()
    }
}
