//! The two generating functions with `l1, l2` kept symbolic.

use super::affine::{AffineForm, Var};
use super::summation::{sum_ceil_half, sum_entry, EndpointWeights};
use super::term::{SymSum, SymTerm};
use crate::error::{Error, Result};
use crate::patterns::{bound_exprs, Entry};
use crate::weights::{adj_value, EntryStatus};

/// Whether terms with equal exponents and conditions are merged after each
/// summation step. Unmerged output is the plain expansion of the closed
/// forms, term for term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Expansion {
    #[default]
    Merged,
    Raw,
}

impl Expansion {
    fn apply(self, s: SymSum) -> Result<SymSum> {
        match self {
            Expansion::Merged => s.simplify(),
            Expansion::Raw => Ok(s),
        }
    }
}

fn bounds(entry: Entry) -> (AffineForm, AffineForm) {
    let (lo, hi) = bound_exprs(entry);
    (AffineForm::from_bound(&lo), AffineForm::from_bound(&hi))
}

fn weight_monomial() -> SymTerm {
    SymTerm::monomial(
        AffineForm::from_terms(&[(Var::A, 1), (Var::C, 1), (Var::E, 1)], 0),
        AffineForm::from_terms(&[(Var::B, 1), (Var::D, 1), (Var::F, 1)], 0),
    )
}

/// `sum_pi H_std(pi) x^wt(pi)`, summing `f, a, b, c, d, e` innermost first.
pub fn std_symbolic() -> Result<SymSum> {
    std_symbolic_with(Expansion::Merged)
}

pub fn std_symbolic_with(mode: Expansion) -> Result<SymSum> {
    let h = EndpointWeights::h();
    let mut s = SymSum::single(weight_monomial());
    for entry in [Entry::F, Entry::A] {
        let (lo, hi) = bounds(entry);
        s = mode.apply(sum_entry(&s, Var::of_entry(entry), &lo, &hi, &h)?)?;
    }
    let (lo_b, hi_b) = bounds(Entry::B);
    s = mode.apply(sum_ceil_half(&s, Var::B, &lo_b.scale(num_rational::Rational64::from_integer(2)), &hi_b, &h)?)?;
    for entry in [Entry::C, Entry::D, Entry::E] {
        let (lo, hi) = bounds(entry);
        s = mode.apply(sum_entry(&s, Var::of_entry(entry), &lo, &hi, &h)?)?;
    }
    Ok(s)
}

/// Restrict `d` or `e` to the part of its range with the given status.
fn restrict(s: &SymSum, v: Var, status: EntryStatus, lo: &AffineForm, hi: &AffineForm) -> Result<SymSum> {
    match status {
        EntryStatus::Circled => s.substitute(v, lo),
        EntryStatus::Boxed => s.substitute(v, hi),
        EntryStatus::Plain => sum_entry(s, v, lo, hi, &EndpointWeights::interior_only()),
        EntryStatus::BothBoxedAndCircled => Err(Error::Unbounded(format!("{v} cannot be both circled and boxed"))),
    }
}

/// One `(status of e, status of d)` slice of the bad-middle locus.
fn adj_context(se: EntryStatus, sd: EntryStatus, mode: Expansion) -> Result<SymSum> {
    let av = |a, pinned| adj_value(se, sd, a, pinned);
    // The pinned value of a is 2d + 1 - e: the lower end exactly when d = e.
    let w = EndpointWeights::new(
        av(EntryStatus::Circled, sd == EntryStatus::Circled),
        av(EntryStatus::Plain, false),
        av(EntryStatus::Boxed, false),
    );
    let pinned = av(EntryStatus::Plain, true);
    if w.is_zero() && pinned.is_zero() {
        return Ok(SymSum::default());
    }
    if se == EntryStatus::Boxed {
        return Err(Error::Unbounded("bad-middle slice with e at its upper bound".into()));
    }
    let d = AffineForm::var(Var::D);
    let b = d.plus_const(1);
    let c = AffineForm::term(Var::D, 2).plus_const(1);
    let fix = |f: &AffineForm| f.substitute(Var::B, &b).substitute(Var::C, &c);

    let mut s = SymSum::single(weight_monomial()).substitute(Var::B, &b)?.substitute(Var::C, &c)?;
    let (lo_f, hi_f) = bounds(Entry::F);
    s = mode.apply(sum_entry(&s, Var::F, &fix(&lo_f), &fix(&hi_f), &EndpointWeights::h())?)?;

    let (lo_a, hi_a) = bounds(Entry::A);
    let mut summed = sum_entry(&s, Var::A, &fix(&lo_a), &fix(&hi_a), &w)?;
    let jump = &pinned - &w.interior;
    if sd != EntryStatus::Circled && !jump.is_zero() {
        let a0 = AffineForm::from_terms(&[(Var::D, 2), (Var::E, -1)], 1);
        summed.extend(s.substitute(Var::A, &a0)?.scale(&jump));
    }
    summed = mode.apply(summed)?;

    let (lo_d, hi_d) = bounds(Entry::D);
    summed = mode.apply(restrict(&summed, Var::D, sd, &lo_d, &hi_d)?)?;
    let (lo_e, hi_e) = bounds(Entry::E);
    mode.apply(restrict(&summed, Var::E, se, &lo_e, &hi_e)?)
}

/// `sum_pi H_adj(pi) x^wt(pi)` over the bad-middle locus `b = d + 1`,
/// `c = 2d + 1`.
pub fn adj_symbolic() -> Result<SymSum> {
    adj_symbolic_with(Expansion::Merged)
}

pub fn adj_symbolic_with(mode: Expansion) -> Result<SymSum> {
    use EntryStatus::*;
    let mut out = SymSum::default();
    for se in [Circled, Plain, Boxed] {
        for sd in [Circled, Plain, Boxed] {
            out.extend(adj_context(se, sd, mode)?);
        }
    }
    mode.apply(out)
}

/// Both pieces in one sum.
pub fn hat_symbolic() -> Result<SymSum> {
    let mut s = std_symbolic()?;
    s.extend(adj_symbolic()?);
    s.simplify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::WeightParams;
    use crate::verify::{lhs_adj, lhs_std};

    fn at(l1: i64, l2: i64) -> [(Var, i64); 2] {
        [(Var::L1, l1), (Var::L2, l2)]
    }

    #[test]
    fn symbolic_sums_match_enumeration() {
        let (s, a) = (std_symbolic().unwrap(), adj_symbolic().unwrap());
        let (sr, ar) = (std_symbolic_with(Expansion::Raw).unwrap(), adj_symbolic_with(Expansion::Raw).unwrap());
        for (l1, l2) in [(1, 1), (1, 3), (2, 2), (3, 1), (4, 3)] {
            let w = WeightParams::new(l1, l2).unwrap();
            let (bs, ba) = (lhs_std(w), lhs_adj(w));
            assert_eq!(s.evaluate(&at(l1, l2)).unwrap(), bs, "std ({l1},{l2})");
            assert_eq!(a.evaluate(&at(l1, l2)).unwrap(), ba, "adj ({l1},{l2})");
            assert_eq!(sr.evaluate(&at(l1, l2)).unwrap(), bs, "raw std ({l1},{l2})");
            assert_eq!(ar.evaluate(&at(l1, l2)).unwrap(), ba, "raw adj ({l1},{l2})");
        }
    }

    #[test]
    fn raw_expansion_degree_counts() {
        let s = std_symbolic_with(Expansion::Raw).unwrap();
        let a = adj_symbolic_with(Expansion::Raw).unwrap();
        let mut union = s.raw_degrees();
        union.extend(a.raw_degrees());
        assert_eq!((s.raw_degree_count(), a.raw_degree_count(), union.len()), (33, 14, 35));
    }

    #[test]
    fn adjusted_sum_has_no_parity_conditions() {
        let a = adj_symbolic_with(Expansion::Raw).unwrap();
        assert!(a.terms.iter().all(|t| t.conds.is_empty()));
        assert!(std_symbolic_with(Expansion::Raw).unwrap().terms.iter().any(|t| !t.conds.is_empty()));
    }

    #[test]
    fn only_shape_variables_remain() {
        for t in hat_symbolic().unwrap().terms {
            for v in [Var::A, Var::B, Var::C, Var::D, Var::E, Var::F] {
                assert!(!t.involves(v), "{v} left in {t}");
            }
        }
    }
}
