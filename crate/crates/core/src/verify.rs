//! Both sides of the identity for concrete `(l1, l2)`.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::{LaurentPoly, TPoly};
use crate::error::{Error, Result};
use crate::paramsum::tables::{compare_table, t_fn, PrintedTable, RowCheck};
use crate::paramsum::{MultiDegree, MultiDegreeTable};
use crate::patterns::{fold_patterns, Decoration, Pattern};
use crate::roots::{fundamental_weight, long_element, positive_roots, weyl_group, RootVec, WeightParams};
use crate::weights::{h_adj_detail, h_std_from, AdjOutcome};

/// `prod_{alpha > 0} (1 - t x^alpha)`
pub fn d_poly() -> LaurentPoly {
    positive_roots()
        .iter()
        .fold(LaurentPoly::one(), |acc, r| {
            let (a, b) = r.monomial();
            &acc * &LaurentPoly::deformed_binomial(a, b)
        })
}

/// `prod_{alpha > 0} (1 - x^alpha)`
pub fn weyl_denominator() -> LaurentPoly {
    positive_roots().iter().fold(LaurentPoly::one(), |acc, r| {
        let (a, b) = r.monomial();
        &acc * &LaurentPoly::binomial(a, b, -1)
    })
}

#[derive(Clone, Debug, Default)]
struct Accum {
    std: BTreeMap<(i64, i64), TPoly>,
    adj: BTreeMap<(i64, i64), TPoly>,
    count: u64,
    rules: BTreeMap<String, u64>,
}

impl Accum {
    fn merge(mut self, o: Accum) -> Accum {
        for (m, c) in o.std {
            *self.std.entry(m).or_insert_with(TPoly::zero) += &c;
        }
        for (m, c) in o.adj {
            *self.adj.entry(m).or_insert_with(TPoly::zero) += &c;
        }
        self.count += o.count;
        for (k, v) in o.rules {
            *self.rules.entry(k).or_insert(0) += v;
        }
        self
    }
}

/// Weights depend on a pattern only through its decorations and, for the
/// adjusted weight, whether it has a bad middle and `a = 2d + 1 - e`.
type CacheKey = (Decoration, bool, bool);

fn accumulate(w: WeightParams) -> Accum {
    type Cache = HashMap<CacheKey, (TPoly, AdjOutcome)>;
    fold_patterns(
        w,
        || (Accum::default(), Cache::new()),
        |(acc, cache): &mut (Accum, Cache), p: Pattern| {
            let dec = p.decorations(w);
            let key = (dec, p.has_bad_middle(), p.a == 2 * p.d + 1 - p.e);
            let (hs, adj) = cache.entry(key).or_insert_with(|| (h_std_from(&dec), h_adj_detail(&p, &dec)));
            let m = p.weight_monomial();
            if !hs.is_zero() {
                *acc.std.entry(m).or_insert_with(TPoly::zero) += &*hs;
            }
            if adj.bad_middle {
                let label = adj.rule.map(|r| format!("rule {r}")).unwrap_or_else(|| "unmatched".into());
                *acc.rules.entry(label).or_insert(0) += 1;
                if !adj.value.is_zero() {
                    *acc.adj.entry(m).or_insert_with(TPoly::zero) += &adj.value;
                }
            }
            acc.count += 1;
        },
        |a, b| (a.0.merge(b.0), Cache::new()),
    )
    .0
}

pub fn lhs_std(w: WeightParams) -> LaurentPoly {
    LaurentPoly::from_terms(accumulate(w).std)
}

pub fn lhs_adj(w: WeightParams) -> LaurentPoly {
    LaurentPoly::from_terms(accumulate(w).adj)
}

pub fn lhs_sum(w: WeightParams) -> LaurentPoly {
    let acc = accumulate(w);
    &LaurentPoly::from_terms(acc.std) + &LaurentPoly::from_terms(acc.adj)
}

/// `x^(theta+rho) sum_w sgn(w) x^(w(theta+rho))`; `-w_l` is the identity on
/// weights, so the prefactor `x^(-w_l(theta+rho))` is `x^(theta+rho)`.
pub fn weyl_numerator(w: WeightParams) -> LaurentPoly {
    let lam = w.theta_plus_rho();
    assert_eq!(-long_element().apply(lam), lam, "-w_l must fix theta + rho");
    let mut n = LaurentPoly::zero();
    for g in weyl_group() {
        let (a, b) = (lam + g.apply(lam)).monomial();
        n.add_term((a, b), &TPoly::constant(g.sign));
    }
    n
}

pub fn rhs_formula(w: WeightParams) -> Result<LaurentPoly> {
    let q = weyl_numerator(w).div_exact(&weyl_denominator())?;
    Ok(&d_poly() * &q)
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub params: WeightParams,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub equal: bool,
    pub diff: LaurentPoly,
    pub pattern_count: u64,
    pub adj_rule_histogram: BTreeMap<String, u64>,
}

pub fn verify(w: WeightParams) -> Result<VerificationReport> {
    let acc = accumulate(w);
    let lhs = &LaurentPoly::from_terms(acc.std) + &LaurentPoly::from_terms(acc.adj);
    let rhs = rhs_formula(w)?;
    let diff = &lhs - &rhs;
    Ok(VerificationReport {
        params: w,
        equal: diff.is_zero(),
        lhs,
        rhs,
        diff,
        pattern_count: acc.count,
        adj_rule_histogram: acc.rules,
    })
}

/// Compare both sides at one exact point; `Err(Pole)` cannot occur because
/// both sides are polynomials.
pub fn spot_check(lhs: &LaurentPoly, rhs: &LaurentPoly, x: &BigRational, y: &BigRational, t: &BigRational) -> Result<bool> {
    Ok(lhs.eval(x, y, t)? == rhs.eval(x, y, t)?)
}

/// Weyl side as a multi-degree table: `w` contributes `sgn(w) T` at the
/// degree read off `varpi_i + w(varpi_i)`.
pub fn weyl_table() -> MultiDegreeTable {
    let t = t_fn();
    let mut table = MultiDegreeTable::default();
    for g in weyl_group() {
        let d1: RootVec = fundamental_weight(0) + g.apply(fundamental_weight(0));
        let d2: RootVec = fundamental_weight(1) + g.apply(fundamental_weight(1));
        let degree = MultiDegree::new(d1.m1, d1.m2, d2.m1, d2.m2);
        let c = if g.sign > 0 { t.clone() } else { t.neg() };
        let prev = table.entries.insert(degree, c);
        assert!(prev.is_none(), "Weyl group elements give distinct degrees");
    }
    table
}

/// Row-by-row comparison of [`weyl_table`] with the printed Weyl table.
pub fn weyl_table_check() -> Vec<RowCheck> {
    compare_table(PrintedTable::Weyl, &weyl_table())
}

pub fn require_positive(l1: i64, l2: i64) -> Result<WeightParams> {
    WeightParams::new(l1, l2).map_err(|_| Error::InvalidWeight { l1, l2 })
}
