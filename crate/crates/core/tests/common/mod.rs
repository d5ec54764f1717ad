//! Direct-summation oracles shared by the integration tests.
#![allow(dead_code)]

use g2_tokuyama::paramsum::{sum_ceil_half, sum_entry, AffineForm, EndpointWeights, ParityCond, ParitySystem, Var};
use g2_tokuyama::weights::{h, EntryStatus};
use g2_tokuyama::{LaurentPoly, SymSum, SymTerm, TPoly};
use num_rational::Rational64;

pub const MAX_WINDOW: i64 = 12;
pub const ODD: [i64; 4] = [-3, -1, 1, 3];

fn hw(u: i64, lo: i64, hi: i64) -> TPoly {
    h(EntryStatus::from_flags(u == lo, u == hi))
}

/// Window `L = l1`, `U = l1 + l2`, summed over `a`.
fn window_bounds() -> (AffineForm, AffineForm) {
    (AffineForm::var(Var::L1), AffineForm::from_terms(&[(Var::L1, 1), (Var::L2, 1)], 0))
}

fn check_windows(s: &SymSum, summand: impl Fn(i64, i64, i64) -> Option<(i64, i64)>) -> Result<(), String> {
    for lo in 0..=MAX_WINDOW {
        for hi in lo..=MAX_WINDOW {
            let got = s.evaluate(&[(Var::L1, lo), (Var::L2, hi - lo)]).map_err(|e| e.to_string())?;
            let mut want = LaurentPoly::zero();
            for u in lo..=hi {
                if let Some(m) = summand(u, lo, hi) {
                    want.add_term(m, &hw(u, lo, hi));
                }
            }
            if got != want {
                return Err(format!("window [{lo}, {hi}]: closed form {got}, direct {want}"));
            }
        }
    }
    Ok(())
}

/// `sum_{u=L}^{U} h(u) x^(p u + r L) y^(s u + k)` with integer exponents.
pub fn check_plain(p: i64, r: i64, s: i64, k: i64) -> Result<(), String> {
    let t = SymTerm::monomial(
        AffineForm::from_terms(&[(Var::A, p), (Var::L1, r)], 0),
        AffineForm::from_terms(&[(Var::A, s)], k),
    );
    let (lo, hi) = window_bounds();
    let sum = sum_entry(&SymSum::single(t), Var::A, &lo, &hi, &EndpointWeights::h()).map_err(|e| e.to_string())?;
    check_windows(&sum, |u, l, _| Some((p * u + r * l, s * u + k)))
}

/// `sum_{u=L}^{U} h(u) y^u x^((c1 + c2 u)/2) 1_0(c1 + c2 u)` for odd `c1, c2`.
pub fn check_parity(c1: i64, c2: i64) -> Result<(), String> {
    let form = AffineForm::from_terms(&[(Var::A, c2)], c1);
    let mut t = SymTerm::monomial(form.scale(Rational64::new(1, 2)), AffineForm::var(Var::A));
    t.conds = ParitySystem::from_conds([ParityCond::new(&form).map_err(|e| e.to_string())?]).expect("consistent");
    let (lo, hi) = window_bounds();
    let sum = sum_entry(&SymSum::single(t), Var::A, &lo, &hi, &EndpointWeights::h()).map_err(|e| e.to_string())?;
    check_windows(&sum, |u, _, _| {
        let n = c1 + c2 * u;
        (n.rem_euclid(2) == 0).then_some((n / 2, u))
    })
}

/// `sum_{b=ceil(c/2)}^{U} h(b) x^b y^c`, with `b` circled only when `2b = c`.
pub fn check_ceil_half() -> Result<(), String> {
    let t = SymTerm::monomial(AffineForm::var(Var::B), AffineForm::var(Var::C));
    let sum = sum_ceil_half(&SymSum::single(t), Var::B, &AffineForm::var(Var::C), &AffineForm::var(Var::L1), &EndpointWeights::h())
        .map_err(|e| e.to_string())?;
    for c in 0..=MAX_WINDOW {
        let lo = (c + 1) / 2;
        for hi in lo..=MAX_WINDOW {
            let got = sum.evaluate(&[(Var::C, c), (Var::L1, hi)]).map_err(|e| e.to_string())?;
            let mut want = LaurentPoly::zero();
            for b in lo..=hi {
                want.add_term((b, c), &h(EntryStatus::from_flags(2 * b == c, b == hi)));
            }
            if got != want {
                return Err(format!("c={c}, U={hi}: closed form {got}, direct {want}"));
            }
        }
    }
    Ok(())
}

/// Every closed-form family over its full window range.
pub fn check_all_closed_forms() -> Result<(), String> {
    for (p, r, s, k) in [(1, 0, 0, 0), (1, 1, 2, -1), (-2, 3, 1, 0), (0, 1, 1, 2), (3, -1, -2, 1)] {
        check_plain(p, r, s, k)?;
    }
    for c1 in ODD {
        for c2 in ODD {
            check_parity(c1, c2)?;
        }
    }
    check_ceil_half()
}
