//! Parity indicators `1_0(n)` (1 if `n` is even) and conjunctions of them,
//! kept as a reduced linear system over GF(2).

use std::fmt;

use super::affine::{AffineForm, Var, NVARS};
use crate::error::{Error, Result};

/// `1_0(form)` for an integer affine form, reduced mod 2: a bit per variable
/// plus the constant bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityCond {
    mask: u16,
    odd: bool,
}

impl ParityCond {
    pub fn new(form: &AffineForm) -> Result<Self> {
        if !form.is_integral() {
            return Err(Error::NonAffine {
                var: "parity".into(),
                detail: format!("parity of non-integral form {form}"),
            });
        }
        let mut mask = 0u16;
        for v in form.vars() {
            if form.coeff(v).to_integer().rem_euclid(2) == 1 {
                mask |= 1 << v.index();
            }
        }
        Ok(ParityCond { mask, odd: form.constant.to_integer().rem_euclid(2) == 1 })
    }

    pub fn involves(&self, v: Var) -> bool {
        self.mask & (1 << v.index()) != 0
    }

    pub fn is_trivial(&self) -> bool {
        self.mask == 0
    }

    /// Holds for every assignment (`1_0(even constant)`).
    pub fn is_tautology(&self) -> bool {
        self.mask == 0 && !self.odd
    }

    pub fn is_contradiction(&self) -> bool {
        self.mask == 0 && self.odd
    }

    fn xor(self, o: ParityCond) -> ParityCond {
        ParityCond { mask: self.mask ^ o.mask, odd: self.odd ^ o.odd }
    }

    fn pivot(&self) -> Option<u32> {
        (self.mask != 0).then(|| 15 - self.mask.leading_zeros())
    }

    pub fn substitute(&self, v: Var, by: &AffineForm) -> Result<ParityCond> {
        if !self.involves(v) {
            return Ok(*self);
        }
        let p = ParityCond::new(by)?;
        let base = ParityCond { mask: self.mask & !(1 << v.index()), odd: self.odd };
        Ok(base.xor(p))
    }

    pub fn holds(&self, assign: &[(Var, i64)]) -> Option<bool> {
        let mut odd = self.odd;
        let mut mask = self.mask;
        for &(v, x) in assign {
            if mask & (1 << v.index()) != 0 {
                mask &= !(1 << v.index());
                odd ^= x.rem_euclid(2) == 1;
            }
        }
        (mask == 0).then_some(!odd)
    }
}

impl fmt::Display for ParityCond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = (0..NVARS)
            .filter(|i| self.mask & (1 << i) != 0)
            .map(|i| Var::ALL[i].name().to_string())
            .collect();
        if self.odd || parts.is_empty() {
            parts.push(if self.odd { "1" } else { "0" }.into());
        }
        write!(f, "1_0({})", parts.join(" + "))
    }
}

/// A satisfiable conjunction of parity conditions in reduced row echelon
/// form, so equal systems compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParitySystem {
    rows: Vec<ParityCond>,
}

impl ParitySystem {
    pub fn new() -> Self {
        Self::default()
    }

    /// `None` if the conditions are contradictory.
    pub fn from_conds<I: IntoIterator<Item = ParityCond>>(conds: I) -> Option<Self> {
        let mut rows: Vec<ParityCond> = Vec::new();
        for mut c in conds {
            for r in &rows {
                let p = r.pivot().expect("rows are nontrivial");
                if c.mask & (1 << p) != 0 {
                    c = c.xor(*r);
                }
            }
            if c.is_contradiction() {
                return None;
            }
            if c.is_tautology() {
                continue;
            }
            let p = c.pivot().expect("nontrivial");
            for r in rows.iter_mut() {
                if r.mask & (1 << p) != 0 {
                    *r = r.xor(c);
                }
            }
            rows.push(c);
        }
        rows.sort();
        Some(ParitySystem { rows })
    }

    pub fn rows(&self) -> &[ParityCond] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn with(&self, c: ParityCond) -> Option<Self> {
        Self::from_conds(self.rows.iter().copied().chain([c]))
    }

    pub fn involves(&self, v: Var) -> bool {
        self.rows.iter().any(|r| r.involves(v))
    }

    /// Split into the single condition mentioning `v` (if any) and an
    /// equivalent system of the remaining conditions, none of which mention `v`.
    pub fn isolate(&self, v: Var) -> (Option<ParityCond>, ParitySystem) {
        let Some(pos) = self.rows.iter().position(|r| r.involves(v)) else {
            return (None, self.clone());
        };
        let pivot = self.rows[pos];
        let rest = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, r)| if r.involves(v) { r.xor(pivot) } else { *r });
        let rest = Self::from_conds(rest).expect("subset of a consistent system");
        (Some(pivot), rest)
    }

    /// `None` if the substitution makes the system contradictory.
    pub fn substitute(&self, v: Var, by: &AffineForm) -> Result<Option<Self>> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.substitute(v, by))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_conds(rows))
    }

    /// Truth value once every involved variable is assigned; `None` if some
    /// variable is left free.
    pub fn holds(&self, assign: &[(Var, i64)]) -> Option<bool> {
        let mut all = true;
        for r in &self.rows {
            all &= r.holds(assign)?;
        }
        Some(all)
    }
}

impl fmt::Display for ParitySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}
