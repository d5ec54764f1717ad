//! Final cancellation and the comparison of every table with its printed
//! version.

use std::collections::BTreeSet;

use serde::Serialize;

use super::collect::{collect, MultiDegree, MultiDegreeTable};
use super::engine::{adj_symbolic, adj_symbolic_with, std_symbolic, std_symbolic_with, Expansion};
use super::tables::{compare_table, printed_inconsistencies, t_fn, Discrepancy, PrintedTable, RowCheck};
use crate::error::Result;
use crate::verify::weyl_table;

/// Degree-wise sum, zero entries dropped.
pub fn add_tables(a: &MultiDegreeTable, b: &MultiDegreeTable) -> MultiDegreeTable {
    let mut out = a.clone();
    for (d, c) in &b.entries {
        let sum = match out.entries.get(d) {
            Some(prev) => prev.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            out.entries.remove(d);
        } else {
            out.entries.insert(*d, sum);
        }
    }
    out
}

pub fn final_table(eps1: i64, eps2: i64) -> Result<MultiDegreeTable> {
    let std = collect(&std_symbolic()?, eps1, eps2)?;
    let adj = collect(&adj_symbolic()?, eps1, eps2)?;
    Ok(add_tables(&std, &adj))
}

#[derive(Clone, Debug, Serialize)]
pub struct Counts {
    pub std_terms_raw: usize,
    pub adj_terms_raw: usize,
    pub std_terms_merged: usize,
    pub adj_terms_merged: usize,
    pub std_degrees: usize,
    pub adj_degrees: usize,
    pub union_degrees: usize,
    pub std_nonzero: usize,
    pub adj_nonzero: usize,
}

pub fn counts() -> Result<Counts> {
    let (sr, ar) = (std_symbolic_with(Expansion::Raw)?, adj_symbolic_with(Expansion::Raw)?);
    let (sm, am) = (std_symbolic()?, adj_symbolic()?);
    let mut union = sr.raw_degrees();
    union.extend(ar.raw_degrees());
    Ok(Counts {
        std_terms_raw: sr.len(),
        adj_terms_raw: ar.len(),
        std_terms_merged: sm.len(),
        adj_terms_merged: am.len(),
        std_degrees: sr.raw_degree_count(),
        adj_degrees: ar.raw_degree_count(),
        union_degrees: union.len(),
        std_nonzero: collect(&sm, 0, 0)?.len(),
        adj_nonzero: collect(&am, 0, 0)?.len(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CancellationCheck {
    pub eps: (i64, i64),
    /// Support equals the Weyl-side degrees.
    pub support_matches: bool,
    /// Every surviving coefficient is `T` or `-T`.
    pub all_plus_minus_t: bool,
    /// Equal to the Weyl-side table, signs included.
    pub equals_weyl_side: bool,
    pub surviving: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrataReport {
    pub table1: Vec<RowCheck>,
    pub table2: Vec<RowCheck>,
    pub table3: Vec<RowCheck>,
    pub cancellation: Vec<CancellationCheck>,
    pub parity_independent: bool,
    /// Degrees where the printed standard and adjusted rows do not add up to
    /// the printed Weyl row.
    pub printed_inconsistent: Vec<MultiDegree>,
}

impl ErrataReport {
    pub fn flagged(&self) -> impl Iterator<Item = &RowCheck> {
        self.table1.iter().chain(&self.table2).chain(&self.table3).filter(|r| !r.agrees)
    }

    /// Degrees of the printed Weyl table whose sign disagrees with the
    /// computed one.
    pub fn weyl_sign_rows(&self) -> BTreeSet<MultiDegree> {
        self.table1
            .iter()
            .filter(|r| r.discrepancy == Some(Discrepancy::Sign))
            .map(|r| r.degree)
            .collect()
    }
}

fn check_cancellation(eps: (i64, i64), table: &MultiDegreeTable, weyl: &MultiDegreeTable) -> CancellationCheck {
    let t = t_fn();
    let minus_t = t.neg();
    CancellationCheck {
        eps,
        support_matches: table.degrees().eq(weyl.degrees()),
        all_plus_minus_t: table.entries.values().all(|c| c.rf_eq(&t) || c.rf_eq(&minus_t)),
        equals_weyl_side: table.equivalent(weyl),
        surviving: table.len(),
    }
}

pub fn compare_tables() -> Result<ErrataReport> {
    let (sm, am) = (std_symbolic()?, adj_symbolic()?);
    let weyl = weyl_table();
    let std0 = collect(&sm, 0, 0)?;
    let adj0 = collect(&am, 0, 0)?;
    let mut cancellation = Vec::new();
    let mut finals = Vec::new();
    for e1 in 0..2 {
        for e2 in 0..2 {
            let f = add_tables(&collect(&sm, e1, e2)?, &collect(&am, e1, e2)?);
            cancellation.push(check_cancellation((e1, e2), &f, &weyl));
            finals.push(f);
        }
    }
    let parity_independent = finals.windows(2).all(|w| w[0].equivalent(&w[1]));
    Ok(ErrataReport {
        table1: compare_table(PrintedTable::Weyl, &weyl),
        table2: compare_table(PrintedTable::Standard, &std0),
        table3: compare_table(PrintedTable::Adjusted, &adj0),
        cancellation,
        parity_independent,
        printed_inconsistent: printed_inconsistencies(),
    })
}
