//! The coefficient functions `T, T1, T2, T3`, the tables as printed, and a
//! row-by-row comparison against what the engine computes.

use std::fmt;

use serde::Serialize;

use super::collect::{MultiDegree, MultiDegreeTable};
use crate::algebra::{BinomialFactor, LaurentPoly, RationalFn, TPoly};
use crate::roots::positive_roots;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Basis {
    T,
    T1,
    T2,
    T3,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::T, Basis::T1, Basis::T2, Basis::T3];

    pub fn name(self) -> &'static str {
        ["T", "T1", "T2", "T3"][self as usize]
    }

    pub fn value(self) -> RationalFn {
        match self {
            Basis::T => t_fn(),
            Basis::T1 => t1_fn(),
            Basis::T2 => t2_fn(),
            Basis::T3 => t3_fn(),
        }
    }
}

fn deformed(ms: &[(i64, i64)]) -> LaurentPoly {
    ms.iter().fold(LaurentPoly::one(), |acc, &(a, b)| &acc * &LaurentPoly::deformed_binomial(a, b))
}

/// `prod (1 - t x^alpha) / prod (1 - x^alpha)` over the positive roots.
pub fn t_fn() -> RationalFn {
    let roots: Vec<(i64, i64)> = positive_roots().iter().map(|r| r.monomial()).collect();
    RationalFn::new(deformed(&roots), roots.iter().map(|&(a, b)| BinomialFactor::minus(a, b)))
}

pub fn t1_fn() -> RationalFn {
    let num = deformed(&[(1, 0), (0, 1), (3, 2)]).scale(&TPoly::one_minus_t());
    RationalFn::new(num, [(1, 0), (0, 1), (4, 2), (3, 2)].map(|(a, b)| BinomialFactor::minus(a, b)))
}

pub fn t2_fn() -> RationalFn {
    let num = deformed(&[(0, 1), (1, 1), (3, 1)]).scale(&TPoly::one_minus_t());
    RationalFn::new(num, [(0, 1), (1, 1), (4, 2), (3, 1)].map(|(a, b)| BinomialFactor::minus(a, b)))
}

pub fn t3_fn() -> RationalFn {
    let num = deformed(&[(0, 1), (4, 2)]).scale(&TPoly::one_minus_t().pow(2));
    let den = [
        BinomialFactor::minus(1, 0),
        BinomialFactor::minus(1, 1),
        BinomialFactor::plus(2, 1),
        BinomialFactor::minus(3, 1),
        BinomialFactor::minus(3, 2),
    ];
    RationalFn::new(num, den)
}

/// `sign * t^tpow * x^ex y^ey * basis`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BasisTerm {
    pub sign: i8,
    pub tpow: u32,
    pub ex: i64,
    pub ey: i64,
    pub basis: Basis,
}

impl BasisTerm {
    pub const fn new(sign: i8, tpow: u32, ex: i64, ey: i64, basis: Basis) -> Self {
        BasisTerm { sign, tpow, ex, ey, basis }
    }

    pub fn value(&self) -> RationalFn {
        let c = TPoly::t().pow(self.tpow).scale(&(self.sign as i64).into());
        self.basis.value().shift(self.ex, self.ey).scale(&c)
    }
}

/// A sum of basis terms; empty means zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BasisExpr(pub Vec<BasisTerm>);

impl BasisExpr {
    pub fn value(&self) -> RationalFn {
        self.0.iter().fold(RationalFn::zero(), |acc, t| acc.add(&t.value()))
    }

    pub fn latex(&self) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, t) in self.0.iter().enumerate() {
            let sign = if t.sign < 0 { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                out.push(' ');
            }
            out.push_str(sign);
            if i > 0 {
                out.push(' ');
            }
            if t.tpow > 0 {
                out.push_str(if t.tpow == 1 { "q^{-1}" } else { "q^{-2}" });
            }
            out.push_str(&latex_monomial(t.ex, t.ey));
            let name = match t.basis {
                Basis::T => "T".to_string(),
                b => format!("T_{}", &b.name()[1..]),
            };
            out.push_str(&format!("{name}(\\mathbf{{x}})"));
        }
        out
    }
}

fn latex_monomial(ex: i64, ey: i64) -> String {
    let mut s = String::new();
    for (v, e) in [("x", ex), ("y", ey)] {
        match e {
            0 => {}
            1 => s.push_str(v),
            _ => s.push_str(&format!("{v}^{{{e}}}")),
        }
    }
    s
}

impl fmt::Display for BasisExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.0.iter().enumerate() {
            match (i, t.sign < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts = Vec::new();
            if t.tpow == 1 {
                parts.push("t".to_string());
            } else if t.tpow > 1 {
                parts.push(format!("t^{}", t.tpow));
            }
            for (v, e) in [("x", t.ex), ("y", t.ey)] {
                match e {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            parts.push(t.basis.name().to_string());
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

type Row = ([i64; 4], &'static [BasisTerm]);

const fn bt(sign: i8, tpow: u32, ex: i64, ey: i64, basis: Basis) -> BasisTerm {
    BasisTerm::new(sign, tpow, ex, ey, basis)
}

const PT: BasisTerm = bt(1, 0, 0, 0, Basis::T);
const MT: BasisTerm = bt(-1, 0, 0, 0, Basis::T);

const TABLE1: [Row; 12] = [
    ([1, 0, 0, 0], &[MT]),
    ([1, 1, 0, 1], &[PT]),
    ([0, 0, 0, 0], &[PT]),
    ([0, 0, 0, 1], &[MT]),
    ([1, 0, 3, 1], &[MT]),
    ([3, 1, 3, 1], &[PT]),
    ([3, 1, 6, 3], &[MT]),
    ([4, 2, 6, 3], &[PT]),
    ([1, 1, 3, 3], &[MT]),
    ([3, 2, 3, 3], &[MT]),
    ([3, 2, 6, 4], &[PT]),
    ([4, 2, 6, 4], &[MT]),
];

const TABLE2: [Row; 18] = [
    ([1, 0, 0, 0], &[MT, bt(1, 1, 2, 1, Basis::T1)]),
    ([1, 1, 0, 1], &[PT, bt(-1, 1, 2, 1, Basis::T2)]),
    ([1, 0, 4, 2], &[bt(-1, 1, 2, 1, Basis::T1)]),
    ([1, 1, 4, 3], &[bt(1, 1, 2, 1, Basis::T2)]),
    ([0, 0, 3, 2], &[bt(1, 1, 3, 1, Basis::T3)]),
    ([4, 2, 3, 2], &[bt(-1, 1, 3, 1, Basis::T3)]),
    ([4, 2, 4, 2], &[bt(1, 1, 3, 1, Basis::T1)]),
    ([4, 2, 4, 3], &[bt(-1, 1, 3, 1, Basis::T2)]),
    ([0, 0, 0, 0], &[PT, bt(-1, 1, 2, 1, Basis::T1)]),
    ([0, 0, 0, 1], &[MT, bt(1, 1, 2, 1, Basis::T2)]),
    ([1, 0, 3, 1], &[MT]),
    ([3, 1, 3, 1], &[PT]),
    ([3, 1, 6, 3], &[MT]),
    ([4, 2, 6, 3], &[PT]),
    ([1, 1, 3, 3], &[MT]),
    ([3, 2, 3, 3], &[MT]),
    ([3, 2, 6, 4], &[PT]),
    ([4, 2, 6, 4], &[MT]),
];

const TABLE3: [Row; 10] = [
    ([1, 0, 0, 0], &[bt(-1, 1, 2, 1, Basis::T1)]),
    ([1, 1, 0, 1], &[bt(1, 1, 2, 1, Basis::T2)]),
    ([1, 0, 4, 2], &[bt(1, 1, 2, 1, Basis::T1)]),
    ([1, 1, 4, 3], &[bt(-1, 1, 3, 1, Basis::T2)]),
    ([0, 0, 3, 2], &[bt(-1, 1, 3, 1, Basis::T3)]),
    ([4, 2, 3, 2], &[bt(1, 1, 2, 1, Basis::T3)]),
    ([4, 2, 4, 2], &[bt(-1, 1, 2, 1, Basis::T1)]),
    ([4, 2, 4, 3], &[bt(1, 1, 2, 1, Basis::T2)]),
    ([0, 0, 0, 0], &[bt(1, 1, 2, 1, Basis::T1)]),
    ([0, 0, 0, 1], &[bt(-1, 1, 2, 1, Basis::T2)]),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PrintedTable {
    Weyl,
    Standard,
    Adjusted,
}

impl PrintedTable {
    pub const ALL: [PrintedTable; 3] = [PrintedTable::Weyl, PrintedTable::Standard, PrintedTable::Adjusted];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_number(n: u8) -> Option<Self> {
        Self::ALL.get((n as usize).wrapping_sub(1)).copied()
    }

    pub fn rows(self) -> Vec<(MultiDegree, BasisExpr)> {
        let rows: &[Row] = match self {
            PrintedTable::Weyl => &TABLE1,
            PrintedTable::Standard => &TABLE2,
            PrintedTable::Adjusted => &TABLE3,
        };
        rows.iter()
            .map(|(d, ts)| (MultiDegree::new(d[0], d[1], d[2], d[3]), BasisExpr(ts.to_vec())))
            .collect()
    }
}

/// Express `c` as `s T + s' t x^i y T_k` with `s, s'` in `{-1, 0, 1}`,
/// `i` in `{2, 3}`, the shape every printed coefficient has.
pub fn recognize(c: &RationalFn) -> Option<BasisExpr> {
    if c.is_zero() {
        return Some(BasisExpr::default());
    }
    let mut tails = vec![None];
    for basis in [Basis::T1, Basis::T2, Basis::T3] {
        for ex in [2, 3] {
            for sign in [1, -1] {
                tails.push(Some(bt(sign, 1, ex, 1, basis)));
            }
        }
    }
    for head in [None, Some(PT), Some(MT)] {
        for tail in &tails {
            let expr = BasisExpr(head.iter().chain(tail.iter()).copied().collect());
            if expr.0.is_empty() {
                continue;
            }
            let v = expr.value();
            if v.rf_eq(c) {
                return Some(expr);
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Discrepancy {
    /// Same terms up to overall signs.
    Sign,
    /// Same terms except for a power of `x`.
    Power,
    /// No row printed at a degree where the computed coefficient is nonzero,
    /// or the other way round.
    Support,
    Other,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowCheck {
    pub table: u8,
    pub degree: MultiDegree,
    pub printed: String,
    pub computed: String,
    pub agrees: bool,
    pub discrepancy: Option<Discrepancy>,
}

fn classify(printed: &BasisExpr, computed: Option<&BasisExpr>) -> Discrepancy {
    let Some(computed) = computed else { return Discrepancy::Other };
    if printed.0.len() != computed.0.len() {
        return Discrepancy::Other;
    }
    let key = |t: &BasisTerm| (t.basis, t.tpow, t.ex, t.ey);
    let mut a: Vec<_> = printed.0.clone();
    let mut b: Vec<_> = computed.0.clone();
    a.sort_by_key(key);
    b.sort_by_key(key);
    if a.iter().zip(&b).all(|(p, q)| key(p) == key(q)) {
        return Discrepancy::Sign;
    }
    let loose = |t: &BasisTerm| (t.basis, t.tpow, t.ey, t.sign);
    a.sort_by_key(loose);
    b.sort_by_key(loose);
    if a.iter().zip(&b).all(|(p, q)| loose(p) == loose(q)) {
        return Discrepancy::Power;
    }
    Discrepancy::Other
}

pub fn describe(c: &RationalFn) -> String {
    match recognize(c) {
        Some(e) => e.to_string(),
        None => c.to_string(),
    }
}

/// Compare a computed table against one printed table.
pub fn compare_table(which: PrintedTable, computed: &MultiDegreeTable) -> Vec<RowCheck> {
    let mut out = Vec::new();
    let rows = which.rows();
    for (degree, printed) in &rows {
        let got = computed.get(degree).cloned().unwrap_or_else(RationalFn::zero);
        let agrees = got.rf_eq(&printed.value());
        let rec = recognize(&got);
        let discrepancy = (!agrees).then(|| {
            if got.is_zero() {
                Discrepancy::Support
            } else {
                classify(printed, rec.as_ref())
            }
        });
        out.push(RowCheck {
            table: which.number(),
            degree: *degree,
            printed: printed.to_string(),
            computed: rec.map(|e| e.to_string()).unwrap_or_else(|| got.to_string()),
            agrees,
            discrepancy,
        });
    }
    for (degree, c) in &computed.entries {
        if rows.iter().all(|(d, _)| d != degree) {
            out.push(RowCheck {
                table: which.number(),
                degree: *degree,
                printed: "0".into(),
                computed: describe(c),
                agrees: false,
                discrepancy: Some(Discrepancy::Support),
            });
        }
    }
    out
}

/// Degrees where the two printed tables fail to cancel against the Weyl
/// side, i.e. rows whose printed sum is not the printed Weyl coefficient.
pub fn printed_inconsistencies() -> Vec<MultiDegree> {
    let weyl = PrintedTable::Weyl.rows();
    let std = PrintedTable::Standard.rows();
    let adj = PrintedTable::Adjusted.rows();
    let mut degrees: Vec<MultiDegree> = std.iter().chain(adj.iter()).map(|(d, _)| *d).collect();
    degrees.sort();
    degrees.dedup();
    let value = |rows: &[(MultiDegree, BasisExpr)], d: &MultiDegree| {
        rows.iter().find(|(e, _)| e == d).map(|(_, x)| x.value()).unwrap_or_else(RationalFn::zero)
    };
    degrees
        .into_iter()
        .filter(|d| {
            let sum = value(&std, d).add(&value(&adj, d));
            !sum.rf_eq(&value(&weyl, d))
        })
        .collect()
}
