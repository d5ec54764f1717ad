use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use super::affine::{AffineForm, Var};
use super::term::{integral_constant, SymSum};
use crate::algebra::{sum_all, RationalFn};
use crate::error::{Error, Result};

/// The factor `x^(l1 (m1, n1)) x^(l2 (m2, n2))` written as its exponent
/// pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree {
    pub m1: Rational64,
    pub n1: Rational64,
    pub m2: Rational64,
    pub n2: Rational64,
}

impl MultiDegree {
    pub fn new(m1: i64, n1: i64, m2: i64, n2: i64) -> Self {
        let r = Rational64::from_integer;
        MultiDegree { m1: r(m1), n1: r(n1), m2: r(m2), n2: r(n2) }
    }

    pub fn from_array(a: [Rational64; 4]) -> Self {
        MultiDegree { m1: a[0], n1: a[1], m2: a[2], n2: a[3] }
    }

    pub fn is_integral(&self) -> bool {
        [self.m1, self.n1, self.m2, self.n2].iter().all(Rational64::is_integer)
    }

    /// Monomial exponent of this multi-degree at `(l1, l2)`.
    pub fn at(&self, l1: i64, l2: i64) -> Result<(i64, i64)> {
        let (l1, l2) = (Rational64::from_integer(l1), Rational64::from_integer(l2));
        let ex = self.m1 * l1 + self.m2 * l2;
        let ey = self.n1 * l1 + self.n2 * l2;
        if !ex.is_integer() || !ey.is_integer() {
            return Err(Error::NonAffine { var: "l".into(), detail: format!("degree {self} at ({l1}, {l2})") });
        }
        Ok((ex.to_integer(), ey.to_integer()))
    }
}

fn r(x: Rational64) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),({},{}))", r(self.m1), r(self.n1), r(self.m2), r(self.n2))
    }
}

impl Serialize for MultiDegree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Coefficients indexed by multi-degree, zero entries removed; a
/// coefficient multiplies `x^(l1 (m1, n1) + l2 (m2, n2))`. `eps` is the
/// parity class of `(l1, l2)` the table was specialized to.
#[derive(Clone, Debug, Default)]
pub struct MultiDegreeTable {
    pub eps: (i64, i64),
    pub entries: BTreeMap<MultiDegree, RationalFn>,
}

impl Serialize for MultiDegreeTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row<'a> {
            degree: &'a MultiDegree,
            coefficient: String,
            value: &'a RationalFn,
        }
        let rows: Vec<Row> = self
            .entries
            .iter()
            .map(|(d, c)| Row { degree: d, coefficient: super::tables::describe(c), value: c })
            .collect();
        rows.serialize(s)
    }
}

impl MultiDegreeTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, d: &MultiDegree) -> Option<&RationalFn> {
        self.entries.get(d)
    }

    pub fn degrees(&self) -> impl Iterator<Item = &MultiDegree> {
        self.entries.keys()
    }

    /// The generating function at `(l1, l2)`, which must lie in this
    /// table's parity class.
    pub fn evaluate(&self, l1: i64, l2: i64) -> Result<crate::LaurentPoly> {
        if (l1 - self.eps.0).rem_euclid(2) != 0 || (l2 - self.eps.1).rem_euclid(2) != 0 {
            return Err(Error::UnresolvedParity(format!("({l1}, {l2}) is not in class {:?}", self.eps)));
        }
        let parts = self
            .entries
            .iter()
            .map(|(d, c)| d.at(l1, l2).map(|(ex, ey)| c.shift(ex, ey)))
            .collect::<Result<Vec<_>>>()?;
        sum_all(parts.iter()).to_poly()
    }

    /// Same support and `rf_eq` coefficients.
    pub fn equivalent(&self, other: &MultiDegreeTable) -> bool {
        self.len() == other.len()
            && self.entries.iter().all(|(d, c)| other.get(d).is_some_and(|o| c.rf_eq(o)))
    }
}

/// Specialize `l_i = 2 m_i + eps_i`, resolve every parity condition and
/// group the result by multi-degree.
pub fn collect(s: &SymSum, eps1: i64, eps2: i64) -> Result<MultiDegreeTable> {
    let sub1 = AffineForm::from_terms(&[(Var::M1, 2)], eps1);
    let sub2 = AffineForm::from_terms(&[(Var::M2, 2)], eps2);
    let half = Rational64::new(1, 2);
    let mut groups: BTreeMap<MultiDegree, Vec<RationalFn>> = BTreeMap::new();
    for t in &s.terms {
        let Some(t) = t.substitute(Var::L1, &sub1)? else { continue };
        let Some(t) = t.substitute(Var::L2, &sub2)? else { continue };
        if !t.conds.is_empty() {
            return Err(Error::UnresolvedParity(t.conds.to_string()));
        }
        let degree = MultiDegree {
            m1: t.xexp.coeff(Var::M1) * half,
            n1: t.yexp.coeff(Var::M1) * half,
            m2: t.xexp.coeff(Var::M2) * half,
            n2: t.yexp.coeff(Var::M2) * half,
        };
        let strip = |f: &AffineForm| {
            f.substitute(Var::M1, &AffineForm::zero()).substitute(Var::M2, &AffineForm::zero())
        };
        let ex = integral_constant(&strip(&t.xexp), "x")?;
        let ey = integral_constant(&strip(&t.yexp), "y")?;
        groups.entry(degree).or_default().push(t.coeff.shift(ex, ey));
    }
    let mut entries = BTreeMap::new();
    for (d, cs) in groups {
        let c = sum_all(cs.iter());
        if c.is_zero() {
            continue;
        }
        // x^(2 p m) = x^(p l) x^(-p eps)
        let (ex, ey) = d.at(eps1, eps2).map_err(|_| {
            Error::NonAffine { var: "eps".into(), detail: format!("nonzero coefficient at half-integral degree {d}") }
        })?;
        entries.insert(d, c.shift(-ex, -ey));
    }
    Ok(MultiDegreeTable { eps: (eps1, eps2), entries })
}

/// One table per parity class `(l1 mod 2, l2 mod 2)`.
pub fn collect_all(s: &SymSum) -> Result<BTreeMap<(i64, i64), MultiDegreeTable>> {
    let mut out = BTreeMap::new();
    for e1 in 0..2 {
        for e2 in 0..2 {
            out.insert((e1, e2), collect(s, e1, e2)?);
        }
    }
    Ok(out)
}
