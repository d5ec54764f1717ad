//! The G2 root system in the simple-root basis, with `alpha2` the long root.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `CARTAN[j][i] = <alpha_j, alpha_i^vee>`, so `s_i(alpha_j) = alpha_j - CARTAN[j][i] alpha_i`.
pub const CARTAN: [[i64; 2]; 2] = [[2, -1], [-3, 2]];

/// `m1 alpha1 + m2 alpha2`, which corresponds to the monomial `x^m1 y^m2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVec {
    pub m1: i64,
    pub m2: i64,
}

impl RootVec {
    pub const ZERO: RootVec = RootVec::new(0, 0);
    pub const ALPHA1: RootVec = RootVec::new(1, 0);
    pub const ALPHA2: RootVec = RootVec::new(0, 1);

    pub const fn new(m1: i64, m2: i64) -> Self {
        RootVec { m1, m2 }
    }

    /// Exponent pair of `x^v`.
    pub fn monomial(self) -> (i64, i64) {
        (self.m1, self.m2)
    }

    /// `<self, alpha_j^vee>` for `j` in `{0, 1}`.
    pub fn pairing(self, j: usize) -> i64 {
        self.m1 * CARTAN[0][j] + self.m2 * CARTAN[1][j]
    }

    pub fn scale(self, k: i64) -> RootVec {
        RootVec::new(k * self.m1, k * self.m2)
    }
}

impl Add for RootVec {
    type Output = RootVec;
    fn add(self, o: RootVec) -> RootVec {
        RootVec::new(self.m1 + o.m1, self.m2 + o.m2)
    }
}

impl Sub for RootVec {
    type Output = RootVec;
    fn sub(self, o: RootVec) -> RootVec {
        RootVec::new(self.m1 - o.m1, self.m2 - o.m2)
    }
}

impl Neg for RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        RootVec::new(-self.m1, -self.m2)
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m1, self.m2)
    }
}

/// The six positive roots: `x, y, xy, x^2y, x^3y, x^3y^2`.
pub fn positive_roots() -> [RootVec; 6] {
    [
        RootVec::new(1, 0),
        RootVec::new(0, 1),
        RootVec::new(1, 1),
        RootVec::new(2, 1),
        RootVec::new(3, 1),
        RootVec::new(3, 2),
    ]
}

pub fn is_positive_root(v: RootVec) -> bool {
    positive_roots().contains(&v)
}

pub fn rho() -> RootVec {
    let sum = positive_roots().into_iter().fold(RootVec::ZERO, Add::add);
    RootVec::new(sum.m1 / 2, sum.m2 / 2)
}

/// Fundamental weight `varpi_i`, the solution of `<varpi_i, alpha_j^vee> = delta_ij`.
pub fn fundamental_weight(i: usize) -> RootVec {
    // Cramer's rule on the transposed Cartan matrix.
    let (a, b, c, d) = (CARTAN[0][0], CARTAN[1][0], CARTAN[0][1], CARTAN[1][1]);
    let det = a * d - b * c;
    let (r0, r1) = if i == 0 { (1, 0) } else { (0, 1) };
    let m1 = r0 * d - b * r1;
    let m2 = a * r1 - c * r0;
    assert!(m1 % det == 0 && m2 % det == 0, "fundamental weight not integral");
    RootVec::new(m1 / det, m2 / det)
}

/// A dominant regular weight `theta + rho = l1 varpi1 + l2 varpi2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightParams {
    pub l1: i64,
    pub l2: i64,
}

impl WeightParams {
    pub fn new(l1: i64, l2: i64) -> Result<Self> {
        if l1 < 1 || l2 < 1 {
            return Err(Error::InvalidWeight { l1, l2 });
        }
        Ok(WeightParams { l1, l2 })
    }

    pub fn theta_plus_rho(self) -> RootVec {
        fundamental_weight(0).scale(self.l1) + fundamental_weight(1).scale(self.l2)
    }
}

impl fmt::Display for WeightParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(l1={}, l2={})", self.l1, self.l2)
    }
}

pub fn theta_plus_rho(p: WeightParams) -> RootVec {
    p.theta_plus_rho()
}

pub fn monomial_of(v: RootVec) -> (i64, i64) {
    v.monomial()
}

/// 2x2 integer matrix acting on column vectors `(m1, m2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix2(pub [[i64; 2]; 2]);

impl Matrix2 {
    pub const IDENTITY: Matrix2 = Matrix2([[1, 0], [0, 1]]);

    pub fn det(&self) -> i64 {
        let m = self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn apply(&self, v: RootVec) -> RootVec {
        let m = self.0;
        RootVec::new(m[0][0] * v.m1 + m[0][1] * v.m2, m[1][0] * v.m1 + m[1][1] * v.m2)
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;
    fn mul(self, o: Matrix2) -> Matrix2 {
        let (a, b) = (self.0, o.0);
        let mut out = [[0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Matrix2(out)
    }
}

/// Simple reflection `s_i` as a matrix whose columns are `s_i(alpha1), s_i(alpha2)`.
pub fn simple_reflection(i: usize) -> Matrix2 {
    let basis = [RootVec::ALPHA1, RootVec::ALPHA2];
    let col = |j: usize| basis[j] - basis[i].scale(CARTAN[j][i]);
    let (c0, c1) = (col(0), col(1));
    Matrix2([[c0.m1, c1.m1], [c0.m2, c1.m2]])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElt {
    pub matrix: Matrix2,
    pub length: u32,
    pub sign: i64,
    /// A reduced word in the simple reflections, indices 1 and 2.
    pub word: Vec<u8>,
}

impl WeylElt {
    pub fn apply(&self, v: RootVec) -> RootVec {
        self.matrix.apply(v)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix2::IDENTITY
    }

    pub fn name(&self) -> String {
        if self.word.is_empty() {
            return "e".into();
        }
        self.word.iter().map(|i| format!("s{i}")).collect()
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self) -> u32 {
        positive_roots()
            .into_iter()
            .filter(|&r| is_positive_root(-self.apply(r)))
            .count() as u32
    }
}

pub fn apply(w: &WeylElt, v: RootVec) -> RootVec {
    w.apply(v)
}

/// Breadth-first closure of `{s1, s2}`; BFS depth is the word length.
pub fn generate_weyl_group() -> Vec<WeylElt> {
    let gens = [simple_reflection(0), simple_reflection(1)];
    let mut seen = vec![WeylElt { matrix: Matrix2::IDENTITY, length: 0, sign: 1, word: vec![] }];
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        for (k, g) in gens.iter().enumerate() {
            let cur = &seen[idx];
            let m = *g * cur.matrix;
            if seen.iter().any(|w| w.matrix == m) {
                continue;
            }
            let mut word = vec![k as u8 + 1];
            word.extend(&cur.word);
            let el = WeylElt { matrix: m, length: cur.length + 1, sign: m.det(), word };
            seen.push(el);
            queue.push_back(seen.len() - 1);
        }
    }
    seen
}

/// The group, built once.
pub fn weyl_group() -> &'static [WeylElt] {
    static GROUP: OnceLock<Vec<WeylElt>> = OnceLock::new();
    GROUP.get_or_init(generate_weyl_group)
}

/// The unique element sending every positive root to a negative root.
pub fn long_element() -> &'static WeylElt {
    let mut it = weyl_group().iter().filter(|w| w.inversions() == 6);
    let w = it.next().expect("long element exists");
    assert!(it.next().is_none(), "long element is unique");
    w
}
