//! G2 Littelmann patterns `(a, b, c, d, e, f)` for `theta + rho = l1 varpi1 + l2 varpi2`.
//!
//! The cone is
//!
//! ```text
//! 0   <= f <= l2 + a - 2b + c - 2d + e
//! b   <= a <= l1 + 3b - 2c + 3d - 2e
//! c/2 <= b <= l2 + c - 2d + e
//! 2d  <= c <= l1 + 3d - 2e
//! e   <= d <= l2 + e
//! 0   <= e <= l1
//! ```
//!
//! An entry is circled when it sits on its lower bound and boxed when it sits
//! on its upper bound. For `b` the lower bound is `c/2`, so `b` is circled
//! only when `2b = c`; with `c` odd the smallest admissible `b` is plain.

use std::fmt;

use num_rational::Rational64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::roots::WeightParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Entry {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Entry {
    pub const ALL: [Entry; 6] = [Entry::A, Entry::B, Entry::C, Entry::D, Entry::E, Entry::F];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["a", "b", "c", "d", "e", "f"][self.index()]
    }
}

/// A linear bound `(sum coeffs[i] * var_i + constant) / denom` in the
/// variables `a b c d e f l1 l2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundExpr {
    pub coeffs: [i64; 8],
    pub constant: i64,
    pub denom: i64,
}

impl BoundExpr {
    const fn int(coeffs: [i64; 8]) -> Self {
        BoundExpr { coeffs, constant: 0, denom: 1 }
    }

    pub fn eval(&self, p: &Pattern, w: WeightParams) -> Rational64 {
        let vals = [p.a, p.b, p.c, p.d, p.e, p.f, w.l1, w.l2];
        let n: i64 = self.coeffs.iter().zip(vals).map(|(c, v)| c * v).sum::<i64>() + self.constant;
        Rational64::new(n, self.denom)
    }
}

//                                       a   b   c   d   e  f l1 l2
const LOWER: [BoundExpr; 6] = [
    BoundExpr::int([0, 1, 0, 0, 0, 0, 0, 0]),       // a >= b
    BoundExpr { coeffs: [0, 0, 1, 0, 0, 0, 0, 0], constant: 0, denom: 2 }, // b >= c/2
    BoundExpr::int([0, 0, 0, 2, 0, 0, 0, 0]),       // c >= 2d
    BoundExpr::int([0, 0, 0, 0, 1, 0, 0, 0]),       // d >= e
    BoundExpr::int([0, 0, 0, 0, 0, 0, 0, 0]),       // e >= 0
    BoundExpr::int([0, 0, 0, 0, 0, 0, 0, 0]),       // f >= 0
];

const UPPER: [BoundExpr; 6] = [
    BoundExpr::int([0, 3, -2, 3, -2, 0, 1, 0]),
    BoundExpr::int([0, 0, 1, -2, 1, 0, 0, 1]),
    BoundExpr::int([0, 0, 0, 3, -2, 0, 1, 0]),
    BoundExpr::int([0, 0, 0, 0, 1, 0, 0, 1]),
    BoundExpr::int([0, 0, 0, 0, 0, 0, 1, 0]),
    BoundExpr::int([1, -2, 1, -2, 1, 0, 0, 1]),
];

/// Symbolic form of the lower and upper bound of `entry`.
pub fn bound_exprs(entry: Entry) -> (BoundExpr, BoundExpr) {
    (LOWER[entry.index()], UPPER[entry.index()])
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pattern {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
}

impl Pattern {
    pub const fn new(a: i64, b: i64, c: i64, d: i64, e: i64, f: i64) -> Self {
        Pattern { a, b, c, d, e, f }
    }

    pub fn get(&self, entry: Entry) -> i64 {
        match entry {
            Entry::A => self.a,
            Entry::B => self.b,
            Entry::C => self.c,
            Entry::D => self.d,
            Entry::E => self.e,
            Entry::F => self.f,
        }
    }

    /// Exponents of `x^(a+c+e) y^(b+d+f)`.
    pub fn weight_monomial(&self) -> (i64, i64) {
        (self.a + self.c + self.e, self.b + self.d + self.f)
    }

    /// `b = d + 1` and `c = 2d + 1`.
    pub fn has_bad_middle(&self) -> bool {
        self.b == self.d + 1 && self.c == 2 * self.d + 1
    }

    pub fn is_valid(&self, w: WeightParams) -> bool {
        Entry::ALL.iter().all(|&en| {
            let (lo, hi) = bounds(en, self, w);
            let v = Rational64::from_integer(self.get(en));
            lo <= v && v <= Rational64::from_integer(hi)
        })
    }

    pub fn decorations(&self, w: WeightParams) -> Decoration {
        let mut dec = Decoration::default();
        for en in Entry::ALL {
            let (lo, hi) = bounds(en, self, w);
            let v = self.get(en);
            dec.flags[en.index()] = Flags {
                circled: Rational64::from_integer(v) == lo,
                boxed: v == hi,
            };
        }
        dec
    }

    /// Space-separated form; with `dec`, circled entries print as `u°`,
    /// boxed as `[u]`, both as `[u°]`.
    pub fn render(&self, dec: Option<&Decoration>) -> String {
        Entry::ALL
            .iter()
            .map(|&en| {
                let v = self.get(en);
                match dec.map(|d| d.get(en)) {
                    Some(Flags { circled: true, boxed: true }) => format!("[{v}°]"),
                    Some(Flags { circled: true, boxed: false }) => format!("{v}°"),
                    Some(Flags { circled: false, boxed: true }) => format!("[{v}]"),
                    _ => v.to_string(),
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(None))
    }
}

/// `(lower, upper)` bound of `entry` given the other entries of `p`.
pub fn bounds(entry: Entry, p: &Pattern, w: WeightParams) -> (Rational64, i64) {
    let (lo, hi) = bound_exprs(entry);
    let hi = hi.eval(p, w);
    debug_assert!(hi.is_integer());
    (lo.eval(p, w), hi.to_integer())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Flags {
    pub circled: bool,
    pub boxed: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decoration {
    pub flags: [Flags; 6],
}

impl Decoration {
    pub fn get(&self, entry: Entry) -> Flags {
        self.flags[entry.index()]
    }

    pub fn circled(&self, entry: Entry) -> bool {
        self.get(entry).circled
    }

    pub fn boxed(&self, entry: Entry) -> bool {
        self.get(entry).boxed
    }
}

pub fn is_valid(p: &Pattern, w: WeightParams) -> bool {
    p.is_valid(w)
}

pub fn decorations(p: &Pattern, w: WeightParams) -> Decoration {
    p.decorations(w)
}

pub fn has_bad_middle(p: &Pattern) -> bool {
    p.has_bad_middle()
}

/// Visit the patterns with outer index `e`, in the order `d, c, b, a, f`.
fn visit_slice<F: FnMut(Pattern)>(w: WeightParams, e: i64, mut visit: F) {
    let (l1, l2) = (w.l1, w.l2);
    for d in e..=l2 + e {
        for c in 2 * d..=l1 + 3 * d - 2 * e {
            for b in (c + 1) / 2..=l2 + c - 2 * d + e {
                for a in b..=l1 + 3 * b - 2 * c + 3 * d - 2 * e {
                    for f in 0..=l2 + a - 2 * b + c - 2 * d + e {
                        visit(Pattern { a, b, c, d, e, f });
                    }
                }
            }
        }
    }
}

/// Call `visit` on every pattern of `B(theta + rho)` in the fixed order
/// `e, d, c, b, a, f`.
pub fn for_each_pattern<F: FnMut(Pattern)>(w: WeightParams, mut visit: F) {
    for e in 0..=w.l1 {
        visit_slice(w, e, &mut visit);
    }
}

pub fn enumerate(w: WeightParams) -> Vec<Pattern> {
    let mut out = Vec::new();
    for_each_pattern(w, |p| out.push(p));
    out
}

/// Fold the patterns in parallel, one partition per value of `e`. The
/// partial results are combined in increasing `e`, so the result does not
/// depend on the thread count as long as `merge` is associative.
pub fn fold_patterns<T, I, F, M>(w: WeightParams, init: I, fold: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(&mut T, Pattern) + Sync,
    M: Fn(T, T) -> T,
{
    let parts: Vec<T> = (0..=w.l1)
        .into_par_iter()
        .map(|e| {
            let mut acc = init();
            visit_slice(w, e, |p| fold(&mut acc, p));
            acc
        })
        .collect();
    parts.into_iter().reduce(merge).unwrap_or_else(init)
}

pub fn count(w: WeightParams) -> u64 {
    fold_patterns(w, || 0u64, |n, _| *n += 1, |a, b| a + b)
}

/// Weyl dimension formula for the irreducible representation of highest
/// weight `theta + rho = l1 varpi1 + l2 varpi2`: the formula is evaluated at
/// `theta + 2 rho`.
pub fn weyl_dimension(w: WeightParams) -> u64 {
    let (a, b) = (w.l1 as u64 + 1, w.l2 as u64 + 1);
    a * b * (a + b) * (a + 2 * b) * (a + 3 * b) * (2 * a + 3 * b) / 120
}
