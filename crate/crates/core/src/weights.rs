//! Pattern weights: `h(u)`, the standard product `H_std`, and the adjustment
//! `H_adj` supported on bad-middle patterns.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::TPoly;
use crate::patterns::{Decoration, Entry, Pattern};
use crate::roots::WeightParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EntryStatus {
    Plain,
    Circled,
    Boxed,
    BothBoxedAndCircled,
}

impl EntryStatus {
    pub const ALL: [EntryStatus; 4] = [
        EntryStatus::Plain,
        EntryStatus::Circled,
        EntryStatus::Boxed,
        EntryStatus::BothBoxedAndCircled,
    ];

    pub fn from_flags(circled: bool, boxed: bool) -> Self {
        match (circled, boxed) {
            (false, false) => EntryStatus::Plain,
            (true, false) => EntryStatus::Circled,
            (false, true) => EntryStatus::Boxed,
            (true, true) => EntryStatus::BothBoxedAndCircled,
        }
    }

    pub fn of(dec: &Decoration, entry: Entry) -> Self {
        let f = dec.get(entry);
        Self::from_flags(f.circled, f.boxed)
    }

    fn symbol(self) -> &'static str {
        match self {
            EntryStatus::Plain => "",
            EntryStatus::Circled => "°",
            EntryStatus::Boxed => "_",
            EntryStatus::BothBoxedAndCircled => "_°",
        }
    }
}

/// `1 - t` plain, `-t` boxed, `1` circled, `0` both.
pub fn h(s: EntryStatus) -> TPoly {
    match s {
        EntryStatus::Plain => TPoly::one_minus_t(),
        EntryStatus::Boxed => -TPoly::t(),
        EntryStatus::Circled => TPoly::one(),
        EntryStatus::BothBoxedAndCircled => TPoly::zero(),
    }
}

pub fn h_std_from(dec: &Decoration) -> TPoly {
    Entry::ALL
        .iter()
        .fold(TPoly::one(), |acc, &en| &acc * &h(EntryStatus::of(dec, en)))
}

pub fn h_std(p: &Pattern, w: WeightParams) -> TPoly {
    h_std_from(&p.decorations(w))
}

/// Which statuses an entry may have for a rule to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatusSet {
    Plain,
    Circled,
    Boxed,
    PlainOrCircled,
    Any,
}

impl StatusSet {
    pub fn contains(self, s: EntryStatus) -> bool {
        matches!(
            (self, s),
            (StatusSet::Plain, EntryStatus::Plain)
                | (StatusSet::Circled, EntryStatus::Circled)
                | (StatusSet::Boxed, EntryStatus::Boxed)
                | (StatusSet::PlainOrCircled, EntryStatus::Plain | EntryStatus::Circled)
                | (StatusSet::Any, _)
        )
    }
}

/// Constraint on whether `a = 2d + 1 - e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pinned {
    Any,
    Equal,
    NotEqual,
}

impl Pinned {
    pub fn admits(self, pinned: bool) -> bool {
        match self {
            Pinned::Any => true,
            Pinned::Equal => pinned,
            Pinned::NotEqual => !pinned,
        }
    }
}

/// One row of the adjustment table: a list of admissible `(e, d, a)` status
/// triples, a condition on `a = 2d + 1 - e`, and the payoff.
#[derive(Clone, Debug)]
pub struct AdjRule {
    pub index: usize,
    pub label: &'static str,
    pub triples: Vec<(StatusSet, StatusSet, StatusSet)>,
    pub pinned: Pinned,
    pub payoff: TPoly,
}

impl AdjRule {
    pub fn matches(&self, e: EntryStatus, d: EntryStatus, a: EntryStatus, pinned: bool) -> bool {
        self.pinned.admits(pinned)
            && self
                .triples
                .iter()
                .any(|(se, sd, sa)| se.contains(e) && sd.contains(d) && sa.contains(a))
    }
}

/// The eight rows, in first-match order.
pub fn adj_rules() -> &'static [AdjRule] {
    use std::sync::OnceLock;
    use StatusSet::*;
    static RULES: OnceLock<Vec<AdjRule>> = OnceLock::new();
    RULES.get_or_init(|| {
        let s = TPoly::one_minus_t();
        let t = TPoly::t();
        let t2 = t.pow(2);
        let t3 = t.pow(3);
        let row = |index, label, triples, pinned, payoff| AdjRule { index, label, triples, pinned, payoff };
        vec![
            row(1, "(e°, d°, a°)", vec![(Circled, Circled, Circled)], Pinned::Any, &s * &t),
            row(2, "(e°, d or d°, a_)", vec![(Circled, PlainOrCircled, Boxed)], Pinned::Any, -(&s * &t2)),
            row(3, "(e or e°, d_, a = 2d+1-e)", vec![(PlainOrCircled, Boxed, Any)], Pinned::Equal, &s * &t3),
            row(
                4,
                "(e, d°, a°), (e°, d°, a), (e°, d, a°), (e, d°, a), (e, d, a°)",
                vec![
                    (Plain, Circled, Circled),
                    (Circled, Circled, Plain),
                    (Circled, Plain, Circled),
                    (Plain, Circled, Plain),
                    (Plain, Plain, Circled),
                ],
                Pinned::Any,
                &s.pow(2) * &t,
            ),
            row(5, "(e or e°, d_, a), a != 2d+1-e", vec![(PlainOrCircled, Boxed, Plain)], Pinned::NotEqual, -(&s.pow(2) * &t2)),
            row(6, "(e, d, a)", vec![(Plain, Plain, Plain)], Pinned::Any, &s.pow(3) * &t),
            row(7, "(e°, d, a), a != 2d+1-e", vec![(Circled, Plain, Plain)], Pinned::NotEqual, &s.pow(3) * &t),
            // Printed with `(1-t)^2 - t`; the identity requires `+ t`.
            row(8, "(e°, d, a = 2d+1-e)", vec![(Circled, Plain, Any)], Pinned::Equal, &(&s * &t) * &(&s.pow(2) + &t)),
        ]
    })
}

/// First rule matching the `(e, d, a)` statuses and the pinned flag.
pub fn match_rule(e: EntryStatus, d: EntryStatus, a: EntryStatus, pinned: bool) -> Option<&'static AdjRule> {
    adj_rules().iter().find(|r| r.matches(e, d, a, pinned))
}

/// `H_adj(pi')` as a function of the statuses; zero when no rule matches.
pub fn adj_value(e: EntryStatus, d: EntryStatus, a: EntryStatus, pinned: bool) -> TPoly {
    match_rule(e, d, a, pinned).map(|r| r.payoff.clone()).unwrap_or_default()
}

/// Outcome of the adjustment lookup for one pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjOutcome {
    /// `None` for patterns without a bad middle.
    pub rule: Option<usize>,
    pub bad_middle: bool,
    pub value: TPoly,
}

pub fn h_adj_detail(p: &Pattern, dec: &Decoration) -> AdjOutcome {
    if !p.has_bad_middle() {
        return AdjOutcome { rule: None, bad_middle: false, value: TPoly::zero() };
    }
    let st = |en| EntryStatus::of(dec, en);
    let pinned = p.a == 2 * p.d + 1 - p.e;
    match match_rule(st(Entry::E), st(Entry::D), st(Entry::A), pinned) {
        Some(r) => AdjOutcome {
            rule: Some(r.index),
            bad_middle: true,
            value: &r.payoff * &h(st(Entry::F)),
        },
        None => AdjOutcome { rule: None, bad_middle: true, value: TPoly::zero() },
    }
}

/// `H_adj(pi) = H_adj(pi') h(f)` on bad-middle patterns, zero elsewhere.
pub fn h_adj(p: &Pattern, w: WeightParams) -> TPoly {
    h_adj_detail(p, &p.decorations(w)).value
}

/// `H_std + H_adj`.
pub fn h_hat(p: &Pattern, w: WeightParams) -> TPoly {
    let dec = p.decorations(w);
    &h_std_from(&dec) + &h_adj_detail(p, &dec).value
}

pub struct StatusTriple(pub EntryStatus, pub EntryStatus, pub EntryStatus);

impl fmt::Display for StatusTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(e{}, d{}, a{})", self.0.symbol(), self.1.symbol(), self.2.symbol())
    }
}
