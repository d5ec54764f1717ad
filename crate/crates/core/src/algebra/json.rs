//! JSON form of [`LaurentPoly`]: an array of `{"ex", "ey", "t"}` objects in
//! lexicographic `(ex, ey)` order, `t` listing coefficients from `t^0` up.
//! Integers of any size are written as JSON numbers.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentPoly, RationalFn, TPoly};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct TermRecord {
    ex: i64,
    ey: i64,
    t: Vec<serde_json::Number>,
}

fn to_number(c: &BigInt) -> serde_json::Number {
    // With arbitrary precision enabled, any decimal literal is a valid Number.
    serde_json::Number::from_str(&c.to_string()).expect("decimal integer")
}

fn from_number(n: &serde_json::Number) -> std::result::Result<BigInt, String> {
    BigInt::from_str(&n.to_string()).map_err(|_| format!("not an integer: {n}"))
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms()
            .map(|(&(ex, ey), c)| TermRecord { ex, ey, t: c.coeffs().iter().map(to_number).collect() })
            .collect();
        records.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(d)?;
        let mut last: Option<(i64, i64)> = None;
        let mut p = LaurentPoly::zero();
        for r in records {
            let m = (r.ex, r.ey);
            if last.is_some_and(|l| l >= m) {
                return Err(D::Error::custom("terms must be strictly sorted by (ex, ey)"));
            }
            last = Some(m);
            let coeffs = r.t.iter().map(from_number).collect::<std::result::Result<Vec<_>, _>>();
            let c = TPoly::new(coeffs.map_err(D::Error::custom)?);
            if c.is_zero() || c.coeffs().len() != r.t.len() {
                return Err(D::Error::custom("coefficient list must be canonical and nonzero"));
            }
            p.add_term(m, &c);
        }
        Ok(p)
    }
}

#[derive(Serialize)]
struct FactorRecord {
    ex: i64,
    ey: i64,
    sign: i8,
    power: u32,
}

/// `{"num": <poly>, "den": [{"ex", "ey", "sign", "power"}]}` for
/// `num / prod (1 + sign x^ex y^ey)^power`.
impl Serialize for RationalFn {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            num: &'a LaurentPoly,
            den: Vec<FactorRecord>,
        }
        let den = self
            .denominator()
            .iter()
            .map(|(f, &power)| FactorRecord { ex: f.ex, ey: f.ey, sign: f.sign, power })
            .collect();
        Record { num: self.numerator(), den }.serialize(s)
    }
}

impl LaurentPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<LaurentPoly> {
        serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_is_sorted_and_ascending_in_t() {
        let p = LaurentPoly::deformed_binomial(0, 1) + LaurentPoly::monomial(-1, 3);
        assert_eq!(
            p.to_json(),
            r#"[{"ex":-1,"ey":3,"t":[1]},{"ex":0,"ey":0,"t":[1]},{"ex":0,"ey":1,"t":[0,-1]}]"#
        );
    }

    #[test]
    fn big_coefficients_survive() {
        let big: BigInt = BigInt::from(10).pow(40u32) + 7;
        let p = LaurentPoly::term(2, 1, TPoly::new(vec![big.clone(), -big]));
        let s = p.to_json();
        assert!(s.contains("10000000000000000000000000000000000000007"));
        let back = LaurentPoly::from_json(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn rejects_noncanonical_input() {
        assert!(LaurentPoly::from_json(r#"[{"ex":0,"ey":0,"t":[1,0]}]"#).is_err());
        assert!(LaurentPoly::from_json(r#"[{"ex":1,"ey":0,"t":[1]},{"ex":0,"ey":0,"t":[1]}]"#).is_err());
        assert!(LaurentPoly::from_json(r#"[{"ex":0,"ey":0,"t":[]}]"#).is_err());
        assert_eq!(LaurentPoly::from_json("[]").unwrap(), LaurentPoly::zero());
    }
}
