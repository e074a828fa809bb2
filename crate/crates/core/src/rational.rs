//! Exact rational scalars.
//!
//! Everything is a [`BigRational`]; there is no floating point anywhere in the
//! crate. Values serialize as strings, `"p/q"` or `"p"` when the denominator
//! is one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `p/q` as a rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Parses `"p/q"`, `"p"`, or a plain decimal like `"-0.25"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Input("empty rational".into()));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Input(format!("cannot parse rational {s:?}")));
        }
        let negative = whole.starts_with('-');
        let whole: BigInt = match whole.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            w => w
                .parse()
                .map_err(|_| Error::Input(format!("cannot parse rational {s:?}")))?,
        };
        let frac_int: BigInt = frac.parse().unwrap();
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mag = Rational::new(whole * &scale + frac_int, scale);
        return Ok(if negative { -mag } else { mag });
    }
    let r: Rational = s
        .parse()
        .map_err(|_| Error::Input(format!("cannot parse rational {s:?}")))?;
    Ok(r)
}

/// Comma-separated list of rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

/// `min(a, 0)`.
pub fn neg_part(a: Rational) -> Rational {
    if a.is_negative() {
        a
    } else {
        Rational::zero()
    }
}

pub fn in_unit_interval(eps: &Rational) -> bool {
    eps.is_positive() && *eps <= Rational::one()
}

/// Serde adapter storing a rational as its `p/q` string.
pub mod serde_str {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(de::Error::custom)
    }
}

/// Serde adapter for `Vec<Rational>` as a list of strings.
pub mod serde_vec {
    use super::*;
    use serde::{de, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&fmt_rational(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_rational(s).map_err(de::Error::custom))
            .collect()
    }
}
