//! Identically-zero expressions used to shift representation coefficients.
//!
//! On weights `l = 0..n`:
//!
//! ```text
//! E(l)   = l(l−1)   + 2 Σ_{i=1}^{n−1}        min(i − l, 0)
//! E'(l)  = l(l−1)/2 + 2 Σ_{i even, 2..=n}  min(i − 1/2 − l, 0)
//! E''(l) = l(l+1)/2 + 2 Σ_{i odd, 1..=n}   min(i − 1/2 − l, 0)
//! ```
//!
//! `E` uses the `ε = 1` family (its term `min(i − l, 0)` is stored at index
//! `i + 1`); `E'` and `E''` use `ε = 1/2`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{input_err, Error, Result};
use crate::rational::{half, int, neg_part, Rational};
use crate::representation::NegPartRep;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    E,
    EPrime,
    EDoublePrime,
}

impl FromStr for IdentityKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E" => Ok(IdentityKind::E),
            "E'" | "Eprime" => Ok(IdentityKind::EPrime),
            "E''" | "Edoubleprime" => Ok(IdentityKind::EDoublePrime),
            _ => input_err(format!("unknown identity kind {s:?}")),
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentityKind::E => "E",
            IdentityKind::EPrime => "E'",
            IdentityKind::EDoublePrime => "E''",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroIdentity {
    pub kind: IdentityKind,
    pub n: usize,
    /// `(c2, c1)` meaning `c2·l² + c1·l`.
    pub quadratic_in_l: (Rational, Rational),
    /// Representation index → coefficient; all at the common offset `eps`.
    pub negpart_coefs: BTreeMap<usize, Rational>,
    pub eps: Rational,
}

impl ZeroIdentity {
    pub fn eval(&self, l: usize) -> Rational {
        let lr = int(l as i64);
        let (c2, c1) = &self.quadratic_in_l;
        let mut acc = c2 * &lr * &lr + c1 * &lr;
        for (&i, c) in &self.negpart_coefs {
            acc += c * neg_part(int(i as i64) - &self.eps - &lr);
        }
        acc
    }
}

pub fn make_identity(kind: IdentityKind, n: usize) -> Result<ZeroIdentity> {
    if n == 0 {
        return input_err("identities need n >= 1");
    }
    let two = int(2);
    let (quadratic_in_l, indices, eps): (_, Vec<usize>, _) = match kind {
        IdentityKind::E => ((int(1), int(-1)), (2..=n).collect(), Rational::one()),
        IdentityKind::EPrime => ((half(), -half()), (2..=n).step_by(2).collect(), half()),
        IdentityKind::EDoublePrime => ((half(), half()), (1..=n).step_by(2).collect(), half()),
    };
    Ok(ZeroIdentity {
        kind,
        n,
        quadratic_in_l,
        negpart_coefs: indices.into_iter().map(|i| (i, two.clone())).collect(),
        eps,
    })
}

/// `rep + c·id`. The offsets of `rep` must match the identity's offset at
/// every index the identity touches.
pub fn add_scaled_identity(
    rep: &NegPartRep,
    id: &ZeroIdentity,
    c: &Rational,
) -> Result<NegPartRep> {
    if rep.n() != id.n {
        return Err(Error::Structural(format!(
            "representation has n = {}, identity {} has n = {}",
            rep.n(),
            id.kind,
            id.n
        )));
    }
    if let Some(&i) = id.negpart_coefs.keys().find(|&&i| rep.eps(i) != &id.eps) {
        return Err(Error::Structural(format!(
            "identity {} has eps = {} at index {i}, representation has {}",
            id.kind,
            id.eps,
            rep.eps(i)
        )));
    }
    if c.is_zero() {
        return Ok(rep.clone());
    }
    let mut out = rep.clone();
    out.quadratic += c * &id.quadratic_in_l.0;
    out.affine_linear += c * &id.quadratic_in_l.1;
    let terms = out.terms_mut();
    for (&i, coef) in &id.negpart_coefs {
        terms[i].alpha += c * coef;
    }
    Ok(out)
}
