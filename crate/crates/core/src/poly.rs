//! Multilinear polynomials over a tagged variable namespace.
//!
//! Original variables are `x1..xn`, auxiliary variables `y1..ym`. A single
//! [`Poly`] type backs the input function, quadratizations, and lifted forms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A variable. Indices are 1-based. Every `X` orders before every `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(usize),
    Y(usize),
}

impl Var {
    pub fn is_aux(self) -> bool {
        matches!(self, Var::Y(_))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Input(format!("bad variable name {s:?}"));
        let (tag, idx) = s.split_at_checked(1).ok_or_else(bad)?;
        let idx: usize = idx.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match tag {
            "x" | "z" => Ok(Var::X(idx)),
            "y" => Ok(Var::Y(idx)),
            _ => Err(bad()),
        }
    }
}

/// A product of distinct variables, kept sorted.
///
/// Monomials order by degree first, then lexicographically by variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<Var>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Builds a monomial from arbitrary factors, collapsing repeats (`v*v = v` on {0,1}).
    pub fn new(mut vars: Vec<Var>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        Monomial(vars)
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn aux_count(&self) -> usize {
        self.0.iter().filter(|v| v.is_aux()).count()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Monomial::new(v)
    }

    pub fn eval(&self, assign: impl Fn(Var) -> bool) -> bool {
        self.0.iter().all(|&v| assign(v))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Sparse multilinear polynomial with exact coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Rational) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Poly::term(Monomial::new(vec![v]), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    /// `Σ_{r=1..n} x_r`
    pub fn weight(n: usize) -> Self {
        let mut p = Poly::zero();
        for r in 1..=n {
            p.add_term(Monomial::new(vec![Var::X(r)]), Rational::one());
        }
        p
    }

    /// `Σ_{i<j} x_i x_j`
    pub fn pair_sum(n: usize) -> Self {
        let mut p = Poly::zero();
        for i in 1..=n {
            for j in i + 1..=n {
                p.add_term(Monomial::new(vec![Var::X(i), Var::X(j)]), Rational::one());
            }
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Product reduced with `v*v = v`.
    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Replaces every variable `v` by `f(v)`, merging repeated factors.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let vars = m.vars().iter().map(|&v| f(v)).collect();
            out.add_term(Monomial::new(vars), c.clone());
        }
        out
    }

    pub fn eval(&self, assign: impl Fn(Var) -> bool) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            if m.eval(&assign) {
                acc += c;
            }
        }
        acc
    }

    pub fn max_x(&self) -> usize {
        self.vars_max(|v| matches!(v, Var::X(_)))
    }

    pub fn max_y(&self) -> usize {
        self.vars_max(Var::is_aux)
    }

    fn vars_max(&self, pick: impl Fn(Var) -> bool) -> usize {
        self.terms
            .keys()
            .flat_map(|m| m.vars().iter().copied())
            .filter(|&v| pick(v))
            .map(|v| match v {
                Var::X(i) | Var::Y(i) => i,
            })
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn monomial_order_is_degree_then_lex() {
        let a = Monomial::new(vec![Var::Y(1)]);
        let b = Monomial::new(vec![Var::X(1), Var::X(2)]);
        let c = Monomial::new(vec![Var::X(1), Var::Y(1)]);
        assert!(Monomial::one() < a);
        assert!(a < b);
        assert!(b < c);
    }

    #[test]
    fn repeated_factor_collapses() {
        let m = Monomial::new(vec![Var::X(2), Var::X(1), Var::X(2)]);
        assert_eq!(m.vars(), &[Var::X(1), Var::X(2)]);
    }

    #[test]
    fn mul_is_multilinear() {
        let p = Poly::var(Var::X(1)).add(&Poly::constant(int(1)));
        let sq = p.mul(&p);
        // (x+1)^2 = x^2 + 2x + 1 = 3x + 1 on {0,1}
        assert_eq!(sq.coefficient(&Monomial::new(vec![Var::X(1)])), int(3));
        assert_eq!(sq.coefficient(&Monomial::one()), int(1));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = Poly::var(Var::X(1)).sub(&Poly::var(Var::X(1)));
        assert!(p.is_zero());
    }

    #[test]
    fn var_names_roundtrip() {
        for s in ["x1", "y12"] {
            assert_eq!(s.parse::<Var>().unwrap().to_string(), s);
        }
        assert!("x0".parse::<Var>().is_err());
        assert!("w3".parse::<Var>().is_err());
    }
}
