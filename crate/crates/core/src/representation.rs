//! Negative-part representations of symmetric functions.
//!
//! A representation writes `k_l` as
//!
//! ```text
//! c0 + c1·l + c2·l² + Σ_{i=0..n} α_i · min(i − ε_i − l, 0)
//! ```
//!
//! with `0 < ε_i <= 1`. Because `l` is an integer, the term at index `i`
//! vanishes for `l < i` and is active exactly for `l >= i`; the index is the
//! weight at which the term switches on.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{input_err, Error, Result};
use crate::pbf::SymmetricSpec;
use crate::rational::{self, half, in_unit_interval, int, neg_part, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegPartTerm {
    pub alpha: Rational,
    pub eps: Rational,
}

impl NegPartTerm {
    pub fn new(alpha: Rational, eps: Rational) -> Self {
        NegPartTerm { alpha, eps }
    }

    /// `i − ε ≤ 0`: the term is affine in `l` over the whole range `l >= 0`.
    pub fn is_affine_at(&self, i: usize) -> bool {
        !(int(i as i64) - &self.eps).is_positive()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "NegPartRepJson", into = "NegPartRepJson")]
pub struct NegPartRep {
    n: usize,
    pub affine_const: Rational,
    pub affine_linear: Rational,
    /// Coefficient of `l²`; only non-zero after adding zero identities.
    pub quadratic: Rational,
    terms: Vec<NegPartTerm>,
}

impl NegPartRep {
    pub fn new(
        affine_const: Rational,
        affine_linear: Rational,
        quadratic: Rational,
        terms: Vec<NegPartTerm>,
    ) -> Result<Self> {
        if terms.len() < 2 {
            return input_err("a representation needs n >= 1 (n+1 terms)");
        }
        if let Some((i, t)) = terms
            .iter()
            .enumerate()
            .find(|(_, t)| !in_unit_interval(&t.eps))
        {
            return input_err(format!("eps_{i} = {} is outside (0, 1]", t.eps));
        }
        Ok(NegPartRep {
            n: terms.len() - 1,
            affine_const,
            affine_linear,
            quadratic,
            terms,
        })
    }

    /// Pure form: zero prefix, all-zero alphas with the given common offset.
    pub fn zero(n: usize, eps: Rational) -> Result<Self> {
        NegPartRep::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            vec![NegPartTerm::new(Rational::zero(), eps); n + 1],
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[NegPartTerm] {
        &self.terms
    }

    pub fn alpha(&self, i: usize) -> &Rational {
        &self.terms[i].alpha
    }

    pub fn eps(&self, i: usize) -> &Rational {
        &self.terms[i].eps
    }

    pub fn alphas(&self) -> Vec<Rational> {
        self.terms.iter().map(|t| t.alpha.clone()).collect()
    }

    pub(crate) fn terms_mut(&mut self) -> &mut [NegPartTerm] {
        &mut self.terms
    }

    pub fn scale(&self, c: &Rational) -> NegPartRep {
        NegPartRep {
            n: self.n,
            affine_const: &self.affine_const * c,
            affine_linear: &self.affine_linear * c,
            quadratic: &self.quadratic * c,
            terms: self
                .terms
                .iter()
                .map(|t| NegPartTerm::new(&t.alpha * c, t.eps.clone()))
                .collect(),
        }
    }

    fn value_at(&self, l: usize) -> Rational {
        let lr = int(l as i64);
        let mut acc = &self.affine_const + &self.affine_linear * &lr + &self.quadratic * &lr * &lr;
        for (i, t) in self.terms.iter().enumerate() {
            if !t.alpha.is_zero() {
                acc += &t.alpha * neg_part(int(i as i64) - &t.eps - &lr);
            }
        }
        acc
    }

    /// True iff this representation reproduces `spec` at every weight.
    pub fn represents(&self, spec: &SymmetricSpec) -> bool {
        self.n == spec.n() && (0..=self.n).all(|l| self.value_at(l) == spec.k()[l])
    }
}

/// Right-hand side of the representation at weight `l`.
pub fn eval_rep(rep: &NegPartRep, l: usize) -> Result<Rational> {
    if l > rep.n {
        return input_err(format!("weight {l} is outside 0..={}", rep.n));
    }
    Ok(rep.value_at(l))
}

/// Solves the lower-triangular system `k_j = Σ_{i<=j} α_i (i − ε_i − j)` by
/// forward substitution. The diagonal is `−ε_j`, so the solution is unique.
pub fn solve_representation(spec: &SymmetricSpec, eps: &[Rational]) -> Result<NegPartRep> {
    let n = spec.n();
    if eps.len() != n + 1 {
        return input_err(format!("expected {} offsets, got {}", n + 1, eps.len()));
    }
    if let Some((i, e)) = eps.iter().enumerate().find(|(_, e)| !in_unit_interval(e)) {
        return input_err(format!("eps_{i} = {e} is outside (0, 1]"));
    }
    let mut alphas: Vec<Rational> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let jr = int(j as i64);
        let mut rhs = spec.k()[j].clone();
        for (i, a) in alphas.iter().enumerate() {
            rhs -= a * (int(i as i64) - &eps[i] - &jr);
        }
        alphas.push(-rhs / &eps[j]);
    }
    let terms = alphas
        .into_iter()
        .zip(eps.iter().cloned())
        .map(|(a, e)| NegPartTerm::new(a, e))
        .collect();
    NegPartRep::new(Rational::zero(), Rational::zero(), Rational::zero(), terms)
}

/// Closed-form coefficients for a common offset `ε`:
///
/// ```text
/// α_j = −Σ_{i=0}^{j−2} (ε−1)^{j−i−2} / ε^{j−i+1} · k_i + (1/ε + 1/ε²) k_{j−1} − k_j / ε
/// ```
pub fn closed_form_alphas(spec: &SymmetricSpec, eps: &Rational) -> Result<NegPartRep> {
    if !in_unit_interval(eps) {
        return input_err(format!("eps = {eps} is outside (0, 1]"));
    }
    let n = spec.n();
    let inv = eps.recip();
    let em1 = eps - Rational::one();
    let mut terms = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut a = Rational::zero();
        for i in 0..j.saturating_sub(1) {
            let num = num_traits::pow(em1.clone(), j - i - 2);
            let den = num_traits::pow(eps.clone(), j - i + 1);
            a -= num / den * &spec.k()[i];
        }
        a += (&inv + &inv * &inv) * spec.k_at(j as isize - 1);
        a -= &inv * &spec.k()[j];
        terms.push(NegPartTerm::new(a, eps.clone()));
    }
    NegPartRep::new(Rational::zero(), Rational::zero(), Rational::zero(), terms)
}

/// The `ε = 1/2` representation:
/// `α_i = −8 Σ_{j=0}^{i} (−1)^{i−j} k_j − 2 k_{i−1} + 6 k_i`.
pub fn alphas_half(spec: &SymmetricSpec) -> NegPartRep {
    let n = spec.n();
    let mut terms = Vec::with_capacity(n + 1);
    // alternating[i] = Σ_{j<=i} (−1)^{i−j} k_j = k_i − alternating[i−1]
    let mut alternating = Rational::zero();
    for i in 0..=n {
        alternating = &spec.k()[i] - alternating;
        let a = int(-8) * &alternating - int(2) * spec.k_at(i as isize - 1) + int(6) * &spec.k()[i];
        terms.push(NegPartTerm::new(a, half()));
    }
    NegPartRep::new(Rational::zero(), Rational::zero(), Rational::zero(), terms)
        .expect("n >= 1 and eps = 1/2")
}

/// Second-difference form:
/// `k_0 + (k_1 − k_0) l + Σ_{i=1}^{n−1} (−k_{i−1} + 2k_i − k_{i+1}) min(i − l, 0)`.
///
/// The term `min(i − l, 0)` is stored at index `i + 1` with `ε = 1`.
pub fn fix_representation(spec: &SymmetricSpec) -> NegPartRep {
    let n = spec.n();
    let k = spec.k();
    let mut terms = vec![NegPartTerm::new(Rational::zero(), Rational::one()); n + 1];
    for i in 1..n {
        terms[i + 1].alpha = -&k[i - 1] + int(2) * &k[i] - &k[i + 1];
    }
    NegPartRep::new(k[0].clone(), &k[1] - &k[0], Rational::zero(), terms)
        .expect("n >= 1 and eps = 1")
}

/// Replaces adjacent pairs of positive `ε = 1` terms by a single term,
/// scanning left to right. For weights `a` at index `i` and `b` at `i + 1`:
///
/// `a·min(i−1−l, 0) + b·min(i−l, 0) = (a+b)·min(i − a/(a+b) − l, 0)` on integers `l`.
///
/// The result evaluates identically at every weight and has one fewer
/// non-zero term per merged pair.
pub fn merge_adjacent_kinks(rep: &NegPartRep) -> NegPartRep {
    let mut out = rep.clone();
    let one = Rational::one();
    let mut i = 0;
    while i < rep.n {
        let (a, b) = (&rep.terms[i], &rep.terms[i + 1]);
        let mergeable = a.eps == one
            && b.eps == one
            && a.alpha.is_positive()
            && b.alpha.is_positive()
            && !a.is_affine_at(i);
        if mergeable {
            let total = &a.alpha + &b.alpha;
            let eps = &a.alpha / &total;
            out.terms[i] = NegPartTerm::new(total, eps);
            out.terms[i + 1].alpha = Rational::zero();
            i += 2;
        } else {
            i += 1;
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct AlphaJson {
    i: usize,
    #[serde(with = "rational::serde_str")]
    alpha: Rational,
    #[serde(with = "rational::serde_str")]
    eps: Rational,
}

#[derive(Serialize, Deserialize)]
struct NegPartRepJson {
    n: usize,
    #[serde(with = "rational::serde_str")]
    affine_const: Rational,
    #[serde(with = "rational::serde_str")]
    affine_linear: Rational,
    #[serde(with = "rational::serde_str", default = "Rational::zero")]
    quadratic: Rational,
    alphas: Vec<AlphaJson>,
}

impl TryFrom<NegPartRepJson> for NegPartRep {
    type Error = Error;
    fn try_from(j: NegPartRepJson) -> Result<Self> {
        let mut terms: Vec<Option<NegPartTerm>> = vec![None; j.n + 1];
        for a in j.alphas {
            let slot = terms
                .get_mut(a.i)
                .ok_or_else(|| Error::Input(format!("alpha index {} exceeds n = {}", a.i, j.n)))?;
            if slot.replace(NegPartTerm::new(a.alpha, a.eps)).is_some() {
                return input_err(format!("alpha index {} listed twice", a.i));
            }
        }
        let terms = terms
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.ok_or_else(|| Error::Input(format!("alpha index {i} missing"))))
            .collect::<Result<Vec<_>>>()?;
        NegPartRep::new(j.affine_const, j.affine_linear, j.quadratic, terms)
    }
}

impl From<NegPartRep> for NegPartRepJson {
    fn from(r: NegPartRep) -> Self {
        NegPartRepJson {
            n: r.n,
            affine_const: r.affine_const,
            affine_linear: r.affine_linear,
            quadratic: r.quadratic,
            alphas: r
                .terms
                .into_iter()
                .enumerate()
                .map(|(i, t)| AlphaJson {
                    i,
                    alpha: t.alpha,
                    eps: t.eps,
                })
                .collect(),
        }
    }
}
