//! Quadratization constructions for symmetric functions.
//!
//! Most constructions follow the same pipeline: build a negative-part
//! representation, add multiples of the zero identities until every
//! non-affine coefficient is non-negative, then replace each positive term
//! `α·min(i − ε − l, 0)` by `α·y·(i − ε − Σx)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{input_err, Error, Result};
use crate::identities::{add_scaled_identity, make_identity, IdentityKind};
use crate::pbf::{interpolate_multilinear, QuadForm, SymmetricSpec};
use crate::poly::{Poly, Var};
use crate::rational::{half, int, Rational};
use crate::representation::{alphas_half, fix_representation, merge_adjacent_kinks, NegPartRep};
use crate::verify::{is_x_symmetric, is_y_linear};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    GeneralSymmetric,
    PosMonomial,
    PosMonomialSplit,
    NegMonomialStandard,
    NegMonomialHalf,
    NegMonomialAsymmetric,
    TOutOfN,
    ExactT,
    Parity,
    ParityComplement,
    FromRep,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::GeneralSymmetric,
        Family::PosMonomial,
        Family::PosMonomialSplit,
        Family::NegMonomialStandard,
        Family::NegMonomialHalf,
        Family::NegMonomialAsymmetric,
        Family::TOutOfN,
        Family::ExactT,
        Family::Parity,
        Family::ParityComplement,
        Family::FromRep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::GeneralSymmetric => "general-symmetric",
            Family::PosMonomial => "pos-monomial",
            Family::PosMonomialSplit => "pos-monomial-split",
            Family::NegMonomialStandard => "neg-monomial-standard",
            Family::NegMonomialHalf => "neg-monomial-half",
            Family::NegMonomialAsymmetric => "neg-monomial-asymmetric",
            Family::TOutOfN => "t-out-of-n",
            Family::ExactT => "exact-t",
            Family::Parity => "parity",
            Family::ParityComplement => "parity-complement",
            Family::FromRep => "from-rep",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('_', "-");
        let alias = match norm.as_str() {
            "general" => Some(Family::GeneralSymmetric),
            "neg-monomial" => Some(Family::NegMonomialStandard),
            _ => None,
        };
        alias
            .or_else(|| Family::ALL.into_iter().find(|f| f.name() == norm))
            .ok_or_else(|| Error::Input(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadratizationResult {
    #[serde(flatten)]
    pub g: QuadForm,
    pub family: Family,
    pub aux_count: usize,
    pub paper_bound: usize,
    pub y_linear: bool,
    pub x_symmetric: bool,
}

impl QuadratizationResult {
    fn new(g: QuadForm, family: Family, bound: usize) -> Self {
        QuadratizationResult {
            aux_count: g.m(),
            paper_bound: bound,
            y_linear: is_y_linear(&g),
            x_symmetric: is_x_symmetric(&g),
            family,
            g,
        }
    }

    fn relabel(mut self, family: Family, bound: usize) -> Self {
        self.family = family;
        self.paper_bound = bound;
        self
    }
}

/// `l²` on binary vectors: `Σx + 2 Σ_{i<j} x_i x_j`.
fn weight_squared(n: usize) -> Poly {
    Poly::weight(n).add(&Poly::pair_sum(n).scale(&int(2)))
}

/// `y·(c − Σx)` scaled by `coef`.
fn aux_term(n: usize, aux: usize, coef: &Rational, c: &Rational) -> Poly {
    Poly::var(Var::Y(aux))
        .mul(&Poly::constant(c.clone()).sub(&Poly::weight(n)))
        .scale(coef)
}

/// Turns a representation whose non-affine coefficients are all `>= 0` into
/// a y-linear quadratization with one auxiliary variable per positive term.
/// Terms with `i − ε <= 0` are affine on every weight and go into `q(x)`.
pub fn from_nonneg_rep(rep: &NegPartRep) -> Result<QuadratizationResult> {
    let n = rep.n();
    let mut c0 = rep.affine_const.clone();
    let mut c1 = rep.affine_linear.clone();
    let mut positive = Vec::new();
    let mut candidates = 0;
    for (i, t) in rep.terms().iter().enumerate() {
        let threshold = int(i as i64) - &t.eps;
        if t.is_affine_at(i) {
            c0 += &t.alpha * &threshold;
            c1 -= &t.alpha;
            continue;
        }
        candidates += 1;
        if t.alpha.is_negative() {
            return Err(Error::Precondition(format!(
                "alpha_{i} = {} is negative; negative terms have no y-linear translation",
                t.alpha
            )));
        }
        if t.alpha.is_positive() {
            positive.push((i, t.alpha.clone(), threshold));
        }
    }
    let mut p = Poly::constant(c0)
        .add(&Poly::weight(n).scale(&c1))
        .add(&weight_squared(n).scale(&rep.quadratic));
    let mut labels = BTreeMap::new();
    for (j, (i, alpha, threshold)) in positive.iter().enumerate() {
        p = p.add(&aux_term(n, j + 1, alpha, threshold));
        labels.insert(j + 1, *i);
    }
    let g = QuadForm::new(n, positive.len(), p)?.with_aux_labels(labels)?;
    Ok(QuadratizationResult::new(g, Family::FromRep, candidates))
}

fn interpolated(
    spec: &SymmetricSpec,
    family: Family,
    bound: usize,
) -> Result<QuadratizationResult> {
    let f = interpolate_multilinear(&spec.truth_table()?)?;
    let g = QuadForm::new(spec.n(), 0, f.poly().clone())?;
    Ok(QuadratizationResult::new(g, family, bound))
}

/// Smallest index attaining the minimum coefficient among `indices`.
fn min_alpha(rep: &NegPartRep, indices: impl Iterator<Item = usize>) -> Option<Rational> {
    indices
        .map(|i| rep.alpha(i).clone())
        .reduce(|a, b| if b < a { b } else { a })
}

/// Any symmetric function with at most `n − 2` auxiliary variables.
///
/// Subtracts `α_r/2 · E'` and `α_s/2 · E''`, where `α_r` and `α_s` are the
/// smallest even-index (`i >= 2`) and odd-index coefficients of the `ε = 1/2`
/// representation. This zeroes one term in each class and leaves the rest
/// non-negative. For `n <= 2` the function is already quadratic.
pub fn quadratize_symmetric_general(spec: &SymmetricSpec) -> Result<QuadratizationResult> {
    let n = spec.n();
    if n < 3 {
        return interpolated(spec, Family::GeneralSymmetric, 0);
    }
    let rep = alphas_half(spec);
    let alpha_r = min_alpha(&rep, (2..=n).step_by(2)).expect("n >= 2");
    let alpha_s = min_alpha(&rep, (1..=n).step_by(2)).expect("n >= 1");
    let rep = add_scaled_identity(
        &rep,
        &make_identity(IdentityKind::EPrime, n)?,
        &(-alpha_r * half()),
    )?;
    let rep = add_scaled_identity(
        &rep,
        &make_identity(IdentityKind::EDoublePrime, n)?,
        &(-alpha_s * half()),
    )?;
    Ok(from_nonneg_rep(&rep)?.relabel(Family::GeneralSymmetric, n - 2))
}

/// `x1⋯xn` with `⌊(n−1)/2⌋` auxiliary variables: the `ε = 1/2` form
/// `−2·min(n − 1/2 − l, 0)` plus `E'` (n even) or `E''` (n odd).
pub fn quadratize_pos_monomial(n: usize) -> Result<QuadratizationResult> {
    if n == 0 {
        return input_err("n must be at least 1");
    }
    let rep = alphas_half(&SymmetricSpec::pos_monomial(n)?);
    let kind = if n.is_multiple_of(2) {
        IdentityKind::EPrime
    } else {
        IdentityKind::EDoublePrime
    };
    let rep = add_scaled_identity(&rep, &make_identity(kind, n)?, &Rational::one())?;
    Ok(from_nonneg_rep(&rep)?.relabel(Family::PosMonomial, (n - 1) / 2))
}

/// Odd `n`: `x1⋯xn = x1⋯x(n−1) − x1⋯x(n−1)·(1 − xn)`. The even monomial
/// uses [`quadratize_pos_monomial`]; the second product is a negative
/// monomial in the literals `x1..x(n−1), x̄n` and gets the standard
/// single-variable quadratization.
pub fn quadratize_pos_monomial_split(n: usize) -> Result<QuadratizationResult> {
    if n < 3 || n.is_multiple_of(2) {
        return input_err(format!("split construction needs odd n >= 3, got {n}"));
    }
    let head = quadratize_pos_monomial(n - 1)?;
    let aux = head.g.m() + 1;
    // y (n − 1 − Σ_{r<n} x_r − (1 − x_n))
    let literal_sum = Poly::weight(n - 1)
        .add(&Poly::constant(Rational::one()))
        .sub(&Poly::var(Var::X(n)));
    let tail = Poly::var(Var::Y(aux)).mul(&Poly::constant(int(n as i64 - 1)).sub(&literal_sum));
    let mut labels = head.g.aux_labels().clone();
    labels.insert(aux, n);
    let g = QuadForm::new(n, aux, head.g.poly().add(&tail))?.with_aux_labels(labels)?;
    Ok(QuadratizationResult::new(
        g,
        Family::PosMonomialSplit,
        (n - 1) / 2,
    ))
}

fn single_aux_form(
    n: usize,
    coef: Rational,
    threshold: Rational,
    family: Family,
) -> Result<QuadratizationResult> {
    let g = QuadForm::new(n, 1, aux_term(n, 1, &coef, &threshold))?
        .with_aux_labels(BTreeMap::from([(1, n)]))?;
    Ok(QuadratizationResult::new(g, family, 1))
}

/// `y (n − 1 − Σx)`
pub fn quadratize_neg_monomial_standard(n: usize) -> Result<QuadratizationResult> {
    if n == 0 {
        return input_err("n must be at least 1");
    }
    single_aux_form(
        n,
        Rational::one(),
        int(n as i64 - 1),
        Family::NegMonomialStandard,
    )
}

/// `2y (n − 1/2 − Σx)`
pub fn quadratize_neg_monomial_half(n: usize) -> Result<QuadratizationResult> {
    if n == 0 {
        return input_err("n must be at least 1");
    }
    single_aux_form(n, int(2), int(n as i64) - half(), Family::NegMonomialHalf)
}

/// `(n−2)·xn·y − Σ_{i<n} x_i (y − (1 − xn))`, a single-variable
/// quadratization of `−x1⋯xn` that is not symmetric in `x`.
pub fn quadratize_neg_monomial_asymmetric(n: usize) -> Result<QuadratizationResult> {
    if n < 2 {
        return input_err(format!("asymmetric construction needs n >= 2, got {n}"));
    }
    let y = Poly::var(Var::Y(1));
    let xn = Poly::var(Var::X(n));
    let inner = y.sub(&Poly::constant(Rational::one())).add(&xn);
    let p = xn
        .mul(&y)
        .scale(&int(n as i64 - 2))
        .sub(&Poly::weight(n - 1).mul(&inner));
    let g = QuadForm::new(n, 1, p)?;
    Ok(QuadratizationResult::new(
        g,
        Family::NegMonomialAsymmetric,
        1,
    ))
}

/// Indicator of `weight >= t` with at most `⌈n/2⌉` auxiliary variables.
///
/// The `ε = 1/2` form has `α_t = −2` and `±4` alternating above `t`; adding
/// `2E'` (t even) or `2E''` (t odd) clears the negatives. When `t` is odd and
/// `n` is even that route leaves `n/2 + 1` positive terms, so those cases use
/// [`second_difference_quadratization`] instead, which stays within the bound.
pub fn quadratize_t_out_of_n(t: usize, n: usize) -> Result<QuadratizationResult> {
    if t == 0 || t > n {
        return input_err(format!(
            "t-out-of-n needs 1 <= t <= n, got t = {t}, n = {n}"
        ));
    }
    let spec = SymmetricSpec::t_out_of_n(t, n)?;
    let result = if t % 2 == 1 && n.is_multiple_of(2) {
        second_difference_quadratization(&spec)?
    } else {
        quadratize_t_out_of_n_half_form(t, n)?
    };
    Ok(result.relabel(Family::TOutOfN, n.div_ceil(2)))
}

/// The pure `ε = 1/2` route for t-out-of-n: always valid, but uses
/// `n/2 + 1` auxiliaries when `t` is odd and `n` is even.
pub fn quadratize_t_out_of_n_half_form(t: usize, n: usize) -> Result<QuadratizationResult> {
    if t == 0 || t > n {
        return input_err(format!(
            "t-out-of-n needs 1 <= t <= n, got t = {t}, n = {n}"
        ));
    }
    let rep = alphas_half(&SymmetricSpec::t_out_of_n(t, n)?);
    let kind = if t.is_multiple_of(2) {
        IdentityKind::EPrime
    } else {
        IdentityKind::EDoublePrime
    };
    let rep = add_scaled_identity(&rep, &make_identity(kind, n)?, &int(2))?;
    Ok(from_nonneg_rep(&rep)?.relabel(Family::TOutOfN, n.div_ceil(2)))
}

/// Second-difference form, shifted by `c·E` with `c = −min α/2` so every
/// coefficient is non-negative and the smallest becomes zero, then adjacent
/// positive terms merged pairwise into single terms with fractional offsets.
pub fn second_difference_quadratization(spec: &SymmetricSpec) -> Result<QuadratizationResult> {
    let n = spec.n();
    let mut rep = fix_representation(spec);
    if n >= 2 {
        let lowest = min_alpha(&rep, 2..=n).expect("n >= 2");
        rep = add_scaled_identity(
            &rep,
            &make_identity(IdentityKind::E, n)?,
            &(-lowest * half()),
        )?;
    }
    from_nonneg_rep(&merge_adjacent_kinks(&rep))
}

/// Indicator of `weight == t` with at most `⌊n/2⌋` auxiliary variables
/// (`⌊(n−1)/2⌋` when `t = n`, which is the positive monomial).
///
/// The second-difference form of exact-t has only the terms `−1, 2, −1`
/// around `t`; after the `E` shift the two `−1` terms vanish and every other
/// coefficient is `1`, so [`second_difference_quadratization`] pairs them up.
pub fn quadratize_exact_t(t: usize, n: usize) -> Result<QuadratizationResult> {
    if t > n || n == 0 {
        return input_err(format!(
            "exact-t needs 0 <= t <= n and n >= 1, got t = {t}, n = {n}"
        ));
    }
    if t == n {
        return Ok(quadratize_pos_monomial(n)?.relabel(Family::ExactT, (n - 1) / 2));
    }
    let spec = SymmetricSpec::exact_t(t, n)?;
    Ok(second_difference_quadratization(&spec)?.relabel(Family::ExactT, n / 2))
}

fn parity_like(spec: SymmetricSpec, family: Family, bound: usize) -> Result<QuadratizationResult> {
    let n = spec.n();
    let rep = fix_representation(&spec);
    let rep = add_scaled_identity(&rep, &make_identity(IdentityKind::E, n)?, &Rational::one())?;
    Ok(from_nonneg_rep(&rep)?.relabel(family, bound))
}

/// `2 Σ_{i<j} x_i x_j + Σx + 4 Σ_{i odd < n} y_i (i − Σx)`, with `⌊n/2⌋` auxiliaries.
pub fn quadratize_parity(n: usize) -> Result<QuadratizationResult> {
    parity_like(SymmetricSpec::parity(n)?, Family::Parity, n / 2)
}

/// `1 + 2 Σ_{i<j} x_i x_j − Σx + 4 Σ_{i even < n} y_i (i − Σx)`, with `⌊(n−1)/2⌋` auxiliaries.
pub fn quadratize_parity_complement(n: usize) -> Result<QuadratizationResult> {
    if n == 0 {
        return input_err("n must be at least 1");
    }
    parity_like(
        SymmetricSpec::parity_complement(n)?,
        Family::ParityComplement,
        (n - 1) / 2,
    )
}

/// The symmetric function a family quadratizes, for named families.
pub fn family_target(family: Family, t: Option<usize>, n: usize) -> Result<SymmetricSpec> {
    let need_t = || t.ok_or_else(|| Error::Input(format!("family {family} needs t")));
    match family {
        Family::PosMonomial | Family::PosMonomialSplit => SymmetricSpec::pos_monomial(n),
        Family::NegMonomialStandard | Family::NegMonomialHalf | Family::NegMonomialAsymmetric => {
            SymmetricSpec::neg_monomial(n)
        }
        Family::TOutOfN => SymmetricSpec::t_out_of_n(need_t()?, n),
        Family::ExactT => SymmetricSpec::exact_t(need_t()?, n),
        Family::Parity => SymmetricSpec::parity(n),
        Family::ParityComplement => SymmetricSpec::parity_complement(n),
        Family::GeneralSymmetric | Family::FromRep => input_err(format!(
            "family {family} has no fixed target; pass explicit weight values"
        )),
    }
}

/// Dispatches a named family construction.
pub fn quadratize_family(
    family: Family,
    t: Option<usize>,
    n: usize,
) -> Result<QuadratizationResult> {
    let need_t = || t.ok_or_else(|| Error::Input(format!("family {family} needs t")));
    match family {
        Family::PosMonomial => quadratize_pos_monomial(n),
        Family::PosMonomialSplit => quadratize_pos_monomial_split(n),
        Family::NegMonomialStandard => quadratize_neg_monomial_standard(n),
        Family::NegMonomialHalf => quadratize_neg_monomial_half(n),
        Family::NegMonomialAsymmetric => quadratize_neg_monomial_asymmetric(n),
        Family::TOutOfN => quadratize_t_out_of_n(need_t()?, n),
        Family::ExactT => quadratize_exact_t(need_t()?, n),
        Family::Parity => quadratize_parity(n),
        Family::ParityComplement => quadratize_parity_complement(n),
        Family::GeneralSymmetric | Family::FromRep => {
            input_err(format!("family {family} needs an explicit function"))
        }
    }
}
