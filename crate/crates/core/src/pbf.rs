//! Pseudo-Boolean function types: symmetric specs, multilinear polynomials,
//! quadratic forms with auxiliary variables, and point evaluation.
//!
//! Truth tables are indexed with `x1` as the least significant bit:
//! `index = Σ 2^(r-1) x_r`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{input_err, Error, Result};
use crate::poly::{Monomial, Poly, Var};
use crate::rational::{self, int, Rational};

/// Largest `n` accepted by operations that materialize a full `2^n` table.
pub const MAX_TABLE_VARS: usize = 20;

/// Anything that can be evaluated on `{0,1}^n`.
pub trait PseudoBoolean: Sync {
    fn arity(&self) -> usize;
    /// `x.len()` must equal `arity()`.
    fn value(&self, x: &[bool]) -> Rational;
}

pub fn weight(x: &[bool]) -> usize {
    x.iter().filter(|&&b| b).count()
}

/// Point whose table index is `v` (`x1` = bit 0).
pub fn point_from_index(v: usize, n: usize) -> Vec<bool> {
    (0..n).map(|r| (v >> r) & 1 == 1).collect()
}

pub fn table_index(x: &[bool]) -> usize {
    x.iter()
        .enumerate()
        .fold(0, |acc, (r, &b)| acc | (usize::from(b) << r))
}

/// A symmetric function given by its value `k[l]` at each Hamming weight `l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SymmetricSpecJson", into = "SymmetricSpecJson")]
pub struct SymmetricSpec {
    n: usize,
    k: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct SymmetricSpecJson {
    n: usize,
    #[serde(with = "rational::serde_vec")]
    k: Vec<Rational>,
}

impl TryFrom<SymmetricSpecJson> for SymmetricSpec {
    type Error = Error;
    fn try_from(j: SymmetricSpecJson) -> Result<Self> {
        if j.k.len() != j.n + 1 {
            return input_err(format!(
                "k has {} entries, expected n+1 = {}",
                j.k.len(),
                j.n + 1
            ));
        }
        SymmetricSpec::new(j.k)
    }
}

impl From<SymmetricSpec> for SymmetricSpecJson {
    fn from(s: SymmetricSpec) -> Self {
        SymmetricSpecJson { n: s.n, k: s.k }
    }
}

impl SymmetricSpec {
    /// `k` must have `n + 1 >= 2` entries.
    pub fn new(k: Vec<Rational>) -> Result<Self> {
        if k.len() < 2 {
            return input_err("a symmetric spec needs n >= 1 (at least two weight values)");
        }
        Ok(SymmetricSpec { n: k.len() - 1, k })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> Rational) -> Result<Self> {
        SymmetricSpec::new((0..=n).map(f).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> &[Rational] {
        &self.k
    }

    /// `k_l`, with `k_{-1} = 0`.
    pub fn k_at(&self, l: isize) -> Rational {
        if l < 0 || l as usize > self.n {
            Rational::zero()
        } else {
            self.k[l as usize].clone()
        }
    }

    pub fn constant(n: usize, c: Rational) -> Result<Self> {
        SymmetricSpec::from_fn(n, |_| c.clone())
    }

    /// `x1 x2 ... xn`
    pub fn pos_monomial(n: usize) -> Result<Self> {
        SymmetricSpec::from_fn(n, |l| int(i64::from(l == n)))
    }

    /// `-x1 x2 ... xn`
    pub fn neg_monomial(n: usize) -> Result<Self> {
        SymmetricSpec::from_fn(n, |l| int(-i64::from(l == n)))
    }

    /// 1 iff weight >= t.
    pub fn t_out_of_n(t: usize, n: usize) -> Result<Self> {
        SymmetricSpec::from_fn(n, |l| int(i64::from(l >= t)))
    }

    /// 1 iff weight == t.
    pub fn exact_t(t: usize, n: usize) -> Result<Self> {
        SymmetricSpec::from_fn(n, |l| int(i64::from(l == t)))
    }

    /// 1 iff weight is odd.
    pub fn parity(n: usize) -> Result<Self> {
        SymmetricSpec::from_fn(n, |l| int((l % 2) as i64))
    }

    pub fn parity_complement(n: usize) -> Result<Self> {
        SymmetricSpec::from_fn(n, |l| int(1 - (l % 2) as i64))
    }

    pub fn truth_table(&self) -> Result<Vec<Rational>> {
        if self.n > MAX_TABLE_VARS {
            return Err(Error::Resource(format!(
                "n = {} exceeds the table cap {MAX_TABLE_VARS}",
                self.n
            )));
        }
        Ok((0..1usize << self.n)
            .map(|v| self.k[v.count_ones() as usize].clone())
            .collect())
    }
}

impl PseudoBoolean for SymmetricSpec {
    fn arity(&self) -> usize {
        self.n
    }
    fn value(&self, x: &[bool]) -> Rational {
        self.k[weight(x)].clone()
    }
}

pub fn eval_symmetric(spec: &SymmetricSpec, x: &[bool]) -> Result<Rational> {
    if x.len() != spec.n {
        return input_err(format!(
            "point has {} bits, spec has n = {}",
            x.len(),
            spec.n
        ));
    }
    Ok(spec.value(x))
}

/// An explicit truth table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    n: usize,
    values: Vec<Rational>,
}

impl TruthTable {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        let len = values.len();
        if len == 0 || !len.is_power_of_two() {
            return input_err(format!("table size {len} is not a power of two"));
        }
        let n = len.trailing_zeros() as usize;
        if n > MAX_TABLE_VARS {
            return Err(Error::Resource(format!(
                "table over {n} variables exceeds cap {MAX_TABLE_VARS}"
            )));
        }
        Ok(TruthTable { n, values })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

impl PseudoBoolean for TruthTable {
    fn arity(&self) -> usize {
        self.n
    }
    fn value(&self, x: &[bool]) -> Rational {
        self.values[table_index(x)].clone()
    }
}

/// A multilinear polynomial in `x1..xn` of arbitrary degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PolyJson", into = "PolyJson")]
pub struct MultilinearPoly {
    n: usize,
    poly: Poly,
}

impl MultilinearPoly {
    pub fn new(n: usize, poly: Poly) -> Result<Self> {
        if poly.max_y() > 0 {
            return input_err("multilinear function must not mention auxiliary variables");
        }
        if poly.max_x() > n {
            return input_err(format!("polynomial mentions x{} but n = {n}", poly.max_x()));
        }
        Ok(MultilinearPoly { n, poly })
    }

    /// Convenience: `terms` lists (1-based index set, coefficient).
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, Rational)>,
    ) -> Result<Self> {
        let mut p = Poly::zero();
        for (idx, c) in terms {
            p.add_term(Monomial::new(idx.into_iter().map(Var::X).collect()), c);
        }
        MultilinearPoly::new(n, p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    /// Coefficient of `Π_{i∈set} x_i`.
    pub fn coefficient(&self, set: &[usize]) -> Rational {
        self.poly
            .coefficient(&Monomial::new(set.iter().map(|&i| Var::X(i)).collect()))
    }

    pub fn eval(&self, x: &[bool]) -> Result<Rational> {
        if x.len() != self.n {
            return input_err(format!(
                "point has {} bits, polynomial has n = {}",
                x.len(),
                self.n
            ));
        }
        Ok(self.value(x))
    }

    pub fn truth_table(&self) -> Result<Vec<Rational>> {
        if self.n > MAX_TABLE_VARS {
            return Err(Error::Resource(format!(
                "n = {} exceeds the table cap",
                self.n
            )));
        }
        Ok((0..1usize << self.n)
            .map(|v| self.value(&point_from_index(v, self.n)))
            .collect())
    }
}

impl PseudoBoolean for MultilinearPoly {
    fn arity(&self) -> usize {
        self.n
    }
    fn value(&self, x: &[bool]) -> Rational {
        self.poly.eval(|v| match v {
            Var::X(i) => x[i - 1],
            Var::Y(_) => false,
        })
    }
}

/// Unique multilinear polynomial agreeing with `values` on every vertex.
pub fn interpolate_multilinear(values: &[Rational]) -> Result<MultilinearPoly> {
    let table = TruthTable::new(values.to_vec())?;
    let n = table.n;
    let mut a = table.values;
    for bit in 0..n {
        let step = 1usize << bit;
        for v in 0..a.len() {
            if v & step != 0 {
                let lower = a[v ^ step].clone();
                a[v] -= lower;
            }
        }
    }
    let mut p = Poly::zero();
    for (set, c) in a.into_iter().enumerate() {
        let vars = (0..n)
            .filter(|r| set >> r & 1 == 1)
            .map(|r| Var::X(r + 1))
            .collect();
        p.add_term(Monomial::new(vars), c);
    }
    MultilinearPoly::new(n, p)
}

/// A polynomial of degree at most two over `x1..xn` and `y1..ym`.
///
/// `aux_labels` optionally maps each aux index to the representation index
/// (the activation weight) of the term that introduced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuadFormJson", into = "QuadFormJson")]
pub struct QuadForm {
    n: usize,
    m: usize,
    poly: Poly,
    aux_labels: BTreeMap<usize, usize>,
}

impl QuadForm {
    pub fn new(n: usize, m: usize, poly: Poly) -> Result<Self> {
        if poly.degree() > 2 {
            return input_err(format!(
                "quadratic form has a term of degree {}",
                poly.degree()
            ));
        }
        if poly.max_x() > n {
            return input_err(format!("form mentions x{} but n = {n}", poly.max_x()));
        }
        if poly.max_y() > m {
            return input_err(format!("form mentions y{} but m = {m}", poly.max_y()));
        }
        Ok(QuadForm {
            n,
            m,
            poly,
            aux_labels: BTreeMap::new(),
        })
    }

    pub fn with_aux_labels(mut self, labels: BTreeMap<usize, usize>) -> Result<Self> {
        if let Some(&bad) = labels.keys().find(|&&k| k == 0 || k > self.m) {
            return input_err(format!("aux label for y{bad} but m = {}", self.m));
        }
        self.aux_labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn aux_labels(&self) -> &BTreeMap<usize, usize> {
        &self.aux_labels
    }

    pub fn coefficient(&self, vars: &[Var]) -> Rational {
        self.poly.coefficient(&Monomial::new(vars.to_vec()))
    }

    /// Value at `(x, y)`; lengths are not checked.
    pub fn value(&self, x: &[bool], y: &[bool]) -> Rational {
        self.poly.eval(|v| match v {
            Var::X(i) => x[i - 1],
            Var::Y(i) => y[i - 1],
        })
    }
}

pub fn eval_quadform(g: &QuadForm, x: &[bool], y: &[bool]) -> Result<Rational> {
    if x.len() != g.n || y.len() != g.m {
        return input_err(format!(
            "point has ({}, {}) bits, form has (n, m) = ({}, {})",
            x.len(),
            y.len(),
            g.n,
            g.m
        ));
    }
    Ok(g.value(x, y))
}

/// Builds a canonical form from a raw term list: factors sorted, repeated
/// monomials merged, zero coefficients dropped.
pub fn canonicalize(
    n: usize,
    m: usize,
    terms: impl IntoIterator<Item = (Vec<Var>, Rational)>,
) -> Result<QuadForm> {
    let mut p = Poly::zero();
    for (vars, c) in terms {
        p.add_term(Monomial::new(vars), c);
    }
    QuadForm::new(n, m, p)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    vars: Vec<String>,
    #[serde(with = "rational::serde_str")]
    coef: Rational,
}

fn terms_to_json(p: &Poly) -> Vec<TermJson> {
    p.terms()
        .map(|(m, c)| TermJson {
            vars: m.vars().iter().map(ToString::to_string).collect(),
            coef: c.clone(),
        })
        .collect()
}

fn terms_from_json(terms: Vec<TermJson>) -> Result<Poly> {
    let mut p = Poly::zero();
    for t in terms {
        let vars = t
            .vars
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Var>>>()?;
        p.add_term(Monomial::new(vars), t.coef);
    }
    Ok(p)
}

#[derive(Serialize, Deserialize)]
struct QuadFormJson {
    n: usize,
    m: usize,
    terms: Vec<TermJson>,
    #[serde(default)]
    aux_labels: BTreeMap<String, usize>,
}

impl TryFrom<QuadFormJson> for QuadForm {
    type Error = Error;
    fn try_from(j: QuadFormJson) -> Result<Self> {
        let labels = j
            .aux_labels
            .into_iter()
            .map(|(k, v)| {
                k.parse::<usize>()
                    .map(|k| (k, v))
                    .map_err(|_| Error::Input(format!("aux label key {k:?} is not an index")))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        QuadForm::new(j.n, j.m, terms_from_json(j.terms)?)?.with_aux_labels(labels)
    }
}

impl From<QuadForm> for QuadFormJson {
    fn from(g: QuadForm) -> Self {
        QuadFormJson {
            n: g.n,
            m: g.m,
            terms: terms_to_json(&g.poly),
            aux_labels: g
                .aux_labels
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl TryFrom<PolyJson> for MultilinearPoly {
    type Error = Error;
    fn try_from(j: PolyJson) -> Result<Self> {
        MultilinearPoly::new(j.n, terms_from_json(j.terms)?)
    }
}

impl From<MultilinearPoly> for PolyJson {
    fn from(f: MultilinearPoly) -> Self {
        PolyJson {
            n: f.n,
            terms: terms_to_json(&f.poly),
        }
    }
}

/// Exhaustive list of points of `{0,1}^n`, in table order.
pub fn all_points(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..1usize << n).map(move |v| point_from_index(v, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn bits(s: &str) -> Vec<bool> {
        s.bytes().map(|b| b == b'1').collect()
    }

    fn standard_neg_monomial_3() -> QuadForm {
        // y (2 - x1 - x2 - x3)
        canonicalize(
            3,
            1,
            vec![
                (vec![Var::Y(1)], int(2)),
                (vec![Var::X(1), Var::Y(1)], int(-1)),
                (vec![Var::X(2), Var::Y(1)], int(-1)),
                (vec![Var::X(3), Var::Y(1)], int(-1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn eval_symmetric_examples() {
        let neg = SymmetricSpec::neg_monomial(3).unwrap();
        assert_eq!(eval_symmetric(&neg, &bits("111")).unwrap(), int(-1));
        assert_eq!(eval_symmetric(&neg, &bits("101")).unwrap(), int(0));
        let par = SymmetricSpec::parity(4).unwrap();
        assert_eq!(eval_symmetric(&par, &bits("1110")).unwrap(), int(1));
        assert!(matches!(
            eval_symmetric(&par, &bits("11")),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn eval_quadform_examples() {
        let g = standard_neg_monomial_3();
        assert_eq!(
            eval_quadform(&g, &bits("111"), &bits("1")).unwrap(),
            int(-1)
        );
        assert_eq!(eval_quadform(&g, &bits("100"), &bits("0")).unwrap(), int(0));
        // 2 - 1 = 1 by direct substitution
        assert_eq!(eval_quadform(&g, &bits("100"), &bits("1")).unwrap(), int(1));
        assert!(eval_quadform(&g, &bits("100"), &bits("")).is_err());
    }

    #[test]
    fn interpolate_parity_3() {
        let table = SymmetricSpec::parity(3).unwrap().truth_table().unwrap();
        let f = interpolate_multilinear(&table).unwrap();
        for i in 1..=3 {
            assert_eq!(f.coefficient(&[i]), int(1));
        }
        assert_eq!(f.coefficient(&[1, 2]), int(-2));
        assert_eq!(f.coefficient(&[1, 3]), int(-2));
        assert_eq!(f.coefficient(&[2, 3]), int(-2));
        assert_eq!(f.coefficient(&[1, 2, 3]), int(4));
        assert_eq!(f.poly().len(), 7);
    }

    #[test]
    fn interpolate_trivial_tables() {
        let zero = interpolate_multilinear(&vec![int(0); 8]).unwrap();
        assert!(zero.poly().is_zero());
        let and2 = interpolate_multilinear(&[int(0), int(0), int(0), int(1)]).unwrap();
        assert_eq!(and2.poly().len(), 1);
        assert_eq!(and2.coefficient(&[1, 2]), int(1));
        assert!(interpolate_multilinear(&vec![int(0); 6]).is_err());
        assert!(interpolate_multilinear(&[]).is_err());
    }

    #[test]
    fn canonicalize_examples() {
        let g = canonicalize(
            2,
            0,
            vec![
                (vec![Var::X(2), Var::X(1)], rat(1, 2)),
                (vec![Var::X(1), Var::X(2)], rat(1, 3)),
                (vec![Var::X(1)], int(0)),
            ],
        )
        .unwrap();
        assert_eq!(g.poly().len(), 1);
        assert_eq!(g.coefficient(&[Var::X(1), Var::X(2)]), rat(5, 6));
        let again = canonicalize(
            2,
            0,
            g.poly()
                .terms()
                .map(|(m, c)| (m.vars().to_vec(), c.clone())),
        )
        .unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn quadform_rejects_cubic_and_out_of_range() {
        assert!(canonicalize(3, 0, vec![(vec![Var::X(1), Var::X(2), Var::X(3)], int(1))]).is_err());
        assert!(canonicalize(2, 0, vec![(vec![Var::Y(1)], int(1))]).is_err());
        assert!(canonicalize(2, 1, vec![(vec![Var::X(3)], int(1))]).is_err());
    }

    #[test]
    fn quadform_json_shape() {
        let g = standard_neg_monomial_3();
        let v = serde_json::to_value(&g).unwrap();
        assert_eq!(v["n"], 3);
        assert_eq!(v["m"], 1);
        assert_eq!(v["terms"][0]["vars"], serde_json::json!(["y1"]));
        assert_eq!(v["terms"][0]["coef"], "2");
        let back: QuadForm = serde_json::from_value(v).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn spec_json_validates_length() {
        let ok: SymmetricSpec = serde_json::from_str(r#"{"n":2,"k":["0","1/2","-3"]}"#).unwrap();
        assert_eq!(ok.k()[1], rat(1, 2));
        assert!(serde_json::from_str::<SymmetricSpec>(r#"{"n":3,"k":["0","1"]}"#).is_err());
    }
}
