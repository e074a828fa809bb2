//! Certification of quadratizations by exhaustive minimization.
//!
//! The sweep visits `x` in lexicographic order of `(x1, ..., xn)`, so the
//! reported counterexample is the lexicographically first failing point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{input_err, Error, Result};
use crate::pbf::{interpolate_multilinear, PseudoBoolean, QuadForm, SymmetricSpec};
use crate::poly::Var;
use crate::rational::{self, Rational};

/// Largest `n` for an exhaustive sweep of a y-linear form.
pub const MAX_SWEEP_VARS: usize = 22;
/// Largest `n + m` for an exhaustive sweep of a general form.
pub const MAX_TOTAL_BITS: usize = 24;
/// Largest `m` for brute-force minimization over `y`.
pub const MAX_BRUTE_AUX: usize = 20;

pub fn is_y_linear(g: &QuadForm) -> bool {
    g.poly().terms().all(|(m, _)| m.aux_count() <= 1)
}

/// Invariance of the coefficients under every adjacent transposition of
/// `x` indices, with `y` indices fixed.
pub fn is_x_symmetric(g: &QuadForm) -> bool {
    (1..g.n()).all(|i| {
        let swapped = g.poly().rename(|v| match v {
            Var::X(j) if j == i => Var::X(i + 1),
            Var::X(j) if j == i + 1 => Var::X(i),
            other => other,
        });
        &swapped == g.poly()
    })
}

/// `g = q(x) + Σ_i y_i (c_i + Σ_r w_ir x_r)` with every coefficient
/// multiplied by the common denominator `scale`, so the sweep runs on integers.
struct YLinear {
    scale: BigInt,
    constant: BigInt,
    linear: Vec<(usize, BigInt)>,
    pairs: Vec<(usize, usize, BigInt)>,
    aux: Vec<(BigInt, Vec<(usize, BigInt)>)>,
}

impl YLinear {
    fn split(g: &QuadForm) -> Option<YLinear> {
        let scale = g
            .poly()
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let int = |c: &Rational| (c * &scale).to_integer();
        let mut split = YLinear {
            constant: BigInt::zero(),
            linear: Vec::new(),
            pairs: Vec::new(),
            aux: vec![(BigInt::zero(), Vec::new()); g.m()],
            scale: scale.clone(),
        };
        for (mono, c) in g.poly().terms() {
            match mono.vars() {
                [] => split.constant += int(c),
                [Var::X(r)] => split.linear.push((*r, int(c))),
                [Var::X(r), Var::X(s)] => split.pairs.push((*r, *s, int(c))),
                [Var::Y(i)] => split.aux[i - 1].0 += int(c),
                [Var::X(r), Var::Y(i)] => split.aux[i - 1].1.push((*r, int(c))),
                _ => return None,
            }
        }
        Some(split)
    }

    fn min_over_y(&self, x: &[bool]) -> Rational {
        let mut acc = self.constant.clone();
        for (r, w) in &self.linear {
            if x[r - 1] {
                acc += w;
            }
        }
        for (r, s, w) in &self.pairs {
            if x[r - 1] && x[s - 1] {
                acc += w;
            }
        }
        for (c, lin) in &self.aux {
            let mut a = c.clone();
            for (r, w) in lin {
                if x[r - 1] {
                    a += w;
                }
            }
            if a.is_negative() {
                acc += a;
            }
        }
        Rational::new(acc, self.scale.clone())
    }
}

fn brute_min(g: &QuadForm, x: &[bool]) -> Rational {
    let m = g.m();
    let mut y = vec![false; m];
    let mut best = g.value(x, &y);
    for v in 1..1usize << m {
        for (b, slot) in y.iter_mut().enumerate() {
            *slot = (v >> b) & 1 == 1;
        }
        let val = g.value(x, &y);
        if val < best {
            best = val;
        }
    }
    best
}

/// `min { g(x, y) : y ∈ {0,1}^m }`.
///
/// Y-linear forms take the closed form `q(x) + Σ_i min(0, a_i(x))`; anything
/// else is enumerated over all `2^m` assignments.
pub fn minimize_over_y(g: &QuadForm, x: &[bool]) -> Result<Rational> {
    if x.len() != g.n() {
        return input_err(format!(
            "point has {} bits, form has n = {}",
            x.len(),
            g.n()
        ));
    }
    if let Some(split) = YLinear::split(g) {
        return Ok(split.min_over_y(x));
    }
    if g.m() > MAX_BRUTE_AUX {
        return Err(Error::Resource(format!(
            "m = {} exceeds brute-force cap {MAX_BRUTE_AUX}",
            g.m()
        )));
    }
    Ok(brute_min(g, x))
}

/// Enumerates every `y` regardless of structure. Used to cross-check the fast path.
pub fn minimize_over_y_brute(g: &QuadForm, x: &[bool]) -> Result<Rational> {
    if x.len() != g.n() {
        return input_err(format!(
            "point has {} bits, form has n = {}",
            x.len(),
            g.n()
        ));
    }
    if g.m() > MAX_BRUTE_AUX {
        return Err(Error::Resource(format!(
            "m = {} exceeds brute-force cap {MAX_BRUTE_AUX}",
            g.m()
        )));
    }
    Ok(brute_min(g, x))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub x: Vec<u8>,
    #[serde(with = "rational::serde_str")]
    pub expected: Rational,
    #[serde(with = "rational::serde_str")]
    pub got: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub checked_points: u64,
    pub y_linear: bool,
    pub x_symmetric: bool,
    /// `min_x f(x) == min_{x,y} g(x, y)`
    pub global_min_match: bool,
}

fn lex_point(v: usize, n: usize) -> Vec<bool> {
    (1..=n).map(|r| (v >> (n - r)) & 1 == 1).collect()
}

#[derive(Clone)]
struct Sweep {
    min_f: Option<Rational>,
    min_g: Option<Rational>,
    first_fail: Option<(usize, Rational, Rational)>,
}

impl Sweep {
    fn empty() -> Self {
        Sweep {
            min_f: None,
            min_g: None,
            first_fail: None,
        }
    }

    fn point(v: usize, expected: Rational, got: Rational) -> Self {
        let first_fail = (expected != got).then(|| (v, expected.clone(), got.clone()));
        Sweep {
            min_f: Some(expected),
            min_g: Some(got),
            first_fail,
        }
    }

    fn merge(self, other: Sweep) -> Sweep {
        fn min_opt(a: Option<Rational>, b: Option<Rational>) -> Option<Rational> {
            match (a, b) {
                (Some(a), Some(b)) => Some(if b < a { b } else { a }),
                (a, None) => a,
                (None, b) => b,
            }
        }
        let first_fail = match (self.first_fail, other.first_fail) {
            (Some(a), Some(b)) => Some(if b.0 < a.0 { b } else { a }),
            (a, None) => a,
            (None, b) => b,
        };
        Sweep {
            min_f: min_opt(self.min_f, other.min_f),
            min_g: min_opt(self.min_g, other.min_g),
            first_fail,
        }
    }
}

/// Checks `f(x) = min_y g(x, y)` at every vertex of `{0,1}^n`.
pub fn verify_quadratization(g: &QuadForm, f: &dyn PseudoBoolean) -> Result<VerifyReport> {
    let n = g.n();
    if f.arity() != n {
        return input_err(format!("form has n = {n}, function has n = {}", f.arity()));
    }
    let split = YLinear::split(g);
    if split.is_some() {
        if n > MAX_SWEEP_VARS {
            return Err(Error::Resource(format!(
                "n = {n} exceeds sweep cap {MAX_SWEEP_VARS}"
            )));
        }
    } else if n + g.m() > MAX_TOTAL_BITS {
        return Err(Error::Resource(format!(
            "n + m = {} exceeds enumeration cap {MAX_TOTAL_BITS}",
            n + g.m()
        )));
    }
    let sweep = (0..1usize << n)
        .into_par_iter()
        .map(|v| {
            let x = lex_point(v, n);
            let got = match &split {
                Some(s) => s.min_over_y(&x),
                None => brute_min(g, &x),
            };
            Sweep::point(v, f.value(&x), got)
        })
        .reduce(Sweep::empty, Sweep::merge);
    let counterexample = sweep.first_fail.map(|(v, expected, got)| Counterexample {
        x: lex_point(v, n).into_iter().map(u8::from).collect(),
        expected,
        got,
    });
    Ok(VerifyReport {
        passed: counterexample.is_none(),
        counterexample,
        checked_points: 1u64 << n,
        y_linear: split.is_some(),
        x_symmetric: is_x_symmetric(g),
        global_min_match: sweep.min_f == sweep.min_g,
    })
}

/// Degree of the unique multilinear interpolant of parity on three variables.
/// A value of 3 means no quadratic polynomial agrees with parity on a 3-cube.
pub fn parity_3cube_degree_oracle() -> usize {
    parity_interpolant(3).0
}

/// Degree and top coefficient (of `x1⋯xn`) of the parity interpolant.
pub fn parity_interpolant(n: usize) -> (usize, Rational) {
    let table = SymmetricSpec::parity(n)
        .and_then(|s| s.truth_table())
        .expect("small parity table");
    let f = interpolate_multilinear(&table).expect("power-of-two table");
    let top: Vec<usize> = (1..=n).collect();
    (f.degree(), f.coefficient(&top))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbf::{canonicalize, interpolate_multilinear, MultilinearPoly, TruthTable};
    use crate::rational::int;

    fn standard(n: usize, constant: i64) -> QuadForm {
        let mut terms = vec![(vec![Var::Y(1)], int(constant))];
        for r in 1..=n {
            terms.push((vec![Var::X(r), Var::Y(1)], int(-1)));
        }
        canonicalize(n, 1, terms).unwrap()
    }

    #[test]
    fn standard_min_at_all_ones() {
        let g = standard(3, 2);
        assert_eq!(minimize_over_y(&g, &[true, true, true]).unwrap(), int(-1));
        assert_eq!(minimize_over_y(&g, &[true, true, false]).unwrap(), int(0));
        assert!(minimize_over_y(&g, &[true]).is_err());
    }

    #[test]
    fn no_aux_reduces_to_evaluation() {
        let g = canonicalize(
            2,
            0,
            vec![(vec![Var::X(1), Var::X(2)], int(3)), (vec![], int(-1))],
        )
        .unwrap();
        for x in crate::pbf::all_points(2) {
            assert_eq!(minimize_over_y(&g, &x).unwrap(), g.value(&x, &[]));
        }
    }

    #[test]
    fn corrupted_constant_fails_at_all_ones() {
        let f = SymmetricSpec::neg_monomial(4).unwrap();
        assert!(verify_quadratization(&standard(4, 3), &f).unwrap().passed);
        let report = verify_quadratization(&standard(4, 4), &f).unwrap();
        assert!(!report.passed);
        let cx = report.counterexample.unwrap();
        assert_eq!(cx.x, vec![1, 1, 1, 1]);
        assert_eq!(cx.expected, int(-1));
        assert_eq!(cx.got, int(0));
        assert_eq!(report.checked_points, 16);
    }

    #[test]
    fn interpolant_verifies_trivially() {
        let h = MultilinearPoly::from_terms(
            3,
            vec![(vec![1, 2], int(2)), (vec![3], int(-1)), (vec![], int(4))],
        )
        .unwrap();
        let table = TruthTable::new(h.truth_table().unwrap()).unwrap();
        let interp = interpolate_multilinear(table.values()).unwrap();
        let g = QuadForm::new(3, 0, interp.poly().clone()).unwrap();
        let r = verify_quadratization(&g, &table).unwrap();
        assert!(r.passed && r.global_min_match && r.y_linear);
        assert_eq!(r.checked_points, 8);
    }

    #[test]
    fn structural_predicates() {
        let g = standard(3, 2);
        assert!(is_y_linear(&g));
        assert!(is_x_symmetric(&g));
        let yy = canonicalize(1, 2, vec![(vec![Var::Y(1), Var::Y(2)], int(1))]).unwrap();
        assert!(!is_y_linear(&yy));
        let constant = canonicalize(3, 0, vec![(vec![], int(7))]).unwrap();
        assert!(is_x_symmetric(&constant));
        let lopsided = canonicalize(2, 0, vec![(vec![Var::X(1)], int(1))]).unwrap();
        assert!(!is_x_symmetric(&lopsided));
    }

    #[test]
    fn brute_force_handles_aux_products() {
        // min_y1,y2 of y1*y2 − y1 − y2 + x1 is x1 − 1
        let g = canonicalize(
            1,
            2,
            vec![
                (vec![Var::Y(1), Var::Y(2)], int(1)),
                (vec![Var::Y(1)], int(-1)),
                (vec![Var::Y(2)], int(-1)),
                (vec![Var::X(1)], int(1)),
            ],
        )
        .unwrap();
        assert_eq!(minimize_over_y(&g, &[false]).unwrap(), int(-1));
        assert_eq!(minimize_over_y(&g, &[true]).unwrap(), int(0));
    }

    #[test]
    fn parity_degrees() {
        assert_eq!(parity_3cube_degree_oracle(), 3);
        assert_eq!(parity_interpolant(3), (3, int(4)));
        assert_eq!(parity_interpolant(2), (2, int(-2)));
        let constant = interpolate_multilinear(&vec![int(5); 8]).unwrap();
        assert_eq!(constant.degree(), 0);
    }

    #[test]
    fn dimension_mismatch() {
        let f = SymmetricSpec::parity(3).unwrap();
        assert!(matches!(
            verify_quadratization(&standard(4, 3), &f),
            Err(Error::Input(_))
        ));
    }
}
