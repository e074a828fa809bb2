//! Embedding an arbitrary pseudo-Boolean function into a symmetric one.
//!
//! For `f` on `n` variables let `N = 2^n − 1` and `k[w] = f(bits of w)`. The
//! symmetric function `F(z) = k[|z|]` on `z1..zN` satisfies
//! `F(embed(x)) = f(x)`, where `embed` copies `x_j` into the `2^(j−1)`
//! variables of block `j`. Substituting `z_p := x_j` in any quadratization of
//! `F` therefore gives a quadratization of `f` with the same auxiliaries.

use serde::{Deserialize, Serialize};

use crate::error::{input_err, Error, Result};
use crate::pbf::{point_from_index, MultilinearPoly, PseudoBoolean, QuadForm, SymmetricSpec};
use crate::poly::Var;
use crate::quadratize::quadratize_symmetric_general;
use crate::rational::{self, Rational};
use crate::verify::{verify_quadratization, VerifyReport};

/// Largest `n` accepted by [`lift_function`].
pub const MAX_LIFT_VARS: usize = 4;

/// Largest `n` accepted by [`lift_roundtrip`].
pub const MAX_ROUNDTRIP_VARS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LiftSpecJson", into = "LiftSpecJson")]
pub struct LiftSpec {
    n: usize,
    big_n: usize,
    k: Vec<Rational>,
    block_map: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct LiftSpecJson {
    n: usize,
    #[serde(rename = "N")]
    big_n: usize,
    #[serde(with = "rational::serde_vec")]
    k: Vec<Rational>,
    block_map: Vec<(usize, usize)>,
}

fn blocks(n: usize) -> Vec<(usize, usize)> {
    (1..=n).map(|j| (1 << (j - 1), (1 << j) - 1)).collect()
}

impl TryFrom<LiftSpecJson> for LiftSpec {
    type Error = Error;
    fn try_from(j: LiftSpecJson) -> Result<Self> {
        if j.n == 0 || j.n > MAX_LIFT_VARS {
            return input_err(format!("lift needs 1 <= n <= {MAX_LIFT_VARS}, got {}", j.n));
        }
        if j.big_n != (1 << j.n) - 1 {
            return input_err(format!("N = {} but 2^n - 1 = {}", j.big_n, (1 << j.n) - 1));
        }
        if j.k.len() != j.big_n + 1 {
            return input_err(format!(
                "k has {} entries, expected N+1 = {}",
                j.k.len(),
                j.big_n + 1
            ));
        }
        if j.block_map != blocks(j.n) {
            return input_err("block_map must list [2^(j-1), 2^j - 1] for j = 1..n");
        }
        Ok(LiftSpec {
            n: j.n,
            big_n: j.big_n,
            k: j.k,
            block_map: j.block_map,
        })
    }
}

impl From<LiftSpec> for LiftSpecJson {
    fn from(l: LiftSpec) -> Self {
        LiftSpecJson {
            n: l.n,
            big_n: l.big_n,
            k: l.k,
            block_map: l.block_map,
        }
    }
}

impl LiftSpec {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `N = 2^n − 1`.
    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn k(&self) -> &[Rational] {
        &self.k
    }

    /// Inclusive `z` index range of each block, `j = 1..n`.
    pub fn block_map(&self) -> &[(usize, usize)] {
        &self.block_map
    }

    /// Block containing `z_p`.
    pub fn block_of(&self, p: usize) -> usize {
        debug_assert!((1..=self.big_n).contains(&p));
        usize::BITS as usize - p.leading_zeros() as usize
    }

    /// The point of `{0,1}^N` with every variable of block `j` equal to `x_j`.
    pub fn embed(&self, x: &[bool]) -> Vec<bool> {
        (1..=self.big_n).map(|p| x[self.block_of(p) - 1]).collect()
    }

    /// The symmetric function `F(z) = k[|z|]`.
    pub fn symmetric_spec(&self) -> SymmetricSpec {
        SymmetricSpec::new(self.k.clone()).expect("N >= 1")
    }
}

/// Builds the lift of `f`: `k[w] = f(x)` with `w = Σ 2^(i−1) x_i`.
pub fn lift_function(f: &MultilinearPoly) -> Result<LiftSpec> {
    let n = f.n();
    if n > MAX_LIFT_VARS {
        return Err(Error::Resource(format!(
            "lift is capped at n = {MAX_LIFT_VARS}, got {n}"
        )));
    }
    if n == 0 {
        return input_err("lift needs at least one variable");
    }
    let big_n = (1 << n) - 1;
    let k = (0..=big_n)
        .map(|w| f.value(&point_from_index(w, n)))
        .collect();
    Ok(LiftSpec {
        n,
        big_n,
        k,
        block_map: blocks(n),
    })
}

/// Substitutes `z_p := x_j` for every `p` in block `j`. Auxiliaries and
/// their labels are kept as they are.
pub fn project_quadratization(g: &QuadForm, lift: &LiftSpec) -> Result<QuadForm> {
    if g.n() != lift.big_n {
        return input_err(format!(
            "form has n = {} but the lift has N = {}",
            g.n(),
            lift.big_n
        ));
    }
    let poly = g.poly().rename(|v| match v {
        Var::X(p) => Var::X(lift.block_of(p)),
        y => y,
    });
    QuadForm::new(lift.n, g.m(), poly)?.with_aux_labels(g.aux_labels().clone())
}

/// Intermediate objects of a lift round trip.
#[derive(Debug, Clone)]
pub struct Roundtrip {
    pub lift: LiftSpec,
    /// Quadratization of the symmetric lift on `N` variables.
    pub lifted: QuadForm,
    /// Its projection back to `n` variables.
    pub projected: QuadForm,
    pub report: VerifyReport,
}

/// Lifts `f`, quadratizes the symmetric lift, projects and verifies against `f`.
pub fn lift_roundtrip_detailed(f: &MultilinearPoly) -> Result<Roundtrip> {
    if f.n() > MAX_ROUNDTRIP_VARS {
        return Err(Error::Resource(format!(
            "round trip is capped at n = {MAX_ROUNDTRIP_VARS}, got {}",
            f.n()
        )));
    }
    let lift = lift_function(f)?;
    let lifted = quadratize_symmetric_general(&lift.symmetric_spec())?.g;
    let projected = project_quadratization(&lifted, &lift)?;
    let report = verify_quadratization(&projected, f)?;
    Ok(Roundtrip {
        lift,
        lifted,
        projected,
        report,
    })
}

pub fn lift_roundtrip(f: &MultilinearPoly) -> Result<VerifyReport> {
    Ok(lift_roundtrip_detailed(f)?.report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbf::all_points;
    use crate::rational::{int, rat};
    use crate::verify::{is_y_linear, minimize_over_y};
    use num_traits::Zero;

    fn monomial(n: usize, vars: &[usize]) -> MultilinearPoly {
        MultilinearPoly::from_terms(n, [(vars.to_vec(), int(1))]).unwrap()
    }

    #[test]
    fn lifts_of_small_monomials() {
        let l = lift_function(&monomial(2, &[1, 2])).unwrap();
        assert_eq!(l.big_n(), 3);
        assert_eq!(l.k(), &[int(0), int(0), int(0), int(1)]);
        assert_eq!(l.block_map(), &[(1, 1), (2, 3)]);

        let l = lift_function(&monomial(1, &[1])).unwrap();
        assert_eq!(l.k(), &[int(0), int(1)]);

        let zero = MultilinearPoly::from_terms(3, []).unwrap();
        assert!(lift_function(&zero).unwrap().k().iter().all(Zero::is_zero));
    }

    #[test]
    fn lift_cap() {
        let f = MultilinearPoly::from_terms(5, []).unwrap();
        assert!(matches!(lift_function(&f), Err(Error::Resource(_))));
        let f = MultilinearPoly::from_terms(4, [(vec![1, 4], int(3))]).unwrap();
        assert_eq!(lift_function(&f).unwrap().big_n(), 15);
    }

    #[test]
    fn embedding_reproduces_f() {
        let f = MultilinearPoly::from_terms(
            3,
            [
                (vec![], rat(1, 2)),
                (vec![1, 3], int(-4)),
                (vec![1, 2, 3], int(7)),
                (vec![2], rat(-5, 3)),
            ],
        )
        .unwrap();
        let l = lift_function(&f).unwrap();
        let spec = l.symmetric_spec();
        for x in all_points(3) {
            let z = l.embed(&x);
            for (j, &(lo, hi)) in l.block_map().iter().enumerate() {
                let ones = z[lo - 1..hi].iter().filter(|&&b| b).count();
                assert_eq!(ones, usize::from(x[j]) << j);
            }
            assert_eq!(spec.value(&z), f.value(&x));
        }
    }

    #[test]
    fn identity_projection_for_one_variable() {
        let f = MultilinearPoly::from_terms(1, [(vec![1], int(-3)), (vec![], int(2))]).unwrap();
        let rt = lift_roundtrip_detailed(&f).unwrap();
        assert_eq!(rt.lifted.poly(), rt.projected.poly());
        assert!(rt.report.passed);
    }

    #[test]
    fn projection_rejects_wrong_dimension() {
        let l = lift_function(&monomial(2, &[1, 2])).unwrap();
        let g = QuadForm::new(2, 0, crate::poly::Poly::zero()).unwrap();
        assert!(matches!(
            project_quadratization(&g, &l),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn roundtrip_cubic_monomial() {
        let rt = lift_roundtrip_detailed(&monomial(3, &[1, 2, 3])).unwrap();
        assert_eq!(rt.lift.k().iter().filter(|c| !c.is_zero()).count(), 1);
        assert_eq!(rt.lift.k()[7], int(1));
        assert!(rt.report.passed);
        assert!(rt.projected.m() <= 5);
        assert_eq!(rt.projected.m(), rt.lifted.m());
        assert_eq!(is_y_linear(&rt.projected), is_y_linear(&rt.lifted));
        for x in all_points(3) {
            assert_eq!(
                minimize_over_y(&rt.projected, &x).unwrap(),
                minimize_over_y(&rt.lifted, &rt.lift.embed(&x)).unwrap()
            );
        }
    }

    #[test]
    fn roundtrip_of_zero() {
        let f = MultilinearPoly::from_terms(2, []).unwrap();
        assert!(lift_roundtrip(&f).unwrap().passed);
    }

    #[test]
    fn json_roundtrip() {
        let l = lift_function(&monomial(2, &[1, 2])).unwrap();
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"N":3,"k":["0","0","0","1"],"block_map":[[1,1],[2,3]]}"#
        );
        assert_eq!(serde_json::from_str::<LiftSpec>(&s).unwrap(), l);
        let bad = r#"{"n":2,"N":4,"k":["0","0","0","1","0"],"block_map":[[1,1],[2,3]]}"#;
        assert!(serde_json::from_str::<LiftSpec>(bad).is_err());
    }
}
