//! A damaged quadratization and the counterexample the verifier reports.

use symquad::poly::{Monomial, Var};
use symquad::quadratize::quadratize_parity;
use symquad::rational::int;
use symquad::verify::verify_quadratization;
use symquad::{QuadForm, SymmetricSpec};

fn main() -> symquad::Result<()> {
    let n = 5;
    let good = quadratize_parity(n)?.g;
    let mut poly = good.poly().clone();
    poly.add_term(Monomial::new(vec![Var::X(2), Var::X(4)]), int(-1));
    let bad = QuadForm::new(n, good.m(), poly)?;

    let f = SymmetricSpec::parity(n)?;
    println!("original: {:?}", verify_quadratization(&good, &f)?.passed);
    let report = verify_quadratization(&bad, &f)?;
    let c = report.counterexample.expect("the damaged form fails");
    println!(
        "damaged:  fails at x = {:?}, f(x) = {}, min_y g = {}",
        c.x, c.expected, c.got
    );
    Ok(())
}
