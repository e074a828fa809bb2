//! Minimizing a symmetric objective through its quadratization: brute force
//! over `(x, y)` of the quadratic form finds the same minimum as `f`.

use symquad::pbf::{all_points, weight};
use symquad::quadratize::quadratize_symmetric_general;
use symquad::rational::int;
use symquad::{PseudoBoolean, Rational, SymmetricSpec};

fn main() -> symquad::Result<()> {
    let n = 6;
    // 10 when fewer than 3 of the 6 are chosen, plus 2 per chosen item
    let f = SymmetricSpec::from_fn(n, |l| int(if l < 3 { 10 } else { 0 } + 2 * l as i64))?;
    let g = quadratize_symmetric_general(&f)?.g;

    let best_f = all_points(n).map(|x| f.value(&x)).min().unwrap();
    let mut best_g: Option<(Rational, Vec<bool>)> = None;
    for x in all_points(n) {
        for y in all_points(g.m()) {
            let v = g.value(&x, &y);
            if best_g.as_ref().is_none_or(|(b, _)| v < *b) {
                best_g = Some((v, x.clone()));
            }
        }
    }
    let (v, x) = best_g.unwrap();
    println!("aux variables: {}", g.m());
    println!(
        "min f = {best_f}; min of g over (x, y) = {v}, reached with {} items chosen",
        weight(&x)
    );
    assert_eq!(best_f, v);
    Ok(())
}
