//! Quadratize a non-symmetric cubic by lifting it to a symmetric function.

use symquad::lift::lift_roundtrip_detailed;
use symquad::rational::rat;
use symquad::MultilinearPoly;

fn main() -> symquad::Result<()> {
    // f = x1 x2 x3 − 2 x1 x3 + x2 / 2
    let f = MultilinearPoly::from_terms(
        3,
        [
            (vec![1, 2, 3], rat(1, 1)),
            (vec![1, 3], rat(-2, 1)),
            (vec![2], rat(1, 2)),
        ],
    )?;
    let rt = lift_roundtrip_detailed(&f)?;
    let k: Vec<String> = rt.lift.k().iter().map(ToString::to_string).collect();
    println!("lift: N = {}, k = [{}]", rt.lift.big_n(), k.join(", "));
    println!("blocks: {:?}", rt.lift.block_map());
    println!("symmetric quadratization uses {} aux", rt.lifted.m());
    println!("projected g = {}", rt.projected.poly());
    println!("verified against f: {}", rt.report.passed);
    Ok(())
}
