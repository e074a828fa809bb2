//! Parity has full degree: its multilinear interpolant on n variables has the
//! top coefficient (−2)^(n−1).

use symquad::verify::{parity_3cube_degree_oracle, parity_interpolant};

fn main() {
    for n in 1..=8 {
        let (degree, top) = parity_interpolant(n);
        println!("n = {n}: degree {degree}, top coefficient {top}");
    }
    println!("3-cube oracle: {}", parity_3cube_degree_oracle());
}
