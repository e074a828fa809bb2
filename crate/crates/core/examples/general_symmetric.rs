//! Quadratize an arbitrary symmetric function and inspect `min_y g` per weight.

use symquad::pbf::all_points;
use symquad::quadratize::quadratize_symmetric_general;
use symquad::rational::parse_rational_list;
use symquad::verify::{minimize_over_y, verify_quadratization};
use symquad::SymmetricSpec;

fn main() -> symquad::Result<()> {
    let spec = SymmetricSpec::new(parse_rational_list("0, 2, -3, 5/2, 1, -4, 7")?)?;
    let r = quadratize_symmetric_general(&spec)?;
    println!(
        "n = {}, aux = {} (bound {})",
        spec.n(),
        r.aux_count,
        r.paper_bound
    );
    println!("g = {}\n", r.g.poly());

    for l in 0..=spec.n() {
        let x: Vec<bool> = (0..spec.n()).map(|i| i < l).collect();
        println!(
            "weight {l}: k = {:>4}, min_y g = {:>4}",
            spec.k()[l].to_string(),
            minimize_over_y(&r.g, &x)?.to_string()
        );
    }

    let report = verify_quadratization(&r.g, &spec)?;
    println!(
        "\nexhaustive check over {} points: {}",
        all_points(spec.n()).count(),
        report.passed
    );
    Ok(())
}
