//! Negative-part representations of one symmetric function at several offsets.

use symquad::rational::{parse_rational_list, rat};
use symquad::representation::{
    alphas_half, closed_form_alphas, fix_representation, solve_representation,
};
use symquad::{NegPartRep, SymmetricSpec};

fn show(label: &str, rep: &NegPartRep) {
    let alphas: Vec<String> = rep.alphas().iter().map(ToString::to_string).collect();
    println!(
        "{label:<22} affine {} + ({})l   alphas [{}]",
        rep.affine_const,
        rep.affine_linear,
        alphas.join(", ")
    );
}

fn main() -> symquad::Result<()> {
    let spec = SymmetricSpec::new(parse_rational_list("3, -1, 4, 1/2, -5, 9")?)?;
    println!(
        "k = {:?}\n",
        spec.k().iter().map(ToString::to_string).collect::<Vec<_>>()
    );

    show("eps = 1/2", &alphas_half(&spec));
    show(
        "eps = 1/3 (closed form)",
        &closed_form_alphas(&spec, &rat(1, 3))?,
    );
    show("eps = 1 (second diff)", &fix_representation(&spec));

    let mixed = vec![
        rat(1, 2),
        rat(1, 1),
        rat(1, 4),
        rat(2, 3),
        rat(1, 1),
        rat(1, 5),
    ];
    let rep = solve_representation(&spec, &mixed)?;
    show("mixed offsets", &rep);
    assert!(rep.represents(&spec));
    Ok(())
}
