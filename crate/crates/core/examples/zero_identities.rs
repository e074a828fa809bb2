//! The three zero identities, evaluated weight by weight.

use symquad::identities::{make_identity, IdentityKind};

fn main() -> symquad::Result<()> {
    let n = 7;
    for kind in [
        IdentityKind::E,
        IdentityKind::EPrime,
        IdentityKind::EDoublePrime,
    ] {
        let id = make_identity(kind, n)?;
        let values: Vec<String> = (0..=n).map(|l| id.eval(l).to_string()).collect();
        let terms: Vec<String> = id
            .negpart_coefs
            .iter()
            .map(|(i, c)| format!("{c}@{i}"))
            .collect();
        println!(
            "{:<4} eps {:<4} terms {:<28} values {}",
            kind.to_string(),
            id.eps.to_string(),
            terms.join(" "),
            values.join(" ")
        );
    }
    Ok(())
}
