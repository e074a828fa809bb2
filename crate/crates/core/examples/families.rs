//! Auxiliary counts of every named construction for a range of sizes.

use symquad::quadratize::{family_target, quadratize_family};
use symquad::verify::verify_quadratization;
use symquad::Family;

fn main() -> symquad::Result<()> {
    let n = 9;
    println!(
        "{:<24} {:>3} {:>4} {:>6}  verified",
        "family", "t", "aux", "bound"
    );
    let named = Family::ALL
        .into_iter()
        .filter(|f| !matches!(f, Family::GeneralSymmetric | Family::FromRep));
    for family in named {
        let ts: Vec<Option<usize>> = match family {
            Family::TOutOfN | Family::ExactT => (1..=n).map(Some).collect(),
            _ => vec![None],
        };
        for t in ts {
            let r = quadratize_family(family, t, n)?;
            let ok = verify_quadratization(&r.g, &family_target(family, t, n)?)?.passed;
            let t = t.map_or("-".to_string(), |t| t.to_string());
            println!(
                "{:<24} {t:>3} {:>4} {:>6}  {ok}",
                family.name(),
                r.aux_count,
                r.paper_bound
            );
        }
    }
    Ok(())
}
