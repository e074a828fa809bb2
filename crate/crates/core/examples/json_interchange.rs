//! Round trip of every interchange type through JSON.

use symquad::lift::lift_function;
use symquad::quadratize::quadratize_exact_t;
use symquad::rational::rat;
use symquad::representation::alphas_half;
use symquad::verify::verify_quadratization;
use symquad::{MultilinearPoly, NegPartRep, QuadratizationResult, SymmetricSpec, VerifyReport};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = SymmetricSpec::exact_t(2, 4)?;
    let text = serde_json::to_string(&spec)?;
    println!("spec    {text}");
    assert_eq!(serde_json::from_str::<SymmetricSpec>(&text)?, spec);

    let rep = alphas_half(&spec);
    let text = serde_json::to_string(&rep)?;
    println!("rep     {text}");
    assert_eq!(serde_json::from_str::<NegPartRep>(&text)?, rep);

    let result = quadratize_exact_t(2, 4)?;
    let text = serde_json::to_string(&result)?;
    println!("result  {text}");
    assert_eq!(serde_json::from_str::<QuadratizationResult>(&text)?, result);

    let report = verify_quadratization(&result.g, &spec)?;
    let text = serde_json::to_string(&report)?;
    println!("report  {text}");
    assert_eq!(serde_json::from_str::<VerifyReport>(&text)?, report);

    let f = MultilinearPoly::from_terms(2, [(vec![1, 2], rat(3, 4))])?;
    println!("poly    {}", serde_json::to_string(&f)?);
    println!("lift    {}", serde_json::to_string(&lift_function(&f)?)?);
    Ok(())
}
