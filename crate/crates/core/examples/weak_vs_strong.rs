//! Breaking separability of the functor breaks exactly one axiom of `tan F`.

use tannaka::algebra::FrobeniusAlgebra;
use tannaka::fincat::{deloop, scale_psi_by_two, validate_functor_data};
use tannaka::tannaka::theorem1_verdict;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = scale_psi_by_two(&deloop(&FrobeniusAlgebra::diagonal(2))?);
    let fv = validate_functor_data(&f)?;
    println!("functor separable: {}", fv.passed("separable"));
    let v = theorem1_verdict(&f)?;
    for c in &v.checks {
        println!("{} {}", if c.pass { "pass" } else { "FAIL" }, c.id);
    }
    Ok(())
}
