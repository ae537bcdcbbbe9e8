//! `tan` of the functor picking out the separable Frobenius algebra k².

use tannaka::algebra::{barbell, canonical_idempotents, groupoid_algebra};
use tannaka::catalog::permutation_isos;
use tannaka::exactla::format_scalar;
use tannaka::fincat::deloop;
use tannaka::groups::Groupoid;
use tannaka::algebra::FrobeniusAlgebra;
use tannaka::tannaka::{tannaka, theorem2_verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = deloop(&FrobeniusAlgebra::diagonal(2))?;
    let t = tannaka(&f)?;
    println!("end has dimension {} inside an ambient space of {}", t.dim, t.inclusion.rows());
    let h = t.weak_hopf()?;
    println!("barbell {}", format_scalar(&barbell(&h.wba)));
    let ids = canonical_idempotents(&h.wba)?;
    for (name, e) in ids.as_array() {
        println!("rank {name} = {}", e.rank());
    }
    let v = theorem2_verdict(&f)?;
    println!("{v}");
    let pair = groupoid_algebra(&Groupoid::pair(2));
    println!("{} basis permutations identify tan F with the pair groupoid algebra", permutation_isos(&h, &pair).len());
    Ok(())
}
