//! Unit and counit of the adjunction between `tan` and `mod`.

use tannaka::algebra::{groupoid_algebra, FrobeniusAlgebra};
use tannaka::duality::{chikhladze_check, triangle_one, triangle_two};
use tannaka::fincat::{deloop, discrete_group_functor};
use tannaka::groups::{FiniteGroup, Groupoid};
use tannaka::rep::{unit_object, ModuleQ};
use tannaka::tannaka::tannaka;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = groupoid_algebra(&Groupoid::pair(2)).wba;
    let v = triangle_one(&h, &[ModuleQ::regular(&h), unit_object(&h)])?;
    println!("first triangle on pair(2): {}", v.all_pass());
    for (name, f) in [
        ("deloop(k)", deloop(&FrobeniusAlgebra::diagonal(1))?),
        ("deloop(k2)", deloop(&FrobeniusAlgebra::diagonal(2))?),
        ("discrete Z/2", discrete_group_functor(&FiniteGroup::cyclic(2))),
    ] {
        let (m, v) = triangle_two(&f)?;
        let t = tannaka(&f)?;
        let c = chikhladze_check(&f, &t)?;
        println!("{name}: second triangle is the identity {}, splitting of t recovers F(unit) {}", m.is_identity() && v.all_pass(), c.all_pass());
    }
    Ok(())
}
