//! A finite group as a discrete monoidal category; `tan` recovers the
//! function Hopf algebra.

use tannaka::algebra::{check_bialgebra_strong, function_hopf};
use tannaka::fincat::discrete_group_functor;
use tannaka::groups::FiniteGroup;
use tannaka::tannaka::{tannaka, theorem2_verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [("Z/2", FiniteGroup::cyclic(2)), ("Z/3", FiniteGroup::cyclic(3)), ("S3", FiniteGroup::symmetric(3))] {
        let f = discrete_group_functor(&g);
        let h = tannaka(&f)?.weak_hopf()?;
        let v = theorem2_verdict(&f)?;
        let (pass, fail) = v.counts();
        println!(
            "{name}: dim {}, strong {}, equals k^G {}, {pass} checks pass, {fail} fail",
            h.wba.dim(),
            check_bialgebra_strong(&h.wba).all_pass(),
            h == function_hopf(&g),
        );
    }
    Ok(())
}
