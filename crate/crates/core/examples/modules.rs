//! Modules over kZ/3 and the monoidal structure on them.

use tannaka::algebra::group_algebra;
use tannaka::exactla::{eye, Mat};
use tannaka::groups::FiniteGroup;
use tannaka::rep::{check_unit_constraints, forgetful_frobenius_check, intertwiners, tensor_h, unit_object, ModuleQ};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = group_algebra(&FiniteGroup::cyclic(3)).wba;
    let trivial = ModuleQ::from_action(&h, Mat::from_i64(&[&[1, 1, 1]]))?;
    let g = Mat::from_i64(&[&[0, -1], &[1, -1]]);
    let rotation = ModuleQ::from_action(&h, eye(2).hstack(&g)?.hstack(&g.dot(&g))?)?;
    let rr = tensor_h(&rotation, &rotation, &h);
    println!("rotation ⊗ rotation has a {}-dim carrier and rank {} idempotent", rr.dim(), rr.idem().rank());
    println!("module axioms: {}", rr.check(&h).all_pass());
    println!("unit constraints: {}", check_unit_constraints(&rr, &h).all_pass());
    println!("intertwiners trivial → rotation⊗rotation: {}", intertwiners(&trivial, &rr, &h).len());
    println!("intertwiners rotation → rotation: {}", intertwiners(&rotation, &rotation, &h).len());
    let v = forgetful_frobenius_check(&h, &[unit_object(&h), trivial, rotation]);
    println!("forgetful functor is separable Frobenius monoidal: {}", v.all_pass());
    Ok(())
}
