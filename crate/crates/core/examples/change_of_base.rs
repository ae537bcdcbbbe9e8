//! Tensoring with a commutative separable Frobenius algebra C.

use tannaka::algebra::{barbell, check_weak_bialgebra, group_algebra, FrobeniusAlgebra};
use tannaka::duality::{bow_lemma_check, rho, wba_transport, FrobEndofunctor};
use tannaka::exactla::format_scalar;
use tannaka::fincat::discrete_group_functor;
use tannaka::groups::FiniteGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let phi = FrobEndofunctor::new(FrobeniusAlgebra::diagonal(2))?;
    println!("bow lemma: {}", bow_lemma_check(&phi, &[(1, 2), (2, 2), (3, 2)]).all_pass());
    let b = group_algebra(&FiniteGroup::cyclic(2)).wba;
    let tb = wba_transport(&phi, &b)?;
    println!("kZ/2 ⊗ k²: dim {}, barbell {}, weak bialgebra {}", tb.dim(), format_scalar(&barbell(&tb)), check_weak_bialgebra(&tb).all_pass());
    let (m, v) = rho(&phi, &discrete_group_functor(&FiniteGroup::cyclic(2)))?;
    println!("rho is {}x{}", m.rows(), m.cols());
    println!("{v}");
    match FrobEndofunctor::new(FrobeniusAlgebra::matrix(2)) {
        Err(e) => println!("2x2 matrices rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
