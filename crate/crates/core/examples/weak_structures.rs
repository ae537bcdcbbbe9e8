//! Groupoid algebras are weak Hopf algebras; only one-object groupoids give
//! genuine bialgebras.

use tannaka::algebra::{barbell, check_bialgebra_strong, check_prop1_isos, check_weak_bialgebra, check_weak_hopf, groupoid_algebra};
use tannaka::exactla::format_scalar;
use tannaka::groups::{FiniteGroup, Groupoid};

fn main() {
    let cases = [
        ("pair groupoid on 2 objects", Groupoid::pair(2)),
        ("pair groupoid on 3 objects", Groupoid::pair(3)),
        ("Z/2 as a one-object groupoid", Groupoid::from_group(&FiniteGroup::cyclic(2))),
    ];
    for (name, g) in cases {
        let h = groupoid_algebra(&g);
        println!("{name}: dim {}, barbell {}", h.wba.dim(), format_scalar(&barbell(&h.wba)));
        println!("  weak bialgebra: {}", check_weak_bialgebra(&h.wba).all_pass());
        println!("  weak antipode:  {}", check_weak_hopf(&h).all_pass());
        println!("  idempotent isos: {}", check_prop1_isos(&h.wba).all_pass());
        let strong = check_bialgebra_strong(&h.wba);
        println!("  strong axioms:  {}", strong.all_pass());
        for c in strong.failures() {
            println!("    {} fails at {}", c.id, c.counterexample.as_deref().unwrap_or("?"));
        }
    }
}
