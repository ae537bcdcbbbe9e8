//! Checking string-diagram equations written in the term language.

use tannaka::algebra::{group_algebra, groupoid_algebra};
use tannaka::diagram::check_equation_text;
use tannaka::groups::{FiniteGroup, Groupoid};

fn main() {
    let group = group_algebra(&FiniteGroup::cyclic(2)).wba.env();
    let pair = groupoid_algebra(&Groupoid::pair(2)).wba.env();
    let equations = [
        ("mu ; eps", "eps * eps"),
        ("eta ; delta", "eta * eta"),
        ("delta ; (delta * id(H))", "delta ; (id(H) * delta)"),
        ("braid(H, H) ; mu", "mu ; id(H)"),
    ];
    for (lhs, rhs) in equations {
        for (name, env) in [("kZ/2", &group), ("pair(2)", &pair)] {
            match check_equation_text(lhs, rhs, env) {
                Ok(v) if v.holds => println!("{name}: {lhs} = {rhs} holds"),
                Ok(v) => println!("{name}: {lhs} = {rhs} fails, {}", v.counterexample.unwrap_or_default()),
                Err(e) => println!("{name}: {lhs} = {rhs} rejected: {e}"),
            }
        }
    }
    match check_equation_text("mu", "delta", &group) {
        Err(e) => println!("ill-typed: {e}"),
        Ok(_) => unreachable!(),
    }
}
