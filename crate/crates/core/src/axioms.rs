//! Registry of the structural equations and the four canonical idempotents,
//! written as terms over the generators `mu`, `eta`, `delta`, `eps` on a
//! single object `H`.
//!
//! Braiding annotations: every braid that appears below is recorded in the
//! `braid` field of its entry. In the symmetric base `braid` and `braid_inv`
//! evaluate to mutually inverse swaps, so choosing one over the other only
//! matters for a non-symmetric base.

/// An equation `lhs = rhs` between two terms.
#[derive(Debug, Clone, Copy)]
pub struct Axiom {
    pub id: &'static str,
    pub anchor: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

const fn ax(id: &'static str, anchor: &'static str, lhs: &'static str, rhs: &'static str) -> Axiom {
    Axiom { id, anchor, lhs, rhs }
}

pub const ASSOCIATIVITY: Axiom = ax("associativity", "associativity of mu", "mu * id(H) ; mu", "id(H) * mu ; mu");
pub const LEFT_UNIT: Axiom = ax("left-unit", "left unit law", "eta * id(H) ; mu", "id(H)");
pub const RIGHT_UNIT: Axiom = ax("right-unit", "right unit law", "id(H) * eta ; mu", "id(H)");
pub const COASSOCIATIVITY: Axiom =
    ax("coassociativity", "coassociativity of delta", "delta ; delta * id(H)", "delta ; id(H) * delta");
pub const LEFT_COUNIT: Axiom = ax("left-counit", "left counit law", "delta ; eps * id(H)", "id(H)");
pub const RIGHT_COUNIT: Axiom = ax("right-counit", "right counit law", "delta ; id(H) * eps", "id(H)");

pub const FROBENIUS_LEFT: Axiom =
    ax("frobenius-left", "Frobenius: (1 ⊗ mu)(delta ⊗ 1) = delta mu", "delta * id(H) ; id(H) * mu", "mu ; delta");
pub const FROBENIUS_RIGHT: Axiom =
    ax("frobenius-right", "Frobenius: (mu ⊗ 1)(1 ⊗ delta) = delta mu", "id(H) * delta ; mu * id(H)", "mu ; delta");
pub const SEPARABLE: Axiom = ax("separable", "separability: mu delta = 1", "delta ; mu", "id(H)");

pub const BARBELL: Axiom = ax("barbell", "barbell: eps eta = 1", "eta ; eps", "id()");
pub const STRONG_UNIT: Axiom = ax("strong-unit", "strong unit: delta eta = eta ⊗ eta", "eta ; delta", "eta * eta");
pub const STRONG_COUNIT: Axiom = ax("strong-counit", "strong counit: eps mu = eps ⊗ eps", "mu ; eps", "eps * eps");
/// braid: `braid(H, H)`, the braiding of the base.
pub const BIALGEBRA: Axiom = ax(
    "bialgebra",
    "bialgebra axiom: delta mu = (mu ⊗ mu)(1 ⊗ c ⊗ 1)(delta ⊗ delta)",
    "mu ; delta",
    "delta * delta ; id(H) * braid(H, H) * id(H) ; mu * mu",
);

const DELTA3_ETA: &str = "eta ; delta ; delta * id(H)";
const EPS_MU3: &str = "mu * id(H) ; mu ; eps";

pub const WEAK_UNIT_1: Axiom = ax(
    "weak-unit-1",
    "weak unit axiom, first form",
    DELTA3_ETA,
    "(eta ; delta) * (eta ; delta) ; id(H) * mu * id(H)",
);
/// braid: `braid_inv(H, H)`, inverse to the one in [`BIALGEBRA`].
pub const WEAK_UNIT_2: Axiom = ax(
    "weak-unit-2",
    "weak unit axiom, second form",
    DELTA3_ETA,
    "(eta ; delta) * (eta ; delta) ; id(H) * braid_inv(H, H) * id(H) ; id(H) * mu * id(H)",
);
pub const WEAK_COUNIT_1: Axiom = ax(
    "weak-counit-1",
    "weak counit axiom, first form",
    EPS_MU3,
    "id(H) * delta * id(H) ; (mu ; eps) * (mu ; eps)",
);
/// braid: `braid_inv(H, H)`, inverse to the one in [`BIALGEBRA`].
pub const WEAK_COUNIT_2: Axiom = ax(
    "weak-counit-2",
    "weak counit axiom, second form",
    EPS_MU3,
    "id(H) * delta * id(H) ; id(H) * braid_inv(H, H) * id(H) ; (mu ; eps) * (mu ; eps)",
);

pub const ALGEBRA_AXIOMS: [Axiom; 3] = [ASSOCIATIVITY, LEFT_UNIT, RIGHT_UNIT];
pub const COALGEBRA_AXIOMS: [Axiom; 3] = [COASSOCIATIVITY, LEFT_COUNIT, RIGHT_COUNIT];
pub const FROBENIUS_AXIOMS: [Axiom; 3] = [FROBENIUS_LEFT, FROBENIUS_RIGHT, SEPARABLE];
pub const STRONG_AXIOMS: [Axiom; 4] = [BARBELL, STRONG_UNIT, STRONG_COUNIT, BIALGEBRA];
pub const WEAK_AXIOMS: [Axiom; 5] = [WEAK_UNIT_1, WEAK_UNIT_2, WEAK_COUNIT_1, WEAK_COUNIT_2, BIALGEBRA];

/// One of the four canonical idempotents.
#[derive(Debug, Clone, Copy)]
pub struct IdempotentTerm {
    pub name: &'static str,
    /// Sweedler form with `1_1 ⊗ 1_2 = delta(eta)`.
    pub formula: &'static str,
    pub term: &'static str,
    /// The braiding used, if any.
    pub braid: Option<&'static str>,
}

pub const IDEMPOTENT_S: IdempotentTerm = IdempotentTerm {
    name: "s",
    formula: "x ↦ 1_1 eps(1_2 x)",
    term: "(eta ; delta) * id(H) ; id(H) * (mu ; eps)",
    braid: None,
};
pub const IDEMPOTENT_T: IdempotentTerm = IdempotentTerm {
    name: "t",
    formula: "x ↦ eps(1_1 x) 1_2",
    term: "(eta ; delta) * id(H) ; id(H) * braid(H, H) ; (mu ; eps) * id(H)",
    braid: Some("braid(H, H)"),
};
pub const IDEMPOTENT_Z: IdempotentTerm = IdempotentTerm {
    name: "z",
    formula: "x ↦ eps(x 1_1) 1_2",
    term: "id(H) * (eta ; delta) ; (mu ; eps) * id(H)",
    braid: None,
};
pub const IDEMPOTENT_R: IdempotentTerm = IdempotentTerm {
    name: "r",
    formula: "x ↦ 1_1 eps(x 1_2)",
    term: "id(H) * (eta ; delta) ; braid(H, H) * id(H) ; id(H) * (mu ; eps)",
    braid: Some("braid(H, H)"),
};

/// In the order s, t, z, r.
pub const IDEMPOTENTS: [IdempotentTerm; 4] = [IDEMPOTENT_S, IDEMPOTENT_T, IDEMPOTENT_Z, IDEMPOTENT_R];
