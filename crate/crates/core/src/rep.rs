//! Modules over a weak bialgebra in the idempotent-split form `(a, α, a′)`,
//! the monoidal structure `⊗_H` with unit `⊤_H`, the separable Frobenius
//! structure on the forgetful functor, and restriction along weak morphisms.

use thiserror::Error;

use crate::algebra::{canonical_idempotents, check_weak_morphism, WeakBialgebra, WeakHopf};
use crate::exactla::{braid, eye, kernel, kron, kron_all, Mat};
use crate::fincat::{CategoryImage, GeneratorData};
use crate::verdict::{mismatch, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("not a module morphism: {0}")]
    NotModMorphism(String),
    #[error("not a weak morphism: {0}")]
    NotWeakMorphism(String),
}

fn first_failure(v: &Verdict) -> Option<String> {
    v.failures().next().map(|c| format!("{}: {}", c.id, c.counterexample.clone().unwrap_or_default()))
}

/// `(a, α: H ⊗ a → a, a′)` with `α` associative and `α(η ⊗ 1) = a′`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleQ {
    dim: usize,
    action: Mat,
    idem: Mat,
}

impl ModuleQ {
    pub fn new(h: &WeakBialgebra, action: Mat, idem: Mat) -> Result<Self, RepError> {
        let m = Self::unchecked(h, action, idem)?;
        match first_failure(&m.check(h)) {
            Some(msg) => Err(RepError::InvalidModule(msg)),
            None => Ok(m),
        }
    }

    /// Takes `a′ = α(η ⊗ 1)`.
    pub fn from_action(h: &WeakBialgebra, action: Mat) -> Result<Self, RepError> {
        let a = action.rows();
        let idem = action.dot(&kron(h.eta(), &eye(a)));
        Self::new(h, action, idem)
    }

    fn unchecked(h: &WeakBialgebra, action: Mat, idem: Mat) -> Result<Self, RepError> {
        let a = action.rows();
        if action.cols() != h.dim() * a || idem.shape() != (a, a) {
            return Err(RepError::Shape(format!(
                "action {:?} and idempotent {:?} for carrier {a} over dim {}",
                action.shape(),
                idem.shape(),
                h.dim()
            )));
        }
        Ok(ModuleQ { dim: a, action, idem })
    }

    pub fn regular(h: &WeakBialgebra) -> Self {
        ModuleQ { dim: h.dim(), action: h.mu().clone(), idem: eye(h.dim()) }
    }

    pub fn zero(h: &WeakBialgebra) -> Self {
        ModuleQ { dim: 0, action: Mat::zeros(0, 0), idem: Mat::zeros(0, 0) }.with_dim_of(h)
    }

    fn with_dim_of(mut self, h: &WeakBialgebra) -> Self {
        self.action = Mat::zeros(self.dim, h.dim() * self.dim);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &Mat {
        &self.action
    }

    pub fn idem(&self) -> &Mat {
        &self.idem
    }

    pub fn check(&self, h: &WeakBialgebra) -> Verdict {
        let a = self.dim;
        let (act, e) = (&self.action, &self.idem);
        let mut v = Verdict::new();
        v.equal(
            "associativity",
            "α(μ ⊗ 1) = α(1 ⊗ α)",
            &act.dot(&kron(h.mu(), &eye(a))),
            &act.dot(&kron(&eye(h.dim()), act)),
        );
        v.equal("unital-up-to-idem", "α(η ⊗ 1) = a′", &act.dot(&kron(h.eta(), &eye(a))), e);
        v.equal("idem-idempotent", "a′ a′ = a′", &e.dot(e), e);
        v.equal("absorb-right", "α(1 ⊗ a′) = α", &act.dot(&kron(&eye(h.dim()), e)), act);
        v.equal("absorb-left", "a′ α = α", &e.dot(act), act);
        v
    }

    /// The same carrier with action `α(f ⊗ 1)`.
    pub fn pulled_back(&self, f: &Mat) -> ModuleQ {
        ModuleQ { dim: self.dim, action: self.action.dot(&kron(f, &eye(self.dim))), idem: self.idem.clone() }
    }
}

/// Compressed equality: `b′ f a′ = b′ g a′`.
pub fn q_equal(f: &Mat, g: &Mat, src_idem: &Mat, tgt_idem: &Mat) -> bool {
    tgt_idem.dot(f).dot(src_idem) == tgt_idem.dot(g).dot(src_idem)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMorphism {
    pub mat: Mat,
}

impl ModMorphism {
    pub fn new(mat: Mat, src: &ModuleQ, tgt: &ModuleQ, h: &WeakBialgebra) -> Result<Self, RepError> {
        if mat.shape() != (tgt.dim, src.dim) {
            return Err(RepError::Shape(format!("{:?} between carriers {} and {}", mat.shape(), src.dim, tgt.dim)));
        }
        match first_failure(&check_mod_morphism(&mat, src, tgt, h)) {
            Some(msg) => Err(RepError::NotModMorphism(msg)),
            None => Ok(ModMorphism { mat }),
        }
    }
}

pub fn check_mod_morphism(f: &Mat, src: &ModuleQ, tgt: &ModuleQ, h: &WeakBialgebra) -> Verdict {
    let mut v = Verdict::new();
    v.equal("intertwines", "f α = β (1 ⊗ f)", &f.dot(&src.action), &tgt.action.dot(&kron(&eye(h.dim()), f)));
    v.equal("compressed", "b′ f a′ = f", &tgt.idem.dot(f).dot(&src.idem), f);
    v
}

/// `(α ⊗ β)(1 ⊗ c ⊗ 1)(x ⊗ 1 ⊗ 1)` for `x: X → H ⊗ H`.
fn diagonal_action(x: &Mat, m1: &ModuleQ, m2: &ModuleQ, h: &WeakBialgebra) -> Mat {
    let (a, b, d) = (m1.dim, m2.dim, h.dim());
    kron(&m1.action, &m2.action)
        .dot(&kron_all(&[&eye(d), &braid(d, a), &eye(b)]))
        .dot(&kron_all(&[x, &eye(a), &eye(b)]))
}

/// The action of `Δη` on `a ⊗ b`.
pub fn nabla(m1: &ModuleQ, m2: &ModuleQ, h: &WeakBialgebra) -> Mat {
    diagonal_action(&h.delta().dot(h.eta()), m1, m2, h)
}

pub fn tensor_h(m1: &ModuleQ, m2: &ModuleQ, h: &WeakBialgebra) -> ModuleQ {
    ModuleQ { dim: m1.dim * m2.dim, action: diagonal_action(h.delta(), m1, m2, h), idem: nabla(m1, m2, h) }
}

/// `⊤_H = (H, t μ, t)`.
pub fn unit_object(h: &WeakBialgebra) -> ModuleQ {
    let t = canonical_idempotents(h).expect("weak bialgebra").t;
    ModuleQ { dim: h.dim(), action: t.dot(h.mu()), idem: t }
}

/// `λ: ⊤_H ⊗_H a → a`, `ρ: a ⊗_H ⊤_H → a` and their inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitConstraints {
    pub left: Mat,
    pub left_inv: Mat,
    pub right: Mat,
    pub right_inv: Mat,
}

/// `λ(x ⊗ v) = x·v`, `λ⁻¹(v) = ∇(1 ⊗ v)`, `ρ(v ⊗ x) = z(x)·v`,
/// `ρ⁻¹(v) = ∇(v ⊗ 1)`, with `λ` and `ρ` compressed by `∇`.
pub fn unit_constraints(m: &ModuleQ, h: &WeakBialgebra) -> UnitConstraints {
    let top = unit_object(h);
    let z = canonical_idempotents(h).expect("weak bialgebra").z;
    let a = m.dim;
    let (nl, nr) = (nabla(&top, m, h), nabla(m, &top, h));
    UnitConstraints {
        left: m.action.dot(&nl),
        left_inv: nl.dot(&kron(h.eta(), &eye(a))),
        right: m.action.dot(&kron(&z, &eye(a))).dot(&braid(a, h.dim())).dot(&nr),
        right_inv: nr.dot(&kron(&eye(a), h.eta())),
    }
}

/// The four maps are module morphisms and compose to the idempotents.
pub fn check_unit_constraints(m: &ModuleQ, h: &WeakBialgebra) -> Verdict {
    let u = unit_constraints(m, h);
    let top = unit_object(h);
    let (tl, tr) = (tensor_h(&top, m, h), tensor_h(m, &top, h));
    let mut v = Verdict::new();
    v.extend_prefixed("left", check_mod_morphism(&u.left, &tl, m, h));
    v.extend_prefixed("left-inv", check_mod_morphism(&u.left_inv, m, &tl, h));
    v.extend_prefixed("right", check_mod_morphism(&u.right, &tr, m, h));
    v.extend_prefixed("right-inv", check_mod_morphism(&u.right_inv, m, &tr, h));
    v.equal("left-retraction", "λ λ⁻¹ = a′", &u.left.dot(&u.left_inv), &m.idem);
    v.equal("left-section", "λ⁻¹ λ = ∇", &u.left_inv.dot(&u.left), &tl.idem);
    v.equal("right-retraction", "ρ ρ⁻¹ = a′", &u.right.dot(&u.right_inv), &m.idem);
    v.equal("right-section", "ρ⁻¹ ρ = ∇", &u.right_inv.dot(&u.right), &tr.idem);
    v
}

fn q_check(v: &mut Verdict, id: &str, anchor: &str, lhs: &Mat, rhs: &Mat, src: &Mat, tgt: &Mat) {
    let (l, r) = (tgt.dot(lhs).dot(src), tgt.dot(rhs).dot(src));
    v.holds(id, anchor, l == r, mismatch(&l, &r));
}

/// The forgetful functor with `φ = ψ = ∇`, `φ₀ = η`, `ψ₀ = ε`: Frobenius,
/// separability, (co)associativity and the (co)unit laws over all triples
/// drawn from `probe`, each as a compressed equality.
pub fn forgetful_frobenius_check(h: &WeakBialgebra, probe: &[ModuleQ]) -> Verdict {
    let mut v = Verdict::new();
    let top = unit_object(h);
    let record = |v: &mut Verdict, id: &str, anchor: &str, lhs: &Mat, rhs: &Mat, src: &Mat, tgt: &Mat, at: String| {
        let (l, r) = (tgt.dot(lhs).dot(src), tgt.dot(rhs).dot(src));
        if v.get(id).is_none() || (v.passed(id) && l != r) {
            let detail = mismatch(&l, &r).map(|m| format!("at {at}: {m}"));
            v.checks.retain(|c| c.id != id);
            v.holds(id, anchor, l == r, detail);
        }
    };
    for (i, a) in probe.iter().enumerate() {
        let u = unit_constraints(a, h);
        let (tl, tr) = (tensor_h(&top, a, h), tensor_h(a, &top, h));
        // φ_{⊤,a}(φ₀ ⊗ 1) followed by λ is the identity of a
        let lhs = u.left.dot(&tl.idem).dot(&kron(h.eta(), &eye(a.dim)));
        record(&mut v, "monoidal-left-unit", "λ φ (φ₀ ⊗ 1) = 1", &lhs, &a.idem, &a.idem, &a.idem, format!("{i}"));
        let lhs = u.right.dot(&tr.idem).dot(&kron(&eye(a.dim), h.eta()));
        record(&mut v, "monoidal-right-unit", "ρ φ (1 ⊗ φ₀) = 1", &lhs, &a.idem, &a.idem, &a.idem, format!("{i}"));
        let lhs = kron(h.eps(), &eye(a.dim)).dot(&tl.idem).dot(&u.left_inv);
        record(&mut v, "comonoidal-left-counit", "(ψ₀ ⊗ 1) ψ λ⁻¹ = 1", &lhs, &a.idem, &a.idem, &a.idem, format!("{i}"));
        let lhs = kron(&eye(a.dim), h.eps()).dot(&tr.idem).dot(&u.right_inv);
        record(&mut v, "comonoidal-right-counit", "(1 ⊗ ψ₀) ψ ρ⁻¹ = 1", &lhs, &a.idem, &a.idem, &a.idem, format!("{i}"));
        for (j, b) in probe.iter().enumerate() {
            let ab = tensor_h(a, b, h);
            let raw = kron(&a.idem, &b.idem);
            record(&mut v, "separable", "φ ψ = 1", &ab.idem.dot(&ab.idem), &ab.idem, &ab.idem, &ab.idem, format!("({i}, {j})"));
            record(&mut v, "nabla-absorbs", "∇ (a′ ⊗ b′) = ∇", &ab.idem.dot(&raw), &ab.idem, &eye(raw.rows()), &eye(raw.rows()), format!("({i}, {j})"));
            for (k, c) in probe.iter().enumerate() {
                let at = format!("({i}, {j}, {k})");
                let bc = tensor_h(b, c, h);
                let (ea, ec) = (eye(a.dim), eye(c.dim));
                let n_ab_c = tensor_h(&ab, c, h).idem;
                let n_a_bc = tensor_h(a, &bc, h).idem;
                // U(a⊗b) ⊗ Uc → Ua ⊗ U(b⊗c)
                let lhs = kron(&ea, &bc.idem).dot(&kron(&ab.idem, &ec));
                let rhs = n_a_bc.dot(&n_ab_c);
                let src = kron(&ab.idem, &c.idem);
                let tgt = kron(&a.idem, &bc.idem);
                record(&mut v, "frobenius-left", "(1 ⊗ φ)(ψ ⊗ 1) = ψ φ", &lhs, &rhs, &src, &tgt, at.clone());
                let lhs = kron(&ab.idem, &ec).dot(&kron(&ea, &bc.idem));
                let src = kron(&a.idem, &bc.idem);
                let tgt = kron(&ab.idem, &c.idem);
                record(&mut v, "frobenius-right", "(φ ⊗ 1)(1 ⊗ ψ) = ψ φ", &lhs, &rhs, &src, &tgt, at.clone());
                let lhs = n_ab_c.dot(&kron(&ab.idem, &ec));
                let rhs = n_a_bc.dot(&kron(&ea, &bc.idem));
                let src = kron_all(&[&a.idem, &b.idem, &c.idem]);
                record(&mut v, "monoidal-associativity", "φ (φ ⊗ 1) = φ (1 ⊗ φ)", &lhs, &rhs, &src, &n_ab_c, at.clone());
                let lhs = kron(&ab.idem, &ec).dot(&n_ab_c);
                let rhs = kron(&ea, &bc.idem).dot(&n_a_bc);
                record(&mut v, "comonoidal-coassociativity", "(ψ ⊗ 1) ψ = (1 ⊗ ψ) ψ", &lhs, &rhs, &n_ab_c, &src, at);
            }
        }
    }
    v
}

fn require_weak_morphism(f: &Mat, h: &WeakBialgebra, j: &WeakBialgebra) -> Result<(), RepError> {
    match first_failure(&check_weak_morphism(f, h, j)) {
        Some(msg) => Err(RepError::NotWeakMorphism(msg)),
        None => Ok(()),
    }
}

/// `f*(a, α, a′) = (a, α(f ⊗ 1), a′)` for a weak morphism `f: H → J`.
pub fn restrict_along(f: &Mat, m: &ModuleQ, h: &WeakBialgebra, j: &WeakBialgebra) -> Result<ModuleQ, RepError> {
    require_weak_morphism(f, h, j)?;
    let out = m.pulled_back(f);
    match first_failure(&out.check(h)) {
        Some(msg) => Err(RepError::InvalidModule(msg)),
        None => Ok(out),
    }
}

/// Binary structure of `f*` at `(a, b)`: `∇^J_{a,b}` in both directions.
pub fn structure_maps(m1: &ModuleQ, m2: &ModuleQ, j: &WeakBialgebra) -> (Mat, Mat) {
    let n = nabla(m1, m2, j);
    (n.clone(), n)
}

/// Nullary structure of `f*`: `f t: ⊤_H → f*⊤_J` and
/// `y ↦ ε_J(f(1₁) y) 1₂: f*⊤_J → ⊤_H`.
pub fn nullary_maps(f: &Mat, h: &WeakBialgebra, j: &WeakBialgebra) -> (Mat, Mat) {
    let t = canonical_idempotents(h).expect("weak bialgebra").t;
    let one = h.delta().dot(h.eta());
    let eps_mu = j.eps().dot(j.mu());
    let comonoidal = kron(&eps_mu, &eye(h.dim()))
        .dot(&kron_all(&[f, &braid(h.dim(), j.dim())]))
        .dot(&kron(&one, &eye(j.dim())));
    (f.dot(&t), comonoidal)
}

/// Structure maps of `f*` are module morphisms and satisfy both Frobenius
/// squares on the given triple.
pub fn check_restriction(
    f: &Mat,
    h: &WeakBialgebra,
    j: &WeakBialgebra,
    a: &ModuleQ,
    b: &ModuleQ,
    c: &ModuleQ,
) -> Result<Verdict, RepError> {
    let (fa, fb, fc) = (restrict_along(f, a, h, j)?, restrict_along(f, b, h, j)?, restrict_along(f, c, h, j)?);
    let mut v = Verdict::new();
    let (top_h, top_j) = (unit_object(h), unit_object(j));
    let f_top = top_j.pulled_back(f);
    let (mono0, comono0) = nullary_maps(f, h, j);
    v.extend_prefixed("nullary-monoidal", check_mod_morphism(&mono0, &top_h, &f_top, h));
    v.extend_prefixed("nullary-comonoidal", check_mod_morphism(&comono0, &f_top, &top_h, h));
    let (ab_j, bc_j) = (tensor_h(a, b, j), tensor_h(b, c, j));
    let ab_h = tensor_h(&fa, &fb, h);
    let (phi, _) = structure_maps(a, b, j);
    v.extend_prefixed("binary-monoidal", check_mod_morphism(&phi, &ab_h, &ab_j.pulled_back(f), h));
    v.extend_prefixed("binary-comonoidal", check_mod_morphism(&phi, &ab_j.pulled_back(f), &ab_h, h));
    v.equal("separable", "φ ψ = ∇ on f*(a ⊗_J b)", &phi.dot(&phi), &ab_j.idem);
    let (ea, ec) = (eye(a.dim), eye(c.dim));
    // f*(a⊗b) ⊗_H f*c → f*a ⊗_H f*(b⊗c)
    let src = tensor_h(&ab_j.pulled_back(f), &fc, h).idem;
    let tgt = tensor_h(&fa, &bc_j.pulled_back(f), h).idem;
    let lhs = kron(&ea, &bc_j.idem).dot(&kron(&ab_j.idem, &ec));
    let rhs = tensor_h(a, &bc_j, j).idem.dot(&tensor_h(&ab_j, c, j).idem);
    q_check(&mut v, "frobenius-left", "(1 ⊗ φ)(ψ ⊗ 1) = ψ φ", &lhs, &rhs, &src, &tgt);
    let lhs = kron(&ab_j.idem, &ec).dot(&kron(&ea, &bc_j.idem));
    q_check(&mut v, "frobenius-right", "(φ ⊗ 1)(1 ⊗ ψ) = ψ φ", &lhs, &rhs, &tgt, &src);
    Ok(v)
}

/// `(e^k · φ)(v) = φ(S(e_k) v)` on the dual carrier.
pub fn dual_module(m: &ModuleQ, h: &WeakHopf) -> Result<ModuleQ, RepError> {
    let (a, d) = (m.dim, h.wba.dim());
    let twisted = m.action.dot(&kron(&h.antipode, &eye(a)));
    let mut act = Mat::zeros(a, d * a);
    for i in 0..a {
        for (col, val) in twisted.row_entries(i) {
            let (k, j) = (col / a, col % a);
            act.set(j, k * a + i, val.clone());
        }
    }
    ModuleQ::from_action(&h.wba, act)
}

/// A basis of `{f : b′ f a′ = f, f α = β (1 ⊗ f)}`.
pub fn intertwiners(src: &ModuleQ, tgt: &ModuleQ, h: &WeakBialgebra) -> Vec<Mat> {
    let (a, b) = (src.dim, tgt.dim);
    let n = a * b;
    // columns indexed by f[r][c] at r·a + c
    let vec_of = |build: &dyn Fn(&Mat) -> Mat| {
        let mut trip = Vec::new();
        let mut rows = 0;
        for idx in 0..n {
            let mut f = Mat::zeros(b, a);
            f.set(idx / a, idx % a, crate::exactla::int(1));
            let img = build(&f);
            rows = img.rows() * img.cols();
            trip.extend(img.entries().into_iter().enumerate().map(|(k, val)| (k, idx, val)));
        }
        Mat::from_triplets(rows, n, trip)
    };
    let eq1 = vec_of(&|f| f.dot(&src.action).sub(&tgt.action.dot(&kron(&eye(h.dim()), f))).expect("shape"));
    let eq2 = vec_of(&|f| tgt.idem.dot(f).dot(&src.idem).sub(f).expect("shape"));
    let constraints = if n == 0 { Mat::zeros(0, 0) } else { eq1.vstack(&eq2).expect("same width") };
    let basis = kernel(&constraints);
    (0..basis.cols())
        .map(|k| {
            let col = basis.col_block(k, 1);
            Mat::from_triplets(b, a, (0..n).map(|idx| (idx / a, idx % a, col.get(idx, 0))))
        })
        .collect()
}

/// The image of the forgetful functor restricted to the full subcategory on
/// `modules`, generated by bases of all intertwiner spaces.
pub fn probe_functor_from_modules(h: &WeakBialgebra, modules: &[ModuleQ]) -> CategoryImage {
    let mut generators = Vec::new();
    for (x, src) in modules.iter().enumerate() {
        for (y, tgt) in modules.iter().enumerate() {
            for (k, mat) in intertwiners(src, tgt, h).into_iter().enumerate() {
                generators.push(GeneratorData { name: format!("m{x}_{y}_{k}"), src: x, tgt: y, mat });
            }
        }
    }
    CategoryImage {
        dims: modules.iter().map(|m| m.dim).collect(),
        generators,
        idems: modules.iter().map(|m| m.idem.clone()).collect(),
    }
}
