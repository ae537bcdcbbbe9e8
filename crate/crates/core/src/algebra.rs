//! Algebras, coalgebras, Frobenius algebras and (weak) bialgebras and Hopf
//! algebras in finite-dimensional rational vector spaces, with verdict-producing
//! checkers for their axioms.

use thiserror::Error;

use crate::axioms::{self, Axiom};
use crate::diagram::{check_equation_text, GenEnv, ObjWord};
use crate::exactla::{braid, eye, frac, int, kron, kron_all, Mat, Scalar};
use crate::groups::{FiniteGroup, Groupoid};
use crate::verdict::{Check, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("{0} fails: {1}")]
    Axiom(String, String),
    #[error("canonical idempotent {0} is not idempotent")]
    IdempotencyFailure(&'static str),
    #[error("not a splitting of t: {0}")]
    NotASplittingOfT(String),
}

fn shape_err<T>(msg: impl Into<String>) -> Result<T, AlgebraError> {
    Err(AlgebraError::Shape(msg.into()))
}

/// Binds whichever structure maps are given on a single object `H`.
pub fn structure_env(dim: usize, gens: &[(&str, &Mat)]) -> GenEnv {
    let mut env = GenEnv::new().object("H", dim);
    let h = || ObjWord::of(&["H"]);
    for (name, m) in gens {
        let (dom, cod) = match *name {
            "mu" => (ObjWord::of(&["H", "H"]), h()),
            "eta" => (ObjWord::unit(), h()),
            "delta" => (h(), ObjWord::of(&["H", "H"])),
            "eps" => (h(), ObjWord::unit()),
            _ => (h(), h()),
        };
        env.bind(name, dom, cod, (*m).clone()).expect("structure map shapes are checked by constructors");
    }
    env
}

/// Runs each registry equation in `env`.
pub fn run_axioms(env: &GenEnv, list: &[Axiom]) -> Verdict {
    let mut v = Verdict::new();
    for ax in list {
        v.push(match check_equation_text(ax.lhs, ax.rhs, env) {
            Ok(r) => Check::new(ax.id, ax.anchor, r.holds, r.counterexample),
            Err(e) => Check::new(ax.id, ax.anchor, false, Some(e.to_string())),
        });
    }
    v
}

fn first_failure(v: &Verdict) -> Result<(), AlgebraError> {
    match v.failures().next() {
        Some(c) => Err(AlgebraError::Axiom(c.id.clone(), c.counterexample.clone().unwrap_or_default())),
        None => Ok(()),
    }
}

/// Multiplication `dim × dim²` and unit `dim × 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraData {
    dim: usize,
    mu: Mat,
    eta: Mat,
}

impl AlgebraData {
    /// Validates associativity and unitality.
    pub fn new(mu: Mat, eta: Mat) -> Result<Self, AlgebraError> {
        let a = Self::unchecked(mu, eta)?;
        first_failure(&run_axioms(&structure_env(a.dim, &[("mu", &a.mu), ("eta", &a.eta)]), &axioms::ALGEBRA_AXIOMS))?;
        Ok(a)
    }

    fn unchecked(mu: Mat, eta: Mat) -> Result<Self, AlgebraError> {
        let dim = eta.rows();
        if eta.cols() != 1 || mu.shape() != (dim, dim * dim) {
            return shape_err(format!("mu {:?}, eta {:?} do not fit one carrier", mu.shape(), eta.shape()));
        }
        Ok(AlgebraData { dim, mu, eta })
    }

    /// The ground field as an algebra.
    pub fn trivial() -> Self {
        AlgebraData { dim: 1, mu: eye(1), eta: eye(1) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mu(&self) -> &Mat {
        &self.mu
    }

    pub fn eta(&self) -> &Mat {
        &self.eta
    }

    /// Product of two elements given as columns.
    pub fn product(&self, x: &Mat, y: &Mat) -> Mat {
        self.mu.dot(&kron(x, y))
    }

    /// `self ⊗ other` with multiplication routed through the braiding.
    pub fn tensor(&self, other: &AlgebraData) -> AlgebraData {
        let (a, b) = (self.dim, other.dim);
        let shuffle = kron_all(&[&eye(a), &braid(b, a), &eye(b)]);
        AlgebraData {
            dim: a * b,
            mu: kron(&self.mu, &other.mu).dot(&shuffle),
            eta: kron(&self.eta, &other.eta),
        }
    }

    pub fn tensor_power(&self, n: usize) -> AlgebraData {
        (0..n).fold(AlgebraData::trivial(), |acc, _| acc.tensor(self))
    }

    pub fn is_commutative(&self) -> bool {
        self.mu.dot(&braid(self.dim, self.dim)) == self.mu
    }
}

/// Comultiplication `dim² × dim` and counit `1 × dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraData {
    dim: usize,
    delta: Mat,
    eps: Mat,
}

impl CoalgebraData {
    /// Validates coassociativity and counitality.
    pub fn new(delta: Mat, eps: Mat) -> Result<Self, AlgebraError> {
        let c = Self::unchecked(delta, eps)?;
        first_failure(&run_axioms(
            &structure_env(c.dim, &[("delta", &c.delta), ("eps", &c.eps)]),
            &axioms::COALGEBRA_AXIOMS,
        ))?;
        Ok(c)
    }

    fn unchecked(delta: Mat, eps: Mat) -> Result<Self, AlgebraError> {
        let dim = eps.cols();
        if eps.rows() != 1 || delta.shape() != (dim * dim, dim) {
            return shape_err(format!("delta {:?}, eps {:?} do not fit one carrier", delta.shape(), eps.shape()));
        }
        Ok(CoalgebraData { dim, delta, eps })
    }

    pub fn trivial() -> Self {
        CoalgebraData { dim: 1, delta: eye(1), eps: eye(1) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self) -> &Mat {
        &self.delta
    }

    pub fn eps(&self) -> &Mat {
        &self.eps
    }

    pub fn tensor(&self, other: &CoalgebraData) -> CoalgebraData {
        let (a, b) = (self.dim, other.dim);
        let shuffle = kron_all(&[&eye(a), &braid(a, b), &eye(b)]);
        CoalgebraData {
            dim: a * b,
            delta: shuffle.dot(&kron(&self.delta, &other.delta)),
            eps: kron(&self.eps, &other.eps),
        }
    }

    pub fn tensor_power(&self, n: usize) -> CoalgebraData {
        (0..n).fold(CoalgebraData::trivial(), |acc, _| acc.tensor(self))
    }

    pub fn is_cocommutative(&self) -> bool {
        braid(self.dim, self.dim).dot(&self.delta) == self.delta
    }
}

/// `f ⋆ g = μ (f ⊗ g) Δ` for maps from a coalgebra to an algebra.
pub fn convolution(f: &Mat, g: &Mat, src: &CoalgebraData, dst: &AlgebraData) -> Result<Mat, AlgebraError> {
    let want = (dst.dim, src.dim);
    if f.shape() != want || g.shape() != want {
        return shape_err(format!("convolution needs {want:?} maps, got {:?} and {:?}", f.shape(), g.shape()));
    }
    Ok(dst.mu.dot(&kron(f, g)).dot(&src.delta))
}

/// An algebra and a coalgebra on the same carrier, intended to be Frobenius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusAlgebra {
    pub alg: AlgebraData,
    pub coalg: CoalgebraData,
}

impl FrobeniusAlgebra {
    pub fn new(alg: AlgebraData, coalg: CoalgebraData) -> Result<Self, AlgebraError> {
        if alg.dim != coalg.dim {
            return shape_err(format!("algebra dim {} vs coalgebra dim {}", alg.dim, coalg.dim));
        }
        Ok(FrobeniusAlgebra { alg, coalg })
    }

    pub fn trivial() -> Self {
        Self::diagonal(1)
    }

    /// `kⁿ` with `Δ(e_i) = e_i ⊗ e_i` and `ε(e_i) = 1`.
    pub fn diagonal(n: usize) -> Self {
        let mu = Mat::from_triplets(n, n * n, (0..n).map(|i| (i, i * n + i, int(1))));
        let eta = Mat::from_triplets(n, 1, (0..n).map(|i| (i, 0, int(1))));
        let delta = mu.transpose();
        let eps = eta.transpose();
        FrobeniusAlgebra { alg: AlgebraData { dim: n, mu, eta }, coalg: CoalgebraData { dim: n, delta, eps } }
    }

    /// The `n × n` matrix algebra with `Δ(E_ij) = (1/n) Σ_k E_ik ⊗ E_kj` and
    /// `ε = n · trace`. Separable Frobenius but not commutative for `n > 1`.
    pub fn matrix(n: usize) -> Self {
        let d = n * n;
        let e = |i: usize, j: usize| i * n + j;
        let mut mu = Mat::zeros(d, d * d);
        let mut delta = Mat::zeros(d * d, d);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mu.set(e(i, k), e(i, j) * d + e(j, k), int(1));
                    delta.set(e(i, k) * d + e(k, j), e(i, j), frac(1, n as i64));
                }
            }
        }
        let eta = Mat::from_triplets(d, 1, (0..n).map(|i| (e(i, i), 0, int(1))));
        let eps = Mat::from_triplets(1, d, (0..n).map(|i| (0, e(i, i), int(n as i64))));
        FrobeniusAlgebra { alg: AlgebraData { dim: d, mu, eta }, coalg: CoalgebraData { dim: d, delta, eps } }
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn env(&self) -> GenEnv {
        structure_env(
            self.dim(),
            &[("mu", &self.alg.mu), ("eta", &self.alg.eta), ("delta", &self.coalg.delta), ("eps", &self.coalg.eps)],
        )
    }

    pub fn is_separable_frobenius(&self) -> bool {
        check_frobenius(&self.alg, &self.coalg).all_pass()
    }
}

/// The two Frobenius equalities and separability, independently.
pub fn check_frobenius(a: &AlgebraData, c: &CoalgebraData) -> Verdict {
    if a.dim != c.dim {
        let mut v = Verdict::new();
        v.holds("dimensions", "algebra and coalgebra share a carrier", false, Some(format!("{} vs {}", a.dim, c.dim)));
        return v;
    }
    let env = structure_env(a.dim, &[("mu", &a.mu), ("eta", &a.eta), ("delta", &c.delta), ("eps", &c.eps)]);
    run_axioms(&env, &axioms::FROBENIUS_AXIOMS)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakBialgebra {
    pub alg: AlgebraData,
    pub coalg: CoalgebraData,
}

impl WeakBialgebra {
    pub fn new(alg: AlgebraData, coalg: CoalgebraData) -> Result<Self, AlgebraError> {
        if alg.dim != coalg.dim {
            return shape_err(format!("algebra dim {} vs coalgebra dim {}", alg.dim, coalg.dim));
        }
        Ok(WeakBialgebra { alg, coalg })
    }

    /// Validates the algebra and coalgebra parts; the weak axioms are a
    /// separate pass.
    pub fn from_maps(mu: Mat, eta: Mat, delta: Mat, eps: Mat) -> Result<Self, AlgebraError> {
        Self::new(AlgebraData::new(mu, eta)?, CoalgebraData::new(delta, eps)?)
    }

    /// Skips validation; for carriers known to be well-formed by construction.
    pub fn from_maps_unchecked(mu: Mat, eta: Mat, delta: Mat, eps: Mat) -> Result<Self, AlgebraError> {
        Self::new(AlgebraData::unchecked(mu, eta)?, CoalgebraData::unchecked(delta, eps)?)
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn mu(&self) -> &Mat {
        &self.alg.mu
    }

    pub fn eta(&self) -> &Mat {
        &self.alg.eta
    }

    pub fn delta(&self) -> &Mat {
        &self.coalg.delta
    }

    pub fn eps(&self) -> &Mat {
        &self.coalg.eps
    }

    pub fn env(&self) -> GenEnv {
        structure_env(
            self.dim(),
            &[("mu", self.mu()), ("eta", self.eta()), ("delta", self.delta()), ("eps", self.eps())],
        )
    }

    /// `f ⋆ g` in `End(H)`.
    pub fn conv(&self, f: &Mat, g: &Mat) -> Mat {
        convolution(f, g, &self.coalg, &self.alg).expect("endomorphisms of the carrier")
    }

    /// The convolution unit `η ε`.
    pub fn conv_unit(&self) -> Mat {
        self.eta().dot(self.eps())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakHopf {
    pub wba: WeakBialgebra,
    pub antipode: Mat,
}

impl WeakHopf {
    pub fn new(wba: WeakBialgebra, antipode: Mat) -> Result<Self, AlgebraError> {
        let d = wba.dim();
        if antipode.shape() != (d, d) {
            return shape_err(format!("antipode {:?} on a {d}-dim carrier", antipode.shape()));
        }
        Ok(WeakHopf { wba, antipode })
    }

    /// Whether the antipode is invertible. Not part of the definition.
    pub fn has_inverse(&self) -> bool {
        self.antipode.inverse().is_some()
    }
}

pub fn barbell(b: &WeakBialgebra) -> Scalar {
    b.eps().dot(b.eta()).as_scalar().expect("1x1")
}

/// Barbell, strong unit, strong counit and bialgebra axioms.
pub fn check_bialgebra_strong(b: &WeakBialgebra) -> Verdict {
    run_axioms(&b.env(), &axioms::STRONG_AXIOMS)
}

/// The weak unit, weak counit and bialgebra axioms as term equations, their
/// convolution forms computed in tensor powers of `H`, and a consistency
/// check that the two forms agree.
pub fn check_weak_bialgebra(b: &WeakBialgebra) -> Verdict {
    let mut v = run_axioms(&b.env(), &axioms::WEAK_AXIOMS);
    let conv = weak_axioms_by_convolution(b);
    let mut agree = true;
    let mut detail = None;
    for c in &conv.checks {
        let figure_id = c.id.trim_end_matches("-conv");
        if v.passed(figure_id) != c.pass {
            agree = false;
            detail.get_or_insert_with(|| format!("{figure_id}: term form and convolution form disagree"));
        }
    }
    v.extend(conv);
    v.holds("consistency", "term and convolution forms agree", agree, detail);
    v
}

fn weak_axioms_by_convolution(b: &WeakBialgebra) -> Verdict {
    let (eta, eps) = (b.eta(), b.eps());
    let delta_eta = b.delta().dot(eta);
    let eps_mu = eps.dot(b.mu());
    let h3a = b.alg.tensor_power(3);
    let h3c = b.coalg.tensor_power(3);
    let top_a = AlgebraData::trivial();
    let top_c = CoalgebraData::trivial();

    let delta3_eta = kron(b.delta(), &eye(b.dim())).dot(&delta_eta);
    let left_u = kron(&delta_eta, eta);
    let right_u = kron(eta, &delta_eta);
    let eps_mu3 = eps_mu.dot(&kron(b.mu(), &eye(b.dim())));
    let left_c = kron(&eps_mu, eps);
    let right_c = kron(eps, &eps_mu);

    let conv_u = |f: &Mat, g: &Mat| convolution(f, g, &top_c, &h3a).expect("points of H³");
    let conv_c = |f: &Mat, g: &Mat| convolution(f, g, &h3c, &top_a).expect("functionals on H³");

    let mut v = Verdict::new();
    v.equal("weak-unit-1-conv", "(Δη ⊗ η) ⋆ (η ⊗ Δη) = Δ₃η", &conv_u(&left_u, &right_u), &delta3_eta);
    v.equal("weak-unit-2-conv", "(η ⊗ Δη) ⋆ (Δη ⊗ η) = Δ₃η", &conv_u(&right_u, &left_u), &delta3_eta);
    v.equal("weak-counit-1-conv", "(εμ ⊗ ε) ⋆ (ε ⊗ εμ) = εμ₃", &conv_c(&left_c, &right_c), &eps_mu3);
    v.equal("weak-counit-2-conv", "(ε ⊗ εμ) ⋆ (εμ ⊗ ε) = εμ₃", &conv_c(&right_c, &left_c), &eps_mu3);
    v
}

/// The four canonical idempotents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Idempotents {
    pub s: Mat,
    pub t: Mat,
    pub z: Mat,
    pub r: Mat,
}

impl Idempotents {
    /// In the order s, t, z, r.
    pub fn as_array(&self) -> [(&'static str, &Mat); 4] {
        [("s", &self.s), ("t", &self.t), ("z", &self.z), ("r", &self.r)]
    }
}

pub fn canonical_idempotents(b: &WeakBialgebra) -> Result<Idempotents, AlgebraError> {
    let env = b.env();
    let mut out = Vec::with_capacity(4);
    for it in axioms::IDEMPOTENTS {
        let term = crate::diagram::parse_term(it.term).expect("registry terms parse");
        let e = crate::diagram::evaluate(&term, &env).expect("registry terms typecheck");
        if e.dot(&e) != e {
            return Err(AlgebraError::IdempotencyFailure(it.name));
        }
        out.push(e);
    }
    let r = out.pop().expect("four");
    let z = out.pop().expect("four");
    let t = out.pop().expect("four");
    let s = out.pop().expect("four");
    Ok(Idempotents { s, t, z, r })
}

/// Around the cycle `(H,s) → (H,t) → (H,z) → (H,r) → (H,s)` the map
/// `(H,a) → (H,b)` is `b a` with inverse `a b`; both are checked to be
/// morphisms of the idempotent-splitting completion and mutually inverse.
pub fn check_prop1_isos(b: &WeakBialgebra) -> Verdict {
    let mut v = Verdict::new();
    let ids = match canonical_idempotents(b) {
        Ok(ids) => ids,
        Err(e) => {
            v.holds("idempotents", "canonical idempotents", false, Some(e.to_string()));
            return v;
        }
    };
    let cycle = ids.as_array();
    for k in 0..4 {
        let (an, a) = cycle[k];
        let (bn, bm) = cycle[(k + 1) % 4];
        let f = bm.dot(a);
        let g = a.dot(bm);
        let id = format!("{an}-{bn}");
        v.equal(&format!("{id}/forward-morphism"), "b f a = f", &bm.dot(&f).dot(a), &f);
        v.equal(&format!("{id}/inverse-morphism"), "a g b = g", &a.dot(&g).dot(bm), &g);
        v.equal(&format!("{id}/inverse-then-forward"), "g f = a", &g.dot(&f), a);
        v.equal(&format!("{id}/forward-then-inverse"), "f g = b", &f.dot(&g), bm);
    }
    v
}

/// Product in the algebra `H ⊗ H`.
fn mul_hh(b: &WeakBialgebra, x: &Mat, y: &Mat) -> Mat {
    let hh = b.alg.tensor(&b.alg);
    hh.mu.dot(&kron(x, y))
}

fn check_point(c: &Mat, b: &WeakBialgebra, v: &mut Verdict) -> bool {
    if c.shape() != (b.dim(), 1) {
        v.holds("shape", "element is a column over the carrier", false, Some(format!("{:?}", c.shape())));
        return false;
    }
    true
}

/// `Δc = c ⊗ c`.
pub fn is_grouplike(c: &Mat, b: &WeakBialgebra) -> Verdict {
    let mut v = Verdict::new();
    if check_point(c, b, &mut v) {
        v.equal("grouplike", "Δc = c ⊗ c", &b.delta().dot(c), &kron(c, c));
    }
    v
}

/// `Δc = Δη ⋆ (c ⊗ c) = (c ⊗ c) ⋆ Δη`.
pub fn is_almost_grouplike(c: &Mat, b: &WeakBialgebra) -> Verdict {
    let mut v = Verdict::new();
    if check_point(c, b, &mut v) {
        let dc = b.delta().dot(c);
        let de = b.delta().dot(b.eta());
        let cc = kron(c, c);
        v.equal("almost-grouplike-left", "Δc = Δη ⋆ (c ⊗ c)", &dc, &mul_hh(b, &de, &cc));
        v.equal("almost-grouplike-right", "Δc = (c ⊗ c) ⋆ Δη", &dc, &mul_hh(b, &cc, &de));
    }
    v
}

/// `S ⋆ id = r`, `id ⋆ S = t`, `S ⋆ id ⋆ S = S`.
pub fn check_weak_hopf(h: &WeakHopf) -> Verdict {
    let b = &h.wba;
    let mut v = Verdict::new();
    let ids = match canonical_idempotents(b) {
        Ok(ids) => ids,
        Err(e) => {
            v.holds("idempotents", "canonical idempotents", false, Some(e.to_string()));
            return v;
        }
    };
    let id = eye(b.dim());
    let s = &h.antipode;
    let s_id = b.conv(s, &id);
    v.equal("antipode-left", "S ⋆ id = r", &s_id, &ids.r);
    v.equal("antipode-right", "id ⋆ S = t", &b.conv(&id, s), &ids.t);
    v.equal("antipode-sandwich", "S ⋆ id ⋆ S = S", &b.conv(&s_id, s), s);
    v
}

/// Multiplication and unit preserved on the nose.
pub fn check_algebra_morphism(f: &Mat, h: &AlgebraData, j: &AlgebraData) -> Verdict {
    let mut v = Verdict::new();
    if f.shape() != (j.dim, h.dim) {
        v.holds("shape", "f: H → J", false, Some(format!("{:?}", f.shape())));
        return v;
    }
    v.equal("preserves-mu", "f μ_H = μ_J (f ⊗ f)", &f.dot(&h.mu), &j.mu.dot(&kron(f, f)));
    v.equal("preserves-eta", "f η_H = η_J", &f.dot(&h.eta), &j.eta);
    v
}

/// Strict preservation of all four structure maps.
pub fn check_strict_morphism(f: &Mat, h: &WeakBialgebra, j: &WeakBialgebra) -> Verdict {
    let mut v = check_algebra_morphism(f, &h.alg, &j.alg);
    if f.shape() == (j.dim(), h.dim()) {
        v.equal("preserves-delta", "(f ⊗ f) Δ_H = Δ_J f", &kron(f, f).dot(h.delta()), &j.delta().dot(f));
        v.equal("preserves-eps", "ε_J f = ε_H", &j.eps().dot(f), h.eps());
    }
    v
}

/// Weak morphism of weak bialgebras: commutes with s, t, z, r; preserves
/// multiplication and unit; and `Δ_J f = Δ_J(1) · (f ⊗ f)Δ_H = (f ⊗ f)Δ_H · Δ_J(1)`
/// with products taken in `J ⊗ J`.
pub fn check_weak_morphism(f: &Mat, h: &WeakBialgebra, j: &WeakBialgebra) -> Verdict {
    let mut v = check_algebra_morphism(f, &h.alg, &j.alg);
    if f.shape() != (j.dim(), h.dim()) {
        return v;
    }
    match (canonical_idempotents(h), canonical_idempotents(j)) {
        (Ok(ih), Ok(ij)) => {
            for ((n, eh), (_, ej)) in ih.as_array().into_iter().zip(ij.as_array()) {
                v.equal(&format!("commutes-{n}"), "f e_H = e_J f", &f.dot(eh), &ej.dot(f));
            }
        }
        (Err(e), _) | (_, Err(e)) => v.holds("idempotents", "canonical idempotents", false, Some(e.to_string())),
    }
    let lhs = j.delta().dot(f);
    let ffd = kron(f, f).dot(h.delta());
    let unit = j.delta().dot(j.eta());
    let jj = j.alg.tensor(&j.alg);
    v.equal("weak-delta-left", "Δ_J f = Δ_J(1) · (f ⊗ f) Δ_H", &lhs, &jj.mu.dot(&kron(&unit, &ffd)));
    v.equal("weak-delta-right", "Δ_J f = (f ⊗ f) Δ_H · Δ_J(1)", &lhs, &jj.mu.dot(&kron(&ffd, &unit)));
    v
}

/// Basis = morphisms, `e_g e_f = e_{g∘f}` or zero, `Δ e_f = e_f ⊗ e_f`,
/// `ε e_f = 1`, `S e_f = e_{f⁻¹}`.
pub fn groupoid_algebra(g: &Groupoid) -> WeakHopf {
    let m = g.morphisms();
    let mut mu = Mat::zeros(m, m * m);
    for a in 0..m {
        for b in 0..m {
            if let Some(c) = g.compose(a, b) {
                mu.set(c, a * m + b, int(1));
            }
        }
    }
    let eta = Mat::from_triplets(m, 1, (0..g.objects()).map(|o| (g.identity(o), 0, int(1))));
    let delta = Mat::from_triplets(m * m, m, (0..m).map(|f| (f * m + f, f, int(1))));
    let eps = Mat::from_triplets(1, m, (0..m).map(|f| (0, f, int(1))));
    let s = Mat::from_triplets(m, m, (0..m).map(|f| (g.inverse(f), f, int(1))));
    let wba = WeakBialgebra::from_maps(mu, eta, delta, eps).expect("groupoid algebras are well formed");
    WeakHopf::new(wba, s).expect("square antipode")
}

/// The group algebra `kG` with basis the group elements.
pub fn group_algebra(g: &FiniteGroup) -> WeakHopf {
    groupoid_algebra(&Groupoid::from_group(g))
}

/// `k^G` on the basis `δ_g`: pointwise product,
/// `Δ δ_g = Σ_h δ_h ⊗ δ_{h⁻¹g}`, `ε δ_g = [g = e]`, `S δ_g = δ_{g⁻¹}`.
pub fn function_hopf(g: &FiniteGroup) -> WeakHopf {
    let n = g.order();
    let mu = Mat::from_triplets(n, n * n, (0..n).map(|a| (a, a * n + a, int(1))));
    let eta = Mat::from_triplets(n, 1, (0..n).map(|a| (a, 0, int(1))));
    let mut delta = Mat::zeros(n * n, n);
    for x in 0..n {
        for h in 0..n {
            delta.set(h * n + g.mul(g.inv(h), x), x, int(1));
        }
    }
    let eps = Mat::from_triplets(1, n, [(0, g.identity(), int(1))]);
    let s = Mat::from_triplets(n, n, (0..n).map(|a| (g.inv(a), a, int(1))));
    let wba = WeakBialgebra::from_maps(mu, eta, delta, eps).expect("function algebras are well formed");
    WeakHopf::new(wba, s).expect("square antipode")
}

/// Frobenius structure on a splitting `H → h → H` of `t`:
/// `μ' = α μ (β ⊗ β)`, `δ' = (α ⊗ α) Δ β`, `ε' = ε β`, `η' = α η`
/// where `α = retraction`, `β = section`.
pub fn frobenius_from_splitting(
    b: &WeakBialgebra,
    retraction: &Mat,
    section: &Mat,
) -> Result<FrobeniusAlgebra, AlgebraError> {
    let d = b.dim();
    let k = retraction.rows();
    if retraction.shape() != (k, d) || section.shape() != (d, k) {
        return Err(AlgebraError::NotASplittingOfT(format!(
            "retraction {:?} and section {:?} do not split a {d}-dim carrier",
            retraction.shape(),
            section.shape()
        )));
    }
    let ids = canonical_idempotents(b)?;
    if section.dot(retraction) != ids.t {
        return Err(AlgebraError::NotASplittingOfT("section · retraction ≠ t".into()));
    }
    if !retraction.dot(section).is_identity() {
        return Err(AlgebraError::NotASplittingOfT("retraction · section ≠ identity".into()));
    }
    let (a, be) = (retraction, section);
    let alg = AlgebraData::new(a.dot(b.mu()).dot(&kron(be, be)), a.dot(b.eta()))?;
    let coalg = CoalgebraData::new(kron(a, a).dot(b.delta()).dot(be), b.eps().dot(be))?;
    FrobeniusAlgebra::new(alg, coalg)
}
