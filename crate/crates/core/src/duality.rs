//! The reconstruction adjunction (unit, counit, both triangle identities),
//! the Frobenius structure on `F⊤` obtained by splitting `t`, and change of
//! base along `Φ = (−) ⊗ C`.

use thiserror::Error;

use crate::algebra::{
    barbell, check_algebra_morphism, check_strict_morphism, frobenius_from_splitting, AlgebraData, AlgebraError,
    FrobeniusAlgebra, WeakBialgebra,
};
use crate::exactla::{braid, eye, kron, kron_all, Mat};
use crate::fincat::{Duals, FunctorData, GeneratorData, Whisker};
use crate::rep::{check_mod_morphism, nabla, probe_functor_from_modules, unit_object, ModuleQ, RepError};
use crate::tannaka::{
    build_algebra, compute_end, discharge, solve_discharged, tan_on_morphism, tannaka, DischargedFamily, TannakaError,
    TannakaResult,
};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("not a commutative separable Frobenius algebra: {0}")]
    NotCommutativeSeparable(String),
    #[error(transparent)]
    Tannaka(#[from] TannakaError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `η_H: H → tan(U_H)` over a probe of modules, together with that end.
#[derive(Debug, Clone)]
pub struct AdjunctionUnit {
    pub map: Mat,
    pub end: TannakaResult,
}

/// The family whose component at a module is its action.
pub fn adjunction_unit(h: &WeakBialgebra, probe: &[ModuleQ]) -> Result<AdjunctionUnit, DualityError> {
    let mut end = compute_end(&probe_functor_from_modules(h, probe));
    build_algebra(&mut end)?;
    let fam = DischargedFamily { source_dim: h.dim(), arity: 1, components: probe.iter().map(|m| m.action().clone()).collect() };
    let map = solve_discharged(&fam, &end)?;
    Ok(AdjunctionUnit { map, end })
}

/// Algebra-level check of `η_H`: it preserves `μ` and `η`.
pub fn check_adjunction_unit(h: &WeakBialgebra, u: &AdjunctionUnit) -> Result<Verdict, DualityError> {
    let tan = AlgebraData::new(u.end.mu.clone().expect("built"), u.end.eta.clone().expect("built"))?;
    Ok(check_algebra_morphism(&u.map, &h.alg, &tan))
}

/// `ε_F`: the modules `(Fx, α_x, 1)` over `tan F` with nullary maps
/// `φ₀: tan F → F⊤`, `θ ↦ θ_ι(φ₀)`, and `ψ₀: F⊤ → tan F`, the map whose
/// discharged form is `φ_{ι,x}`.
#[derive(Debug, Clone)]
pub struct AdjunctionCounit {
    pub modules: Vec<ModuleQ>,
    pub phi0: Mat,
    pub psi0: Mat,
}

pub fn adjunction_counit(f: &FunctorData, t: &TannakaResult) -> Result<AdjunctionCounit, DualityError> {
    let b = t.weak_bialgebra()?;
    let modules = t
        .actions
        .iter()
        .map(|a| ModuleQ::new(&b, a.clone(), eye(a.rows())))
        .collect::<Result<Vec<_>, _>>()?;
    let u = f.unit;
    let phi0 = t.actions[u].dot(&kron(&eye(t.dim), &f.phi0));
    let fam = DischargedFamily { source_dim: f.dim(u), arity: 1, components: (0..f.len()).map(|x| f.phi[u][x].clone()).collect() };
    let psi0 = solve_discharged(&fam, t)?;
    Ok(AdjunctionCounit { modules, phi0, psi0 })
}

/// `ε_F` is strong monoidal and its nullary maps split `t` on `tan F`.
pub fn check_adjunction_counit(f: &FunctorData, t: &TannakaResult, e: &AdjunctionCounit) -> Result<Verdict, DualityError> {
    let b = t.weak_bialgebra()?;
    let ids = crate::algebra::canonical_idempotents(&b)?;
    let mut v = Verdict::new();
    v.equal("splitting-section-retraction", "ψ₀ φ₀ = t on tan F", &e.psi0.dot(&e.phi0), &ids.t);
    v.equal("splitting-retraction-section", "φ₀ ψ₀ = 1 on F⊤", &e.phi0.dot(&e.psi0), &eye(f.dim(f.unit)));
    let dt = discharge(&e.psi0.dot(&e.phi0), t, 1)?;
    let dts = discharge(&ids.t, t, 1)?;
    v.holds("splitting-discharged", "discharged ψ₀ φ₀ = discharged t", dt == dts, None);
    let top = unit_object(&b);
    let ev = &e.modules[f.unit];
    v.extend_prefixed("nullary-monoidal", check_mod_morphism(&e.phi0, &top, ev, &b));
    v.extend_prefixed("nullary-comonoidal", check_mod_morphism(&e.psi0, ev, &top, &b));
    let mut strong = true;
    let mut detail = None;
    for x in 0..f.len() {
        for y in 0..f.len() {
            let (mx, my, mxy) = (&e.modules[x], &e.modules[y], &e.modules[f.t(x, y)]);
            let n = nabla(mx, my, &b);
            let src = crate::rep::tensor_h(mx, my, &b);
            let ok = f.phi[x][y].dot(&f.psi[x][y]).is_identity()
                && f.psi[x][y].dot(&f.phi[x][y]) == n
                && check_mod_morphism(&f.phi[x][y], &src, mxy, &b).all_pass()
                && check_mod_morphism(&f.psi[x][y], mxy, &src, &b).all_pass();
            if !ok && strong {
                strong = false;
                detail = Some(format!("at ({x}, {y})"));
            }
        }
    }
    v.holds("counit-strong", "φ ψ = 1 and ψ φ = ∇ for ε", strong, detail);
    Ok(v)
}

/// For each sample module, pulling the `tan`-action back along `η_H`
/// recovers the module.
pub fn triangle_one(h: &WeakBialgebra, modules: &[ModuleQ]) -> Result<Verdict, DualityError> {
    let u = adjunction_unit(h, modules)?;
    let mut v = Verdict::new();
    v.extend_prefixed("unit", check_adjunction_unit(h, &u)?);
    for (i, m) in modules.iter().enumerate() {
        let back = u.end.actions[i].dot(&kron(&u.map, &eye(m.dim())));
        v.equal(&format!("triangle-1/{i}"), "mod η ∘ ε_mod = 1", &back, m.action());
    }
    Ok(v)
}

/// `tan(ε_F) ∘ η_{tan F}` is the identity on `tan F`.
pub fn triangle_two(f: &FunctorData) -> Result<(Mat, Verdict), DualityError> {
    let t = tannaka(f)?;
    let counit = adjunction_counit(f, &t)?;
    let b = t.weak_bialgebra()?;
    let unit = adjunction_unit(&b, &counit.modules)?;
    let back = tan_on_morphism(&t, &unit.end, &(0..f.len()).collect::<Vec<_>>())?;
    let composite = back.dot(&unit.map);
    let mut v = Verdict::new();
    v.equal("triangle-2", "tan ε_F η_tan F = tan F", &composite, &eye(t.dim));
    Ok((composite, v))
}

/// The Frobenius structure on `F⊤` from splitting `t` agrees with the image
/// of the trivial Frobenius structure on `⊤`.
pub fn chikhladze_check(f: &FunctorData, t: &TannakaResult) -> Result<Verdict, DualityError> {
    let e = adjunction_counit(f, t)?;
    let split = frobenius_from_splitting(&t.weak_bialgebra()?, &e.phi0, &e.psi0)?;
    let image = f.unit_frobenius().map_err(TannakaError::from)?;
    let mut v = Verdict::new();
    v.equal("split-mu", "μ agrees with φ_{ι,ι}", split.alg.mu(), image.alg.mu());
    v.equal("split-eta", "η agrees with φ₀", split.alg.eta(), image.alg.eta());
    v.equal("split-delta", "Δ agrees with ψ_{ι,ι}", split.coalg.delta(), image.coalg.delta());
    v.equal("split-eps", "ε agrees with ψ₀", split.coalg.eps(), image.coalg.eps());
    Ok(v)
}

/// `Φ = (−) ⊗ C` for a commutative separable Frobenius algebra `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobEndofunctor {
    pub c: FrobeniusAlgebra,
}

impl FrobEndofunctor {
    pub fn new(c: FrobeniusAlgebra) -> Result<Self, DualityError> {
        if !c.is_separable_frobenius() {
            return Err(DualityError::NotCommutativeSeparable("not separable Frobenius".into()));
        }
        if !c.alg.is_commutative() {
            return Err(DualityError::NotCommutativeSeparable("not commutative".into()));
        }
        Ok(FrobEndofunctor { c })
    }

    pub fn identity() -> Self {
        FrobEndofunctor { c: FrobeniusAlgebra::trivial() }
    }

    /// `Ψ ∘ Φ = (−) ⊗ (C ⊗ C′)`.
    pub fn then(&self, next: &FrobEndofunctor) -> FrobEndofunctor {
        FrobEndofunctor {
            c: FrobeniusAlgebra { alg: self.c.alg.tensor(&next.c.alg), coalg: self.c.coalg.tensor(&next.c.coalg) },
        }
    }

    pub fn c_dim(&self) -> usize {
        self.c.dim()
    }

    pub fn on_morphism(&self, f: &Mat) -> Mat {
        kron(f, &eye(self.c_dim()))
    }

    /// `ΦV ⊗ ΦW → Φ(V ⊗ W)`.
    pub fn phi(&self, v: usize, w: usize) -> Mat {
        let c = self.c_dim();
        kron_all(&[&eye(v * w), self.c.alg.mu()]).dot(&kron_all(&[&eye(v), &braid(c, w), &eye(c)]))
    }

    /// `Φ(V ⊗ W) → ΦV ⊗ ΦW`.
    pub fn psi(&self, v: usize, w: usize) -> Mat {
        let c = self.c_dim();
        kron_all(&[&eye(v), &braid(w, c), &eye(c)]).dot(&kron_all(&[&eye(v * w), self.c.coalg.delta()]))
    }

    pub fn phi0(&self) -> &Mat {
        self.c.alg.eta()
    }

    pub fn psi0(&self) -> &Mat {
        self.c.coalg.eps()
    }

    /// Frobenius monoidal axioms, separability and braidedness on the sampled
    /// dimensions.
    pub fn check(&self, dims: &[usize]) -> Verdict {
        let c = self.c_dim();
        let mut v = Verdict::new();
        let mut all = |id: &str, anchor: &str, pass: bool, at: String| {
            if v.get(id).is_none() {
                v.holds(id, anchor, pass, (!pass).then_some(at));
            } else if !pass && v.passed(id) {
                v.checks.retain(|ch| ch.id != id);
                v.holds(id, anchor, false, Some(at));
            }
        };
        for &x in dims {
            for &y in dims {
                let at = format!("({x}, {y})");
                all("separable", "φ ψ = 1", self.phi(x, y).dot(&self.psi(x, y)).is_identity(), at.clone());
                let sym = self.on_morphism(&braid(x, y));
                all(
                    "braided-monoidal",
                    "Φ(c) φ = φ c",
                    sym.dot(&self.phi(x, y)) == self.phi(y, x).dot(&braid(x * c, y * c)),
                    at.clone(),
                );
                all(
                    "braided-comonoidal",
                    "ψ Φ(c) = c ψ",
                    self.psi(y, x).dot(&sym) == braid(x * c, y * c).dot(&self.psi(x, y)),
                    at.clone(),
                );
                let unit_l = self.phi(1, y).dot(&kron(self.phi0(), &eye(y * c)));
                all("monoidal-unit", "φ (φ₀ ⊗ 1) = 1", unit_l.is_identity(), at.clone());
                let counit_l = kron(self.psi0(), &eye(y * c)).dot(&self.psi(1, y));
                all("comonoidal-counit", "(ψ₀ ⊗ 1) ψ = 1", counit_l.is_identity(), at.clone());
                for &z in dims {
                    let at = format!("({x}, {y}, {z})");
                    let (ex, ez) = (eye(x * c), eye(z * c));
                    let lhs = self.phi(x * y, z).dot(&kron(&self.phi(x, y), &ez));
                    let rhs = self.phi(x, y * z).dot(&kron(&ex, &self.phi(y, z)));
                    all("monoidal-associativity", "φ (φ ⊗ 1) = φ (1 ⊗ φ)", lhs == rhs, at.clone());
                    let lhs = kron(&ex, &self.phi(y, z)).dot(&kron(&self.psi(x, y), &ez));
                    let rhs = self.psi(x, y * z).dot(&self.phi(x * y, z));
                    all("frobenius-left", "(1 ⊗ φ)(ψ ⊗ 1) = ψ φ", lhs == rhs, at.clone());
                    let lhs = kron(&self.phi(x, y), &ez).dot(&kron(&ex, &self.psi(y, z)));
                    let rhs = self.psi(x * y, z).dot(&self.phi(x, y * z));
                    all("frobenius-right", "(φ ⊗ 1)(1 ⊗ ψ) = ψ φ", lhs == rhs, at);
                }
            }
        }
        v
    }
}

/// `φ_{B,A} c_{ΦA,ΦB} ψ_{A,B} = Φ(c_{A,B}) φ_{A,B} ψ_{A,B}` on `Φ(A ⊗ B)`,
/// and the three-strand form
/// `(1 ⊗ φ_{A,C})(c ⊗ 1)(1 ⊗ ψ_{B,C}) = ψ_{B,A⊗C} Φ(c ⊗ 1) φ_{A,B⊗C}`.
pub fn bow_lemma_check(phi: &FrobEndofunctor, dims: &[(usize, usize)]) -> Verdict {
    let c = phi.c_dim();
    let mut v = Verdict::new();
    for &(a, b) in dims {
        let lhs = phi.phi(b, a).dot(&braid(a * c, b * c)).dot(&phi.psi(a, b));
        let rhs = phi.on_morphism(&braid(a, b)).dot(&phi.phi(a, b)).dot(&phi.psi(a, b));
        v.equal(&format!("bow/{a}x{b}"), "φ c ψ = Φ(c) φ ψ", &lhs, &rhs);
        let lhs = kron(&eye(b * c), &phi.phi(a, a))
            .dot(&kron(&braid(a * c, b * c), &eye(a * c)))
            .dot(&kron(&eye(a * c), &phi.psi(b, a)));
        let rhs = phi
            .psi(b, a * a)
            .dot(&phi.on_morphism(&kron(&braid(a, b), &eye(a))))
            .dot(&phi.phi(a, b * a));
        v.equal(&format!("bow-three-strand/{a}x{b}x{a}"), "(1 ⊗ φ)(c ⊗ 1)(1 ⊗ ψ) = ψ Φ(c ⊗ 1) φ", &lhs, &rhs);
    }
    v
}

/// `ΦB` with `μ' = Φμ φ`, `η' = Φη φ₀`, `Δ' = ψ ΦΔ`, `ε' = ψ₀ Φε`.
pub fn wba_transport(phi: &FrobEndofunctor, b: &WeakBialgebra) -> Result<WeakBialgebra, DualityError> {
    let d = b.dim();
    let mu = phi.on_morphism(b.mu()).dot(&phi.phi(d, d));
    let eta = phi.on_morphism(b.eta()).dot(phi.phi0());
    let delta = phi.psi(d, d).dot(&phi.on_morphism(b.delta()));
    let eps = phi.psi0().dot(&phi.on_morphism(b.eps()));
    Ok(WeakBialgebra::from_maps_unchecked(mu, eta, delta, eps)?)
}

/// Barbell of the transport is the product of the barbells.
pub fn transport_barbell_check(phi: &FrobEndofunctor, b: &WeakBialgebra) -> Result<Verdict, DualityError> {
    let tb = wba_transport(phi, b)?;
    let expected = barbell(b) * phi.psi0().dot(phi.phi0()).as_scalar().expect("scalar");
    let mut v = Verdict::new();
    v.equal("barbell-multiplies", "ε'η' = ε(η) ε_C(η_C)", &Mat::scalar(barbell(&tb)), &Mat::scalar(expected));
    Ok(v)
}

/// `ΦF`: the same category with images `Fx ⊗ C` and structure maps
/// conjugated by those of `Φ`.
pub fn compose_functor(phi: &FrobEndofunctor, f: &FunctorData) -> FunctorData {
    let c = phi.c_dim();
    let n = f.len();
    let mut out = f.clone();
    for o in &mut out.objects {
        o.dim *= c;
    }
    out.generators = f
        .generators
        .iter()
        .map(|g| GeneratorData { mat: phi.on_morphism(&g.mat), ..g.clone() })
        .collect();
    out.whiskers = f.whiskers.iter().map(|w| Whisker { mat: phi.on_morphism(&w.mat), ..w.clone() }).collect();
    for x in 0..n {
        for y in 0..n {
            out.phi[x][y] = phi.on_morphism(&f.phi[x][y]).dot(&phi.phi(f.dim(x), f.dim(y)));
            out.psi[x][y] = phi.psi(f.dim(x), f.dim(y)).dot(&phi.on_morphism(&f.psi[x][y]));
        }
    }
    out.phi0 = phi.on_morphism(&f.phi0).dot(phi.phi0());
    out.psi0 = phi.psi0().dot(&phi.on_morphism(&f.psi0));
    out.duals = f.duals.as_ref().map(|d| Duals {
        dual: d.dual.clone(),
        coev: d.coev.iter().map(|m| phi.on_morphism(m)).collect(),
        ev: d.ev.iter().map(|m| phi.on_morphism(m)).collect(),
    });
    out
}

/// `ρ: Φ tan F → tan ΦF` from the action `Φα ∘ φ`, checked to be a strict
/// morphism between the transport of `tan F` and `tan ΦF`.
pub fn rho(phi: &FrobEndofunctor, f: &FunctorData) -> Result<(Mat, Verdict), DualityError> {
    let t = tannaka(f)?;
    let pf = compose_functor(phi, f);
    let tp = tannaka(&pf)?;
    let m = rho_between(phi, f, &t, &tp)?;
    let src = wba_transport(phi, &t.weak_bialgebra()?)?;
    Ok((m.clone(), check_strict_morphism(&m, &src, &tp.weak_bialgebra()?)))
}

fn rho_between(phi: &FrobEndofunctor, f: &FunctorData, t: &TannakaResult, tp: &TannakaResult) -> Result<Mat, DualityError> {
    let c = phi.c_dim();
    let components = (0..f.len()).map(|x| phi.on_morphism(&t.actions[x]).dot(&phi.phi(t.dim, f.dim(x)))).collect();
    let fam = DischargedFamily { source_dim: t.dim * c, arity: 1, components };
    Ok(solve_discharged(&fam, tp)?)
}

/// `ρ_{ΨΦ} = ρ_Ψ(ΦF) ∘ Ψ(ρ_Φ F)`.
pub fn rho_lax_check(phi: &FrobEndofunctor, psi: &FrobEndofunctor, f: &FunctorData) -> Result<Verdict, DualityError> {
    let composite = phi.then(psi);
    let (r_phi, _) = rho(phi, f)?;
    let (r_psi, _) = rho(psi, &compose_functor(phi, f))?;
    let (r_both, _) = rho(&composite, f)?;
    let mut v = Verdict::new();
    v.equal("rho-lax", "ρ_{ΨΦ} = ρ_Ψ Ψ(ρ_Φ)", &r_both, &r_psi.dot(&psi.on_morphism(&r_phi)));
    Ok(v)
}

/// `γ(a, β, a′) = (Φa, Φβ ∘ φ, Φa′)` over the transport of `B`.
pub fn gamma(phi: &FrobEndofunctor, b: &WeakBialgebra, m: &ModuleQ) -> Result<ModuleQ, DualityError> {
    let tb = wba_transport(phi, b)?;
    let action = phi.on_morphism(m.action()).dot(&phi.phi(b.dim(), m.dim()));
    Ok(ModuleQ::new(&tb, action, phi.on_morphism(m.idem()))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_weak_bialgebra, group_algebra, groupoid_algebra};
    use crate::exactla::int;
    use crate::fincat::{deloop, discrete_group_functor};
    use crate::groups::{FiniteGroup, Groupoid};

    fn k(n: usize) -> FrobEndofunctor {
        FrobEndofunctor::new(FrobeniusAlgebra::diagonal(n)).unwrap()
    }

    #[test]
    fn unit_on_regular_probe_is_invertible() {
        for h in [groupoid_algebra(&Groupoid::pair(2)), group_algebra(&FiniteGroup::cyclic(2))] {
            let b = &h.wba;
            let u = adjunction_unit(b, &[ModuleQ::regular(b)]).unwrap();
            assert!(u.map.inverse().is_some());
            assert!(check_adjunction_unit(b, &u).unwrap().all_pass());
        }
    }

    #[test]
    fn unit_on_zero_probe() {
        let b = group_algebra(&FiniteGroup::cyclic(2)).wba;
        let u = adjunction_unit(&b, &[ModuleQ::zero(&b)]).unwrap();
        assert_eq!(u.map.shape(), (0, 2));
        assert!(triangle_one(&b, &[ModuleQ::zero(&b)]).unwrap().all_pass());
    }

    #[test]
    fn counit_splits_t() {
        for f in [deloop(&FrobeniusAlgebra::diagonal(2)).unwrap(), discrete_group_functor(&FiniteGroup::cyclic(2))] {
            let t = tannaka(&f).unwrap();
            let e = adjunction_counit(&f, &t).unwrap();
            let v = check_adjunction_counit(&f, &t, &e).unwrap();
            assert!(v.all_pass(), "{v}");
        }
    }

    #[test]
    fn triangles_on_flagships() {
        for f in [
            deloop(&FrobeniusAlgebra::diagonal(2)).unwrap(),
            deloop(&FrobeniusAlgebra::trivial()).unwrap(),
            discrete_group_functor(&FiniteGroup::cyclic(2)),
        ] {
            let (m, v) = triangle_two(&f).unwrap();
            assert!(v.all_pass(), "{v}");
            assert!(m.is_identity());
        }
        let b = groupoid_algebra(&Groupoid::pair(2)).wba;
        assert!(triangle_one(&b, &[ModuleQ::regular(&b)]).unwrap().all_pass());
    }

    #[test]
    fn chikhladze_on_delooping() {
        for n in [1, 2, 3] {
            let f = deloop(&FrobeniusAlgebra::diagonal(n)).unwrap();
            let t = tannaka(&f).unwrap();
            assert!(chikhladze_check(&f, &t).unwrap().all_pass());
        }
    }

    #[test]
    fn endofunctor_axioms_and_bow() {
        for n in [1, 2, 3] {
            let p = k(n);
            assert!(p.check(&[1, 2]).all_pass());
            let v = bow_lemma_check(&p, &[(1, 1), (2, 3)]);
            assert!(v.all_pass(), "{v}");
        }
        assert!(FrobEndofunctor::new(FrobeniusAlgebra::matrix(2)).is_err());
    }

    #[test]
    fn transport_of_group_algebra() {
        let b = group_algebra(&FiniteGroup::cyclic(2)).wba;
        let tb = wba_transport(&k(2), &b).unwrap();
        assert_eq!(tb.dim(), 4);
        assert_eq!(barbell(&tb), int(2));
        assert!(check_weak_bialgebra(&tb).all_pass());
        assert_eq!(wba_transport(&FrobEndofunctor::identity(), &b).unwrap(), b);
    }

    #[test]
    fn rho_is_strict() {
        let (m, v) = rho(&k(2), &discrete_group_functor(&FiniteGroup::cyclic(2))).unwrap();
        assert_eq!(m.shape(), (8, 4));
        assert!(v.all_pass(), "{v}");
        let (m, _) = rho(&FrobEndofunctor::identity(), &deloop(&FrobeniusAlgebra::diagonal(2)).unwrap()).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn gamma_of_regular() {
        let b = group_algebra(&FiniteGroup::cyclic(2)).wba;
        let g = gamma(&k(2), &b, &ModuleQ::regular(&b)).unwrap();
        assert_eq!(g.dim(), 4);
        assert_eq!(gamma(&k(2), &b, &ModuleQ::zero(&b)).unwrap().dim(), 0);
    }

    #[test]
    fn rho_lax_on_k2_then_k3() {
        let f = discrete_group_functor(&FiniteGroup::cyclic(2));
        let v = rho_lax_check(&k(2), &k(3), &f).unwrap();
        assert!(v.all_pass(), "{v}");
    }

    #[test]
    fn transport_of_pair_groupoid() {
        let b = groupoid_algebra(&Groupoid::pair(2)).wba;
        let tb = wba_transport(&k(2), &b).unwrap();
        assert_eq!(tb.dim(), 8);
        assert!(check_weak_bialgebra(&tb).all_pass());
        assert!(transport_barbell_check(&k(3), &b).unwrap().all_pass());
    }

    #[test]
    fn triangle_one_for_cyclic_three() {
        let b = group_algebra(&FiniteGroup::cyclic(3)).wba;
        let trivial = ModuleQ::from_action(&b, Mat::from_i64(&[&[1, 1, 1]])).unwrap();
        // g acts by rotation through 2π/3 on Q²
        let rot = [eye(2), Mat::from_i64(&[&[0, -1], &[1, -1]]), Mat::from_i64(&[&[-1, 1], &[-1, 0]])];
        let rotation = ModuleQ::from_action(&b, rot[0].hstack(&rot[1]).unwrap().hstack(&rot[2]).unwrap()).unwrap();
        let v = triangle_one(&b, &[trivial, rotation, ModuleQ::regular(&b)]).unwrap();
        assert!(v.all_pass(), "{v}");
    }
}
