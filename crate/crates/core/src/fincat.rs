//! Finite strict monoidal categories presented through their image under a
//! functor into vector spaces, with monoidal, comonoidal and duality data.

use thiserror::Error;

use crate::algebra::{check_frobenius, AlgebraData, CoalgebraData, FrobeniusAlgebra};
use crate::exactla::{eye, frac, kron, Mat, Scalar};
use crate::groups::FiniteGroup;
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FincatError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("not a separable Frobenius algebra: {0}")]
    NotSeparableFrobenius(String),
}

fn shape<T>(msg: impl Into<String>) -> Result<T, FincatError> {
    Err(FincatError::Shape(msg.into()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectData {
    pub id: String,
    pub dim: usize,
}

/// The image `Fg: F(src) → F(tgt)` of a generating morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorData {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
    pub mat: Mat,
}

/// Left duals: `τ_x: ⊤ → x ⊗ *x` and `γ_x: *x ⊗ x → ⊤`, stored as their images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Duals {
    pub dual: Vec<usize>,
    /// `d_{x⊗*x} × d_ι`
    pub coev: Vec<Mat>,
    /// `d_ι × d_{*x⊗x}`
    pub ev: Vec<Mat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `F(g ⊗ z)`
    Left,
    /// `F(z ⊗ g)`
    Right,
}

/// The image of a generator tensored with an identity, used for the
/// naturality checks of the binary structure maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Whisker {
    pub generator: usize,
    pub object: usize,
    pub side: Side,
    pub mat: Mat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorData {
    pub objects: Vec<ObjectData>,
    pub unit: usize,
    /// `tensor[x][y] = x ⊗ y`
    pub tensor: Vec<Vec<usize>>,
    pub generators: Vec<GeneratorData>,
    /// `phi[x][y]: Fx ⊗ Fy → F(x⊗y)`
    pub phi: Vec<Vec<Mat>>,
    pub phi0: Mat,
    /// `psi[x][y]: F(x⊗y) → Fx ⊗ Fy`
    pub psi: Vec<Vec<Mat>>,
    pub psi0: Mat,
    pub duals: Option<Duals>,
    pub whiskers: Vec<Whisker>,
}

/// Objects with dimensions, generator images and an idempotent per object.
/// This is all the end computation needs; a monoidal structure is optional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryImage {
    pub dims: Vec<usize>,
    pub generators: Vec<GeneratorData>,
    /// Identity for honest functors, `a′` for idempotent-split modules.
    pub idems: Vec<Mat>,
}

impl CategoryImage {
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }
}

impl FunctorData {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn dim(&self, x: usize) -> usize {
        self.objects[x].dim
    }

    pub fn t(&self, x: usize, y: usize) -> usize {
        self.tensor[x][y]
    }

    pub fn object_index(&self, id: &str) -> Option<usize> {
        self.objects.iter().position(|o| o.id == id)
    }

    pub fn image(&self) -> CategoryImage {
        CategoryImage {
            dims: self.objects.iter().map(|o| o.dim).collect(),
            generators: self.generators.clone(),
            idems: self.objects.iter().map(|o| eye(o.dim)).collect(),
        }
    }

    /// `F⊤` with `μ = φ_{ι,ι}`, `η = φ₀`, `Δ = ψ_{ι,ι}`, `ε = ψ₀`.
    pub fn unit_frobenius(&self) -> Result<FrobeniusAlgebra, FincatError> {
        let u = self.unit;
        let alg = AlgebraData::new(self.phi[u][u].clone(), self.phi0.clone())
            .map_err(|e| FincatError::NotSeparableFrobenius(e.to_string()))?;
        let coalg = CoalgebraData::new(self.psi[u][u].clone(), self.psi0.clone())
            .map_err(|e| FincatError::NotSeparableFrobenius(e.to_string()))?;
        FrobeniusAlgebra::new(alg, coalg).map_err(|e| FincatError::NotSeparableFrobenius(e.to_string()))
    }

    /// Induced coevaluation `ψ_{x,*x} τ̂_x φ₀: ⊤ → Fx ⊗ F*x`.
    pub fn induced_coev(&self, x: usize) -> Option<Mat> {
        let d = self.duals.as_ref()?;
        Some(self.psi[x][d.dual[x]].dot(&d.coev[x]).dot(&self.phi0))
    }

    /// Induced evaluation `ψ₀ γ̂_x φ_{*x,x}: F*x ⊗ Fx → ⊤`.
    pub fn induced_ev(&self, x: usize) -> Option<Mat> {
        let d = self.duals.as_ref()?;
        Some(self.psi0.dot(&d.ev[x]).dot(&self.phi[d.dual[x]][x]))
    }

    /// Checks every stored matrix against the object dimensions.
    pub fn check_shapes(&self) -> Result<(), FincatError> {
        let n = self.len();
        if n == 0 {
            return shape("no objects");
        }
        if self.unit >= n {
            return shape("unit out of range");
        }
        if self.tensor.len() != n || self.tensor.iter().any(|r| r.len() != n || r.iter().any(|&z| z >= n)) {
            return shape("tensor table is not total over the objects");
        }
        let d = |x: usize| self.dim(x);
        for g in &self.generators {
            if g.src >= n || g.tgt >= n || g.mat.shape() != (d(g.tgt), d(g.src)) {
                return shape(format!("generator {} has the wrong boundary", g.name));
            }
        }
        if self.phi.len() != n || self.psi.len() != n {
            return shape("phi/psi tables must cover all pairs");
        }
        for x in 0..n {
            if self.phi[x].len() != n || self.psi[x].len() != n {
                return shape("phi/psi tables must cover all pairs");
            }
            for y in 0..n {
                let xy = d(self.t(x, y));
                if self.phi[x][y].shape() != (xy, d(x) * d(y)) {
                    return shape(format!("phi[{x}][{y}] has shape {:?}", self.phi[x][y].shape()));
                }
                if self.psi[x][y].shape() != (d(x) * d(y), xy) {
                    return shape(format!("psi[{x}][{y}] has shape {:?}", self.psi[x][y].shape()));
                }
            }
        }
        if self.phi0.shape() != (d(self.unit), 1) || self.psi0.shape() != (1, d(self.unit)) {
            return shape("phi0/psi0 shapes");
        }
        if let Some(du) = &self.duals {
            if du.dual.len() != n || du.coev.len() != n || du.ev.len() != n {
                return shape("duals must cover all objects");
            }
            for x in 0..n {
                let s = du.dual[x];
                if s >= n
                    || du.coev[x].shape() != (d(self.t(x, s)), d(self.unit))
                    || du.ev[x].shape() != (d(self.unit), d(self.t(s, x)))
                {
                    return shape(format!("dual data for object {x}"));
                }
            }
        }
        for w in &self.whiskers {
            let Some(g) = self.generators.get(w.generator) else {
                return shape("whisker names an unknown generator");
            };
            if w.object >= n {
                return shape("whisker names an unknown object");
            }
            let (s, t) = match w.side {
                Side::Left => (self.t(g.src, w.object), self.t(g.tgt, w.object)),
                Side::Right => (self.t(w.object, g.src), self.t(w.object, g.tgt)),
            };
            if w.mat.shape() != (d(t), d(s)) {
                return shape("whisker shape");
            }
        }
        Ok(())
    }
}

type Record = (&'static str, &'static str, Option<String>);

/// Keeps the first mismatch per check id.
fn record(checks: &mut Vec<Record>, id: &'static str, anchor: &'static str, at: String, l: &Mat, r: &Mat) {
    let cx = crate::verdict::mismatch(l, r).map(|m| format!("{at}: {m}"));
    match checks.iter_mut().find(|c| c.0 == id) {
        Some(c) => {
            if c.2.is_none() {
                c.2 = cx;
            }
        }
        None => checks.push((id, anchor, cx)),
    }
}

/// Itemized structural verdicts. Shape problems are errors.
pub fn validate_functor_data(f: &FunctorData) -> Result<Verdict, FincatError> {
    f.check_shapes()?;
    let n = f.len();
    let u = f.unit;
    let id = |x: usize| eye(f.dim(x));
    let mut v = Verdict::new();

    let mut strict = None;
    for x in 0..n {
        if f.t(u, x) != x || f.t(x, u) != x {
            strict.get_or_insert(format!("unit law fails at object {x}"));
        }
        for y in 0..n {
            for z in 0..n {
                if f.t(f.t(x, y), z) != f.t(x, f.t(y, z)) {
                    strict.get_or_insert(format!("associativity fails at ({x}, {y}, {z})"));
                }
            }
        }
    }
    v.holds("tensor-strict", "tensor table is strictly associative and unital", strict.is_none(), strict);

    let mut checks: Vec<Record> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let xy = f.t(x, y);
            for z in 0..n {
                let yz = f.t(y, z);
                let at = format!("({x}, {y}, {z})");
                record(
                    &mut checks,
                    "monoidal-associativity",
                    "φ(φ ⊗ 1) = φ(1 ⊗ φ)",
                    at.clone(),
                    &f.phi[xy][z].dot(&kron(&f.phi[x][y], &id(z))),
                    &f.phi[x][yz].dot(&kron(&id(x), &f.phi[y][z])),
                );
                record(
                    &mut checks,
                    "comonoidal-coassociativity",
                    "(ψ ⊗ 1)ψ = (1 ⊗ ψ)ψ",
                    at.clone(),
                    &kron(&f.psi[x][y], &id(z)).dot(&f.psi[xy][z]),
                    &kron(&id(x), &f.psi[y][z]).dot(&f.psi[x][yz]),
                );
                record(
                    &mut checks,
                    "frobenius-left",
                    "(1 ⊗ φ)(ψ ⊗ 1) = ψ φ",
                    at.clone(),
                    &kron(&id(x), &f.phi[y][z]).dot(&kron(&f.psi[x][y], &id(z))),
                    &f.psi[x][yz].dot(&f.phi[xy][z]),
                );
                record(
                    &mut checks,
                    "frobenius-right",
                    "(φ ⊗ 1)(1 ⊗ ψ) = ψ φ",
                    at,
                    &kron(&f.phi[x][y], &id(z)).dot(&kron(&id(x), &f.psi[y][z])),
                    &f.psi[xy][z].dot(&f.phi[x][yz]),
                );
            }
            let at = format!("({x}, {y})");
            record(&mut checks, "separable", "φ ψ = 1", at.clone(), &f.phi[x][y].dot(&f.psi[x][y]), &id(xy));
            record(&mut checks, "strong-psi-phi", "ψ φ = 1", at, &f.psi[x][y].dot(&f.phi[x][y]), &kron(&id(x), &id(y)));
        }
        let at = format!("object {x}");
        record(&mut checks, "monoidal-unit", "φ(φ₀ ⊗ 1) = 1 = φ(1 ⊗ φ₀)", at.clone(), &f.phi[u][x].dot(&kron(&f.phi0, &id(x))), &id(x));
        record(&mut checks, "monoidal-unit", "φ(φ₀ ⊗ 1) = 1 = φ(1 ⊗ φ₀)", at.clone(), &f.phi[x][u].dot(&kron(&id(x), &f.phi0)), &id(x));
        record(&mut checks, "comonoidal-counit", "(ψ₀ ⊗ 1)ψ = 1 = (1 ⊗ ψ₀)ψ", at.clone(), &kron(&f.psi0, &id(x)).dot(&f.psi[u][x]), &id(x));
        record(&mut checks, "comonoidal-counit", "(ψ₀ ⊗ 1)ψ = 1 = (1 ⊗ ψ₀)ψ", at, &kron(&id(x), &f.psi0).dot(&f.psi[x][u]), &id(x));
    }
    for w in &f.whiskers {
        let g = &f.generators[w.generator];
        let z = w.object;
        let at = format!("generator {} whiskered with object {z}", g.name);
        let (gz, s, t) = match w.side {
            Side::Left => (kron(&g.mat, &id(z)), (g.src, z), (g.tgt, z)),
            Side::Right => (kron(&id(z), &g.mat), (z, g.src), (z, g.tgt)),
        };
        record(&mut checks, "naturality", "φ and ψ natural in generators", at.clone(), &f.phi[t.0][t.1].dot(&gz), &w.mat.dot(&f.phi[s.0][s.1]));
        record(&mut checks, "naturality", "φ and ψ natural in generators", at, &f.psi[t.0][t.1].dot(&w.mat), &gz.dot(&f.psi[s.0][s.1]));
    }
    if f.whiskers.is_empty() {
        checks.push(("naturality", "φ and ψ natural in generators", None));
    }
    record(&mut checks, "strong-phi0-psi0", "φ₀ ψ₀ = 1", "unit".into(), &f.phi0.dot(&f.psi0), &id(u));
    record(&mut checks, "strong-psi0-phi0", "ψ₀ φ₀ = 1", "unit".into(), &f.psi0.dot(&f.phi0), &eye(1));

    if let Some(du) = &f.duals {
        for x in 0..n {
            let s = du.dual[x];
            let coev = f.induced_coev(x).expect("duals present");
            let ev = f.induced_ev(x).expect("duals present");
            let at = format!("object {x}");
            record(
                &mut checks,
                "duals-snake-1",
                "(1 ⊗ ev)(coev ⊗ 1) = 1",
                at.clone(),
                &kron(&id(x), &ev).dot(&kron(&coev, &id(x))),
                &id(x),
            );
            record(&mut checks, "duals-snake-2", "(ev ⊗ 1)(1 ⊗ coev) = 1", at, &kron(&ev, &id(s)).dot(&kron(&id(s), &coev)), &id(s));
        }
    }
    for (cid, anchor, cx) in checks {
        v.holds(cid, anchor, cx.is_none(), cx);
    }
    Ok(v)
}

/// Whether all four strongness probes passed.
pub fn is_strong(v: &Verdict) -> bool {
    ["separable", "strong-psi-phi", "strong-phi0-psi0", "strong-psi0-phi0"].iter().all(|id| v.passed(id))
}

/// The functor from the terminal monoidal category picking out `c`.
pub fn deloop(c: &FrobeniusAlgebra) -> Result<FunctorData, FincatError> {
    let v = check_frobenius(&c.alg, &c.coalg);
    if let Some(bad) = v.failures().next() {
        return Err(FincatError::NotSeparableFrobenius(format!(
            "{}: {}",
            bad.id,
            bad.counterexample.clone().unwrap_or_default()
        )));
    }
    let d = c.dim();
    Ok(FunctorData {
        objects: vec![ObjectData { id: "unit".into(), dim: d }],
        unit: 0,
        tensor: vec![vec![0]],
        generators: Vec::new(),
        phi: vec![vec![c.alg.mu().clone()]],
        phi0: c.alg.eta().clone(),
        psi: vec![vec![c.coalg.delta().clone()]],
        psi0: c.coalg.eps().clone(),
        duals: Some(Duals { dual: vec![0], coev: vec![eye(d)], ev: vec![eye(d)] }),
        whiskers: Vec::new(),
    })
}

/// Objects are group elements, tensor is multiplication, every image is `k`
/// and every structure map is the identity; `*g = g⁻¹`.
pub fn discrete_group_functor(g: &FiniteGroup) -> FunctorData {
    let n = g.order();
    let one = || eye(1);
    FunctorData {
        objects: (0..n).map(|a| ObjectData { id: format!("g{a}"), dim: 1 }).collect(),
        unit: g.identity(),
        tensor: g.table().to_vec(),
        generators: Vec::new(),
        phi: vec![vec![one(); n]; n],
        phi0: one(),
        psi: vec![vec![one(); n]; n],
        psi0: one(),
        duals: Some(Duals { dual: (0..n).map(|a| g.inv(a)).collect(), coev: vec![one(); n], ev: vec![one(); n] }),
        whiskers: Vec::new(),
    }
}

/// Multiplies every `ψ` by `k` and `ψ₀` by `1/k`; for `k ≠ 1` this breaks
/// separability and leaves the comonoidal axioms and the nullary composite
/// `φ₀ ψ₀` intact.
pub fn scale_psi(f: &FunctorData, k: &Scalar) -> FunctorData {
    let mut out = f.clone();
    for row in &mut out.psi {
        for m in row.iter_mut() {
            *m = m.scale(k);
        }
    }
    out.psi0 = out.psi0.scale(&(Scalar::from_integer(1.into()) / k));
    out
}

/// `scale_psi` by 2.
pub fn scale_psi_by_two(f: &FunctorData) -> FunctorData {
    scale_psi(f, &frac(2, 1))
}
