//! JSON fixtures. Matrices are arrays of rows of scalar strings `"p/q"`.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraData, CoalgebraData, FrobeniusAlgebra, WeakBialgebra, WeakHopf};
use crate::diagram::{GenEnv, ObjWord};
use crate::exactla::{format_scalar, parse_scalar, Mat};
use crate::fincat::{Duals, FunctorData, GeneratorData, ObjectData, Side, Whisker};
use crate::groups::{FiniteGroup, Groupoid};
use crate::rep::ModuleQ;

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot read {0}: {1}")]
    Io(String, std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid fixture: {0}")]
    Invalid(String),
    #[error("expected a {expected} fixture, found {found}")]
    WrongKind { expected: &'static str, found: &'static str },
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, FixtureError> {
    Err(FixtureError::Invalid(msg.into()))
}

pub type MatJson = Vec<Vec<String>>;

pub fn mat_to_json(m: &Mat) -> MatJson {
    m.to_rows().iter().map(|r| r.iter().map(format_scalar).collect()).collect()
}

/// `cols` is used when `rows` is empty and checked otherwise.
pub fn mat_from_json(rows: &MatJson, cols: Option<usize>) -> Result<Mat, FixtureError> {
    let width = rows.first().map(|r| r.len()).or(cols).unwrap_or(0);
    if let Some(c) = cols {
        if c != width {
            return invalid(format!("matrix has {width} columns, expected {c}"));
        }
    }
    let mut parsed = Vec::with_capacity(rows.len());
    for (i, r) in rows.iter().enumerate() {
        if r.len() != width {
            return invalid(format!("row {i} has {} entries, expected {width}", r.len()));
        }
        let row = r.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<_>, _>>();
        parsed.push(row.map_err(|e| FixtureError::Invalid(e.to_string()))?);
    }
    Ok(Mat::from_rows_with_cols(parsed, width))
}

fn sized(rows: &MatJson, r: usize, c: usize, what: &str) -> Result<Mat, FixtureError> {
    let m = mat_from_json(rows, Some(c)).map_err(|e| FixtureError::Invalid(format!("{what}: {e}")))?;
    if m.rows() != r {
        return invalid(format!("{what}: {} rows, expected {r}", m.rows()));
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WbaJson {
    #[serde(default)]
    pub name: String,
    pub dim: usize,
    pub mu: MatJson,
    pub eta: MatJson,
    pub delta: MatJson,
    pub eps: MatJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<MatJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrobJson {
    #[serde(default)]
    pub name: String,
    pub dim: usize,
    pub mu: MatJson,
    pub eta: MatJson,
    pub delta: MatJson,
    pub eps: MatJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObjectJson {
    pub id: String,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub name: String,
    pub src: String,
    pub tgt: String,
    pub mat: MatJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualsJson {
    pub dual: Vec<String>,
    pub coev: Vec<MatJson>,
    pub ev: Vec<MatJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WhiskerJson {
    pub generator: String,
    pub object: String,
    pub side: String,
    pub mat: MatJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctorJson {
    #[serde(default)]
    pub name: String,
    pub objects: Vec<ObjectJson>,
    pub unit: String,
    pub tensor_table: Vec<Vec<String>>,
    #[serde(default)]
    pub generators: Vec<GeneratorJson>,
    pub phi: Vec<Vec<MatJson>>,
    pub phi0: MatJson,
    pub psi: Vec<Vec<MatJson>>,
    pub psi0: MatJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duals: Option<DualsJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub whiskers: Vec<WhiskerJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleJson {
    #[serde(default)]
    pub name: String,
    /// Path of the weak bialgebra fixture, relative to this file.
    pub algebra: String,
    pub dim: usize,
    pub action: MatJson,
    pub idem: MatJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupJson {
    #[serde(default)]
    pub name: String,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupoidJson {
    #[serde(default)]
    pub name: String,
    pub objects: usize,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub compose: Vec<Vec<Option<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnvGeneratorJson {
    pub name: String,
    pub dom: Vec<String>,
    pub cod: Vec<String>,
    pub mat: MatJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnvJson {
    #[serde(default)]
    pub name: String,
    pub objects: Vec<ObjectJson>,
    pub generators: Vec<EnvGeneratorJson>,
}

/// A linear map between the algebras named by two other fixtures, given as
/// paths relative to this file. A functor fixture stands for its `tan`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MorphismJson {
    #[serde(default)]
    pub name: String,
    pub source: String,
    pub target: String,
    pub mat: MatJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Fixture {
    Wba(WbaJson),
    Wha(WbaJson),
    Functor(FunctorJson),
    Module(ModuleJson),
    Frobalg(FrobJson),
    Groupoid(GroupoidJson),
    Group(GroupJson),
    Env(EnvJson),
    Morphism(MorphismJson),
}

impl Fixture {
    pub fn kind(&self) -> &'static str {
        match self {
            Fixture::Wba(_) => "wba",
            Fixture::Wha(_) => "wha",
            Fixture::Functor(_) => "functor",
            Fixture::Module(_) => "module",
            Fixture::Frobalg(_) => "frobalg",
            Fixture::Groupoid(_) => "groupoid",
            Fixture::Group(_) => "group",
            Fixture::Env(_) => "env",
            Fixture::Morphism(_) => "morphism",
        }
    }

    pub fn parse(text: &str) -> Result<Self, FixtureError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, FixtureError> {
        let text = std::fs::read_to_string(path).map_err(|e| FixtureError::Io(path.display().to_string(), e))?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixtures serialize")
    }

    pub fn save(&self, path: &Path) -> Result<(), FixtureError> {
        std::fs::write(path, self.to_json() + "\n").map_err(|e| FixtureError::Io(path.display().to_string(), e))
    }

    fn wrong(&self, expected: &'static str) -> FixtureError {
        FixtureError::WrongKind { expected, found: self.kind() }
    }

    /// Shape-checked maps; the axioms are left to the checkers.
    pub fn weak_bialgebra(&self) -> Result<WeakBialgebra, FixtureError> {
        match self {
            Fixture::Wba(w) | Fixture::Wha(w) => w.maps(),
            _ => Err(self.wrong("wba")),
        }
    }

    pub fn weak_hopf(&self) -> Result<WeakHopf, FixtureError> {
        match self {
            Fixture::Wha(w) | Fixture::Wba(w) => {
                let b = w.maps()?;
                let Some(s) = &w.antipode else { return invalid("no antipode") };
                let s = sized(s, w.dim, w.dim, "antipode")?;
                WeakHopf::new(b, s).map_err(|e| FixtureError::Invalid(e.to_string()))
            }
            _ => Err(self.wrong("wha")),
        }
    }

    pub fn frobenius(&self) -> Result<FrobeniusAlgebra, FixtureError> {
        match self {
            Fixture::Frobalg(f) => {
                let d = f.dim;
                let alg = AlgebraData::new(sized(&f.mu, d, d * d, "mu")?, sized(&f.eta, d, 1, "eta")?);
                let coalg = CoalgebraData::new(sized(&f.delta, d * d, d, "delta")?, sized(&f.eps, 1, d, "eps")?);
                let err = |e: crate::algebra::AlgebraError| FixtureError::Invalid(e.to_string());
                FrobeniusAlgebra::new(alg.map_err(err)?, coalg.map_err(err)?).map_err(err)
            }
            _ => Err(self.wrong("frobalg")),
        }
    }

    pub fn functor(&self) -> Result<FunctorData, FixtureError> {
        match self {
            Fixture::Functor(f) => f.data(),
            _ => Err(self.wrong("functor")),
        }
    }

    pub fn group(&self) -> Result<FiniteGroup, FixtureError> {
        match self {
            Fixture::Group(g) => FiniteGroup::new(g.table.clone()).map_err(|e| FixtureError::Invalid(e.to_string())),
            _ => Err(self.wrong("group")),
        }
    }

    pub fn groupoid(&self) -> Result<Groupoid, FixtureError> {
        match self {
            Fixture::Groupoid(g) => Groupoid::new(g.objects, g.src.clone(), g.tgt.clone(), g.compose.clone())
                .map_err(|e| FixtureError::Invalid(e.to_string())),
            _ => Err(self.wrong("groupoid")),
        }
    }

    /// A generator environment: an `env` fixture as given, or the structure
    /// maps of an algebra fixture on a single object `H`.
    pub fn env(&self) -> Result<GenEnv, FixtureError> {
        match self {
            Fixture::Env(e) => e.env(),
            Fixture::Wba(_) | Fixture::Wha(_) => Ok(self.weak_bialgebra()?.env()),
            Fixture::Frobalg(_) => Ok(self.frobenius()?.env()),
            _ => Err(self.wrong("env")),
        }
    }

    pub fn from_wba(name: &str, b: &WeakBialgebra) -> Self {
        Fixture::Wba(WbaJson::of(name, b, None))
    }

    pub fn from_wha(name: &str, h: &WeakHopf) -> Self {
        Fixture::Wha(WbaJson::of(name, &h.wba, Some(&h.antipode)))
    }

    pub fn from_frobenius(name: &str, c: &FrobeniusAlgebra) -> Self {
        Fixture::Frobalg(FrobJson {
            name: name.into(),
            dim: c.dim(),
            mu: mat_to_json(c.alg.mu()),
            eta: mat_to_json(c.alg.eta()),
            delta: mat_to_json(c.coalg.delta()),
            eps: mat_to_json(c.coalg.eps()),
        })
    }

    pub fn from_module(name: &str, algebra: &str, m: &ModuleQ) -> Self {
        Fixture::Module(ModuleJson {
            name: name.into(),
            algebra: algebra.into(),
            dim: m.dim(),
            action: mat_to_json(m.action()),
            idem: mat_to_json(m.idem()),
        })
    }

    pub fn from_functor(name: &str, f: &FunctorData) -> Self {
        let id = |x: usize| f.objects[x].id.clone();
        let grid = |g: &Vec<Vec<Mat>>| g.iter().map(|r| r.iter().map(mat_to_json).collect()).collect();
        Fixture::Functor(FunctorJson {
            name: name.into(),
            objects: f.objects.iter().map(|o| ObjectJson { id: o.id.clone(), dim: o.dim }).collect(),
            unit: id(f.unit),
            tensor_table: f.tensor.iter().map(|r| r.iter().map(|&x| id(x)).collect()).collect(),
            generators: f
                .generators
                .iter()
                .map(|g| GeneratorJson { name: g.name.clone(), src: id(g.src), tgt: id(g.tgt), mat: mat_to_json(&g.mat) })
                .collect(),
            phi: grid(&f.phi),
            phi0: mat_to_json(&f.phi0),
            psi: grid(&f.psi),
            psi0: mat_to_json(&f.psi0),
            duals: f.duals.as_ref().map(|d| DualsJson {
                dual: d.dual.iter().map(|&x| id(x)).collect(),
                coev: d.coev.iter().map(mat_to_json).collect(),
                ev: d.ev.iter().map(mat_to_json).collect(),
            }),
            whiskers: f
                .whiskers
                .iter()
                .map(|w| WhiskerJson {
                    generator: f.generators[w.generator].name.clone(),
                    object: id(w.object),
                    side: match w.side {
                        Side::Left => "left".into(),
                        Side::Right => "right".into(),
                    },
                    mat: mat_to_json(&w.mat),
                })
                .collect(),
        })
    }
}

impl WbaJson {
    fn of(name: &str, b: &WeakBialgebra, antipode: Option<&Mat>) -> Self {
        WbaJson {
            name: name.into(),
            dim: b.dim(),
            mu: mat_to_json(b.mu()),
            eta: mat_to_json(b.eta()),
            delta: mat_to_json(b.delta()),
            eps: mat_to_json(b.eps()),
            antipode: antipode.map(mat_to_json),
        }
    }

    fn maps(&self) -> Result<WeakBialgebra, FixtureError> {
        let d = self.dim;
        WeakBialgebra::from_maps_unchecked(
            sized(&self.mu, d, d * d, "mu")?,
            sized(&self.eta, d, 1, "eta")?,
            sized(&self.delta, d * d, d, "delta")?,
            sized(&self.eps, 1, d, "eps")?,
        )
        .map_err(|e| FixtureError::Invalid(e.to_string()))
    }
}

impl FunctorJson {
    pub fn data(&self) -> Result<FunctorData, FixtureError> {
        let n = self.objects.len();
        let index: HashMap<&str, usize> = self.objects.iter().enumerate().map(|(i, o)| (o.id.as_str(), i)).collect();
        if index.len() != n {
            return invalid("duplicate object ids");
        }
        let look = |id: &str| index.get(id).copied().ok_or_else(|| FixtureError::Invalid(format!("unknown object {id:?}")));
        let dims: Vec<usize> = self.objects.iter().map(|o| o.dim).collect();
        let unit = look(&self.unit)?;
        if self.tensor_table.len() != n || self.tensor_table.iter().any(|r| r.len() != n) {
            return invalid("tensor_table is not n × n");
        }
        let tensor = self
            .tensor_table
            .iter()
            .map(|r| r.iter().map(|id| look(id)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let mut generators = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let (src, tgt) = (look(&g.src)?, look(&g.tgt)?);
            let mat = sized(&g.mat, dims[tgt], dims[src], &format!("generator {}", g.name))?;
            generators.push(GeneratorData { name: g.name.clone(), src, tgt, mat });
        }
        let grid = |g: &Vec<Vec<MatJson>>, what: &str, binary_first: bool| -> Result<Vec<Vec<Mat>>, FixtureError> {
            if g.len() != n || g.iter().any(|r| r.len() != n) {
                return invalid(format!("{what} is not n × n"));
            }
            (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| {
                            let (pair, xy) = (dims[x] * dims[y], dims[tensor[x][y]]);
                            let (r, c) = if binary_first { (xy, pair) } else { (pair, xy) };
                            sized(&g[x][y], r, c, &format!("{what}[{x}][{y}]"))
                        })
                        .collect()
                })
                .collect()
        };
        let phi = grid(&self.phi, "phi", true)?;
        let psi = grid(&self.psi, "psi", false)?;
        let du = dims[unit];
        let phi0 = sized(&self.phi0, du, 1, "phi0")?;
        let psi0 = sized(&self.psi0, 1, du, "psi0")?;
        let duals = match &self.duals {
            None => None,
            Some(d) => {
                if d.dual.len() != n || d.coev.len() != n || d.ev.len() != n {
                    return invalid("duals must list every object");
                }
                let dual = d.dual.iter().map(|id| look(id)).collect::<Result<Vec<_>, _>>()?;
                let mut coev = Vec::with_capacity(n);
                let mut ev = Vec::with_capacity(n);
                for x in 0..n {
                    coev.push(sized(&d.coev[x], dims[tensor[x][dual[x]]], du, &format!("coev[{x}]"))?);
                    ev.push(sized(&d.ev[x], du, dims[tensor[dual[x]][x]], &format!("ev[{x}]"))?);
                }
                Some(Duals { dual, coev, ev })
            }
        };
        let mut whiskers = Vec::with_capacity(self.whiskers.len());
        for w in &self.whiskers {
            let generator = self
                .generators
                .iter()
                .position(|g| g.name == w.generator)
                .ok_or_else(|| FixtureError::Invalid(format!("unknown generator {:?}", w.generator)))?;
            let object = look(&w.object)?;
            let side = match w.side.as_str() {
                "left" => Side::Left,
                "right" => Side::Right,
                other => return invalid(format!("side must be left or right, not {other:?}")),
            };
            let g = &generators[generator];
            let (s, t) = match side {
                Side::Left => (tensor[g.src][object], tensor[g.tgt][object]),
                Side::Right => (tensor[object][g.src], tensor[object][g.tgt]),
            };
            let mat = sized(&w.mat, dims[t], dims[s], "whisker")?;
            whiskers.push(Whisker { generator, object, side, mat });
        }
        let f = FunctorData {
            objects: self.objects.iter().map(|o| ObjectData { id: o.id.clone(), dim: o.dim }).collect(),
            unit,
            tensor,
            generators,
            phi,
            phi0,
            psi,
            psi0,
            duals,
            whiskers,
        };
        f.check_shapes().map_err(|e| FixtureError::Invalid(e.to_string()))?;
        Ok(f)
    }
}

impl ModuleJson {
    /// Resolves the algebra relative to `base` and validates the module.
    pub fn load(&self, base: &Path) -> Result<(WeakBialgebra, ModuleQ), FixtureError> {
        let b = Fixture::load(&base.join(&self.algebra))?.weak_bialgebra()?;
        let a = self.dim;
        let action = sized(&self.action, a, b.dim() * a, "action")?;
        let idem = sized(&self.idem, a, a, "idem")?;
        let m = ModuleQ::new(&b, action, idem).map_err(|e| FixtureError::Invalid(e.to_string()))?;
        Ok((b, m))
    }
}

impl MorphismJson {
    /// Resolves both ends relative to `base`; returns `(source, target, map)`.
    pub fn load(&self, base: &Path) -> Result<(WeakHopf, WeakHopf, Mat), FixtureError> {
        let end = |p: &str| -> Result<WeakHopf, FixtureError> {
            let fx = Fixture::load(&base.join(p))?;
            match &fx {
                Fixture::Functor(_) => {
                    let t = crate::tannaka::tannaka(&fx.functor()?).map_err(|e| FixtureError::Invalid(e.to_string()))?;
                    t.weak_hopf().map_err(|e| FixtureError::Invalid(e.to_string()))
                }
                _ => fx.weak_hopf(),
            }
        };
        let (h, j) = (end(&self.source)?, end(&self.target)?);
        let mat = sized(&self.mat, j.wba.dim(), h.wba.dim(), "mat")?;
        Ok((h, j, mat))
    }
}

impl EnvJson {
    pub fn env(&self) -> Result<GenEnv, FixtureError> {
        let mut env = GenEnv::new();
        for o in &self.objects {
            env = env.object(&o.id, o.dim);
        }
        for g in &self.generators {
            let word = |w: &Vec<String>| ObjWord(w.clone());
            let (dom, cod) = (word(&g.dom), word(&g.cod));
            let err = |e: crate::diagram::DiagramError| FixtureError::Invalid(format!("generator {}: {e}", g.name));
            let (r, c) = (env.word_dim(&cod).map_err(err)?, env.word_dim(&dom).map_err(err)?);
            let mat = sized(&g.mat, r, c, &g.name)?;
            env.bind(&g.name, dom, cod, mat).map_err(err)?;
        }
        Ok(env)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::groupoid_algebra;
    use crate::fincat::deloop;

    #[test]
    fn round_trips() {
        let h = groupoid_algebra(&Groupoid::pair(2));
        let fx = Fixture::from_wha("pair2", &h);
        let back = Fixture::parse(&fx.to_json()).unwrap();
        assert_eq!(back.weak_hopf().unwrap(), h);
        let f = deloop(&FrobeniusAlgebra::diagonal(2)).unwrap();
        let fx = Fixture::from_functor("deloop-k2", &f);
        assert_eq!(Fixture::parse(&fx.to_json()).unwrap().functor().unwrap(), f);
        let c = FrobeniusAlgebra::matrix(2);
        assert_eq!(Fixture::parse(&Fixture::from_frobenius("m2", &c).to_json()).unwrap().frobenius().unwrap(), c);
    }

    #[test]
    fn scalars_normalize() {
        let m = mat_from_json(&vec![vec!["2/4".into(), "-3".into()]], None).unwrap();
        assert_eq!(mat_to_json(&m), vec![vec!["1/2".to_string(), "-3".into()]]);
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(Fixture::parse("{\"kind\": \"wba\", \"dim\": 1"), Err(FixtureError::Json(_))));
        let text = r#"{"kind":"wba","dim":1,"mu":[["1"]],"eta":[["1"]],"delta":[["1"]],"eps":[["1","0"]]}"#;
        assert!(matches!(Fixture::parse(text).unwrap().weak_bialgebra(), Err(FixtureError::Invalid(_))));
        let text = r#"{"kind":"group","table":[[0]]}"#;
        assert!(matches!(Fixture::parse(text).unwrap().weak_bialgebra(), Err(FixtureError::WrongKind { .. })));
    }
}
