//! Command-line front end. `run` parses arguments, dispatches, prints a
//! report and returns the exit code: 0 pass, 1 a check failed, 2 bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{
    barbell, canonical_idempotents, check_bialgebra_strong, check_frobenius, check_weak_bialgebra, check_weak_hopf,
    groupoid_algebra, WeakBialgebra,
};
use crate::diagram::{equation_holds, parse_equation};
use crate::duality::{
    check_adjunction_counit, adjunction_counit, compose_functor, rho, transport_barbell_check, triangle_one,
    triangle_two, wba_transport, FrobEndofunctor,
};
use crate::exactla::format_scalar;
use crate::fincat::{is_strong, validate_functor_data, FunctorData};
use crate::fixture::Fixture;
use crate::rep::{check_unit_constraints, forgetful_frobenius_check, unit_object, ModuleQ};
use crate::tannaka::{tannaka, theorem1_verdict, theorem2_verdict, TannakaError};
use crate::verdict::{Check, Verdict};

#[derive(Debug, Parser)]
#[command(name = "tannaka", version, about = "Exact checks for weak bialgebras and the Tannaka construction")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory against which relative fixture paths are resolved.
    #[arg(long, global = true)]
    pub fixtures_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Wba,
    Wha,
    Functor,
    Frobenius,
    Module,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the axioms of a fixture.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        file: PathBuf,
    },
    /// Build `tan F` from a functor fixture.
    Tannaka {
        file: PathBuf,
        /// Where to write the constructed algebra.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also build and check the antipode (needs duals).
        #[arg(long)]
        antipode: bool,
        /// Also run the strong bialgebra axioms on the result.
        #[arg(long)]
        strong_checks: bool,
    },
    /// Check a module: its axioms, unit constraints and the forgetful functor.
    Mod { file: PathBuf },
    /// Check a triangle identity of the adjunction.
    Adjunction {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        triangle: u8,
    },
    /// Change of base along `- ⊗ C`.
    Transport {
        file: PathBuf,
        #[arg(long)]
        frobalg: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check `lhs = rhs` in the generators of a fixture.
    Equation { env: PathBuf, equation: String },
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub info: Vec<(String, String)>,
    /// Counted towards the exit code.
    pub checks: Vec<Check>,
    /// Reported only.
    pub probes: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    fn new(command: &str) -> Self {
        Report { command: command.into(), ..Default::default() }
    }

    fn info(&mut self, key: &str, value: impl ToString) {
        self.info.push((key.into(), value.to_string()));
    }

    fn add(&mut self, prefix: &str, v: Verdict) {
        let mut w = Verdict::new();
        w.extend_prefixed(prefix, v);
        self.checks.extend(w.checks);
    }

    fn finish(mut self) -> Self {
        self.passed = self.checks.iter().filter(|c| c.pass).count();
        self.failed = self.checks.len() - self.passed;
        self
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("{}\n", self.command);
        for (k, v) in &self.info {
            s += &format!("{k}: {v}\n");
        }
        let line = |c: &Check| {
            let mut l = format!("{} {} [{}]", if c.pass { "PASS" } else { "FAIL" }, c.id, c.anchor);
            if let Some(cx) = &c.counterexample {
                l += &format!(": {cx}");
            }
            l + "\n"
        };
        for c in &self.checks {
            s += &line(c);
        }
        for c in &self.probes {
            s += &format!("probe {}", line(c));
        }
        s + &format!("summary: {} passed, {} failed\n", self.passed, self.failed)
    }
}

/// Bad input: exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

/// `Variant: message`, so the error kind is greppable.
fn tagged<E: std::fmt::Debug + std::fmt::Display>(e: E) -> InputError {
    let debug = format!("{e:?}");
    let tag = debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string();
    InputError(format!("{tag}: {e}"))
}

type Outcome = Result<Report, InputError>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let text = match cli.format {
                Format::Text => report.render_text(),
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
            };
            let _ = out.write_all(text.as_bytes());
            if report.all_pass() {
                0
            } else {
                let _ = writeln!(err, "{} check(s) failed", report.failed);
                1
            }
        }
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let resolve = |p: &Path| match &cli.fixtures_dir {
        Some(dir) if p.is_relative() => dir.join(p),
        _ => p.to_path_buf(),
    };
    match &cli.command {
        Command::Check { kind, file } => cmd_check(*kind, &resolve(file)),
        Command::Tannaka { file, out, antipode, strong_checks } => {
            cmd_tannaka(&resolve(file), out.as_deref(), *antipode, *strong_checks)
        }
        Command::Mod { file } => cmd_mod(&resolve(file)),
        Command::Adjunction { file, triangle } => cmd_adjunction(&resolve(file), *triangle),
        Command::Transport { file, frobalg, out } => cmd_transport(&resolve(file), &resolve(frobalg), out.as_deref()),
        Command::Equation { env, equation } => cmd_equation(&resolve(env), equation),
    }
}

fn load(path: &Path) -> Result<Fixture, InputError> {
    Ok(Fixture::load(path)?)
}

fn base_of(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

/// A weak bialgebra from a wba, wha, group or groupoid fixture.
fn wba_of(fx: &Fixture) -> Result<WeakBialgebra, InputError> {
    match fx {
        Fixture::Group(_) => Ok(groupoid_algebra(&crate::groups::Groupoid::from_group(&fx.group()?)).wba),
        Fixture::Groupoid(_) => Ok(groupoid_algebra(&fx.groupoid()?).wba),
        _ => Ok(fx.weak_bialgebra()?),
    }
}

fn describe_wba(r: &mut Report, b: &WeakBialgebra) {
    r.info("dim", b.dim());
    r.info("barbell", format_scalar(&barbell(b)));
    if let Ok(ids) = canonical_idempotents(b) {
        for (name, m) in ids.as_array() {
            r.info(&format!("rank {name}"), m.rank());
        }
    }
}

const STRONG_PROBES: [&str; 5] = ["separable", "strong-psi-phi", "strong-phi0-psi0", "strong-psi0-phi0", "tensor-strict"];

/// Splits functor validation into required checks and strongness probes.
fn functor_checks(r: &mut Report, f: &FunctorData) -> Result<bool, InputError> {
    let v = validate_functor_data(f)?;
    let strong = is_strong(&v);
    for c in v.checks {
        if STRONG_PROBES[..4].contains(&c.id.as_str()) {
            r.probes.push(c);
        } else {
            r.checks.push(c);
        }
    }
    Ok(strong)
}

pub fn cmd_check(kind: CheckKind, path: &Path) -> Outcome {
    let fx = load(path)?;
    let mut r = Report::new(&format!("check {}", format!("{kind:?}").to_lowercase()));
    match kind {
        CheckKind::Wba => {
            let b = wba_of(&fx)?;
            describe_wba(&mut r, &b);
            r.add("weak", check_weak_bialgebra(&b));
            r.probes.extend(prefixed("strong", check_bialgebra_strong(&b)));
        }
        CheckKind::Wha => {
            let h = match &fx {
                Fixture::Group(_) => groupoid_algebra(&crate::groups::Groupoid::from_group(&fx.group()?)),
                Fixture::Groupoid(_) => groupoid_algebra(&fx.groupoid()?),
                _ => fx.weak_hopf()?,
            };
            describe_wba(&mut r, &h.wba);
            r.add("weak", check_weak_bialgebra(&h.wba));
            r.add("hopf", check_weak_hopf(&h));
            r.probes.extend(prefixed("strong", check_bialgebra_strong(&h.wba)));
        }
        CheckKind::Functor => {
            let f = fx.functor()?;
            r.info("objects", f.objects.len());
            r.info("generators", f.generators.len());
            r.info("duals", f.duals.is_some());
            let strong = functor_checks(&mut r, &f)?;
            r.info("strong", strong);
        }
        CheckKind::Frobenius => {
            let c = fx.frobenius()?;
            r.info("dim", c.dim());
            r.info("separable", c.is_separable_frobenius());
            r.info("commutative", c.alg.is_commutative());
            r.add("frobenius", check_frobenius(&c.alg, &c.coalg));
        }
        CheckKind::Module => {
            let Fixture::Module(m) = &fx else { return Err(InputError(format!("expected a module fixture, found {}", fx.kind()))) };
            let (b, module) = m.load(base_of(path))?;
            r.info("dim", module.dim());
            r.info("algebra dim", b.dim());
            r.add("module", module.check(&b));
        }
    }
    Ok(r.finish())
}

fn prefixed(prefix: &str, v: Verdict) -> Vec<Check> {
    let mut w = Verdict::new();
    w.extend_prefixed(prefix, v);
    w.checks
}

pub fn cmd_tannaka(path: &Path, out: Option<&Path>, antipode: bool, strong_checks: bool) -> Outcome {
    let f = load(path)?.functor()?;
    let mut r = Report::new("tannaka");
    let fv = validate_functor_data(&f)?;
    if let Some(bad) = fv.failures().find(|c| !STRONG_PROBES[..4].contains(&c.id.as_str())) {
        return Err(InputError(format!("functor fails {}: {}", bad.id, bad.counterexample.clone().unwrap_or_default())));
    }
    r.info("functor strong", is_strong(&fv));
    if antipode && f.duals.is_none() {
        return Err(tagged(TannakaError::MissingDuals));
    }
    let t = tannaka(&f).map_err(InputError::from)?;
    let b = t.weak_bialgebra()?;
    describe_wba(&mut r, &b);
    let verdict = if antipode { theorem2_verdict(&f) } else { theorem1_verdict(&f) };
    r.add("theorem", verdict?);
    let strong = check_bialgebra_strong(&b);
    r.info("non-weak", strong.all_pass());
    if strong_checks {
        r.add("strong-checks", strong);
    }
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("functor");
    let fixture = if antipode {
        Fixture::from_wha(&format!("tan-{name}"), &t.weak_hopf()?)
    } else {
        Fixture::from_wba(&format!("tan-{name}"), &b)
    };
    if let Some(p) = out {
        fixture.save(p)?;
        r.info("wrote", p.display());
    }
    Ok(r.finish())
}

pub fn cmd_mod(path: &Path) -> Outcome {
    let fx = load(path)?;
    let mut r = Report::new("mod");
    let (b, modules) = match &fx {
        Fixture::Module(m) => {
            let (b, module) = m.load(base_of(path))?;
            (b, vec![module])
        }
        _ => {
            let b = wba_of(&fx)?;
            let regular = ModuleQ::regular(&b);
            (b, vec![regular])
        }
    };
    r.info("algebra dim", b.dim());
    for (i, m) in modules.iter().enumerate() {
        r.info(&format!("module {i} dim"), m.dim());
        r.add(&format!("module-{i}"), m.check(&b));
        r.add(&format!("module-{i}/unit-constraints"), check_unit_constraints(m, &b));
    }
    let mut probe = modules.clone();
    probe.push(unit_object(&b));
    r.add("forgetful", forgetful_frobenius_check(&b, &probe));
    Ok(r.finish())
}

pub fn cmd_adjunction(path: &Path, triangle: u8) -> Outcome {
    let fx = load(path)?;
    let mut r = Report::new(&format!("adjunction --triangle {triangle}"));
    if triangle == 2 {
        let f = fx.functor()?;
        let (m, v) = triangle_two(&f)?;
        r.info("dim", m.rows());
        r.add("", v);
        let t = tannaka(&f)?;
        let e = adjunction_counit(&f, &t)?;
        r.add("counit", check_adjunction_counit(&f, &t, &e)?);
    } else {
        let (b, modules) = match &fx {
            Fixture::Module(m) => {
                let (b, module) = m.load(base_of(path))?;
                (b, vec![module])
            }
            _ => {
                let b = wba_of(&fx)?;
                let regular = ModuleQ::regular(&b);
                (b, vec![regular])
            }
        };
        let mut probe = modules;
        probe.push(unit_object(&b));
        r.info("modules", probe.len());
        r.add("", triangle_one(&b, &probe)?);
    }
    let mut out = r.finish();
    for c in &mut out.checks {
        c.id = c.id.trim_start_matches('/').to_string();
    }
    Ok(out)
}

pub fn cmd_transport(path: &Path, frobalg: &Path, out: Option<&Path>) -> Outcome {
    let fx = load(path)?;
    let c = load(frobalg)?.frobenius()?;
    let phi = FrobEndofunctor::new(c).map_err(tagged)?;
    let mut r = Report::new("transport");
    r.info("C dim", phi.c_dim());
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("input");
    let fixture = match &fx {
        Fixture::Functor(_) => {
            let f = fx.functor()?;
            let (m, v) = rho(&phi, &f)?;
            r.info("rho shape", format!("{}x{}", m.rows(), m.cols()));
            r.add("rho", v);
            Fixture::from_functor(&format!("{name}-base-changed"), &compose_functor(&phi, &f))
        }
        _ => {
            let b = wba_of(&fx)?;
            let tb = wba_transport(&phi, &b)?;
            describe_wba(&mut r, &tb);
            r.add("transported", check_weak_bialgebra(&tb));
            r.add("barbell", transport_barbell_check(&phi, &b)?);
            Fixture::from_wba(&format!("{name}-transported"), &tb)
        }
    };
    if let Some(p) = out {
        fixture.save(p)?;
        r.info("wrote", p.display());
    }
    Ok(r.finish())
}

pub fn cmd_equation(env_path: &Path, equation: &str) -> Outcome {
    let env = load(env_path)?.env()?;
    let (lhs, rhs) = parse_equation(equation).map_err(tagged)?;
    let ev = equation_holds(&lhs, &rhs, &env).map_err(tagged)?;
    let mut r = Report::new("equation");
    r.info("equation", equation.trim());
    r.checks.push(Check::new("equation", equation.trim(), ev.holds, ev.counterexample));
    Ok(r.finish())
}
