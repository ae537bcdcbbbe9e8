use std::path::{Path, PathBuf};

use tannaka::catalog;
use tannaka::cli::run;
use tannaka::fixture::Fixture;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let dir = fixtures();
    let mut full = vec!["tannaka", "--fixtures-dir", dir.to_str().unwrap()];
    full.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn shipped_fixtures_match_the_catalog() {
    for (file, fx) in catalog::standard().unwrap() {
        let on_disk = Fixture::load(&fixtures().join(&file)).unwrap();
        assert_eq!(on_disk, fx, "{file} is stale; rerun the emit_fixtures example");
    }
}

#[test]
fn check_exit_codes() {
    assert_eq!(cli(&["check", "wha", "pair2.json"]).0, 0);
    let (code, out, _) = cli(&["check", "wba", "pair2-corrupt-delta.json"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL weak/bialgebra"), "{out}");
    let dir = tempdir();
    let trunc = dir.join("truncated.json");
    std::fs::write(&trunc, "{\"kind\": \"wba\", \"dim\": 1").unwrap();
    assert_eq!(cli(&["check", "wba", trunc.to_str().unwrap()]).0, 2);
    assert_eq!(cli(&["check", "wba", "no-such-file.json"]).0, 2);
    assert_eq!(cli(&["check", "functor", "pair2.json"]).0, 2);
    assert_eq!(cli(&["check", "frobenius", "k2.json"]).0, 0);
    assert_eq!(cli(&["check", "module", "kz3-rotation.json"]).0, 0);
    assert_eq!(cli(&["check", "functor", "discrete-z3.json"]).0, 0);
    assert_eq!(cli(&["frobnicate"]).0, 2);
}

#[test]
fn tannaka_subcommand() {
    let dir = tempdir();
    let out = dir.join("tan.json");
    let (code, report, _) = cli(&["tannaka", "deloop-k2.json", "--antipode", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{report}");
    assert!(report.contains("dim: 4") && report.contains("barbell: 2"), "{report}");
    let h = Fixture::load(&out).unwrap().weak_hopf().unwrap();
    assert_eq!(h.wba.dim(), 4);

    let (code, report, _) = cli(&["tannaka", "discrete-z2.json", "--strong-checks"]);
    assert_eq!(code, 0);
    assert!(report.contains("non-weak: true"));
    assert_eq!(cli(&["tannaka", "deloop-k2.json", "--strong-checks"]).0, 1);

    let (code, _, err) = cli(&["tannaka", "deloop-k2-no-duals.json", "--antipode"]);
    assert_eq!(code, 2);
    assert!(err.contains("MissingDuals"));
    assert_eq!(cli(&["tannaka", "deloop-k2-no-duals.json"]).0, 0);
    assert_eq!(cli(&["tannaka", "deloop-k2-psi-scaled.json"]).0, 1);
}

#[test]
fn equation_subcommand() {
    assert_eq!(cli(&["equation", "kz2.json", "mu ; eps = eps * eps"]).0, 0);
    let (code, out, _) = cli(&["equation", "pair2.json", "mu ; eps = eps * eps"]);
    assert_eq!(code, 1);
    assert!(out.contains("entry ("));
    let (code, _, err) = cli(&["equation", "kz2.json", "mu = delta"]);
    assert_eq!(code, 2);
    assert!(err.contains("BoundaryMismatch"));
    assert_eq!(cli(&["equation", "kz2.json", "mu ; (eps"]).0, 2);
    assert_eq!(cli(&["equation", "k2-env.json", "flip ; flip = id(V)"]).0, 0);
    assert_eq!(cli(&["equation", "k2-env.json", "flip * flip ; m = m ; flip"]).0, 0);
    assert_eq!(cli(&["equation", "k2-env.json", "u ; flip = u"]).0, 0);
}

#[test]
fn adjunction_and_transport() {
    assert_eq!(cli(&["adjunction", "deloop-k2.json", "--triangle", "2"]).0, 0);
    assert_eq!(cli(&["adjunction", "kz3-rotation.json", "--triangle", "1"]).0, 0);
    assert_eq!(cli(&["adjunction", "pair2.json", "--triangle", "1"]).0, 0);
    assert_eq!(cli(&["adjunction", "pair2.json", "--triangle", "2"]).0, 2);
    assert_eq!(cli(&["adjunction", "pair2.json", "--triangle", "3"]).0, 2);

    let dir = tempdir();
    let out = dir.join("transported.json");
    let (code, report, _) = cli(&["transport", "kz2.json", "--frobalg", "k2.json", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{report}");
    assert_eq!(Fixture::load(&out).unwrap().weak_bialgebra().unwrap().dim(), 4);
    let (code, _, err) = cli(&["transport", "kz2.json", "--frobalg", "matrix2.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("NotCommutativeSeparable"));
    assert_eq!(cli(&["transport", "discrete-z2.json", "--frobalg", "k2.json"]).0, 0);
}

#[test]
fn mod_subcommand() {
    assert_eq!(cli(&["mod", "kz3-rotation.json"]).0, 0);
    assert_eq!(cli(&["mod", "pair2-regular.json"]).0, 0);
    assert_eq!(cli(&["mod", "kz3.json"]).0, 0);
}

#[test]
fn emitted_fixtures_reload_with_identical_reports() {
    let dir = tempdir();
    let first = dir.join("first.json");
    let second = dir.join("second.json");
    let (_, r1, _) = cli(&["tannaka", "deloop-k2.json", "--antipode", "--out", first.to_str().unwrap()]);
    let (_, r2, _) = cli(&["tannaka", "deloop-k2.json", "--antipode", "--out", second.to_str().unwrap()]);
    let strip = |r: &str| r.lines().filter(|l| !l.starts_with("wrote")).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&r1), strip(&r2));
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
    let a = cli(&["--format", "json", "check", "wha", first.to_str().unwrap()]);
    let b = cli(&["--format", "json", "check", "wha", second.to_str().unwrap()]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn json_reports_parse() {
    let (code, out, _) = cli(&["--format", "json", "check", "wba", "pair2-corrupt-delta.json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["failed"].as_u64().unwrap() > 0);
    let failing = v["checks"].as_array().unwrap().iter().filter(|c| c["pass"] == false);
    assert!(failing.clone().count() > 0);
    assert!(failing.into_iter().all(|c| c["counterexample"].is_string()));
}

fn tempdir() -> PathBuf {
    use std::sync::atomic::{AtomicUsize, Ordering};
    static N: AtomicUsize = AtomicUsize::new(0);
    let d = std::env::temp_dir().join(format!("tannaka-cli-{}-{}", std::process::id(), N.fetch_add(1, Ordering::SeqCst)));
    std::fs::create_dir_all(&d).unwrap();
    d
}
