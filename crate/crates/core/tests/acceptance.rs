//! End-to-end acceptance run. Prints one line per criterion and fails if any
//! criterion fails or overruns its time budget.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tannaka::algebra::{
    barbell, canonical_idempotents, check_bialgebra_strong, check_prop1_isos, check_strict_morphism,
    check_weak_bialgebra, check_weak_hopf, function_hopf, group_algebra, groupoid_algebra, FrobeniusAlgebra,
    WeakBialgebra, WeakHopf,
};
use tannaka::duality::{bow_lemma_check, chikhladze_check, rho, triangle_one, triangle_two, wba_transport, FrobEndofunctor};
use tannaka::exactla::{eye, frac, int, Mat};
use tannaka::fincat::{deloop, discrete_group_functor, scale_psi_by_two, FunctorData};
use tannaka::fixture::Fixture;
use tannaka::groups::{FiniteGroup, Groupoid};
use tannaka::rep::{unit_object, ModuleQ};
use tannaka::tannaka::{
    check_natural, discharge, prop2_check, solve_discharged, tannaka, theorem1_verdict, theorem2_verdict,
};

type Outcome = Result<(), String>;

/// Description, check, time budget in seconds.
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

fn ensure(cond: bool, msg: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Matrix units `E_ij`, indexed `i * n + j`.
fn matrix_units_oracle(n: usize) -> WeakHopf {
    let m = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let mut mu = Vec::new();
    for (i, j, k, l) in itertools4(n) {
        if j == k {
            mu.push((idx(i, l), idx(i, j) * m + idx(k, l), int(1)));
        }
    }
    let mu = Mat::from_triplets(m, m * m, mu);
    let eta = Mat::from_triplets(m, 1, (0..n).map(|i| (idx(i, i), 0, int(1))));
    let delta = Mat::from_triplets(m * m, m, (0..m).map(|a| (a * m + a, a, int(1))));
    let eps = Mat::from_triplets(1, m, (0..m).map(|a| (0, a, int(1))));
    let s = Mat::from_triplets(m, m, (0..n).flat_map(|i| (0..n).map(move |j| (idx(j, i), idx(i, j), int(1)))));
    WeakHopf::new(WeakBialgebra::from_maps(mu, eta, delta, eps).unwrap(), s).unwrap()
}

fn itertools4(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).flat_map(move |k| (0..n).map(move |l| (i, j, k, l)))))
}

/// Functions on `ℤ/n` with the delta basis.
fn cyclic_functions_oracle(n: usize) -> WeakHopf {
    let mu = Mat::from_triplets(n, n * n, (0..n).map(|g| (g, g * n + g, int(1))));
    let eta = Mat::from_triplets(n, 1, (0..n).map(|g| (g, 0, int(1))));
    let delta = Mat::from_triplets(n * n, n, (0..n).flat_map(|a| (0..n).map(move |b| (a * n + b, (a + b) % n, int(1)))));
    let eps = Mat::from_triplets(1, n, [(0, 0, int(1))]);
    let s = Mat::from_triplets(n, n, (0..n).map(|g| ((n - g) % n, g, int(1))));
    WeakHopf::new(WeakBialgebra::from_maps(mu, eta, delta, eps).unwrap(), s).unwrap()
}

fn z2_sum_z2() -> Groupoid {
    let z2 = Groupoid::from_group(&FiniteGroup::cyclic(2));
    Groupoid::disjoint_union(&z2, &z2)
}

fn criterion_1() -> Outcome {
    for (name, g) in [("pair(2)", Groupoid::pair(2)), ("pair(3)", Groupoid::pair(3)), ("Z2+Z2", z2_sum_z2())] {
        let h = groupoid_algebra(&g);
        ensure(check_weak_bialgebra(&h.wba).all_pass(), format!("{name}: weak bialgebra"))?;
        ensure(check_weak_hopf(&h).all_pass(), format!("{name}: weak Hopf"))?;
        ensure(barbell(&h.wba) == int(g.objects() as i64), format!("{name}: barbell"))?;
        ensure(!check_bialgebra_strong(&h.wba).passed("strong-unit"), format!("{name}: strong unit should fail"))?;
    }
    for (name, g) in [("Z2", FiniteGroup::cyclic(2)), ("Z3", FiniteGroup::cyclic(3)), ("S3", FiniteGroup::symmetric(3))] {
        let h = group_algebra(&g);
        ensure(check_bialgebra_strong(&h.wba).all_pass(), format!("k{name}: strong checks"))?;
        ensure(check_weak_hopf(&h).all_pass(), format!("k{name}: antipode"))?;
        ensure(barbell(&h.wba) == int(1), format!("k{name}: barbell"))?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for g in [Groupoid::pair(2), Groupoid::pair(3), z2_sum_z2()] {
        let v = check_prop1_isos(&groupoid_algebra(&g).wba);
        ensure(v.all_pass(), v.to_string())?;
    }
    let tan = tannaka(&deloop(&FrobeniusAlgebra::diagonal(2)).unwrap()).unwrap().weak_bialgebra().unwrap();
    let v = check_prop1_isos(&tan);
    ensure(v.all_pass(), v.to_string())
}

fn deloop_k2() -> FunctorData {
    deloop(&FrobeniusAlgebra::diagonal(2)).unwrap()
}

fn criterion_3() -> Outcome {
    let f = deloop_k2();
    let v = theorem2_verdict(&f).map_err(|e| e.to_string())?;
    ensure(v.all_pass(), v.to_string())?;
    let h = tannaka(&f).unwrap().weak_hopf().unwrap();
    ensure(h.wba.dim() == 4, "dim")?;
    ensure(barbell(&h.wba) == int(2), "barbell")?;
    let ids = canonical_idempotents(&h.wba).unwrap();
    let id = eye(4);
    ensure(h.wba.conv(&h.antipode, &id) == ids.r, "S * id = r")?;
    ensure(h.wba.conv(&id, &h.antipode) == ids.t, "id * S = t")?;
    ensure(h == matrix_units_oracle(2), "matrix units oracle")
}

fn criterion_4() -> Outcome {
    for n in [2, 3] {
        let f = discrete_group_functor(&FiniteGroup::cyclic(n));
        let v = theorem2_verdict(&f).map_err(|e| e.to_string())?;
        ensure(v.all_pass() && v.checks.iter().any(|c| c.id.starts_with("strong/")), v.to_string())?;
        let h = tannaka(&f).unwrap().weak_hopf().unwrap();
        ensure(check_bialgebra_strong(&h.wba).all_pass(), format!("Z{n}: strong"))?;
        ensure(h == cyclic_functions_oracle(n), format!("Z{n}: oracle"))?;
        ensure(h == function_hopf(&FiniteGroup::cyclic(n)), format!("Z{n}: function_hopf"))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let base = theorem1_verdict(&deloop_k2()).unwrap();
    ensure(base.all_pass(), base.to_string())?;
    let v = theorem1_verdict(&scale_psi_by_two(&deloop_k2())).unwrap();
    let failed: Vec<&str> = v.failures().map(|c| c.id.as_str()).collect();
    ensure(failed == ["weak/bialgebra"], format!("failures {failed:?}"))?;
    ensure(v.passed("weak/weak-counit-1") && v.passed("weak/weak-counit-2"), "weak counit")
}

fn criterion_6() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let Fixture::Morphism(m) = Fixture::load(&dir.join("iso-tan-deloop-k2-pair2.json")).map_err(|e| e.to_string())? else {
        return Err("not a morphism fixture".into());
    };
    let (h, j, f) = m.load(&dir).map_err(|e| e.to_string())?;
    ensure(j == groupoid_algebra(&Groupoid::pair(2)), "target is the pair groupoid algebra")?;
    let inv = f.inverse().ok_or("not invertible")?;
    let v = check_strict_morphism(&f, &h.wba, &j.wba);
    ensure(v.all_pass(), v.to_string())?;
    let v = check_strict_morphism(&inv, &j.wba, &h.wba);
    ensure(v.all_pass(), v.to_string())?;
    ensure(f.dot(&h.antipode) == j.antipode.dot(&f), "antipodes intertwined")
}

fn kz3_modules(h: &WeakBialgebra) -> Vec<ModuleQ> {
    let rot = [eye(2), Mat::from_i64(&[&[0, -1], &[1, -1]]), Mat::from_i64(&[&[-1, 1], &[-1, 0]])];
    vec![
        ModuleQ::from_action(h, Mat::from_i64(&[&[1, 1, 1]])).unwrap(),
        ModuleQ::from_action(h, rot[0].hstack(&rot[1]).unwrap().hstack(&rot[2]).unwrap()).unwrap(),
        ModuleQ::regular(h),
    ]
}

fn criterion_7() -> Outcome {
    let pair = groupoid_algebra(&Groupoid::pair(2)).wba;
    let v = triangle_one(&pair, &[ModuleQ::regular(&pair), unit_object(&pair)]).map_err(|e| e.to_string())?;
    ensure(v.all_pass(), v.to_string())?;
    let kz3 = group_algebra(&FiniteGroup::cyclic(3)).wba;
    let v = triangle_one(&kz3, &kz3_modules(&kz3)).map_err(|e| e.to_string())?;
    ensure(v.all_pass(), v.to_string())?;
    for f in [deloop_k2(), deloop(&FrobeniusAlgebra::diagonal(1)).unwrap(), discrete_group_functor(&FiniteGroup::cyclic(2))] {
        let (m, v) = triangle_two(&f).map_err(|e| e.to_string())?;
        ensure(m.is_identity() && v.all_pass(), v.to_string())?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for f in [deloop_k2(), deloop(&FrobeniusAlgebra::diagonal(3)).unwrap(), discrete_group_functor(&FiniteGroup::cyclic(2))] {
        let t = tannaka(&f).unwrap();
        let v = chikhladze_check(&f, &t).map_err(|e| e.to_string())?;
        ensure(v.checks.len() == 4 && v.all_pass(), v.to_string())?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let pairs: Vec<(usize, usize)> = (1..=3).flat_map(|a| (1..=3).map(move |b| (a, b))).collect();
    for n in [1, 2] {
        let phi = FrobEndofunctor::new(FrobeniusAlgebra::diagonal(n)).map_err(|e| e.to_string())?;
        let v = bow_lemma_check(&phi, &pairs);
        ensure(v.all_pass(), v.to_string())?;
    }
    let k2 = FrobEndofunctor::new(FrobeniusAlgebra::diagonal(2)).unwrap();
    let tb = wba_transport(&k2, &group_algebra(&FiniteGroup::cyclic(2)).wba).map_err(|e| e.to_string())?;
    ensure(check_weak_bialgebra(&tb).all_pass(), "transport is a weak bialgebra")?;
    ensure(barbell(&tb) == int(2), "transport barbell")?;
    let (_, v) = rho(&k2, &discrete_group_functor(&FiniteGroup::cyclic(2))).map_err(|e| e.to_string())?;
    let strict = v.checks.iter().filter(|c| c.id.starts_with("preserves-")).count();
    ensure(strict >= 4 && v.all_pass(), v.to_string())
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a11);
    for f in [deloop_k2(), discrete_group_functor(&FiniteGroup::cyclic(2))] {
        let t = tannaka(&f).unwrap();
        for arity in 1..=2 {
            for _ in 0..8 {
                let rows = t.dim.pow(arity as u32);
                let cols = rng.gen_range(1..=2);
                let entries = (0..rows * cols).map(|_| frac(rng.gen_range(-5..=5), rng.gen_range(1..=4))).collect();
                let u = Mat::from_entries(rows, cols, entries).unwrap();
                let fam = discharge(&u, &t, arity).map_err(|e| e.to_string())?;
                check_natural(&fam, &f.image()).map_err(|e| e.to_string())?;
                let back = solve_discharged(&fam, &t).map_err(|e| e.to_string())?;
                ensure(back == u, "solve after discharge")?;
                ensure(discharge(&back, &t, arity).unwrap() == fam, "discharge after solve")?;
            }
        }
        let v = prop2_check(&t);
        ensure(v.all_pass(), v.to_string())?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("weak-structure checkers on groupoid and group algebras", criterion_1, Some(5)),
        ("isomorphism chains between the idempotent images", criterion_2, None),
        ("tan of deloop(k2) is a weak Hopf algebra with barbell 2", criterion_3, Some(10)),
        ("tan of discrete Z/2, Z/3 equals the function Hopf algebra", criterion_4, Some(5)),
        ("scaling psi breaks exactly the bialgebra axiom", criterion_5, None),
        ("supplied isomorphism tan deloop(k2) to the pair groupoid algebra", criterion_6, None),
        ("triangle identities of the adjunction", criterion_7, Some(30)),
        ("Frobenius structure from splitting t matches the unit", criterion_8, None),
        ("change of base: bow lemma, transport, rho", criterion_9, None),
        ("discharge round trips and the square end", criterion_10, None),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    for (i, (what, run, budget)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = t0.elapsed();
        let result = match (result, budget) {
            (Ok(()), Some(s)) if took > Duration::from_secs(*s) => Err(format!("took {took:.2?}, budget {s} s")),
            (r, _) => r,
        };
        match &result {
            Ok(()) => println!("criterion {:>2}: PASS ({took:.2?}) {what}", i + 1),
            Err(e) => {
                println!("criterion {:>2}: FAIL ({took:.2?}) {what}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    println!("acceptance: {} of 10 passed in {:.2?}", 10 - failed.len(), start.elapsed());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
