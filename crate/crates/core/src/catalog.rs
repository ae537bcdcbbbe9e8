//! The shipped fixture set, and a permutation search for isomorphisms of
//! weak Hopf algebras.

use crate::algebra::{check_strict_morphism, group_algebra, groupoid_algebra, FrobeniusAlgebra, WeakHopf};
use crate::exactla::{eye, int, Mat};
use crate::fincat::{deloop, discrete_group_functor, scale_psi_by_two, FincatError};
use crate::fixture::{EnvGeneratorJson, EnvJson, Fixture, MorphismJson, ObjectJson, mat_to_json};
use crate::groups::{FiniteGroup, Groupoid};
use crate::rep::ModuleQ;
use crate::tannaka::{tannaka, TannakaError};

/// Permutation matrix sending basis vector `i` to `perm[i]`.
pub fn permutation_matrix(perm: &[usize]) -> Mat {
    Mat::from_triplets(perm.len(), perm.len(), perm.iter().enumerate().map(|(i, &p)| (p, i, int(1))))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Whether `f` is an invertible strict morphism `h → j` intertwining the antipodes.
pub fn is_hopf_iso(f: &Mat, h: &WeakHopf, j: &WeakHopf) -> bool {
    f.inverse().is_some()
        && check_strict_morphism(f, &h.wba, &j.wba).all_pass()
        && f.dot(&h.antipode) == j.antipode.dot(f)
}

/// Every permutation of basis vectors that is an isomorphism `h → j`,
/// in lexicographic order of the permutation.
pub fn permutation_isos(h: &WeakHopf, j: &WeakHopf) -> Vec<Mat> {
    let n = h.wba.dim();
    if n != j.wba.dim() {
        return Vec::new();
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut found = Vec::new();
    loop {
        let p = permutation_matrix(&perm);
        if is_hopf_iso(&p, h, j) {
            found.push(p);
        }
        if !next_permutation(&mut perm) {
            return found;
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error(transparent)]
    Fincat(#[from] FincatError),
    #[error(transparent)]
    Tannaka(#[from] TannakaError),
    #[error("no permutation isomorphism found")]
    NoIso,
}

/// `(file name, fixture)` pairs, in a fixed order.
pub fn standard() -> Result<Vec<(String, Fixture)>, CatalogError> {
    let mut out: Vec<(String, Fixture)> = Vec::new();
    let mut put = |file: &str, fx: Fixture| out.push((file.to_string(), fx));

    let pair2 = groupoid_algebra(&Groupoid::pair(2));
    put("pair2.json", Fixture::from_wha("pair2", &pair2));
    put("pair3.json", Fixture::from_wha("pair3", &groupoid_algebra(&Groupoid::pair(3))));
    let z2z2 = Groupoid::disjoint_union(&Groupoid::from_group(&FiniteGroup::cyclic(2)), &Groupoid::from_group(&FiniteGroup::cyclic(2)));
    put("z2-sum-z2.json", Fixture::from_wha("z2-sum-z2", &groupoid_algebra(&z2z2)));
    put("kz2.json", Fixture::from_wha("kz2", &group_algebra(&FiniteGroup::cyclic(2))));
    let kz3 = group_algebra(&FiniteGroup::cyclic(3));
    put("kz3.json", Fixture::from_wha("kz3", &kz3));
    put("ks3.json", Fixture::from_wha("ks3", &group_algebra(&FiniteGroup::symmetric(3))));

    let mut corrupt = pair2.wba.clone();
    let mut delta = corrupt.delta().clone();
    delta.set(0, 0, int(2));
    corrupt = crate::algebra::WeakBialgebra::from_maps_unchecked(corrupt.mu().clone(), corrupt.eta().clone(), delta, corrupt.eps().clone())
        .expect("shapes unchanged");
    put("pair2-corrupt-delta.json", Fixture::from_wba("pair2-corrupt-delta", &corrupt));

    put("s3-group.json", Fixture::Group(crate::fixture::GroupJson { name: "s3".into(), table: FiniteGroup::symmetric(3).table().to_vec() }));

    let k2 = FrobeniusAlgebra::diagonal(2);
    put("k1.json", Fixture::from_frobenius("k", &FrobeniusAlgebra::diagonal(1)));
    put("k2.json", Fixture::from_frobenius("k2", &k2));
    put("k3.json", Fixture::from_frobenius("k3", &FrobeniusAlgebra::diagonal(3)));
    put("matrix2.json", Fixture::from_frobenius("matrix2", &FrobeniusAlgebra::matrix(2)));

    let dk2 = deloop(&k2)?;
    put("deloop-k2.json", Fixture::from_functor("deloop-k2", &dk2));
    put("deloop-k3.json", Fixture::from_functor("deloop-k3", &deloop(&FrobeniusAlgebra::diagonal(3))?));
    put("deloop-k2-psi-scaled.json", Fixture::from_functor("deloop-k2-psi-scaled", &scale_psi_by_two(&dk2)));
    let mut bare = dk2.clone();
    bare.duals = None;
    put("deloop-k2-no-duals.json", Fixture::from_functor("deloop-k2-no-duals", &bare));
    put("discrete-z2.json", Fixture::from_functor("discrete-z2", &discrete_group_functor(&FiniteGroup::cyclic(2))));
    put("discrete-z3.json", Fixture::from_functor("discrete-z3", &discrete_group_functor(&FiniteGroup::cyclic(3))));

    let tan = tannaka(&dk2)?.weak_hopf()?;
    let iso = permutation_isos(&tan, &pair2).into_iter().next().ok_or(CatalogError::NoIso)?;
    put(
        "iso-tan-deloop-k2-pair2.json",
        Fixture::Morphism(MorphismJson {
            name: "tan deloop(k2) to pair2".into(),
            source: "deloop-k2.json".into(),
            target: "pair2.json".into(),
            mat: mat_to_json(&iso),
        }),
    );

    let trivial = ModuleQ::from_action(&kz3.wba, Mat::from_i64(&[&[1, 1, 1]])).expect("trivial module");
    put("kz3-trivial.json", Fixture::from_module("kz3-trivial", "kz3.json", &trivial));
    let rot = [eye(2), Mat::from_i64(&[&[0, -1], &[1, -1]]), Mat::from_i64(&[&[-1, 1], &[-1, 0]])];
    let action = rot[0].hstack(&rot[1]).and_then(|m| m.hstack(&rot[2])).expect("equal heights");
    let rotation = ModuleQ::from_action(&kz3.wba, action).expect("rotation module");
    put("kz3-rotation.json", Fixture::from_module("kz3-rotation", "kz3.json", &rotation));
    put("pair2-regular.json", Fixture::from_module("pair2-regular", "pair2.json", &ModuleQ::regular(&pair2.wba)));

    let v = |names: &[&str]| names.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    put(
        "k2-env.json",
        Fixture::Env(EnvJson {
            name: "k2 with its swap".into(),
            objects: vec![ObjectJson { id: "V".into(), dim: 2 }],
            generators: vec![
                EnvGeneratorJson { name: "flip".into(), dom: v(&["V"]), cod: v(&["V"]), mat: mat_to_json(&Mat::from_i64(&[&[0, 1], &[1, 0]])) },
                EnvGeneratorJson { name: "m".into(), dom: v(&["V", "V"]), cod: v(&["V"]), mat: mat_to_json(k2.alg.mu()) },
                EnvGeneratorJson { name: "u".into(), dom: v(&[]), cod: v(&["V"]), mat: mat_to_json(k2.alg.eta()) },
            ],
        }),
    );
    Ok(out)
}
