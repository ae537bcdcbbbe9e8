use proptest::prelude::*;

use tannaka::algebra::{
    canonical_idempotents, check_bialgebra_strong, check_frobenius, check_prop1_isos, check_weak_bialgebra,
    check_weak_hopf, frobenius_from_splitting, group_algebra, groupoid_algebra, WeakHopf,
};
use tannaka::diagram::{evaluate, parse_term, GenEnv, MorTerm, ObjWord};
use tannaka::exactla::{braid, eye, frac, kernel, kron, solve_factor, split_idempotent, Mat};
use tannaka::groups::{FiniteGroup, Groupoid};

fn mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec((-4i64..=4, 1i64..=3), rows * cols)
        .prop_map(move |v| Mat::from_entries(rows, cols, v.into_iter().map(|(p, q)| frac(p, q)).collect()).unwrap())
}

fn sparse_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -2i64..=2], rows * cols)
        .prop_map(move |v| Mat::from_entries(rows, cols, v.into_iter().map(|p| frac(p, 1)).collect()).unwrap())
}

fn dims() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=12, 1usize..=12)
}

fn corpus() -> Vec<WeakHopf> {
    vec![
        groupoid_algebra(&Groupoid::pair(2)),
        groupoid_algebra(&Groupoid::pair(3)),
        groupoid_algebra(&Groupoid::disjoint_union(
            &Groupoid::from_group(&FiniteGroup::cyclic(2)),
            &Groupoid::from_group(&FiniteGroup::cyclic(2)),
        )),
        group_algebra(&FiniteGroup::cyclic(2)),
        group_algebra(&FiniteGroup::cyclic(3)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rank_nullity(m in dims().prop_flat_map(|(r, c)| sparse_mat(r, c))) {
        let k = kernel(&m);
        prop_assert_eq!(k.rows(), m.cols());
        prop_assert!(m.dot(&k).is_zero());
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn kron_associative_and_bilinear(a in mat(2, 2), b in mat(2, 2), c in mat(1, 3), d in mat(3, 1)) {
        prop_assert_eq!(kron(&kron(&a, &c), &d), kron(&a, &kron(&c, &d)));
        prop_assert_eq!(kron(&a.add(&b).unwrap(), &c), kron(&a, &c).add(&kron(&b, &c)).unwrap());
        prop_assert_eq!(kron(&c, &a.add(&b).unwrap()), kron(&c, &a).add(&kron(&c, &b)).unwrap());
    }

    #[test]
    fn kron_interchange(a in mat(2, 3), b in mat(3, 2), c in mat(3, 1), d in mat(1, 2)) {
        prop_assert_eq!(kron(&a.dot(&b), &c.dot(&d)), kron(&a, &c).dot(&kron(&b, &d)));
    }

    #[test]
    fn braid_naturality(f in mat(2, 3), g in mat(3, 1)) {
        // f: 3 → 2, g: 1 → 3
        prop_assert_eq!(braid(2, 3).dot(&kron(&f, &g)), kron(&g, &f).dot(&braid(3, 1)));
        prop_assert!(braid(3, 2).dot(&braid(2, 3)).is_identity());
    }

    #[test]
    fn solve_factor_recovers(through in sparse_mat(6, 3), x in mat(3, 2)) {
        prop_assume!(through.rank() == 3);
        let target = through.dot(&x);
        prop_assert_eq!(solve_factor(&through, &target).unwrap(), x);
    }

    #[test]
    fn evaluation_is_functorial(f in mat(3, 2), g in mat(2, 3), h in mat(2, 2)) {
        let env = GenEnv::new()
            .object("V", 2)
            .object("W", 3)
            .with("f", &["V"], &["W"], f.clone()).unwrap()
            .with("g", &["W"], &["V"], g.clone()).unwrap()
            .with("h", &["V"], &["V"], h.clone()).unwrap();
        let fg = MorTerm::gen("f").then(MorTerm::gen("g"));
        prop_assert_eq!(evaluate(&fg, &env).unwrap(), g.dot(&f));
        let t = MorTerm::gen("f").tensor(MorTerm::gen("h"));
        prop_assert_eq!(evaluate(&t, &env).unwrap(), kron(&f, &h));
        let mixed = fg.clone().tensor(MorTerm::gen("h")).then(MorTerm::gen("h").tensor(MorTerm::Id(ObjWord::of(&["V"]))));
        prop_assert_eq!(evaluate(&mixed, &env).unwrap(), kron(&h, &eye(2)).dot(&kron(&g.dot(&f), &h)));
        let printed = mixed.to_string();
        prop_assert_eq!(parse_term(&printed).unwrap(), mixed);
    }
}

#[test]
fn braid_then_inverse_everywhere() {
    let env = GenEnv::new().object("V", 2).object("W", 3);
    for a in ["V", "W"] {
        for b in ["V", "W"] {
            let (a, b) = (ObjWord::of(&[a]), ObjWord::of(&[b]));
            let t = MorTerm::Braid(a.clone(), b.clone()).then(MorTerm::BraidInv(a, b));
            assert!(evaluate(&t, &env).unwrap().is_identity());
        }
    }
}

#[test]
fn split_idempotents_of_corpus() {
    for h in corpus() {
        let ids = canonical_idempotents(&h.wba).unwrap();
        for (name, e) in ids.as_array() {
            let (retraction, section) = split_idempotent(e).unwrap();
            assert_eq!(section.dot(&retraction), *e, "{name}");
            assert!(retraction.dot(&section).is_identity(), "{name}");
        }
    }
}

#[test]
fn corpus_structure() {
    for h in corpus() {
        let b = &h.wba;
        assert!(check_weak_bialgebra(b).all_pass());
        assert!(check_weak_hopf(&h).all_pass());
        assert!(check_prop1_isos(b).all_pass());
        let ids = canonical_idempotents(b).unwrap();
        let id = eye(b.dim());
        let (sl, sr) = (b.conv(&h.antipode, &id), b.conv(&id, &h.antipode));
        assert_eq!(sl.dot(&sl), sl);
        assert_eq!(sr.dot(&sr), sr);
        assert_eq!(sl, ids.r);
        assert_eq!(sr, ids.t);
        let (retraction, section) = split_idempotent(&ids.t).unwrap();
        let c = frobenius_from_splitting(b, &retraction, &section).unwrap();
        assert!(check_frobenius(&c.alg, &c.coalg).all_pass());
    }
}

fn groupoids() -> impl Strategy<Value = Groupoid> {
    let atom = prop_oneof![
        (1usize..=3).prop_map(Groupoid::pair),
        (1usize..=2).prop_map(Groupoid::discrete),
        (1usize..=3).prop_map(|n| Groupoid::from_group(&FiniteGroup::cyclic(n))),
    ];
    (atom.clone(), prop::option::of(atom)).prop_map(|(a, b)| match b {
        Some(b) if a.morphisms() + b.morphisms() <= 6 => Groupoid::disjoint_union(&a, &b),
        _ => a,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn groupoid_algebras(g in groupoids()) {
        let h = groupoid_algebra(&g);
        prop_assert!(check_weak_bialgebra(&h.wba).all_pass());
        prop_assert!(check_weak_hopf(&h).all_pass());
        prop_assert_eq!(check_bialgebra_strong(&h.wba).all_pass(), g.objects() == 1);
    }

    #[test]
    fn convolution_is_a_monoid(i in 0usize..5, seed in prop::collection::vec(-2i64..=2, 3 * 81)) {
        let h = &corpus()[i];
        let d = h.wba.dim();
        let m = |k: usize| Mat::from_entries(d, d, seed[k * 81..k * 81 + d * d].iter().map(|&x| frac(x, 1)).collect()).unwrap();
        let (f, g, k) = (m(0), m(1), m(2));
        let b = &h.wba;
        prop_assert_eq!(b.conv(&b.conv(&f, &g), &k), b.conv(&f, &b.conv(&g, &k)));
        let u = b.conv_unit();
        prop_assert_eq!(b.conv(&u, &f), f.clone());
        prop_assert_eq!(b.conv(&f, &u), f);
    }
}
