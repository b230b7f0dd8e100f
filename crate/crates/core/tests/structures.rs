use cartier::crossed::{
    check_eta_hat_morphism, check_induced_cartier, check_zeta_lemma, induced_eta, zeta, Sample, SampleMorphism,
};
use cartier::zoo::{jordan_plane, laistrygonian, span_inclusion, super_jordan_plane, Example};
use cartier::{CrossedModule, Field, Fp, GradedSpace, Morphism, QCrossedLieBialgebra, QMorphism, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn at(m: &QMorphism, out: &[&str], input: &[&str]) -> Rational {
    let r = m.target().index_of_tensor(out).unwrap();
    let c = m.source().index_of_tensor(input).unwrap();
    m.entry(r, c)
}

/// Overwrites the single entry `(out, input)` of `m`.
fn set(m: &QMorphism, out: &[&str], input: &[&str], v: Rational) -> QMorphism {
    let r = m.target().index_of_tensor(out).unwrap();
    let c = m.source().index_of_tensor(input).unwrap();
    let entries = m
        .entries()
        .filter(|&(i, j, _)| (i, j) != (r, c))
        .map(|(i, j, x)| (i, j, x.clone()))
        .chain([(r, c, v)]);
    Morphism::from_entries(m.source(), m.target(), entries).unwrap()
}

#[test]
fn super_jordan_values() {
    let s = super_jordan_plane::<Rational>().unwrap();
    assert_eq!(at(s.beta(), &["x22"], &["x12", "x12"]), q(2, 1));
    let eh = s.eta_hat().unwrap();
    let col = eh.source().index_of_tensor(&["x12", "x22"]).unwrap();
    assert_eq!(eh.column(col).len(), 2);
    assert_eq!(at(&eh, &["x11", "x22"], &["x12", "x22"]), q(2, 1));
    assert_eq!(at(&eh, &["x12", "x21"], &["x12", "x22"]), q(1, 1));
    // δβ(x12⊗x12) = 2(τ − id)(x11⊗x12) = −2 x12⊗x11 − 2 x11⊗x12
    let db = s.delta().compose(s.beta()).unwrap();
    assert_eq!(at(&db, &["x12", "x11"], &["x12", "x12"]), q(-2, 1));
    assert_eq!(at(&db, &["x11", "x12"], &["x12", "x12"]), q(-2, 1));
}

#[test]
fn one_sided_bracket_mutation_breaks_antisymmetry_at_that_tensor() {
    let s = super_jordan_plane::<Rational>().unwrap();
    let beta = set(s.beta(), &["x21"], &["x11", "x12"], q(0, 1));
    let beta = set(&beta, &["x22"], &["x11", "x12"], q(1, 1));
    let r = s.with_beta(beta).unwrap().suite();
    let e = r.get("antisymmetry").unwrap();
    let w = e.witness.as_ref().expect("antisymmetry should fail");
    assert_eq!(w.input, "x11⊗x12");
    // β(x11⊗x12) + χ(g,g)β(x12⊗x11) = x22 − x21
    assert_eq!(
        w.residual,
        vec![("x21".to_string(), q(-1, 1)), ("x22".to_string(), q(1, 1))]
    );
}

#[test]
fn laistrygonian_nested_bracket() {
    let s = laistrygonian::<Rational>(3, q(1, 1)).unwrap();
    let v = s.space();
    let col = v.tensor(v).unwrap().index_of_tensor(&["x2", "z0"]).unwrap();
    assert_eq!(s.beta().column(col), &[(v.index_of("z1").unwrap(), q(1, 1))]);
    assert_eq!(at(s.beta(), &["z2"], &["x2", "z1"]), q(1, 1));
    assert_eq!(at(s.beta(), &["z1"], &["z0", "x2"]), q(-1, 1));
    let r = s.as_lie_bialgebra().lie_suite();
    assert!(r.all_pass(), "{r}");
}

#[test]
fn plus_instead_of_minus_breaks_coantisymmetry() {
    let s = laistrygonian::<Rational>(3, q(1, 1)).unwrap();
    // (τ + id)(x1⊗z_{k−1}) has both coefficients equal to c_k
    let mut delta = s.delta().clone();
    for k in 1..=3 {
        let z = format!("z{k}");
        let prev = format!("z{}", k - 1);
        let c = at(&delta, &["x1", &prev], &[&z]);
        delta = set(&delta, &["x1", &prev], &[&z], -c);
    }
    let r = s.with_delta(delta).unwrap().as_lie_bialgebra().colie_suite();
    assert!(!r.get("coantisymmetry").unwrap().passed());
}

#[test]
fn super_jordan_needs_its_curvature() {
    let s = super_jordan_plane::<Rational>().unwrap();
    let lb = s.as_lie_bialgebra();
    let zero = Morphism::zero(&s.space().tensor(s.space()).unwrap(), &s.space().tensor(s.space()).unwrap());
    let with_zero = lb.suite(&zero);
    assert!(!with_zero.get("bialgebra_compatibility").unwrap().passed());
    assert!(lb.suite(&s.eta_hat().unwrap()).all_pass());
}

#[test]
fn diagonal_action_on_jordan_square() {
    let j = jordan_plane::<Rational>().unwrap();
    let jj = j.module().tensor(j.module()).unwrap();
    assert_eq!(at(jj.alpha(), &["x1", "x2"], &["s", "x2", "x2"]), q(1, 1));
    assert_eq!(at(jj.alpha(), &["x2", "x1"], &["s", "x2", "x2"]), q(1, 1));
    let col = jj.alpha().source().index_of_tensor(&["s", "x2", "x2"]).unwrap();
    assert_eq!(jj.alpha().column(col).len(), 2);
}

#[test]
fn tensor_products_of_examples_are_modules_and_comodules() {
    let mut mods: Vec<CrossedModule<Rational>> = vec![
        jordan_plane().unwrap().module().clone(),
        super_jordan_plane().unwrap().module().clone(),
    ];
    let l = laistrygonian::<Rational>(1, q(1, 1)).unwrap();
    let l2 = laistrygonian::<Rational>(2, q(1, 1)).unwrap();
    for a in [&mods[0], &mods[1]] {
        let t = a.tensor(a).unwrap();
        assert!(t.check_module().passed() && t.check_comodule().passed());
    }
    mods.clear();
    let t = l.module().tensor(l2.module()).unwrap();
    assert!(t.check_module().passed() && t.check_comodule().passed());
    assert!(t.suite().all_pass(), "{}", t.suite());
}

#[test]
fn super_jordan_weight_changes() {
    let s = super_jordan_plane::<Rational>().unwrap();
    // λ(x22) = s⊗x22 alone: λ(s·x22) = 2 s⊗x21 but the right side gives s⊗x21.
    let lambda = set(s.lambda(), &["s", "x22"], &["x22"], q(1, 1));
    let e = s.module().with_lambda(lambda).unwrap().check_crossed_axiom_ambient();
    let w = e.witness.expect("crossed axiom should fail");
    assert_eq!(w.input, "s⊗x22");
    assert_eq!(w.residual, vec![("s⊗x21".to_string(), q(1, 1))]);

    // Both weights 1: still crossed, but β no longer respects the coaction.
    let mut lambda = s.lambda().clone();
    for j in ["x21", "x22"] {
        lambda = set(&lambda, &["s", j], &[j], q(1, 1));
    }
    let m = s.module().with_lambda(lambda).unwrap();
    assert!(m.check_crossed_axiom_ambient().passed());
    let r = s.with_module(m).unwrap().suite();
    assert!(!r.get("beta_respects_coaction").unwrap().passed(), "{r}");
}

#[test]
fn exchange_map_values() {
    let j = jordan_plane::<Rational>().unwrap();
    let z = zeta(j.module(), j.module()).unwrap();
    let col = z.source().index_of_tensor(&["x2", "x2"]).unwrap();
    assert_eq!(z.column(col), &[(z.target().index_of_tensor(&["x1", "x2"]).unwrap(), q(1, 1))]);

    for big_g in 0..4usize {
        let l = laistrygonian::<Rational>(big_g, q(1, 1)).unwrap();
        let z = zeta(l.module(), l.module()).unwrap();
        let eh = l.eta_hat().unwrap();
        for k in 0..=big_g {
            let zk = format!("z{k}");
            let expected = q(k as i64, 1) - q(big_g as i64, 2);
            assert_eq!(at(&z, &["x1", &zk], &[&zk, "x2"]), expected);
            assert_eq!(at(&eh, &["x1", &zk], &["x2", &zk]), expected);
        }
    }
    let l2 = laistrygonian::<Rational>(2, q(1, 1)).unwrap();
    let eh = l2.eta_hat().unwrap();
    let col = eh.source().index_of_tensor(&["x2", "z1"]).unwrap();
    assert!(eh.column(col).is_empty());
}

#[test]
fn lemma_and_eta_hat_morphism_on_pairs() {
    let j = jordan_plane::<Rational>().unwrap();
    assert!(check_zeta_lemma(j.module(), j.module()).all_pass());
    let l1 = laistrygonian::<Rational>(1, q(1, 1)).unwrap();
    assert!(check_zeta_lemma(l1.module(), l1.module()).all_pass());
    let s = super_jordan_plane::<Rational>().unwrap();
    assert!(check_eta_hat_morphism(s.module(), s.module()).all_pass());
    let zero = CrossedModule::trivial(j.base().clone(), j.space().clone()).unwrap();
    assert!(induced_eta(&zero, &zero).unwrap().is_zero());
    assert!(check_zeta_lemma(&zero, &zero).all_pass());
}

#[test]
fn induced_cartier_on_samples() {
    let j = jordan_plane::<Rational>().unwrap();
    let trivial = CrossedModule::trivial(
        j.base().clone(),
        GradedSpace::new(1, [("u", cartier::Degree::new(vec![1]))]).unwrap(),
    )
    .unwrap();
    let samples = [Sample::new("J", j.module().clone()), Sample::new("T", trivial)];
    let r = check_induced_cartier(&samples, &[], |_, _, _| true);
    assert!(r.all_pass(), "{r}");

    let l = laistrygonian::<Rational>(2, q(1, 1)).unwrap();
    let inc = span_inclusion(l.space(), &["x1", "z0", "z1", "z2"]).unwrap();
    let l0 = l.module().restrict(&inc).unwrap();
    let samples = [Sample::new("L", l.module().clone()), Sample::new("L0", l0)];
    let morphisms = [SampleMorphism { from: 1, to: 0, map: inc }];
    let r = check_induced_cartier(&samples, &morphisms, |i, j, k| i + j + k <= 1);
    assert!(r.all_pass(), "{r}");
}

#[test]
fn induced_cartier_rejects_a_non_morphism() {
    let l = laistrygonian::<Rational>(2, q(1, 1)).unwrap();
    let inc = span_inclusion::<Rational>(l.space(), &["x1", "z0", "z1", "z2"]).unwrap();
    let l0 = l.module().restrict(&inc).unwrap();
    // x1 ↦ x2 is degree-preserving but does not commute with the action.
    let bad = Morphism::from_entries(
        l0.space(),
        l.space(),
        [(l.space().index_of("x2").unwrap(), 0, q(1, 1))],
    )
    .unwrap();
    let samples = [Sample::new("L", l.module().clone()), Sample::new("L0", l0)];
    let r = check_induced_cartier(&samples, &[SampleMorphism { from: 1, to: 0, map: bad }], |i, j, k| {
        i + j + k == 0
    });
    assert!(!r.all_pass());
}

#[test]
fn subobjects_of_examples() {
    for ex in [
        Example::<Rational>::Jordan,
        Example::SuperJordan,
        Example::laistrygonian(0),
        Example::laistrygonian(3),
    ] {
        let s = ex.build().unwrap();
        for (name, inc) in ex.subobject_inclusions(s.space()).unwrap() {
            let sub = s.module().restrict(&inc).unwrap();
            assert!(sub.suite().all_pass(), "{} {name}", ex.name());
            assert!(sub.check_morphism(s.module(), &inc).all_pass(), "{} {name}", ex.name());
        }
    }
    // The L⁰ of any 𝒢 carries zero curvature.
    for big_g in 0..5 {
        let s = laistrygonian::<Rational>(big_g, q(1, 1)).unwrap();
        let names: Vec<String> = std::iter::once("x1".into()).chain((0..=big_g).map(|k| format!("z{k}"))).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let l0 = s.module().restrict(&span_inclusion(s.space(), &refs).unwrap()).unwrap();
        assert!(induced_eta(&l0, &l0).unwrap().is_zero());
    }
}

#[test]
fn x21_ideal_depends_on_characteristic() {
    let f2 = super_jordan_plane::<Fp<2>>().unwrap();
    let r = f2.check_subobject(&span_inclusion(f2.space(), &["x21"]).unwrap());
    assert!(r.all_pass(), "{r}");
    let f3 = super_jordan_plane::<Fp<3>>().unwrap();
    let r = f3.check_subobject(&span_inclusion(f3.space(), &["x21"]).unwrap());
    assert!(!r.get("sub_cobracket_vanishes").unwrap().passed());
    let fq: QCrossedLieBialgebra = super_jordan_plane().unwrap();
    let r = fq.check_subobject(&span_inclusion(fq.space(), &["x21"]).unwrap());
    let w = r.get("sub_cobracket_vanishes").unwrap().witness.clone().unwrap();
    assert_eq!(w.residual, vec![("x11⊗x11".to_string(), q(-2, 1))]);
}

#[test]
fn super_jordan_suite_over_small_prime_fields() {
    assert!(Example::<Fp<3>>::SuperJordan.suite(&super_jordan_plane().unwrap()).all_pass());
    assert!(Example::<Fp<5>>::Jordan.suite(&jordan_plane().unwrap()).all_pass());
    let l = laistrygonian::<Fp<5>>(3, Fp::new(1)).unwrap();
    assert!(Example::Laistrygonian { big_g: 3, chi_gh: Fp::<5>::new(1) }.suite(&l).all_pass());
    assert_eq!(Fp::<5>::new(2).inverse(), Some(Fp::new(3)));
}
