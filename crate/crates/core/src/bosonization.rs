//! Semidirect sums of a crossed Lie bialgebra with its base, and the
//! converse: splitting a Lie bialgebra along a retraction onto a
//! sub-bialgebra.

use crate::crossed::{CrossedLieBialgebra, CrossedModule};
use crate::field::Field;
use crate::graded::{GradedSpace, LinalgError, Morphism};
use crate::lie::LieBialgebra;
use crate::report::{AxiomGroup, ReportEntry, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BisumError<F: Field> {
    #[error("input is not a crossed Lie bialgebra:\n{0}")]
    Rejected(VerificationReport<F>),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompositionError {
    /// Names the identity that fails, e.g. `πγ ≠ id`.
    #[error("{0}")]
    Precondition(&'static str),
    #[error("π and γ live over different contexts")]
    ContextMismatch,
    #[error("could not evaluate the split preconditions: {0}")]
    Evaluation(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `V ⊕ W` together with its injections and projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSum<F: Field> {
    pub space: GradedSpace,
    pub inject_left: Morphism<F>,
    pub inject_right: Morphism<F>,
    pub project_left: Morphism<F>,
    pub project_right: Morphism<F>,
}

impl<F: Field> DirectSum<F> {
    pub fn new(left: &GradedSpace, right: &GradedSpace) -> Result<Self, LinalgError> {
        let space = left.direct_sum(right)?;
        let n = left.dim();
        let inject_left = Morphism::from_entries(left, &space, (0..n).map(|i| (i, i, F::one())))?;
        let inject_right =
            Morphism::from_entries(right, &space, (0..right.dim()).map(|i| (n + i, i, F::one())))?;
        let project_left = Morphism::from_entries(&space, left, (0..n).map(|i| (i, i, F::one())))?;
        let project_right =
            Morphism::from_entries(&space, right, (0..right.dim()).map(|i| (i, n + i, F::one())))?;
        Ok(Self {
            space,
            inject_left,
            inject_right,
            project_left,
            project_right,
        })
    }
}

fn summands<F: Field>(k: &CrossedLieBialgebra<F>) -> Result<DirectSum<F>, LinalgError> {
    DirectSum::new(k.space(), k.base().space())
}

/// The bracket on `V ⊕ f`: `β_f` on `f⊗f`, `β_V` on `V⊗V`, the action on
/// `f⊗V` and its antisymmetric completion on `V⊗f`.
pub fn semidirect_bracket<F: Field>(k: &CrossedLieBialgebra<F>) -> Result<Morphism<F>, LinalgError> {
    let ds = summands(k)?;
    let (iv, iff, pv, pf) = (&ds.inject_left, &ds.inject_right, &ds.project_left, &ds.project_right);
    let ctx = k.base().ctx();
    let ff = iff.compose(k.base().beta())?.compose(&pf.tensor(pf)?)?;
    let vv = iv.compose(k.beta())?.compose(&pv.tensor(pv)?)?;
    let fv = iv.compose(k.alpha())?.compose(&pf.tensor(pv)?)?;
    let tau_vf = ctx.tau_morphism(k.space(), k.base().space())?;
    let vf = iv
        .compose(k.alpha())?
        .compose(&tau_vf)?
        .compose(&pv.tensor(pf)?)?;
    ff.add(&vv)?.add(&fv)?.sub(&vf)
}

/// The cobracket on `V ⊕ f`: `δ_f` on `f`, and
/// `(ι_V⊗ι_V)δ_V + (id − τ)(ι_f⊗ι_V)λ` on `V`.
pub fn semidirect_cobracket<F: Field>(k: &CrossedLieBialgebra<F>) -> Result<Morphism<F>, LinalgError> {
    let ds = summands(k)?;
    let (iv, iff, pv, pf) = (&ds.inject_left, &ds.inject_right, &ds.project_left, &ds.project_right);
    let g = &ds.space;
    let ctx = k.base().ctx();
    let on_f = iff.tensor(iff)?.compose(k.base().delta())?.compose(pf)?;
    let one_minus_tau = Morphism::identity(&g.tensor(g)?).sub(&ctx.tau_morphism(g, g)?)?;
    let on_v = iv
        .tensor(iv)?
        .compose(k.delta())?
        .add(&one_minus_tau.compose(&iff.tensor(iv)?)?.compose(k.lambda())?)?
        .compose(pv)?;
    on_f.add(&on_v)
}

/// `V ⊕ f` with its semidirect bracket and cobracket, and the canonical
/// retraction onto `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bisum<F: Field> {
    pub algebra: LieBialgebra<F>,
    pub summands: DirectSum<F>,
}

impl<F: Field> Bisum<F> {
    /// `π: V ⊕ f → f`.
    pub fn canonical_pi(&self) -> &Morphism<F> {
        &self.summands.project_right
    }

    /// `γ: f → V ⊕ f`.
    pub fn canonical_gamma(&self) -> &Morphism<F> {
        &self.summands.inject_right
    }
}

/// Builds the bisum without checking that `k` satisfies the crossed axioms.
pub fn bisum_unchecked<F: Field>(k: &CrossedLieBialgebra<F>) -> Result<Bisum<F>, LinalgError> {
    let summands = summands(k)?;
    let algebra = LieBialgebra::new(
        k.base().ctx().clone(),
        summands.space.clone(),
        semidirect_bracket(k)?,
        semidirect_cobracket(k)?,
    )?;
    Ok(Bisum { algebra, summands })
}

/// The bisum Lie bialgebra of `k`. Inputs failing the crossed suite are
/// rejected with their report.
pub fn bisum<F: Field>(k: &CrossedLieBialgebra<F>) -> Result<Bisum<F>, BisumError<F>> {
    let report = k.suite();
    if !report.all_pass() {
        let failures = report.failures().cloned().collect();
        return Err(BisumError::Rejected(failures));
    }
    Ok(bisum_unchecked(k)?)
}

/// A Lie bialgebra `g` written as `k ⊕ f` through
/// `π: g → f`, `γ: f → g`, `κ: k → g` and `ϑ: g → k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiproductPresentation<F: Field> {
    pub g: LieBialgebra<F>,
    pub f: LieBialgebra<F>,
    pub pi: Morphism<F>,
    pub gamma: Morphism<F>,
    pub kappa: Morphism<F>,
    pub vartheta: Morphism<F>,
    pub k_space: GradedSpace,
}

impl<F: Field> BiproductPresentation<F> {
    /// `πγ = id`, `ϑκ = id`, `πκ = 0`, `ϑγ = 0`, `κϑ + γπ = id`.
    pub fn check_identities(&self) -> VerificationReport<F> {
        let (gs, fs, ks) = (self.g.space(), self.f.space(), &self.k_space);
        [
            decomp("biproduct_pi_gamma", || {
                Ok((self.pi.compose(&self.gamma)?, Morphism::identity(fs)))
            }),
            decomp("biproduct_theta_kappa", || {
                Ok((self.vartheta.compose(&self.kappa)?, Morphism::identity(ks)))
            }),
            decomp("biproduct_pi_kappa", || {
                Ok((self.pi.compose(&self.kappa)?, Morphism::zero(ks, fs)))
            }),
            decomp("biproduct_theta_gamma", || {
                Ok((self.vartheta.compose(&self.gamma)?, Morphism::zero(fs, ks)))
            }),
            decomp("biproduct_completeness", || {
                let sum = self
                    .kappa
                    .compose(&self.vartheta)?
                    .add(&self.gamma.compose(&self.pi)?)?;
                Ok((sum, Morphism::identity(gs)))
            }),
        ]
        .into_iter()
        .collect()
    }
}

fn decomp<F: Field>(
    name: &str,
    f: impl FnOnce() -> Result<(Morphism<F>, Morphism<F>), LinalgError>,
) -> ReportEntry<F> {
    ReportEntry::evaluate(name, AxiomGroup::Decomposition, f)
}

/// The split preconditions as report entries, each named by the identity
/// it asserts.
pub fn check_split<F: Field>(
    g: &LieBialgebra<F>,
    f: &LieBialgebra<F>,
    pi: &Morphism<F>,
    gamma: &Morphism<F>,
) -> VerificationReport<F> {
    [
        decomp(SPLIT_IDENTITIES[0], || {
            Ok((pi.compose(gamma)?, Morphism::identity(f.space())))
        }),
        decomp(SPLIT_IDENTITIES[1], || {
            Ok((pi.compose(g.beta())?, f.beta().compose(&pi.tensor(pi)?)?))
        }),
        decomp(SPLIT_IDENTITIES[2], || {
            Ok((pi.tensor(pi)?.compose(g.delta())?, f.delta().compose(pi)?))
        }),
        decomp(SPLIT_IDENTITIES[3], || {
            Ok((gamma.compose(f.beta())?, g.beta().compose(&gamma.tensor(gamma)?)?))
        }),
        decomp(SPLIT_IDENTITIES[4], || {
            Ok((gamma.tensor(gamma)?.compose(f.delta())?, g.delta().compose(gamma)?))
        }),
    ]
    .into_iter()
    .collect()
}

const SPLIT_IDENTITIES: [&str; 5] = [
    "πγ = id",
    "πβ_g = β_f(π⊗π)",
    "(π⊗π)δ_g = δ_fπ",
    "γβ_f = β_g(γ⊗γ)",
    "(γ⊗γ)δ_f = δ_gγ",
];

const SPLIT_VIOLATIONS: [&str; 5] = [
    "πγ ≠ id",
    "πβ_g ≠ β_f(π⊗π)",
    "(π⊗π)δ_g ≠ δ_fπ",
    "γβ_f ≠ β_g(γ⊗γ)",
    "(γ⊗γ)δ_f ≠ δ_gγ",
];

/// Splits `g` along a Lie bialgebra retraction `π: g → f` with section `γ`.
/// The kernel of `π` becomes a crossed Lie bialgebra over `f`.
pub fn split_decompose<F: Field>(
    g: &LieBialgebra<F>,
    f: &LieBialgebra<F>,
    pi: &Morphism<F>,
    gamma: &Morphism<F>,
) -> Result<(BiproductPresentation<F>, CrossedLieBialgebra<F>), DecompositionError> {
    if g.ctx() != f.ctx() {
        return Err(DecompositionError::ContextMismatch);
    }
    crate::lie::expect_shape("pi", pi, g.space(), f.space())?;
    crate::lie::expect_shape("gamma", gamma, f.space(), g.space())?;
    let pre = check_split(g, f, pi, gamma);
    for (entry, violated) in pre.entries.iter().zip(SPLIT_VIOLATIONS) {
        if let Some(e) = &entry.error {
            return Err(DecompositionError::Evaluation(e.clone()));
        }
        if !entry.passed() {
            return Err(DecompositionError::Precondition(violated));
        }
    }

    let (k_space, kappa) = pi.kernel();
    let complement = Morphism::identity(g.space()).sub(&gamma.compose(pi)?)?;
    let vartheta = kappa.solve_injective(&complement)?;

    let alpha = vartheta
        .compose(g.beta())?
        .compose(&gamma.tensor(&kappa)?)?;
    let lambda = pi
        .tensor(&vartheta)?
        .compose(g.delta())?
        .compose(&kappa)?;
    let beta = vartheta.compose(g.beta())?.compose(&kappa.tensor(&kappa)?)?;
    let delta = vartheta
        .tensor(&vartheta)?
        .compose(g.delta())?
        .compose(&kappa)?;
    let module = CrossedModule::new(f.clone(), k_space.clone(), alpha, lambda)?;
    let k = CrossedLieBialgebra::new(module, beta, delta)?;
    let bp = BiproductPresentation {
        g: g.clone(),
        f: f.clone(),
        pi: pi.clone(),
        gamma: gamma.clone(),
        kappa,
        vartheta,
        k_space,
    };
    Ok((bp, k))
}

/// The kernel is a crossed Lie bialgebra, and the semidirect structure on
/// `k ⊕ f` is carried onto `(β_g, δ_g)` by `κ ⊕ γ`.
pub fn check_decomposition_theorem<F: Field>(
    bp: &BiproductPresentation<F>,
    k: &CrossedLieBialgebra<F>,
) -> VerificationReport<F> {
    let mut r = bp.check_identities();
    r.extend_prefixed("kernel", k.suite());
    let reassembled = (|| {
        let ds = summands(k)?;
        let psi = bp
            .kappa
            .compose(&ds.project_left)?
            .add(&bp.gamma.compose(&ds.project_right)?)?;
        Ok::<_, LinalgError>((psi, semidirect_bracket(k)?, semidirect_cobracket(k)?))
    })();
    match reassembled {
        Ok((psi, sb, sd)) => {
            r.push(decomp("reassembled_bracket", || {
                Ok((psi.compose(&sb)?, bp.g.beta().compose(&psi.tensor(&psi)?)?))
            }));
            r.push(decomp("reassembled_cobracket", || {
                Ok((psi.tensor(&psi)?.compose(&sd)?, bp.g.delta().compose(&psi)?))
            }));
        }
        Err(e) => r.push(ReportEntry::errored("reassembled", AxiomGroup::Decomposition, &e)),
    }
    r
}

/// Compares a recovered kernel with the crossed Lie bialgebra `original`
/// whose bisum was split, through `Φ = ϑι_V: V → k`.
pub fn check_round_trip<F: Field>(
    original: &CrossedLieBialgebra<F>,
    bp: &BiproductPresentation<F>,
    recovered: &CrossedLieBialgebra<F>,
) -> VerificationReport<F> {
    let phi = summands(original).and_then(|ds| bp.vartheta.compose(&ds.inject_left));
    let phi = match phi {
        Ok(p) => p,
        Err(e) => {
            return [ReportEntry::errored("round_trip", AxiomGroup::Decomposition, &e)]
                .into_iter()
                .collect()
        }
    };
    let basis_match = (0..phi.source().dim()).all(|j| {
        matches!(phi.column(j), [(i, v)] if *i == j && v.is_one())
    }) && phi.source().dim() == phi.target().dim();
    let id_f = Morphism::identity(original.base().space());
    [
        ReportEntry::predicate(
            "round_trip_identification",
            AxiomGroup::Decomposition,
            basis_match,
            "ϑι_V is not the identity matrix",
        ),
        ReportEntry::predicate(
            "round_trip_base",
            AxiomGroup::Decomposition,
            recovered.base() == original.base(),
            "recovered base differs",
        ),
        decomp("round_trip_alpha", || {
            Ok((
                recovered.alpha().compose(&id_f.tensor(&phi)?)?,
                phi.compose(original.alpha())?,
            ))
        }),
        decomp("round_trip_lambda", || {
            Ok((
                recovered.lambda().compose(&phi)?,
                id_f.tensor(&phi)?.compose(original.lambda())?,
            ))
        }),
        decomp("round_trip_beta", || {
            Ok((
                recovered.beta().compose(&phi.tensor(&phi)?)?,
                phi.compose(original.beta())?,
            ))
        }),
        decomp("round_trip_delta", || {
            Ok((
                recovered.delta().compose(&phi)?,
                phi.tensor(&phi)?.compose(original.delta())?,
            ))
        }),
    ]
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartier::{CartierContext, MultBicharacter};
    use crate::field::Rational;
    use crate::zoo::{jordan_plane, laistrygonian, super_jordan_plane, Example};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn value(m: &Morphism<Rational>, out: &[&str], input: &[&str]) -> Rational {
        let r = m.target().index_of_tensor(out).unwrap();
        let c = m.source().index_of_tensor(input).unwrap();
        m.entry(r, c)
    }

    #[test]
    fn jordan_semidirect_values() {
        let j = jordan_plane::<Rational>().unwrap();
        let b = semidirect_bracket(&j).unwrap();
        assert_eq!(value(&b, &["x1"], &["s", "x2"]), q(1, 1));
        assert_eq!(value(&b, &["x1"], &["x2", "s"]), q(-1, 1));
        assert_eq!(b.nnz(), 2);
        let d = semidirect_cobracket(&j).unwrap();
        let col = d.source().index_of("x2").unwrap();
        assert_eq!(d.column(col).len(), 2);
        assert_eq!(value(&d, &["s", "x2"], &["x2"]), q(1, 1));
        assert_eq!(value(&d, &["x2", "s"], &["x2"]), q(-1, 1));
    }

    #[test]
    fn laistrygonian_semidirect_values() {
        let l1 = laistrygonian::<Rational>(1, q(1, 1)).unwrap();
        let b = semidirect_bracket(&l1).unwrap();
        assert_eq!(value(&b, &["x1"], &["t", "x2"]), q(-1, 2));
        let l0 = laistrygonian::<Rational>(0, q(1, 1)).unwrap();
        let d = semidirect_cobracket(&l0).unwrap();
        let col = d.source().index_of("z0").unwrap();
        assert_eq!(d.column(col).len(), 2);
        assert_eq!(value(&d, &["t", "z0"], &["z0"]), q(1, 1));
        assert_eq!(value(&d, &["z0", "t"], &["z0"]), q(-1, 1));
    }

    #[test]
    fn zero_structures_give_abelian_bisum() {
        let ctx = CartierContext::color(MultBicharacter::<Rational>::trivial(1));
        let f = LieBialgebra::abelian_coabelian(ctx, GradedSpace::zero_space(1)).unwrap();
        let v = GradedSpace::new(1, [("a", crate::Degree::new(vec![1]))]).unwrap();
        let module = CrossedModule::trivial(f, v.clone()).unwrap();
        let vv = v.tensor(&v).unwrap();
        let k = CrossedLieBialgebra::new(module, Morphism::zero(&vv, &v), Morphism::zero(&v, &vv)).unwrap();
        let b = bisum(&k).unwrap();
        assert!(b.algebra.beta().is_zero() && b.algebra.delta().is_zero());
        assert!(b.algebra.ambient_suite().all_pass());
    }

    #[test]
    fn bisums_of_examples_pass() {
        for ex in [Example::<Rational>::Jordan, Example::SuperJordan, Example::laistrygonian(4)] {
            let k = ex.build().unwrap();
            let b = bisum(&k).unwrap();
            let r = b.algebra.ambient_suite();
            assert!(r.all_pass(), "{}\n{r}", ex.name());
        }
    }

    #[test]
    fn wrong_coaction_sign_breaks_bisum() {
        let k = super_jordan_plane::<Rational>().unwrap();
        let flipped = k
            .with_module(k.module().with_lambda(k.lambda().neg()).unwrap())
            .unwrap();
        let good = bisum(&k).unwrap().algebra;
        let twisted = bisum_unchecked(&flipped).unwrap().algebra;
        let bad = good.with_delta(twisted.delta().clone()).unwrap();
        assert!(!bad.ambient_suite().all_pass());
    }

    #[test]
    fn bisum_rejects_broken_input() {
        let j = jordan_plane::<Rational>().unwrap();
        // λ(x2) = 2 s⊗x2 breaks the crossed axiom at s⊗x2.
        let lambda = Morphism::from_entries(
            j.lambda().source(),
            j.lambda().target(),
            [(0, 0, q(1, 1)), (1, 1, q(2, 1))],
        )
        .unwrap();
        let broken = j.with_module(j.module().with_lambda(lambda).unwrap()).unwrap();
        match bisum(&broken) {
            Err(BisumError::Rejected(r)) => assert!(r.get("crossed_axiom").is_some(), "{r}"),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn round_trips() {
        for ex in [Example::<Rational>::Jordan, Example::SuperJordan, Example::laistrygonian(3)] {
            let k = ex.build().unwrap();
            let b = bisum(&k).unwrap();
            let (bp, rec) =
                split_decompose(&b.algebra, k.base(), b.canonical_pi(), b.canonical_gamma()).unwrap();
            let r = check_decomposition_theorem(&bp, &rec);
            assert!(r.all_pass(), "{}\n{r}", ex.name());
            let rt = check_round_trip(&k, &bp, &rec);
            assert!(rt.all_pass(), "{}\n{rt}", ex.name());
        }
    }

    #[test]
    fn identity_split_has_zero_kernel() {
        let k = super_jordan_plane::<Rational>().unwrap();
        let g = bisum(&k).unwrap().algebra;
        let id = Morphism::identity(g.space());
        let (bp, rec) = split_decompose(&g, &g, &id, &id).unwrap();
        assert_eq!(bp.k_space.dim(), 0);
        assert_eq!(rec.space().dim(), 0);
        assert!(check_decomposition_theorem(&bp, &rec).all_pass());
    }

    #[test]
    fn split_preconditions_are_named() {
        let k = jordan_plane::<Rational>().unwrap();
        let b = bisum(&k).unwrap();
        let doubled = b.canonical_gamma().scale(&q(2, 1));
        assert_eq!(
            split_decompose(&b.algebra, k.base(), b.canonical_pi(), &doubled).unwrap_err(),
            DecompositionError::Precondition("πγ ≠ id")
        );
        // A target with a nonzero bracket makes π fail to respect brackets.
        let f = k.base();
        let ff = f.space().tensor(f.space()).unwrap();
        let bent = f
            .with_beta(Morphism::from_entries(&ff, f.space(), [(0, 0, q(1, 1))]).unwrap())
            .unwrap();
        assert_eq!(
            split_decompose(&b.algebra, &bent, b.canonical_pi(), b.canonical_gamma()).unwrap_err(),
            DecompositionError::Precondition("πβ_g ≠ β_f(π⊗π)")
        );
    }
}
