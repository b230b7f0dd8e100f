//! Lie algebras, Lie coalgebras and curved Lie bialgebras in a color
//! category, with exact axiom checkers.

use crate::cartier::CartierContext;
use crate::field::Field;
use crate::graded::{GradedSpace, LinalgError, Morphism};
use crate::report::{AxiomGroup, ReportEntry, VerificationReport};

/// A graded space with bracket `β: g⊗g → g` and cobracket `δ: g → g⊗g`.
/// Nothing beyond the shapes is assumed; run the checkers for validity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieBialgebra<F: Field> {
    ctx: CartierContext<F>,
    space: GradedSpace,
    beta: Morphism<F>,
    delta: Morphism<F>,
}

impl<F: Field> LieBialgebra<F> {
    pub fn new(
        ctx: CartierContext<F>,
        space: GradedSpace,
        beta: Morphism<F>,
        delta: Morphism<F>,
    ) -> Result<Self, LinalgError> {
        if space.rank() != ctx.rank() {
            return Err(LinalgError::RankMismatch(ctx.rank(), space.rank()));
        }
        let sq = space.tensor(&space)?;
        expect_shape("beta", &beta, &sq, &space)?;
        expect_shape("delta", &delta, &space, &sq)?;
        Ok(Self {
            ctx,
            space,
            beta,
            delta,
        })
    }

    /// Zero bracket and zero cobracket.
    pub fn abelian_coabelian(ctx: CartierContext<F>, space: GradedSpace) -> Result<Self, LinalgError> {
        let sq = space.tensor(&space)?;
        let beta = Morphism::zero(&sq, &space);
        let delta = Morphism::zero(&space, &sq);
        Self::new(ctx, space, beta, delta)
    }

    pub fn ctx(&self) -> &CartierContext<F> {
        &self.ctx
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn beta(&self) -> &Morphism<F> {
        &self.beta
    }

    pub fn delta(&self) -> &Morphism<F> {
        &self.delta
    }

    pub fn with_beta(&self, beta: Morphism<F>) -> Result<Self, LinalgError> {
        Self::new(self.ctx.clone(), self.space.clone(), beta, self.delta.clone())
    }

    pub fn with_delta(&self, delta: Morphism<F>) -> Result<Self, LinalgError> {
        Self::new(self.ctx.clone(), self.space.clone(), self.beta.clone(), delta)
    }

    fn square(&self) -> GradedSpace {
        self.beta.source().clone()
    }

    fn id(&self) -> Morphism<F> {
        Morphism::identity(&self.space)
    }

    fn tau(&self) -> Result<Morphism<F>, LinalgError> {
        self.ctx.tau_morphism(&self.space, &self.space)
    }

    fn id_sq(&self) -> Morphism<F> {
        Morphism::identity(&self.square())
    }

    fn cube(&self) -> [GradedSpace; 3] {
        [self.space.clone(), self.space.clone(), self.space.clone()]
    }

    /// The ambient infinitesimal braiding `η_{g,g}`.
    pub fn ambient_eta(&self) -> Result<Morphism<F>, LinalgError> {
        self.ctx.eta_morphism(&self.space, &self.space)
    }

    /// `β(id + τ) = 0`.
    pub fn check_antisymmetry(&self) -> ReportEntry<F> {
        ReportEntry::evaluate("antisymmetry", AxiomGroup::Lie, || {
            let lhs = self.beta.compose(&self.id_sq().add(&self.tau()?)?)?;
            Ok((lhs.clone(), Morphism::zero(lhs.source(), lhs.target())))
        })
    }

    /// `β(β⊗id − (id⊗β)(id − τ₁₂)) = 0`.
    pub fn check_jacobi(&self) -> ReportEntry<F> {
        ReportEntry::evaluate("jacobi", AxiomGroup::Lie, || {
            let amb = self.cube();
            let t12 = self.tau()?.leg(1, &amb)?;
            let id3 = Morphism::identity(t12.source());
            let b1 = self.beta.tensor(&self.id())?;
            let b2 = self.id().tensor(&self.beta)?;
            let inner = b1.sub(&b2.compose(&id3.sub(&t12)?)?)?;
            let lhs = self.beta.compose(&inner)?;
            Ok((lhs.clone(), Morphism::zero(lhs.source(), lhs.target())))
        })
    }

    /// `β(id⊗β)(id + τ₂₃τ₁₂ + τ₁₂τ₂₃) = 0`.
    pub fn check_jacobi_equivalent_form(&self) -> ReportEntry<F> {
        ReportEntry::evaluate("jacobi_equivalent_form", AxiomGroup::Lie, || {
            let amb = self.cube();
            let t = self.tau()?;
            let t12 = t.leg(1, &amb)?;
            let t23 = t.leg(2, &amb)?;
            let id3 = Morphism::identity(t12.source());
            let cyc = id3.add(&t23.compose(&t12)?)?.add(&t12.compose(&t23)?)?;
            let lhs = self
                .beta
                .compose(&self.id().tensor(&self.beta)?)?
                .compose(&cyc)?;
            Ok((lhs.clone(), Morphism::zero(lhs.source(), lhs.target())))
        })
    }

    /// `(id + τ)δ = 0`.
    pub fn check_coantisymmetry(&self) -> ReportEntry<F> {
        ReportEntry::evaluate("coantisymmetry", AxiomGroup::CoLie, || {
            let lhs = self.id_sq().add(&self.tau()?)?.compose(&self.delta)?;
            Ok((lhs.clone(), Morphism::zero(lhs.source(), lhs.target())))
        })
    }

    /// `(δ⊗id − (id − τ₁₂)(id⊗δ))δ = 0`.
    pub fn check_cojacobi(&self) -> ReportEntry<F> {
        ReportEntry::evaluate("cojacobi", AxiomGroup::CoLie, || {
            let amb = self.cube();
            let t12 = self.tau()?.leg(1, &amb)?;
            let id3 = Morphism::identity(t12.source());
            let d1 = self.delta.tensor(&self.id())?;
            let d2 = self.id().tensor(&self.delta)?;
            let outer = d1.sub(&id3.sub(&t12)?.compose(&d2)?)?;
            let lhs = outer.compose(&self.delta)?;
            Ok((lhs.clone(), Morphism::zero(lhs.source(), lhs.target())))
        })
    }

    fn check_eta_shape(&self, eta: &Morphism<F>) -> Result<(), LinalgError> {
        let sq = self.square();
        expect_shape("eta", eta, &sq, &sq)
    }

    /// `δβ = (id − τ)(β⊗id)(id⊗τ)(δ⊗id)(id − τ) + (τ − id)η`.
    pub fn check_bialgebra_compatibility(&self, eta: &Morphism<F>) -> ReportEntry<F> {
        ReportEntry::evaluate("bialgebra_compatibility", AxiomGroup::Bialgebra, || {
            self.check_eta_shape(eta)?;
            let t = self.tau()?;
            let id = self.id();
            let id_sq = self.id_sq();
            let one_minus_t = id_sq.sub(&t)?;
            let lhs = self.delta.compose(&self.beta)?;
            let mid = self
                .beta
                .tensor(&id)?
                .compose(&id.tensor(&t)?)?
                .compose(&self.delta.tensor(&id)?)?;
            let rhs = one_minus_t
                .compose(&mid)?
                .compose(&one_minus_t)?
                .add(&t.sub(&id_sq)?.compose(eta)?)?;
            Ok((lhs, rhs))
        })
    }

    /// The expanded form:
    /// `δβ = (β⊗id)(id⊗δ) + (id⊗β)(τ⊗id)(id⊗δ) + (id⊗β)(δ⊗id)
    ///      + (β⊗id)(id⊗τ)(δ⊗id) + (τ − id)η`.
    pub fn check_bialgebra_equivalent_form(&self, eta: &Morphism<F>) -> ReportEntry<F> {
        ReportEntry::evaluate("bialgebra_equivalent_form", AxiomGroup::Bialgebra, || {
            self.check_eta_shape(eta)?;
            let t = self.tau()?;
            let id = self.id();
            let b_l = self.beta.tensor(&id)?;
            let b_r = id.tensor(&self.beta)?;
            let d_l = self.delta.tensor(&id)?;
            let d_r = id.tensor(&self.delta)?;
            let lhs = self.delta.compose(&self.beta)?;
            let rhs = b_l
                .compose(&d_r)?
                .add(&b_r.compose(&t.tensor(&id)?)?.compose(&d_r)?)?
                .add(&b_r.compose(&d_l)?)?
                .add(&b_l.compose(&id.tensor(&t)?)?.compose(&d_l)?)?
                .add(&t.sub(&self.id_sq())?.compose(eta)?)?;
            Ok((lhs, rhs))
        })
    }

    /// Lie algebra axioms plus the agreement of the two Jacobi forms on
    /// antisymmetric brackets.
    pub fn lie_suite(&self) -> VerificationReport<F> {
        let anti = self.check_antisymmetry();
        let jac = self.check_jacobi();
        let jac2 = self.check_jacobi_equivalent_form();
        let agree = !anti.passed() || jac.passed() == jac2.passed();
        let mut r = VerificationReport::new();
        r.push(anti);
        r.push(jac);
        r.push(jac2);
        r.push(ReportEntry::predicate(
            "jacobi_forms_agree",
            AxiomGroup::Lie,
            agree,
            "the two Jacobi forms disagree on an antisymmetric bracket",
        ));
        r
    }

    pub fn colie_suite(&self) -> VerificationReport<F> {
        [self.check_coantisymmetry(), self.check_cojacobi()]
            .into_iter()
            .collect()
    }

    /// The complete curved Lie bialgebra suite relative to `eta`.
    pub fn suite(&self, eta: &Morphism<F>) -> VerificationReport<F> {
        let mut r = self.lie_suite();
        r.extend(self.colie_suite());
        let c1 = self.check_bialgebra_compatibility(eta);
        let c2 = self.check_bialgebra_equivalent_form(eta);
        let antis = r.get("antisymmetry").is_some_and(ReportEntry::passed)
            && r.get("coantisymmetry").is_some_and(ReportEntry::passed);
        let agree = !antis || c1.passed() == c2.passed();
        r.push(c1);
        r.push(c2);
        r.push(ReportEntry::predicate(
            "bialgebra_forms_agree",
            AxiomGroup::Bialgebra,
            agree,
            "the two compatibility forms disagree on an antisymmetric structure",
        ));
        r
    }

    /// The suite relative to the ambient `η_{g,g}`.
    pub fn ambient_suite(&self) -> VerificationReport<F> {
        match self.ambient_eta() {
            Ok(eta) => self.suite(&eta),
            Err(e) => [ReportEntry::errored("ambient_eta", AxiomGroup::Bialgebra, &e)]
                .into_iter()
                .collect(),
        }
    }
}

pub(crate) fn expect_shape<F: Field>(
    name: &'static str,
    m: &Morphism<F>,
    source: &GradedSpace,
    target: &GradedSpace,
) -> Result<(), LinalgError> {
    if m.source() != source || m.target() != target {
        return Err(LinalgError::ShapeMismatch {
            op: name,
            left: format!("{}→{}", m.source().dim(), m.target().dim()),
            right: format!("{}→{}", source.dim(), target.dim()),
        });
    }
    Ok(())
}
