//! Lie modules, comodules and crossed modules over a Lie bialgebra `f`, the
//! exchange maps `ζ`, `α̂`, `λ̂`, and the induced infinitesimal braiding `η̂`.

use crate::cartier::{check_cartier_on, SampledCartier};
use crate::field::Field;
use crate::graded::{GradedSpace, LinalgError, Morphism};
use crate::lie::{expect_shape, LieBialgebra};
use crate::report::{AxiomGroup, ReportEntry, VerificationReport};

/// An object `V` with action `α: f⊗V → V` and coaction `λ: V → f⊗V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule<F: Field> {
    base: LieBialgebra<F>,
    space: GradedSpace,
    alpha: Morphism<F>,
    lambda: Morphism<F>,
}

impl<F: Field> CrossedModule<F> {
    pub fn new(
        base: LieBialgebra<F>,
        space: GradedSpace,
        alpha: Morphism<F>,
        lambda: Morphism<F>,
    ) -> Result<Self, LinalgError> {
        let fv = base.space().tensor(&space)?;
        expect_shape("alpha", &alpha, &fv, &space)?;
        expect_shape("lambda", &lambda, &space, &fv)?;
        Ok(Self {
            base,
            space,
            alpha,
            lambda,
        })
    }

    /// Zero action and zero coaction on `space`.
    pub fn trivial(base: LieBialgebra<F>, space: GradedSpace) -> Result<Self, LinalgError> {
        let fv = base.space().tensor(&space)?;
        let alpha = Morphism::zero(&fv, &space);
        let lambda = Morphism::zero(&space, &fv);
        Self::new(base, space, alpha, lambda)
    }

    /// The monoidal unit: `I` with zero structure.
    pub fn unit(base: LieBialgebra<F>) -> Self {
        let unit = GradedSpace::unit(base.ctx().rank());
        Self::trivial(base, unit).expect("unit object has matching rank")
    }

    pub fn base(&self) -> &LieBialgebra<F> {
        &self.base
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn alpha(&self) -> &Morphism<F> {
        &self.alpha
    }

    pub fn lambda(&self) -> &Morphism<F> {
        &self.lambda
    }

    pub fn with_alpha(&self, alpha: Morphism<F>) -> Result<Self, LinalgError> {
        Self::new(self.base.clone(), self.space.clone(), alpha, self.lambda.clone())
    }

    pub fn with_lambda(&self, lambda: Morphism<F>) -> Result<Self, LinalgError> {
        Self::new(self.base.clone(), self.space.clone(), self.alpha.clone(), lambda)
    }

    fn f(&self) -> &GradedSpace {
        self.base.space()
    }

    fn id_f(&self) -> Morphism<F> {
        Morphism::identity(self.f())
    }

    fn id_v(&self) -> Morphism<F> {
        Morphism::identity(&self.space)
    }

    fn tau_ff(&self) -> Result<Morphism<F>, LinalgError> {
        self.base.ctx().tau_morphism(self.f(), self.f())
    }

    fn same_base(&self, other: &Self) -> Result<(), LinalgError> {
        if self.base != other.base {
            return Err(LinalgError::BaseMismatch);
        }
        Ok(())
    }

    /// The ambient `η_{f,V}`.
    pub fn ambient_eta(&self) -> Result<Morphism<F>, LinalgError> {
        self.base.ctx().eta_morphism(self.f(), &self.space)
    }

    /// `α(β⊗id) = α(id⊗α)(id − τ₁₂)`.
    pub fn check_module(&self) -> ReportEntry<F> {
        ReportEntry::evaluate("module", AxiomGroup::Module, || {
            let amb = [self.f().clone(), self.f().clone(), self.space.clone()];
            let t12 = self.tau_ff()?.leg(1, &amb)?;
            let id3 = Morphism::identity(t12.source());
            let lhs = self.alpha.compose(&self.base.beta().tensor(&self.id_v())?)?;
            let rhs = self
                .alpha
                .compose(&self.id_f().tensor(&self.alpha)?)?
                .compose(&id3.sub(&t12)?)?;
            Ok((lhs, rhs))
        })
    }

    /// `(δ⊗id)λ = (id − τ₁₂)(id⊗λ)λ`.
    pub fn check_comodule(&self) -> ReportEntry<F> {
        ReportEntry::evaluate("comodule", AxiomGroup::Comodule, || {
            let amb = [self.f().clone(), self.f().clone(), self.space.clone()];
            let t12 = self.tau_ff()?.leg(1, &amb)?;
            let id3 = Morphism::identity(t12.source());
            let lhs = self.base.delta().tensor(&self.id_v())?.compose(&self.lambda)?;
            let rhs = id3
                .sub(&t12)?
                .compose(&self.id_f().tensor(&self.lambda)?)?
                .compose(&self.lambda)?;
            Ok((lhs, rhs))
        })
    }

    /// `λα = (β⊗id)(id⊗λ) + (id⊗α)(τ_{f,f}⊗id)(id⊗λ) + (id⊗α)(δ⊗id) − η`
    /// as endomorphisms of `f⊗V`.
    pub fn check_crossed_axiom(&self, eta: &Morphism<F>) -> ReportEntry<F> {
        ReportEntry::evaluate("crossed_axiom", AxiomGroup::Crossed, || {
            let fv = self.alpha.source().clone();
            expect_shape("eta", eta, &fv, &fv)?;
            let id_f = self.id_f();
            let id_v = self.id_v();
            let f_lambda = id_f.tensor(&self.lambda)?;
            let f_alpha = id_f.tensor(&self.alpha)?;
            let lhs = self.lambda.compose(&self.alpha)?;
            let rhs = self
                .base
                .beta()
                .tensor(&id_v)?
                .compose(&f_lambda)?
                .add(&f_alpha.compose(&self.tau_ff()?.tensor(&id_v)?)?.compose(&f_lambda)?)?
                .add(&f_alpha.compose(&self.base.delta().tensor(&id_v)?)?)?
                .sub(eta)?;
            Ok((lhs, rhs))
        })
    }

    pub fn check_crossed_axiom_ambient(&self) -> ReportEntry<F> {
        match self.ambient_eta() {
            Ok(eta) => self.check_crossed_axiom(&eta),
            Err(e) => ReportEntry::errored("crossed_axiom", AxiomGroup::Crossed, &e),
        }
    }

    /// Module, comodule and crossed-module axioms against the ambient `η`.
    pub fn suite(&self) -> VerificationReport<F> {
        [
            self.check_module(),
            self.check_comodule(),
            self.check_crossed_axiom_ambient(),
        ]
        .into_iter()
        .collect()
    }

    /// `V⊗W` with the diagonal action
    /// `α_V⊗id + (id⊗α_W)(τ_{f,V}⊗id)` and the diagonal coaction
    /// `λ_V⊗id + (τ_{V,f}⊗id)(id⊗λ_W)`.
    pub fn tensor(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_base(other)?;
        let ctx = self.base.ctx();
        let id_v = self.id_v();
        let id_w = other.id_v();
        let space = self.space.tensor(&other.space)?;
        let alpha = self.alpha.tensor(&id_w)?.add(
            &id_v
                .tensor(&other.alpha)?
                .compose(&ctx.tau_morphism(self.f(), &self.space)?.tensor(&id_w)?)?,
        )?;
        let lambda = self.lambda.tensor(&id_w)?.add(
            &ctx.tau_morphism(&self.space, self.f())?
                .tensor(&id_w)?
                .compose(&id_v.tensor(&other.lambda)?)?,
        )?;
        Self::new(self.base.clone(), space, alpha, lambda)
    }

    /// Whether `map: V → W` commutes with actions and coactions.
    pub fn check_morphism(&self, target: &Self, map: &Morphism<F>) -> VerificationReport<F> {
        let mut r = VerificationReport::new();
        r.push(ReportEntry::evaluate("morphism_action", AxiomGroup::Module, || {
            self.same_base(target)?;
            expect_shape("map", map, &self.space, &target.space)?;
            Ok((
                target.alpha.compose(&self.id_f().tensor(map)?)?,
                map.compose(&self.alpha)?,
            ))
        }));
        r.push(ReportEntry::evaluate("morphism_coaction", AxiomGroup::Comodule, || {
            self.same_base(target)?;
            expect_shape("map", map, &self.space, &target.space)?;
            Ok((
                target.lambda.compose(map)?,
                self.id_f().tensor(map)?.compose(&self.lambda)?,
            ))
        }));
        r
    }

    /// The structure induced on a subspace through an injective
    /// `inclusion: U → V`; fails unless `U` is closed under `α` and `λ`.
    pub fn restrict(&self, inclusion: &Morphism<F>) -> Result<Self, LinalgError> {
        if inclusion.target() != &self.space {
            return Err(LinalgError::ShapeMismatch {
                op: "restrict",
                left: format!("{}", inclusion.target().dim()),
                right: format!("{}", self.space.dim()),
            });
        }
        let sub = inclusion.source().clone();
        let f_incl = self.id_f().tensor(inclusion)?;
        let alpha = inclusion.solve_injective(&self.alpha.compose(&f_incl)?)?;
        let lambda = f_incl.solve_injective(&self.lambda.compose(inclusion)?)?;
        Self::new(self.base.clone(), sub, alpha, lambda)
    }

    /// `f` is a crossed module over itself via `β` and `δ` exactly when
    /// `η_{f,f} = (id⊗β)(δ⊗id)`.
    pub fn base_is_self_crossed(base: &LieBialgebra<F>) -> ReportEntry<F> {
        ReportEntry::evaluate("base_self_crossed", AxiomGroup::Crossed, || {
            let id = Morphism::identity(base.space());
            let rhs = id.tensor(base.beta())?.compose(&base.delta().tensor(&id)?)?;
            Ok((base.ambient_eta()?, rhs))
        })
    }
}

/// `ζ_{V,W} = (α_W⊗id_V)(id_f⊗τ_{V,W})(λ_V⊗id_W): V⊗W → W⊗V`.
pub fn zeta<F: Field>(v: &CrossedModule<F>, w: &CrossedModule<F>) -> Result<Morphism<F>, LinalgError> {
    v.same_base(w)?;
    let ctx = v.base.ctx();
    w.alpha
        .tensor(&v.id_v())?
        .compose(&v.id_f().tensor(&ctx.tau_morphism(&v.space, &w.space)?)?)?
        .compose(&v.lambda.tensor(&w.id_v())?)
}

/// `α̂_{V,W} = (α_V⊗α_W)(id_f⊗τ_{f,V}⊗id_W)(δ⊗id_{V⊗W}): f⊗V⊗W → V⊗W`.
pub fn hat_alpha<F: Field>(v: &CrossedModule<F>, w: &CrossedModule<F>) -> Result<Morphism<F>, LinalgError> {
    v.same_base(w)?;
    let ctx = v.base.ctx();
    let amb = [v.f().clone(), v.f().clone(), v.space.clone(), w.space.clone()];
    let swap = ctx.tau_morphism(v.f(), &v.space)?.leg(2, &amb)?;
    let id_vw = Morphism::identity(&v.space.tensor(&w.space)?);
    v.alpha
        .tensor(&w.alpha)?
        .compose(&swap)?
        .compose(&v.base.delta().tensor(&id_vw)?)
}

/// `λ̂_{V,W} = (β⊗id_{V⊗W})(id_f⊗τ_{V,f}⊗id_W)(λ_V⊗λ_W): V⊗W → f⊗V⊗W`.
pub fn hat_lambda<F: Field>(v: &CrossedModule<F>, w: &CrossedModule<F>) -> Result<Morphism<F>, LinalgError> {
    v.same_base(w)?;
    let ctx = v.base.ctx();
    let amb = [v.f().clone(), v.space.clone(), v.f().clone(), w.space.clone()];
    let swap = ctx.tau_morphism(&v.space, v.f())?.leg(2, &amb)?;
    let id_vw = Morphism::identity(&v.space.tensor(&w.space)?);
    v.base
        .beta()
        .tensor(&id_vw)?
        .compose(&swap)?
        .compose(&v.lambda.tensor(&w.lambda)?)
}

/// `η̂_{V,W} = ζ_{W,V}τ_{V,W} + τ_{W,V}ζ_{V,W} + η_{V,W}` for a given
/// ambient `η_{V,W}`.
pub fn induced_eta_with<F: Field>(
    v: &CrossedModule<F>,
    w: &CrossedModule<F>,
    eta: &Morphism<F>,
) -> Result<Morphism<F>, LinalgError> {
    let ctx = v.base.ctx();
    let t_vw = ctx.tau_morphism(&v.space, &w.space)?;
    let t_wv = ctx.tau_morphism(&w.space, &v.space)?;
    zeta(w, v)?
        .compose(&t_vw)?
        .add(&t_wv.compose(&zeta(v, w)?)?)?
        .add(eta)
}

/// [`induced_eta_with`] for the ambient `η_{V,W}` of the context.
pub fn induced_eta<F: Field>(v: &CrossedModule<F>, w: &CrossedModule<F>) -> Result<Morphism<F>, LinalgError> {
    let eta = v.base.ctx().eta_morphism(&v.space, &w.space)?;
    induced_eta_with(v, w, &eta)
}

/// The four exchange identities relating `ζ`, `α̂`, `λ̂`, the diagonal
/// structures and the ambient `η`.
pub fn check_zeta_lemma<F: Field>(v: &CrossedModule<F>, w: &CrossedModule<F>) -> VerificationReport<F> {
    let ctx = v.base.ctx();
    let mut r = VerificationReport::new();
    r.push(ReportEntry::evaluate("hat_alpha_symmetry", AxiomGroup::Lemma, || {
        let t = ctx.tau_morphism(&v.space, &w.space)?;
        let lhs = t.compose(&hat_alpha(v, w)?)?;
        let rhs = hat_alpha(w, v)?.compose(&v.id_f().tensor(&t)?)?.neg();
        Ok((lhs, rhs))
    }));
    r.push(ReportEntry::evaluate("hat_lambda_symmetry", AxiomGroup::Lemma, || {
        let t = ctx.tau_morphism(&v.space, &w.space)?;
        let lhs = hat_lambda(w, v)?.compose(&t)?;
        let rhs = v.id_f().tensor(&t)?.compose(&hat_lambda(v, w)?)?.neg();
        Ok((lhs, rhs))
    }));
    r.push(ReportEntry::evaluate("zeta_action_exchange", AxiomGroup::Lemma, || {
        let vw = v.tensor(w)?;
        let wv = w.tensor(v)?;
        let t = ctx.tau_morphism(&v.space, &w.space)?;
        let z = zeta(v, w)?;
        let correction = w
            .alpha
            .tensor(&v.id_v())?
            .compose(&v.id_f().tensor(&t)?)?
            .compose(&v.ambient_eta()?.tensor(&w.id_v())?)?;
        let lhs = z
            .compose(&vw.alpha)?
            .add(&t.compose(&hat_alpha(v, w)?)?)?
            .add(&correction)?;
        let rhs = wv.alpha.compose(&v.id_f().tensor(&z)?)?;
        Ok((lhs, rhs))
    }));
    r.push(ReportEntry::evaluate("zeta_coaction_exchange", AxiomGroup::Lemma, || {
        let vw = v.tensor(w)?;
        let wv = w.tensor(v)?;
        let t = ctx.tau_morphism(&v.space, &w.space)?;
        let z = zeta(v, w)?;
        let correction = w
            .ambient_eta()?
            .tensor(&v.id_v())?
            .compose(&v.id_f().tensor(&t)?)?
            .compose(&v.lambda.tensor(&w.id_v())?)?;
        let lhs = wv
            .lambda
            .compose(&z)?
            .add(&hat_lambda(w, v)?.compose(&t)?)?
            .add(&correction)?;
        let rhs = v.id_f().tensor(&z)?.compose(&vw.lambda)?;
        Ok((lhs, rhs))
    }));
    r
}

/// `η̂_{V,W}` commutes with the diagonal action and coaction on `V⊗W`.
pub fn check_eta_hat_morphism<F: Field>(v: &CrossedModule<F>, w: &CrossedModule<F>) -> VerificationReport<F> {
    let mut r = VerificationReport::new();
    let prepared = v.tensor(w).and_then(|vw| Ok((induced_eta(v, w)?, vw)));
    match prepared {
        Ok((eh, vw)) => {
            r.push(ReportEntry::evaluate("eta_hat_action", AxiomGroup::Lemma, || {
                Ok((
                    eh.compose(&vw.alpha)?,
                    vw.alpha.compose(&vw.id_f().tensor(&eh)?)?,
                ))
            }));
            r.push(ReportEntry::evaluate("eta_hat_coaction", AxiomGroup::Lemma, || {
                Ok((
                    vw.lambda.compose(&eh)?,
                    vw.id_f().tensor(&eh)?.compose(&vw.lambda)?,
                ))
            }));
        }
        Err(e) => r.push(ReportEntry::errored("eta_hat_morphism", AxiomGroup::Lemma, &e)),
    }
    r
}

/// The two expansions of `ζ` on tensor products:
/// `ζ_{X,Y⊗Z} = (id⊗τ_{X,Z})(ζ_{X,Y}⊗id) + (id⊗ζ_{X,Z})(τ_{X,Y}⊗id)` and
/// `ζ_{X⊗Y,Z} = (ζ_{X,Z}⊗id)(id⊗τ_{Y,Z}) + (τ_{X,Z}⊗id)(id⊗ζ_{Y,Z})`.
pub fn check_zeta_tensor<F: Field>(
    x: &CrossedModule<F>,
    y: &CrossedModule<F>,
    z: &CrossedModule<F>,
) -> VerificationReport<F> {
    let ctx = x.base.ctx();
    let mut r = VerificationReport::new();
    r.push(ReportEntry::evaluate("zeta_tensor_right", AxiomGroup::Lemma, || {
        let lhs = zeta(x, &y.tensor(z)?)?;
        let rhs = y
            .id_v()
            .tensor(&ctx.tau_morphism(&x.space, &z.space)?)?
            .compose(&zeta(x, y)?.tensor(&z.id_v())?)?
            .add(
                &y.id_v()
                    .tensor(&zeta(x, z)?)?
                    .compose(&ctx.tau_morphism(&x.space, &y.space)?.tensor(&z.id_v())?)?,
            )?;
        Ok((lhs, rhs))
    }));
    r.push(ReportEntry::evaluate("zeta_tensor_left", AxiomGroup::Lemma, || {
        let lhs = zeta(&x.tensor(y)?, z)?;
        let rhs = zeta(x, z)?
            .tensor(&y.id_v())?
            .compose(&x.id_v().tensor(&ctx.tau_morphism(&y.space, &z.space)?)?)?
            .add(
                &ctx.tau_morphism(&x.space, &z.space)?
                    .tensor(&y.id_v())?
                    .compose(&x.id_v().tensor(&zeta(y, z)?)?)?,
            )?;
        Ok((lhs, rhs))
    }));
    r
}

/// A Lie bialgebra in the category of crossed modules over `f`: a crossed
/// module `V` with bracket `β_V` and cobracket `δ_V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedLieBialgebra<F: Field> {
    module: CrossedModule<F>,
    beta: Morphism<F>,
    delta: Morphism<F>,
}

impl<F: Field> CrossedLieBialgebra<F> {
    pub fn new(module: CrossedModule<F>, beta: Morphism<F>, delta: Morphism<F>) -> Result<Self, LinalgError> {
        // Reuse the shape checks of a plain Lie bialgebra on V.
        LieBialgebra::new(module.base.ctx().clone(), module.space.clone(), beta.clone(), delta.clone())?;
        Ok(Self { module, beta, delta })
    }

    pub fn module(&self) -> &CrossedModule<F> {
        &self.module
    }

    pub fn base(&self) -> &LieBialgebra<F> {
        &self.module.base
    }

    pub fn space(&self) -> &GradedSpace {
        &self.module.space
    }

    pub fn alpha(&self) -> &Morphism<F> {
        &self.module.alpha
    }

    pub fn lambda(&self) -> &Morphism<F> {
        &self.module.lambda
    }

    pub fn beta(&self) -> &Morphism<F> {
        &self.beta
    }

    pub fn delta(&self) -> &Morphism<F> {
        &self.delta
    }

    pub fn with_module(&self, module: CrossedModule<F>) -> Result<Self, LinalgError> {
        Self::new(module, self.beta.clone(), self.delta.clone())
    }

    pub fn with_beta(&self, beta: Morphism<F>) -> Result<Self, LinalgError> {
        Self::new(self.module.clone(), beta, self.delta.clone())
    }

    pub fn with_delta(&self, delta: Morphism<F>) -> Result<Self, LinalgError> {
        Self::new(self.module.clone(), self.beta.clone(), delta)
    }

    /// `(V, β_V, δ_V)` as a Lie bialgebra in the ambient category.
    pub fn as_lie_bialgebra(&self) -> LieBialgebra<F> {
        LieBialgebra::new(
            self.base().ctx().clone(),
            self.space().clone(),
            self.beta.clone(),
            self.delta.clone(),
        )
        .expect("shapes were validated at construction")
    }

    /// `η̂_{V,V}`.
    pub fn eta_hat(&self) -> Result<Morphism<F>, LinalgError> {
        induced_eta(&self.module, &self.module)
    }

    /// `β_V` and `δ_V` are morphisms of crossed modules.
    pub fn check_structure_morphisms(&self) -> VerificationReport<F> {
        let m = &self.module;
        let mut r = VerificationReport::new();
        let vv = match m.tensor(m) {
            Ok(vv) => vv,
            Err(e) => {
                r.push(ReportEntry::errored("structure_morphisms", AxiomGroup::Crossed, &e));
                return r;
            }
        };
        let id_f = m.id_f();
        r.push(ReportEntry::evaluate("beta_respects_action", AxiomGroup::Crossed, || {
            Ok((
                self.beta.compose(&vv.alpha)?,
                m.alpha.compose(&id_f.tensor(&self.beta)?)?,
            ))
        }));
        r.push(ReportEntry::evaluate("beta_respects_coaction", AxiomGroup::Crossed, || {
            Ok((
                m.lambda.compose(&self.beta)?,
                id_f.tensor(&self.beta)?.compose(&vv.lambda)?,
            ))
        }));
        r.push(ReportEntry::evaluate("delta_respects_action", AxiomGroup::Crossed, || {
            Ok((
                self.delta.compose(&m.alpha)?,
                vv.alpha.compose(&id_f.tensor(&self.delta)?)?,
            ))
        }));
        r.push(ReportEntry::evaluate("delta_respects_coaction", AxiomGroup::Crossed, || {
            Ok((
                vv.lambda.compose(&self.delta)?,
                id_f.tensor(&self.delta)?.compose(&m.lambda)?,
            ))
        }));
        r
    }

    /// Everything: the base as an ambient Lie bialgebra, the crossed-module
    /// axioms on `V`, `β_V`/`δ_V` as crossed-module morphisms, the curved
    /// bialgebra axioms of `V` against `η̂`, and the exchange lemma.
    pub fn suite(&self) -> VerificationReport<F> {
        let mut r = VerificationReport::new();
        r.extend_prefixed("base", self.base().ambient_suite());
        r.extend(self.module.suite());
        r.extend(self.check_structure_morphisms());
        match self.eta_hat() {
            Ok(eh) => r.extend(self.as_lie_bialgebra().suite(&eh)),
            Err(e) => r.push(ReportEntry::errored("eta_hat", AxiomGroup::Bialgebra, &e)),
        }
        r.extend(check_zeta_lemma(&self.module, &self.module));
        r.extend(check_eta_hat_morphism(&self.module, &self.module));
        r
    }

    /// Tests a subspace `inclusion: U → V`: closure under action and
    /// coaction, being a Lie ideal, and `δ_V` vanishing on it.
    pub fn check_subobject(&self, inclusion: &Morphism<F>) -> VerificationReport<F> {
        let m = &self.module;
        let mut r = VerificationReport::new();
        let closed = |name: &str, group, res: Result<Morphism<F>, LinalgError>| match res {
            Ok(_) => ReportEntry::pass(name, group),
            Err(e) => ReportEntry::errored(name, group, &e),
        };
        let f_incl = m.id_f().tensor(inclusion);
        r.push(closed(
            "sub_action_closed",
            AxiomGroup::Module,
            f_incl
                .clone()
                .and_then(|fi| inclusion.solve_injective(&m.alpha.compose(&fi)?)),
        ));
        r.push(closed(
            "sub_coaction_closed",
            AxiomGroup::Comodule,
            f_incl.and_then(|fi| fi.solve_injective(&m.lambda.compose(inclusion)?)),
        ));
        let id_v = m.id_v();
        r.push(closed(
            "sub_left_ideal",
            AxiomGroup::Lie,
            id_v.tensor(inclusion)
                .and_then(|x| inclusion.solve_injective(&self.beta.compose(&x)?)),
        ));
        r.push(closed(
            "sub_right_ideal",
            AxiomGroup::Lie,
            inclusion
                .tensor(&id_v)
                .and_then(|x| inclusion.solve_injective(&self.beta.compose(&x)?)),
        ));
        r.push(match self.delta.compose(inclusion) {
            Ok(d) => ReportEntry::from_residual("sub_cobracket_vanishes", AxiomGroup::CoLie, &d),
            Err(e) => ReportEntry::errored("sub_cobracket_vanishes", AxiomGroup::CoLie, &e),
        });
        r
    }
}

/// A named object of the crossed-module category, for sampled checks.
#[derive(Debug, Clone)]
pub struct Sample<F: Field> {
    pub name: String,
    pub module: CrossedModule<F>,
}

impl<F: Field> Sample<F> {
    pub fn new(name: impl Into<String>, module: CrossedModule<F>) -> Self {
        Self {
            name: name.into(),
            module,
        }
    }
}

/// A morphism `map: samples[from] → samples[to]` of crossed modules.
#[derive(Debug, Clone)]
pub struct SampleMorphism<F: Field> {
    pub from: usize,
    pub to: usize,
    pub map: Morphism<F>,
}

struct CrossedCategory<F: Field> {
    base: LieBialgebra<F>,
}

impl<F: Field> SampledCartier<F> for CrossedCategory<F> {
    type Object = Sample<F>;

    fn name(&self, x: &Sample<F>) -> String {
        x.name.clone()
    }
    fn space(&self, x: &Sample<F>) -> GradedSpace {
        x.module.space.clone()
    }
    fn unit(&self) -> Sample<F> {
        Sample::new("I", CrossedModule::unit(self.base.clone()))
    }
    fn tensor(&self, x: &Sample<F>, y: &Sample<F>) -> Result<Sample<F>, LinalgError> {
        Ok(Sample::new(
            format!("{}⊗{}", x.name, y.name),
            x.module.tensor(&y.module)?,
        ))
    }
    fn tau(&self, x: &Sample<F>, y: &Sample<F>) -> Result<Morphism<F>, LinalgError> {
        self.base.ctx().tau_morphism(&x.module.space, &y.module.space)
    }
    fn eta(&self, x: &Sample<F>, y: &Sample<F>) -> Result<Morphism<F>, LinalgError> {
        induced_eta(&x.module, &y.module)
    }
}

/// Checks that crossed modules with `η̂` form a Cartier category on the
/// given samples: hexagons and `η̂τ = τη̂` on the triples accepted by `keep`,
/// the tensor expansions of `ζ`, and naturality of `ζ` and `η̂` along every
/// listed morphism.
pub fn check_induced_cartier<F: Field>(
    samples: &[Sample<F>],
    morphisms: &[SampleMorphism<F>],
    keep: impl Fn(usize, usize, usize) -> bool,
) -> VerificationReport<F> {
    let mut r = VerificationReport::new();
    let Some(first) = samples.first() else {
        return r;
    };
    let base = first.module.base.clone();
    if let Some(bad) = samples.iter().find(|s| s.module.base != base) {
        r.push(ReportEntry::errored(
            format!("samples[{}]", bad.name),
            AxiomGroup::Cartier,
            &LinalgError::BaseMismatch,
        ));
        return r;
    }
    let cat = CrossedCategory { base };
    r.extend(check_cartier_on(&cat, samples, &keep));

    let n = samples.len();
    let mut zeta_entries = VerificationReport::new();
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !keep(i, j, k) {
                    continue;
                }
                let rep = check_zeta_tensor(&samples[i].module, &samples[j].module, &samples[k].module);
                let first_bad = rep.failures().next().cloned();
                if let Some(mut bad) = first_bad {
                    bad.axiom = format!(
                        "{}[{},{},{}]",
                        bad.axiom, samples[i].name, samples[j].name, samples[k].name
                    );
                    zeta_entries.push(bad);
                    break 'outer;
                }
            }
        }
    }
    if zeta_entries.entries.is_empty() {
        zeta_entries.push(ReportEntry::pass("zeta_tensor_expansions", AxiomGroup::Lemma));
    }
    r.extend(zeta_entries);

    for (idx, m) in morphisms.iter().enumerate() {
        let (a, b) = (&samples[m.from], &samples[m.to]);
        let tag = format!("{}→{}", a.name, b.name);
        for e in a.module.check_morphism(&b.module, &m.map).entries {
            r.push(ReportEntry {
                axiom: format!("{}[{idx}:{tag}]", e.axiom),
                ..e
            });
        }
        let mut first_failure: Option<ReportEntry<F>> = None;
        for w in samples {
            let checks = naturality_checks(&a.module, &b.module, &w.module, &m.map);
            if let Some(bad) = checks.into_iter().find(|e| !e.passed()) {
                first_failure = Some(ReportEntry {
                    axiom: format!("{}[{idx}:{tag},{}]", bad.axiom, w.name),
                    ..bad
                });
                break;
            }
        }
        r.push(first_failure.unwrap_or_else(|| {
            ReportEntry::pass(format!("naturality[{idx}:{tag}]"), AxiomGroup::Cartier)
        }));
    }
    r
}

/// `ζ` and `η̂` are natural in each slot along `f: A → B`, with `W` in the
/// other slot.
fn naturality_checks<F: Field>(
    a: &CrossedModule<F>,
    b: &CrossedModule<F>,
    w: &CrossedModule<F>,
    f: &Morphism<F>,
) -> Vec<ReportEntry<F>> {
    let id_w = Morphism::identity(&w.space);
    vec![
        ReportEntry::evaluate("zeta_natural_left", AxiomGroup::Lemma, || {
            Ok((
                zeta(b, w)?.compose(&f.tensor(&id_w)?)?,
                id_w.tensor(f)?.compose(&zeta(a, w)?)?,
            ))
        }),
        ReportEntry::evaluate("zeta_natural_right", AxiomGroup::Lemma, || {
            Ok((
                zeta(w, b)?.compose(&id_w.tensor(f)?)?,
                f.tensor(&id_w)?.compose(&zeta(w, a)?)?,
            ))
        }),
        ReportEntry::evaluate("eta_hat_natural_left", AxiomGroup::Cartier, || {
            let ff = f.tensor(&id_w)?;
            Ok((induced_eta(b, w)?.compose(&ff)?, ff.compose(&induced_eta(a, w)?)?))
        }),
        ReportEntry::evaluate("eta_hat_natural_right", AxiomGroup::Cartier, || {
            let ff = id_w.tensor(f)?;
            Ok((induced_eta(w, b)?.compose(&ff)?, ff.compose(&induced_eta(w, a)?)?))
        }),
    ]
}
