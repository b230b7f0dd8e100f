//! The Jordan plane, the super Jordan plane and the Laistrygonian family,
//! together with their distinguished subobjects and the closed-form
//! identities they are known to satisfy.

use crate::cartier::{BicharacterError, CartierContext, MultBicharacter};
use crate::crossed::{induced_eta, CrossedLieBialgebra, CrossedModule};
use crate::field::Field;
use crate::graded::{Degree, GradedSpace, LinalgError, Morphism};
use crate::lie::LieBialgebra;
use crate::report::{AxiomGroup, ReportEntry, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZooError {
    #[error("this example needs a field of characteristic different from 2")]
    CharacteristicTwo,
    #[error("χ(g, h) must be nonzero")]
    ZeroCharacter,
    #[error(transparent)]
    Bicharacter(#[from] BicharacterError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Builds a map from `(target tensor labels, source tensor labels, value)`
/// triples.
fn map<F: Field>(
    source: &GradedSpace,
    target: &GradedSpace,
    entries: impl IntoIterator<Item = (Vec<String>, Vec<String>, F)>,
) -> Result<Morphism<F>, LinalgError> {
    let find = |space: &GradedSpace, parts: &[String]| {
        let refs: Vec<&str> = parts.iter().map(String::as_str).collect();
        space
            .index_of_tensor(&refs)
            .ok_or_else(|| LinalgError::InvalidLabel(parts.join("⊗")))
    };
    let mut triples = Vec::new();
    for (t, s, v) in entries {
        triples.push((find(target, &t)?, find(source, &s)?, v));
    }
    Morphism::from_entries(source, target, triples)
}

fn labels(parts: &[&str]) -> Vec<String> {
    parts.iter().map(|s| s.to_string()).collect()
}

/// A zero-bracket, zero-cobracket Lie bialgebra on basis `e0, e1, ...`
/// with the given degrees.
pub fn abelian_coabelian<F: Field>(
    degrees: &[Degree],
    ctx: CartierContext<F>,
) -> Result<LieBialgebra<F>, LinalgError> {
    let space = GradedSpace::new(
        ctx.rank(),
        degrees.iter().enumerate().map(|(i, d)| (format!("e{i}"), d.clone())),
    )?;
    LieBialgebra::abelian_coabelian(ctx, space)
}

fn base_on<F: Field>(ctx: &CartierContext<F>, names: &[&str]) -> Result<LieBialgebra<F>, LinalgError> {
    let r = ctx.rank();
    let f = GradedSpace::new(r, names.iter().map(|n| (n.to_string(), Degree::zero(r))))?;
    LieBialgebra::abelian_coabelian(ctx.clone(), f)
}

/// Inclusion of the span of the named basis vectors.
pub fn span_inclusion<F: Field>(v: &GradedSpace, names: &[&str]) -> Result<Morphism<F>, LinalgError> {
    let mut basis = Vec::new();
    for n in names {
        let i = v
            .index_of(n)
            .ok_or_else(|| LinalgError::InvalidLabel(n.to_string()))?;
        basis.push((n.to_string(), v.degree(i).clone()));
    }
    let sub = GradedSpace::new(v.rank(), basis)?;
    map(
        &sub,
        v,
        names.iter().map(|n| (labels(&[n]), labels(&[n]), F::one())),
    )
}

/// The examples, as data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Example<F: Field> {
    Jordan,
    SuperJordan,
    Laistrygonian { big_g: usize, chi_gh: F },
}

impl<F: Field> Example<F> {
    pub fn laistrygonian(big_g: usize) -> Self {
        Example::Laistrygonian {
            big_g,
            chi_gh: F::one(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Example::Jordan => "jordan".into(),
            Example::SuperJordan => "superjordan".into(),
            Example::Laistrygonian { big_g, chi_gh } if chi_gh.is_one() => format!("laistrygonian[G={big_g}]"),
            Example::Laistrygonian { big_g, chi_gh } => {
                format!("laistrygonian[G={big_g},chi_gh={}]", chi_gh.canonical())
            }
        }
    }

    pub fn build(&self) -> Result<CrossedLieBialgebra<F>, ZooError> {
        match self {
            Example::Jordan => Ok(jordan_plane()?),
            Example::SuperJordan => Ok(super_jordan_plane()?),
            Example::Laistrygonian { big_g, chi_gh } => laistrygonian(*big_g, chi_gh.clone()),
        }
    }

    /// Distinguished sub-crossed-modules, as inclusions into the example.
    pub fn subobjects(&self) -> Vec<(String, Vec<String>)> {
        let own = |v: &[&str]| labels(v);
        match self {
            Example::Jordan => vec![("x1".into(), own(&["x1"]))],
            Example::SuperJordan => vec![
                ("x21".into(), own(&["x21"])),
                ("x11+x21".into(), own(&["x11", "x21"])),
            ],
            Example::Laistrygonian { big_g, .. } => {
                let mut l0 = vec!["x1".to_string()];
                l0.extend((0..=*big_g).map(|k| format!("z{k}")));
                vec![("L0".into(), l0), ("x1+x2".into(), own(&["x1", "x2"]))]
            }
        }
    }

    pub fn subobject_inclusions(&self, v: &GradedSpace) -> Result<Vec<(String, Morphism<F>)>, LinalgError> {
        self.subobjects()
            .into_iter()
            .map(|(name, basis)| {
                let refs: Vec<&str> = basis.iter().map(String::as_str).collect();
                Ok((name, span_inclusion(v, &refs)?))
            })
            .collect()
    }

    /// The closed-form identities known for this example, evaluated on
    /// `structure` (which may be a perturbed copy) and compared with
    /// values computed directly from the defining formulas.
    pub fn stated_identities(&self, structure: &CrossedLieBialgebra<F>) -> VerificationReport<F> {
        let res = match self {
            Example::Jordan => jordan_identities(structure),
            Example::SuperJordan => super_jordan_identities(structure),
            Example::Laistrygonian { big_g, chi_gh } => laistrygonian_identities(structure, *big_g, chi_gh),
        };
        res.unwrap_or_else(|e| {
            [ReportEntry::errored("stated", AxiomGroup::Identity, &e)]
                .into_iter()
                .collect()
        })
    }

    /// The full crossed suite followed by the stated identities.
    pub fn suite(&self, structure: &CrossedLieBialgebra<F>) -> VerificationReport<F> {
        let mut r = structure.suite();
        r.extend_prefixed("stated", self.stated_identities(structure));
        r
    }
}

/// `f = k s` in degree zero, `J = span{x1, x2}` in degree `g`,
/// `χ(g, g) = 1`, `λ(x) = s⊗x`, `s·x2 = x1`, zero bracket and cobracket.
pub fn jordan_plane<F: Field>() -> Result<CrossedLieBialgebra<F>, LinalgError> {
    let ctx = CartierContext::color(MultBicharacter::trivial(1));
    let base = base_on(&ctx, &["s"])?;
    let g = Degree::new(vec![1]);
    let j = GradedSpace::new(1, [("x1", g.clone()), ("x2", g)])?;
    let fj = base.space().tensor(&j)?;
    let alpha = map(&fj, &j, [(labels(&["x1"]), labels(&["s", "x2"]), F::one())])?;
    let lambda = map(
        &j,
        &fj,
        ["x1", "x2"].map(|x| (labels(&["s", x]), labels(&[x]), F::one())),
    )?;
    let module = CrossedModule::new(base, j.clone(), alpha, lambda)?;
    let jj = j.tensor(&j)?;
    CrossedLieBialgebra::new(module, Morphism::zero(&jj, &j), Morphism::zero(&j, &jj))
}

fn sj(i: usize, j: usize) -> String {
    format!("x{i}{j}")
}

/// `χ(g, g) = −1`, `J⁻ = span{x_ij}` with `x_ij` in degree `g^i`,
/// `λ(x_ij) = i s⊗x_ij`, `s·x_ij = x_{i,j−1}`,
/// `β(x_1i⊗x_1j) = (i+j−2) x_{2,i+j−2}`, `δ(x_2i) = (τ − id)(x11⊗x_1i)`.
pub fn super_jordan_plane<F: Field>() -> Result<CrossedLieBialgebra<F>, LinalgError> {
    let tau = MultBicharacter::new(vec![vec![-F::one()]]).expect("−1 is a valid sign");
    let ctx = CartierContext::color(tau);
    let base = base_on(&ctx, &["s"])?;
    let idx = [(1, 1), (1, 2), (2, 1), (2, 2)];
    let v = GradedSpace::new(
        1,
        idx.iter().map(|&(i, j)| (sj(i, j), Degree::new(vec![i as i64]))),
    )?;
    let fv = base.space().tensor(&v)?;
    let n = |k: usize| F::from_int(k as i64);
    let alpha = map(
        &fv,
        &v,
        [(1, 2), (2, 2)].map(|(i, j)| (vec![sj(i, j - 1)], vec!["s".into(), sj(i, j)], F::one())),
    )?;
    let lambda = map(
        &v,
        &fv,
        idx.map(|(i, j)| (vec!["s".into(), sj(i, j)], vec![sj(i, j)], n(i))),
    )?;
    let module = CrossedModule::new(base, v.clone(), alpha, lambda)?;
    let vv = v.tensor(&v)?;
    let mut bracket = Vec::new();
    for i in 1..=2 {
        for j in 1..=2 {
            let c = i + j - 2;
            if c > 0 {
                bracket.push((vec![sj(2, c)], vec![sj(1, i), sj(1, j)], n(c)));
            }
        }
    }
    let beta = map(&vv, &v, bracket)?;
    let mut cobracket = Vec::new();
    for i in 1..=2 {
        // (τ − id)(x11⊗x1i) = −x1i⊗x11 − x11⊗x1i
        cobracket.push((vec![sj(1, 1), sj(1, i)], vec![sj(2, i)], -F::one()));
        cobracket.push((vec![sj(1, i), sj(1, 1)], vec![sj(2, i)], -F::one()));
    }
    let delta = map(&v, &vv, cobracket)?;
    CrossedLieBialgebra::new(module, beta, delta)
}

fn z(k: usize) -> String {
    format!("z{k}")
}

fn half<F: Field>() -> Result<F, ZooError> {
    F::from_int(2).inverse().ok_or(ZooError::CharacteristicTwo)
}

/// The Laistrygonian Lie bialgebra for `𝒢 = big_g` over the grading group
/// `Z²` with `χ(g,g) = χ(h,h) = 1` and `χ(g,h) = chi_gh`.
pub fn laistrygonian<F: Field>(big_g: usize, chi_gh: F) -> Result<CrossedLieBialgebra<F>, ZooError> {
    let half = half::<F>()?;
    let inv = chi_gh.inverse().ok_or(ZooError::ZeroCharacter)?;
    let tau = MultBicharacter::new(vec![vec![F::one(), chi_gh], vec![inv, F::one()]])?;
    let ctx = CartierContext::color(tau.clone());
    let base = base_on(&ctx, &["s", "t"])?;
    let g = Degree::new(vec![1, 0]);
    let zdeg = |k: usize| Degree::new(vec![k as i64, 1]);
    let mut basis = vec![("x1".to_string(), g.clone()), ("x2".to_string(), g.clone())];
    basis.extend((0..=big_g).map(|k| (z(k), zdeg(k))));
    let v = GradedSpace::new(2, basis)?;
    let fv = base.space().tensor(&v)?;
    let n = |k: i64| F::from_int(k);
    let gg = n(big_g as i64);

    let alpha = map(
        &fv,
        &v,
        [
            (labels(&["x1"]), labels(&["s", "x2"]), F::one()),
            (labels(&["x1"]), labels(&["t", "x2"]), -(gg.clone() * half.clone())),
        ],
    )?;
    let mut coaction = vec![
        (labels(&["s", "x1"]), labels(&["x1"]), F::one()),
        (labels(&["s", "x2"]), labels(&["x2"]), F::one()),
    ];
    for k in 0..=big_g {
        coaction.push((vec!["s".into(), z(k)], vec![z(k)], n(k as i64)));
        coaction.push((vec!["t".into(), z(k)], vec![z(k)], F::one()));
    }
    let lambda = map(&v, &fv, coaction)?;
    let module = CrossedModule::new(base, v.clone(), alpha, lambda)?;

    let vv = v.tensor(&v)?;
    let mut bracket = Vec::new();
    for k in 0..big_g {
        bracket.push((vec![z(k + 1)], vec!["x2".into(), z(k)], F::one()));
        // β(z_k⊗x2) = −χ(|z_k|, g) z_{k+1}
        let sign = tau.eval(&zdeg(k), &g);
        bracket.push((vec![z(k + 1)], vec![z(k), "x2".into()], -sign));
    }
    let beta = map(&vv, &v, bracket)?;
    let mut cobracket = Vec::new();
    for k in 1..=big_g {
        let c = n(k as i64 * (k as i64 - 1 - big_g as i64)) * half.clone();
        // (τ − id)(x1⊗z_{k−1}) = χ(g, |z_{k−1}|) z_{k−1}⊗x1 − x1⊗z_{k−1}
        let chi = tau.eval(&g, &zdeg(k - 1));
        cobracket.push((vec![z(k - 1), "x1".into()], vec![z(k)], c.clone() * chi));
        cobracket.push((vec!["x1".into(), z(k - 1)], vec![z(k)], -c));
    }
    let delta = map(&v, &vv, cobracket)?;
    Ok(CrossedLieBialgebra::new(module, beta, delta)?)
}

fn identity_entry<F: Field>(
    name: &str,
    got: Result<Morphism<F>, LinalgError>,
    expected: Result<Morphism<F>, LinalgError>,
) -> ReportEntry<F> {
    match (got, expected) {
        (Ok(g), Ok(e)) => ReportEntry::from_identity(name, AxiomGroup::Identity, &g, &e),
        (Err(e), _) | (_, Err(e)) => ReportEntry::errored(name, AxiomGroup::Identity, &e),
    }
}

/// Compares only the listed source columns of `got` with `expected`.
fn columns_entry<F: Field>(
    name: &str,
    got: Result<Morphism<F>, LinalgError>,
    expected: Vec<(Vec<String>, Vec<(Vec<String>, F)>)>,
) -> ReportEntry<F> {
    let got = match got {
        Ok(g) => g,
        Err(e) => return ReportEntry::errored(name, AxiomGroup::Identity, &e),
    };
    let mut entries = Vec::new();
    let mut cols = Vec::new();
    for (input, out) in expected {
        cols.push(input.clone());
        for (o, v) in out {
            entries.push((o, input.clone(), v));
        }
    }
    let exp = match map(got.source(), got.target(), entries) {
        Ok(e) => e,
        Err(e) => return ReportEntry::errored(name, AxiomGroup::Identity, &e),
    };
    let mask: Vec<(usize, usize, F)> = cols
        .iter()
        .filter_map(|c| {
            let refs: Vec<&str> = c.iter().map(String::as_str).collect();
            got.source().index_of_tensor(&refs)
        })
        .flat_map(|j| got.column(j).iter().map(move |(i, v)| (*i, j, v.clone())).collect::<Vec<_>>())
        .collect();
    match Morphism::from_entries(got.source(), got.target(), mask) {
        Ok(restricted) => ReportEntry::from_identity(name, AxiomGroup::Identity, &restricted, &exp),
        Err(e) => ReportEntry::errored(name, AxiomGroup::Identity, &e),
    }
}

fn tau_minus_id<F: Field>(s: &CrossedLieBialgebra<F>) -> Result<Morphism<F>, LinalgError> {
    let v = s.space();
    let t = s.base().ctx().tau_morphism(v, v)?;
    t.sub(&Morphism::identity(t.source()))
}

fn jordan_identities<F: Field>(s: &CrossedLieBialgebra<F>) -> Result<VerificationReport<F>, LinalgError> {
    let v = s.space().clone();
    let vv = v.tensor(&v)?;
    let eh = s.eta_hat();
    // η̂(x⊗y) = s·x⊗y + x⊗s·y with s·x1 = 0, s·x2 = x1.
    let act = |x: &str| if x == "x2" { Some("x1") } else { None };
    let mut expected = Vec::new();
    for a in ["x1", "x2"] {
        for b in ["x1", "x2"] {
            if let Some(sa) = act(a) {
                expected.push((labels(&[sa, b]), labels(&[a, b]), F::one()));
            }
            if let Some(sb) = act(b) {
                expected.push((labels(&[a, sb]), labels(&[a, b]), F::one()));
            }
        }
    }
    let mut r = VerificationReport::new();
    r.push(identity_entry("eta_hat", eh.clone(), map(&vv, &vv, expected)));
    r.push(identity_entry(
        "tau_minus_id_kills_eta_hat",
        eh.and_then(|e| tau_minus_id(s)?.compose(&e)),
        Ok(Morphism::zero(&vv, &vv)),
    ));
    let rank = tau_minus_id(s).map(|m| m.rank());
    r.push(ReportEntry::predicate(
        "tau_minus_id_rank_one",
        AxiomGroup::Identity,
        rank == Ok(1),
        "(τ − id) on J⊗J should have rank 1",
    ));
    Ok(r)
}

fn super_jordan_identities<F: Field>(s: &CrossedLieBialgebra<F>) -> Result<VerificationReport<F>, LinalgError> {
    let v = s.space().clone();
    let vv = v.tensor(&v)?;
    let n = |k: usize| F::from_int(k as i64);
    let all = [(1, 1), (1, 2), (2, 1), (2, 2)];
    // η̂(x_ij⊗x_kl) = k δ_j2 x_i1⊗x_kl + i δ_l2 x_ij⊗x_k1
    let mut eta = Vec::new();
    for &(i, j) in &all {
        for &(k, l) in &all {
            let src = vec![sj(i, j), sj(k, l)];
            if j == 2 {
                eta.push((vec![sj(i, 1), sj(k, l)], src.clone(), n(k)));
            }
            if l == 2 {
                eta.push((vec![sj(i, j), sj(k, 1)], src.clone(), n(i)));
            }
        }
    }
    // δβ(x_ij⊗x_kl) = δ_i1 δ_k1 (j+l−2)(τ − id)(x11⊗x_{1,j+l−2})
    let mut db = Vec::new();
    for &(i, j) in &all {
        for &(k, l) in &all {
            let c = j + l - 2;
            if i == 1 && k == 1 && c > 0 {
                let src = vec![sj(i, j), sj(k, l)];
                // τ(x11⊗x1c) = −x1c⊗x11
                db.push((vec![sj(1, c), sj(1, 1)], src.clone(), -n(c)));
                db.push((vec![sj(1, 1), sj(1, c)], src, -n(c)));
            }
        }
    }
    let eh = s.eta_hat();
    let mut r = VerificationReport::new();
    r.push(identity_entry("eta_hat", eh.clone(), map(&vv, &vv, eta)));
    r.push(identity_entry(
        "delta_beta",
        s.delta().compose(s.beta()),
        map(&vv, &vv, db),
    ));
    let twisted = eh.and_then(|e| tau_minus_id(s)?.compose(&e));
    r.push(ReportEntry::predicate(
        "tau_minus_id_eta_hat_nonzero",
        AxiomGroup::Identity,
        twisted.is_ok_and(|m| !m.is_zero()),
        "(τ − id)η̂ should not vanish",
    ));
    Ok(r)
}

fn laistrygonian_identities<F: Field>(
    s: &CrossedLieBialgebra<F>,
    big_g: usize,
    chi_gh: &F,
) -> Result<VerificationReport<F>, LinalgError> {
    let v = s.space().clone();
    let Some(half) = F::from_int(2).inverse() else {
        return Err(LinalgError::Unsolvable("characteristic 2"));
    };
    let n = |k: i64| F::from_int(k);
    let gg = n(big_g as i64);
    let l0: Vec<String> = std::iter::once("x1".to_string())
        .chain((0..=big_g).map(z))
        .collect();

    let mut eta_cols = Vec::new();
    for a in &l0 {
        for b in &l0 {
            eta_cols.push((vec![a.clone(), b.clone()], Vec::new()));
        }
    }
    eta_cols.push((
        labels(&["x2", "x2"]),
        vec![(labels(&["x1", "x2"]), F::one()), (labels(&["x2", "x1"]), F::one())],
    ));
    for k in 0..=big_g {
        let c = n(k as i64) - gg.clone() * half.clone();
        let out = if c.is_zero() {
            Vec::new()
        } else {
            vec![(vec!["x1".into(), z(k)], c)]
        };
        eta_cols.push((vec!["x2".into(), z(k)], out));
    }

    // δβ(x2⊗z_k) = ((k+1)(k−𝒢)/2)(τ − id)(x1⊗z_k), with χ(g, |z_k|) = χ(g,h).
    let mut db_cols = Vec::new();
    for k in 0..=big_g {
        let c = n((k as i64 + 1) * (k as i64 - big_g as i64)) * half.clone();
        let out = if c.is_zero() {
            Vec::new()
        } else {
            vec![
                (vec![z(k), "x1".into()], c.clone() * chi_gh.clone()),
                (vec!["x1".into(), z(k)], -c),
            ]
        };
        db_cols.push((vec!["x2".into(), z(k)], out));
    }

    let mut r = VerificationReport::new();
    r.push(ReportEntry::predicate(
        "dimension",
        AxiomGroup::Identity,
        v.dim() == big_g + 3,
        "dimension should be 𝒢+3",
    ));
    r.push(columns_entry("eta_hat", s.eta_hat(), eta_cols));
    r.push(columns_entry("delta_beta", s.delta().compose(s.beta()), db_cols));
    let l0_refs: Vec<&str> = l0.iter().map(String::as_str).collect();
    let sub = span_inclusion::<F>(&v, &l0_refs)?;
    let l0_eta = s
        .module()
        .restrict(&sub)
        .and_then(|m| induced_eta(&m, &m));
    r.push(match l0_eta {
        Ok(e) => ReportEntry::from_residual("eta_hat_vanishes_on_L0", AxiomGroup::Identity, &e),
        Err(e) => ReportEntry::errored("eta_hat_vanishes_on_L0", AxiomGroup::Identity, &e),
    });
    Ok(r)
}

/// Every copy of `s` obtained by adding 1 to a single nonzero structure
/// constant of α, λ, β or δ, labelled `map[row,col]`.
pub fn unit_mutants<F: Field>(s: &CrossedLieBialgebra<F>) -> Vec<(String, CrossedLieBialgebra<F>)> {
    fn bumped<F: Field>(m: &Morphism<F>, row: usize, col: usize) -> Morphism<F> {
        let entries = m.entries().map(|(r, c, v)| {
            let v = if (r, c) == (row, col) { v.clone() + F::one() } else { v.clone() };
            (r, c, v)
        });
        Morphism::from_entries(m.source(), m.target(), entries).expect("same shape")
    }
    let mut out = Vec::new();
    let tag = |name: &str, m: &Morphism<F>, r: usize, c: usize| {
        format!("{name}[{}, {}]", m.target().label(r), m.source().label(c))
    };
    let positions = |m: &Morphism<F>| m.entries().map(|(r, c, _)| (r, c)).collect::<Vec<_>>();
    for (r, c) in positions(s.alpha()) {
        let m = s.module().with_alpha(bumped(s.alpha(), r, c));
        if let Ok(x) = m.and_then(|m| s.with_module(m)) {
            out.push((tag("alpha", s.alpha(), r, c), x));
        }
    }
    for (r, c) in positions(s.lambda()) {
        let m = s.module().with_lambda(bumped(s.lambda(), r, c));
        if let Ok(x) = m.and_then(|m| s.with_module(m)) {
            out.push((tag("lambda", s.lambda(), r, c), x));
        }
    }
    for (r, c) in positions(s.beta()) {
        if let Ok(x) = s.with_beta(bumped(s.beta(), r, c)) {
            out.push((tag("beta", s.beta(), r, c), x));
        }
    }
    for (r, c) in positions(s.delta()) {
        if let Ok(x) = s.with_delta(bumped(s.delta(), r, c)) {
            out.push((tag("delta", s.delta(), r, c), x));
        }
    }
    out
}
