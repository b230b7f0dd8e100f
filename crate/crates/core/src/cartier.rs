//! Color symmetries, infinitesimal braidings given by additive
//! bicharacters, and checkers for the Cartier axioms.
//!
//! On graded spaces every natural endomorphism of `⊗` is a scalar `χ⁺(g, h)`
//! on the `(g, h)` component, and it is an infinitesimal braiding exactly
//! when `χ⁺` is a symmetric additive bicharacter. The checkers below verify
//! the axioms as matrix identities on finite sample families.

use crate::field::Field;
use crate::graded::{Degree, GradedSpace, LinalgError, Morphism};
use crate::report::{AxiomGroup, ReportEntry, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BicharacterError {
    #[error("bicharacter matrix is not square of size {0}")]
    NotSquare(usize),
    #[error("χ(e{i}, e{j}) · χ(e{j}, e{i}) ≠ 1")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("χ(e{0}, e{0}) must be ±1")]
    BadDiagonal(usize),
    #[error("χ⁺ matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
}

fn check_square<F>(m: &[Vec<F>], rank: usize) -> Result<(), BicharacterError> {
    if m.len() != rank || m.iter().any(|row| row.len() != rank) {
        return Err(BicharacterError::NotSquare(rank));
    }
    Ok(())
}

/// Antisymmetric multiplicative bicharacter on `Z^r`, stored by its values
/// on pairs of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultBicharacter<F: Field> {
    matrix: Vec<Vec<F>>,
}

impl<F: Field> MultBicharacter<F> {
    pub fn new(matrix: Vec<Vec<F>>) -> Result<Self, BicharacterError> {
        let r = matrix.len();
        check_square(&matrix, r)?;
        for i in 0..r {
            for j in 0..r {
                if matrix[i][j].clone() * matrix[j][i].clone() != F::one() {
                    return Err(if i == j {
                        BicharacterError::BadDiagonal(i)
                    } else {
                        BicharacterError::NotAntisymmetric { i, j }
                    });
                }
            }
        }
        Ok(Self { matrix })
    }

    pub fn trivial(rank: usize) -> Self {
        Self {
            matrix: vec![vec![F::one(); rank]; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<F>] {
        &self.matrix
    }

    /// `χ(a, b) = ∏ χ(e_i, e_j)^(a_i b_j)`.
    pub fn eval(&self, a: &Degree, b: &Degree) -> F {
        let mut acc = F::one();
        for (i, &ai) in a.exponents().iter().enumerate() {
            for (j, &bj) in b.exponents().iter().enumerate() {
                let e = ai * bj;
                if e != 0 {
                    acc *= self.matrix[i][j]
                        .pow_i64(e)
                        .expect("bicharacter values are invertible");
                }
            }
        }
        acc
    }
}

/// Symmetric additive bicharacter `χ⁺: Z^r × Z^r → k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddBicharacter<F: Field> {
    matrix: Vec<Vec<F>>,
}

impl<F: Field> AddBicharacter<F> {
    pub fn new(matrix: Vec<Vec<F>>) -> Result<Self, BicharacterError> {
        let r = matrix.len();
        check_square(&matrix, r)?;
        for i in 0..r {
            for j in 0..i {
                if matrix[i][j] != matrix[j][i] {
                    return Err(BicharacterError::NotSymmetric { i, j });
                }
            }
        }
        Ok(Self { matrix })
    }

    /// Skips the symmetry check. Only useful for exercising the axiom
    /// checkers on invalid input.
    pub fn new_unchecked(matrix: Vec<Vec<F>>) -> Self {
        Self { matrix }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            matrix: vec![vec![F::zero(); rank]; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<F>] {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|v| v.is_zero())
    }

    /// `χ⁺(a, b) = Σ a_i b_j χ⁺(e_i, e_j)`.
    pub fn eval(&self, a: &Degree, b: &Degree) -> F {
        let mut acc = F::zero();
        for (i, &ai) in a.exponents().iter().enumerate() {
            for (j, &bj) in b.exponents().iter().enumerate() {
                let e = ai * bj;
                if e != 0 {
                    acc += F::from_int(e) * self.matrix[i][j].clone();
                }
            }
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContextError {
    #[error(transparent)]
    Bicharacter(#[from] BicharacterError),
    #[error("τ has rank {tau}, η has rank {eta}")]
    RankMismatch { tau: usize, eta: usize },
}

/// The ambient category: color vector spaces over `F` graded by `Z^r`, with
/// symmetry from `tau` and infinitesimal braiding from `eta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartierContext<F: Field> {
    tau: MultBicharacter<F>,
    eta: AddBicharacter<F>,
}

impl<F: Field> CartierContext<F> {
    pub fn new(tau: MultBicharacter<F>, eta: AddBicharacter<F>) -> Result<Self, ContextError> {
        if tau.rank() != eta.rank() {
            return Err(ContextError::RankMismatch {
                tau: tau.rank(),
                eta: eta.rank(),
            });
        }
        Ok(Self { tau, eta })
    }

    /// Color vector spaces with zero infinitesimal braiding.
    pub fn color(tau: MultBicharacter<F>) -> Self {
        let r = tau.rank();
        Self {
            tau,
            eta: AddBicharacter::zero(r),
        }
    }

    pub fn rank(&self) -> usize {
        self.tau.rank()
    }

    pub fn characteristic(&self) -> u64 {
        F::characteristic()
    }

    pub fn tau(&self) -> &MultBicharacter<F> {
        &self.tau
    }

    pub fn eta(&self) -> &AddBicharacter<F> {
        &self.eta
    }

    fn check_rank(&self, v: &GradedSpace) -> Result<(), LinalgError> {
        if v.rank() != self.rank() {
            return Err(LinalgError::RankMismatch(self.rank(), v.rank()));
        }
        Ok(())
    }

    /// `τ_{V,W}(v ⊗ w) = χ(|v|, |w|) w ⊗ v`.
    pub fn tau_morphism(&self, v: &GradedSpace, w: &GradedSpace) -> Result<Morphism<F>, LinalgError> {
        self.check_rank(v)?;
        self.check_rank(w)?;
        let source = v.tensor(w)?;
        let target = w.tensor(v)?;
        let (n, m) = (v.dim(), w.dim());
        Ok(Morphism::monomial(&source, &target, |c| {
            let (i, j) = (c / m, c % m);
            (j * n + i, self.tau.eval(v.degree(i), w.degree(j)))
        }))
    }

    /// `η_{V,W}(v ⊗ w) = χ⁺(|v|, |w|) v ⊗ w`.
    pub fn eta_morphism(&self, v: &GradedSpace, w: &GradedSpace) -> Result<Morphism<F>, LinalgError> {
        self.check_rank(v)?;
        self.check_rank(w)?;
        let space = v.tensor(w)?;
        let m = w.dim();
        Ok(Morphism::monomial(&space, &space, |c| {
            (c, self.eta.eval(v.degree(c / m), w.degree(c % m)))
        }))
    }

    /// Checks the Cartier axioms of the ambient category on `samples`.
    pub fn check_cartier_axioms(&self, samples: &[GradedSpace]) -> VerificationReport<F> {
        check_cartier(&AmbientCategory(self), samples)
    }
}

/// A preadditive symmetric monoidal category with a candidate infinitesimal
/// braiding, presented through the finitely many objects we sample.
pub trait SampledCartier<F: Field> {
    type Object: Clone;

    fn name(&self, x: &Self::Object) -> String;
    fn space(&self, x: &Self::Object) -> GradedSpace;
    fn unit(&self) -> Self::Object;
    fn tensor(&self, x: &Self::Object, y: &Self::Object) -> Result<Self::Object, LinalgError>;
    fn tau(&self, x: &Self::Object, y: &Self::Object) -> Result<Morphism<F>, LinalgError>;
    fn eta(&self, x: &Self::Object, y: &Self::Object) -> Result<Morphism<F>, LinalgError>;
}

struct AmbientCategory<'a, F: Field>(&'a CartierContext<F>);

impl<F: Field> SampledCartier<F> for AmbientCategory<'_, F> {
    type Object = GradedSpace;

    fn name(&self, x: &GradedSpace) -> String {
        format!("{}d", x.dim())
    }
    fn space(&self, x: &GradedSpace) -> GradedSpace {
        x.clone()
    }
    fn unit(&self) -> GradedSpace {
        GradedSpace::unit(self.0.rank())
    }
    fn tensor(&self, x: &GradedSpace, y: &GradedSpace) -> Result<GradedSpace, LinalgError> {
        x.tensor(y)
    }
    fn tau(&self, x: &GradedSpace, y: &GradedSpace) -> Result<Morphism<F>, LinalgError> {
        self.0.tau_morphism(x, y)
    }
    fn eta(&self, x: &GradedSpace, y: &GradedSpace) -> Result<Morphism<F>, LinalgError> {
        self.0.eta_morphism(x, y)
    }
}

/// Second-slot hexagon:
/// `η_{X,Y⊗Z} = η_{X,Y} ⊗ id_Z + (τ_{Y,X} ⊗ id)(id_Y ⊗ η_{X,Z})(τ_{X,Y} ⊗ id)`.
pub fn hexagon_right<F: Field, C: SampledCartier<F>>(
    cat: &C,
    x: &C::Object,
    y: &C::Object,
    z: &C::Object,
) -> Result<(Morphism<F>, Morphism<F>), LinalgError> {
    let id_y = Morphism::identity(&cat.space(y));
    let id_z = Morphism::identity(&cat.space(z));
    let lhs = cat.eta(x, &cat.tensor(y, z)?)?;
    let first = cat.eta(x, y)?.tensor(&id_z)?;
    let second = cat
        .tau(y, x)?
        .tensor(&id_z)?
        .compose(&id_y.tensor(&cat.eta(x, z)?)?)?
        .compose(&cat.tau(x, y)?.tensor(&id_z)?)?;
    Ok((lhs, first.add(&second)?))
}

/// First-slot hexagon:
/// `η_{X⊗Y,Z} = id_X ⊗ η_{Y,Z} + (id_X ⊗ τ_{Z,Y})(η_{X,Z} ⊗ id_Y)(id_X ⊗ τ_{Y,Z})`.
pub fn hexagon_left<F: Field, C: SampledCartier<F>>(
    cat: &C,
    x: &C::Object,
    y: &C::Object,
    z: &C::Object,
) -> Result<(Morphism<F>, Morphism<F>), LinalgError> {
    let id_x = Morphism::identity(&cat.space(x));
    let id_y = Morphism::identity(&cat.space(y));
    let lhs = cat.eta(&cat.tensor(x, y)?, z)?;
    let first = id_x.tensor(&cat.eta(y, z)?)?;
    let second = id_x
        .tensor(&cat.tau(z, y)?)?
        .compose(&cat.eta(x, z)?.tensor(&id_y)?)?
        .compose(&id_x.tensor(&cat.tau(y, z)?)?)?;
    Ok((lhs, first.add(&second)?))
}

/// `η_{Y,X} τ_{X,Y} = τ_{X,Y} η_{X,Y}`.
pub fn eta_tau_symmetry<F: Field, C: SampledCartier<F>>(
    cat: &C,
    x: &C::Object,
    y: &C::Object,
) -> Result<(Morphism<F>, Morphism<F>), LinalgError> {
    let t = cat.tau(x, y)?;
    Ok((cat.eta(y, x)?.compose(&t)?, t.compose(&cat.eta(x, y)?)?))
}

/// Runs every Cartier identity on all pairs and triples of `samples`. One
/// report entry per identity; each fails with the first violating instance.
pub fn check_cartier<F: Field, C: SampledCartier<F>>(
    cat: &C,
    samples: &[C::Object],
) -> VerificationReport<F> {
    check_cartier_on(cat, samples, |_, _, _| true)
}

/// Like [`check_cartier`], restricted to the triples accepted by `keep`
/// (indices into `samples`).
pub fn check_cartier_on<F: Field, C: SampledCartier<F>>(
    cat: &C,
    samples: &[C::Object],
    keep: impl Fn(usize, usize, usize) -> bool,
) -> VerificationReport<F> {
    let mut report = VerificationReport::new();
    let unit = cat.unit();

    let mut first_failure = |name: &str, cases: &mut dyn Iterator<Item = (String, Result<(Morphism<F>, Morphism<F>), LinalgError>)>| {
        for (instance, result) in cases {
            let entry = match result {
                Ok((l, r)) => ReportEntry::from_identity(format!("{name}[{instance}]"), AxiomGroup::Cartier, &l, &r),
                Err(e) => ReportEntry::errored(format!("{name}[{instance}]"), AxiomGroup::Cartier, &e),
            };
            if !entry.passed() {
                report.push(entry);
                return;
            }
        }
        report.push(ReportEntry::pass(name, AxiomGroup::Cartier));
    };

    let n = samples.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .filter(|&(i, j, k)| keep(i, j, k))
        .collect();
    let label = |idx: &[usize]| idx.iter().map(|&i| cat.name(&samples[i])).collect::<Vec<_>>().join(",");

    first_failure(
        "symmetry_involutive",
        &mut pairs.iter().map(|&(i, j)| {
            let (x, y) = (&samples[i], &samples[j]);
            let r = (|| {
                let tt = cat.tau(y, x)?.compose(&cat.tau(x, y)?)?;
                Ok((tt, Morphism::identity(&cat.space(&cat.tensor(x, y)?))))
            })();
            (label(&[i, j]), r)
        }),
    );
    first_failure(
        "eta_tau_symmetry",
        &mut pairs
            .iter()
            .map(|&(i, j)| (label(&[i, j]), eta_tau_symmetry(cat, &samples[i], &samples[j]))),
    );
    first_failure(
        "eta_unit_vanishes",
        &mut (0..n).map(|i| {
            let x = &samples[i];
            let r = (|| {
                let a = cat.eta(&unit, x)?;
                let b = cat.eta(x, &unit)?;
                let za = Morphism::zero(a.source(), a.target());
                let zb = Morphism::zero(b.source(), b.target());
                // Stack both checks: report the first nonzero one.
                if !a.is_zero() {
                    return Ok((a, za));
                }
                Ok((b, zb))
            })();
            (label(&[i]), r)
        }),
    );
    first_failure(
        "hexagon_second_slot",
        &mut triples.iter().map(|&(i, j, k)| {
            (
                label(&[i, j, k]),
                hexagon_right(cat, &samples[i], &samples[j], &samples[k]),
            )
        }),
    );
    first_failure(
        "hexagon_first_slot",
        &mut triples.iter().map(|&(i, j, k)| {
            (
                label(&[i, j, k]),
                hexagon_left(cat, &samples[i], &samples[j], &samples[k]),
            )
        }),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use num_traits::{One, Zero};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn d(v: &[i64]) -> Degree {
        Degree::new(v.to_vec())
    }

    fn space(rank: usize, basis: &[(&str, &[i64])]) -> GradedSpace {
        GradedSpace::new(rank, basis.iter().map(|(l, x)| (l.to_string(), d(x)))).unwrap()
    }

    fn super_ctx() -> CartierContext<Rational> {
        CartierContext::color(MultBicharacter::new(vec![vec![q(-1)]]).unwrap())
    }

    #[test]
    fn mult_bicharacter_validation() {
        assert!(MultBicharacter::new(vec![vec![q(1), q(2)], vec![q(2), q(1)]]).is_err());
        assert!(matches!(
            MultBicharacter::new(vec![vec![q(2)]]),
            Err(BicharacterError::BadDiagonal(0))
        ));
        let half = Rational::new(1.into(), 2.into());
        let chi = MultBicharacter::new(vec![vec![q(1), q(2)], vec![half.clone(), q(-1)]]).unwrap();
        // χ((1,1),(1,-1)) = χ11 χ12^-1 χ21 χ22^-1 = 1 · 1/2 · 1/2 · (-1)
        assert_eq!(chi.eval(&d(&[1, 1]), &d(&[1, -1])), -(half.clone() * half));
        assert_eq!(chi.eval(&d(&[0, 0]), &d(&[3, 4])), q(1));
    }

    #[test]
    fn add_bicharacter_is_bilinear() {
        let chi = AddBicharacter::new(vec![vec![q(1), q(2)], vec![q(2), q(3)]]).unwrap();
        // (1,2)·M·(3,-1) = 1*3*1 + 1*(-1)*2 + 2*3*2 + 2*(-1)*3 = 3 - 2 + 12 - 6
        assert_eq!(chi.eval(&d(&[1, 2]), &d(&[3, -1])), q(7));
        assert!(AddBicharacter::new(vec![vec![q(0), q(1)], vec![q(2), q(0)]]).is_err());
    }

    #[test]
    fn super_symmetry_signs() {
        let ctx = super_ctx();
        let v = space(1, &[("x11", &[1]), ("x21", &[2])]);
        let t = ctx.tau_morphism(&v, &v).unwrap();
        let src = v.tensor(&v).unwrap();
        // τ(x11⊗x21) = (-1)^{1·2} x21⊗x11
        let c = src.index_of_tensor(&["x11", "x21"]).unwrap();
        let r = src.index_of_tensor(&["x21", "x11"]).unwrap();
        assert_eq!(t.entry(r, c), q(1));
        let c = src.index_of_tensor(&["x11", "x11"]).unwrap();
        assert_eq!(t.entry(c, c), q(-1));
        let tt = t.compose(&t).unwrap();
        assert_eq!(tt, Morphism::identity(&src));
    }

    #[test]
    fn degree_zero_flip_is_plain_transposition() {
        let ctx = super_ctx();
        let f = space(1, &[("s", &[0]), ("t", &[0])]);
        let t = ctx.tau_morphism(&f, &f).unwrap();
        for (i, j, v) in t.entries() {
            assert_eq!(*v, q(1));
            assert_eq!(i, (j % 2) * 2 + j / 2);
        }
    }

    #[test]
    fn eta_morphism_values() {
        let ctx = CartierContext::new(MultBicharacter::trivial(1), AddBicharacter::new(vec![vec![q(1)]]).unwrap()).unwrap();
        let v = space(1, &[("a", &[1])]);
        assert_eq!(ctx.eta_morphism(&v, &v).unwrap(), Morphism::identity(&v.tensor(&v).unwrap()));
        let unit = GradedSpace::unit(1);
        assert!(ctx.eta_morphism(&unit, &v).unwrap().is_zero());
        assert!(super_ctx().eta_morphism(&v, &v).unwrap().is_zero());
    }

    #[test]
    fn zero_eta_passes_all_axioms() {
        let ctx = super_ctx();
        let samples = vec![space(1, &[("a", &[1]), ("b", &[0])]), space(1, &[("c", &[2])])];
        let report = ctx.check_cartier_axioms(&samples);
        assert!(report.all_pass(), "{report}");
        assert_eq!(report.entries.len(), 5);
    }

    #[test]
    fn symmetric_additive_bicharacter_on_rank_two() {
        let tau = MultBicharacter::new(vec![vec![q(1), q(-1)], vec![q(-1), q(1)]]).unwrap();
        let eta = AddBicharacter::new(vec![vec![q(2), q(-1)], vec![q(-1), q(5)]]).unwrap();
        let ctx = CartierContext::new(tau, eta).unwrap();
        let l = space(2, &[("x1", &[1, 0]), ("x2", &[1, 0]), ("z0", &[0, 1]), ("z1", &[1, 1])]);
        let f = space(2, &[("s", &[0, 0]), ("t", &[0, 0])]);
        let report = ctx.check_cartier_axioms(&[l, f]);
        assert!(report.all_pass(), "{report}");
    }

    #[test]
    fn non_symmetric_eta_fails_tau_compatibility() {
        let eta = AddBicharacter::new_unchecked(vec![vec![q(0), q(1)], vec![q(0), q(0)]]);
        let ctx = CartierContext::new(MultBicharacter::trivial(2), eta).unwrap();
        let g = space(2, &[("g", &[1, 0])]);
        let h = space(2, &[("h", &[0, 1])]);
        let report = ctx.check_cartier_axioms(&[g, h]);
        let failing: Vec<_> = report.failures().map(|e| e.axiom.clone()).collect();
        assert!(failing.iter().any(|a| a.starts_with("eta_tau_symmetry")), "{report}");
        let entry = report.failures().find(|e| e.axiom.starts_with("eta_tau_symmetry")).unwrap();
        let w = entry.witness.as_ref().unwrap();
        assert!(!w.residual.is_empty());
        assert!(w.residual.iter().all(|(_, v)| !v.is_zero()));
    }

    #[test]
    fn naturality_of_tau_and_eta() {
        let tau = MultBicharacter::new(vec![vec![q(-1)]]).unwrap();
        let eta = AddBicharacter::new(vec![vec![q(3)]]).unwrap();
        let ctx = CartierContext::new(tau, eta).unwrap();
        let v = space(1, &[("a", &[1]), ("b", &[1]), ("c", &[0])]);
        let v2 = space(1, &[("p", &[1]), ("r", &[0])]);
        let w = space(1, &[("u", &[2]), ("w", &[1])]);
        let f = Morphism::from_entries(&v, &v2, [(0, 0, q(2)), (0, 1, q(-1)), (1, 2, q(5))]).unwrap();
        let g = Morphism::from_entries(&w, &w, [(0, 0, q(7)), (1, 1, q(1))]).unwrap();
        let lhs = g.tensor(&f).unwrap().compose(&ctx.tau_morphism(&v, &w).unwrap()).unwrap();
        let rhs = ctx.tau_morphism(&v2, &w).unwrap().compose(&f.tensor(&g).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = f.tensor(&g).unwrap().compose(&ctx.eta_morphism(&v, &w).unwrap()).unwrap();
        let rhs = ctx.eta_morphism(&v2, &w).unwrap().compose(&f.tensor(&g).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(!Rational::one().is_zero());
    }
}
