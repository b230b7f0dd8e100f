//! Exact verification of curved Lie bialgebras and crossed modules over
//! color vector spaces.

pub mod bosonization;
pub mod cartier;
pub mod crossed;
pub mod field;
pub mod graded;
pub mod lie;
pub mod report;
pub mod zoo;

pub use bosonization::{
    bisum, check_decomposition_theorem, check_split, split_decompose, Bisum, BiproductPresentation, DecompositionError,
};
pub use cartier::{AddBicharacter, CartierContext, MultBicharacter};
pub use crossed::{CrossedLieBialgebra, CrossedModule};
pub use field::{Field, Fp, Rational, ScalarError};
pub use graded::{Degree, GradedSpace, LinalgError, Morphism};
pub use lie::LieBialgebra;
pub use report::{AxiomGroup, ReportEntry, VerificationReport, Witness};
pub use zoo::{Example, ZooError};

pub type QMorphism = Morphism<Rational>;
pub type QContext = CartierContext<Rational>;
pub type QLieBialgebra = LieBialgebra<Rational>;
pub type QCrossedLieBialgebra = CrossedLieBialgebra<Rational>;
pub type QReport = VerificationReport<Rational>;
pub type F2 = Fp<2>;
