//! Pass/fail records produced by the axiom checkers.

use std::fmt;

use crate::field::Field;
use crate::graded::{LinalgError, Morphism};

/// Coarse grouping used to filter reports (`--axioms` on the command line).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomGroup {
    Cartier,
    Lie,
    CoLie,
    Bialgebra,
    Module,
    Comodule,
    Crossed,
    Lemma,
    Decomposition,
    Identity,
}

impl AxiomGroup {
    pub fn name(self) -> &'static str {
        match self {
            AxiomGroup::Cartier => "cartier",
            AxiomGroup::Lie => "lie",
            AxiomGroup::CoLie => "colie",
            AxiomGroup::Bialgebra => "bialg",
            AxiomGroup::Module => "module",
            AxiomGroup::Comodule => "comodule",
            AxiomGroup::Crossed => "crossed",
            AxiomGroup::Lemma => "lemma",
            AxiomGroup::Decomposition => "decomposition",
            AxiomGroup::Identity => "identity",
        }
    }
}

/// A basis vector on which an identity fails, with the exact residual
/// `lhs - rhs` evaluated there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<F: Field> {
    pub input_index: usize,
    pub input: String,
    pub residual: Vec<(String, F)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry<F: Field> {
    pub axiom: String,
    pub group: AxiomGroup,
    pub witness: Option<Witness<F>>,
    /// Set when the entry could not be evaluated at all (shape errors).
    pub error: Option<String>,
}

impl<F: Field> ReportEntry<F> {
    pub fn pass(axiom: impl Into<String>, group: AxiomGroup) -> Self {
        Self {
            axiom: axiom.into(),
            group,
            witness: None,
            error: None,
        }
    }

    pub fn failed(axiom: impl Into<String>, group: AxiomGroup, witness: Witness<F>) -> Self {
        Self {
            axiom: axiom.into(),
            group,
            witness: Some(witness),
            error: None,
        }
    }

    pub fn errored(axiom: impl Into<String>, group: AxiomGroup, error: &LinalgError) -> Self {
        Self {
            axiom: axiom.into(),
            group,
            witness: None,
            error: Some(error.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none() && self.error.is_none()
    }

    /// Compares two morphisms exactly. On mismatch the witness is the first
    /// source basis vector where they differ.
    pub fn from_identity(
        axiom: impl Into<String>,
        group: AxiomGroup,
        lhs: &Morphism<F>,
        rhs: &Morphism<F>,
    ) -> Self {
        match lhs.sub(rhs) {
            Ok(residual) => Self::from_residual(axiom, group, &residual),
            Err(e) => Self::errored(axiom, group, &e),
        }
    }

    /// Passes iff `residual` is the zero map.
    pub fn from_residual(axiom: impl Into<String>, group: AxiomGroup, residual: &Morphism<F>) -> Self {
        match witness_of(residual) {
            None => Self::pass(axiom, group),
            Some(w) => Self::failed(axiom, group, w),
        }
    }

    /// Lifts a fallible evaluation into an entry.
    pub fn evaluate(
        axiom: impl Into<String>,
        group: AxiomGroup,
        f: impl FnOnce() -> Result<(Morphism<F>, Morphism<F>), LinalgError>,
    ) -> Self {
        let axiom = axiom.into();
        match f() {
            Ok((lhs, rhs)) => Self::from_identity(axiom, group, &lhs, &rhs),
            Err(e) => Self::errored(axiom, group, &e),
        }
    }

    /// An entry that passes iff `holds`, with no residual attached on
    /// failure other than a descriptive message.
    pub fn predicate(axiom: impl Into<String>, group: AxiomGroup, holds: bool, detail: &str) -> Self {
        let mut e = Self::pass(axiom, group);
        if !holds {
            e.error = Some(detail.to_string());
        }
        e
    }
}

/// First nonzero column of `residual`, if any.
pub fn witness_of<F: Field>(residual: &Morphism<F>) -> Option<Witness<F>> {
    (0..residual.source().dim()).find_map(|j| {
        let col = residual.column(j);
        if col.is_empty() {
            return None;
        }
        Some(Witness {
            input_index: j,
            input: residual.source().label(j).to_string(),
            residual: col
                .iter()
                .map(|(i, v)| (residual.target().label(*i).to_string(), v.clone()))
                .collect(),
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport<F: Field> {
    pub entries: Vec<ReportEntry<F>>,
}

impl<F: Field> Default for VerificationReport<F> {
    fn default() -> Self {
        Self { entries: Vec::new() }
    }
}

impl<F: Field> VerificationReport<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, entry: ReportEntry<F>) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: VerificationReport<F>) {
        self.entries.extend(other.entries);
    }

    /// Appends `other` with every axiom name prefixed by `prefix.`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: VerificationReport<F>) {
        self.entries.extend(other.entries.into_iter().map(|mut e| {
            e.axiom = format!("{prefix}.{}", e.axiom);
            e
        }));
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(ReportEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry<F>> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn get(&self, axiom: &str) -> Option<&ReportEntry<F>> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    pub fn filtered(&self, keep: impl Fn(AxiomGroup) -> bool) -> Self {
        Self {
            entries: self.entries.iter().filter(|e| keep(e.group)).cloned().collect(),
        }
    }
}

impl<F: Field> FromIterator<ReportEntry<F>> for VerificationReport<F> {
    fn from_iter<T: IntoIterator<Item = ReportEntry<F>>>(iter: T) -> Self {
        Self {
            entries: iter.into_iter().collect(),
        }
    }
}

impl<F: Field> fmt::Display for VerificationReport<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let status = if e.passed() { "PASS" } else { "FAIL" };
            write!(f, "{status} [{}] {}", e.group.name(), e.axiom)?;
            if let Some(w) = &e.witness {
                write!(f, " at {}:", w.input)?;
                for (label, v) in &w.residual {
                    write!(f, " {}·{}", v.canonical(), label)?;
                }
            }
            if let Some(err) = &e.error {
                write!(f, " ({err})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
