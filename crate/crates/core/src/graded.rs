//! Finite-dimensional `Z^r`-graded vector spaces and degree-preserving maps.
//!
//! Tensor products flatten indices row-major, so `(A ⊗ B) ⊗ C` and
//! `A ⊗ (B ⊗ C)` produce the same basis list and the monoidal structure is
//! strict. The unit object contributes no label, so `I ⊗ V` equals `V`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;
use std::sync::Arc;

use crate::field::Field;

/// Separator used when building tensor basis labels.
pub const TENSOR_SEP: &str = "⊗";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("grading rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("degree length {got} does not match rank {rank}")]
    DegreeLength { got: usize, rank: usize },
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("invalid basis label {0:?}")]
    InvalidLabel(String),
    #[error("entry ({row}, {col}) maps degree {from} to degree {to}")]
    DegreeViolation {
        row: usize,
        col: usize,
        from: Degree,
        to: Degree,
    },
    #[error("index ({row}, {col}) out of range for a {rows}x{cols} map")]
    OutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("shape mismatch in {op}: {left} vs {right}")]
    ShapeMismatch {
        op: &'static str,
        left: String,
        right: String,
    },
    #[error("leg position {position} does not fit the ambient tensor factors")]
    LegSlot { position: usize },
    #[error("no solution: {0}")]
    Unsolvable(&'static str),
    #[error("direct summands share basis label {0:?}")]
    SummandOverlap(String),
    #[error("structures live over different base Lie bialgebras")]
    BaseMismatch,
}

/// Element of the free abelian grading group `Z^r`, written additively.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree(Vec<i64>);

impl Degree {
    pub fn new(exponents: Vec<i64>) -> Self {
        Self(exponents)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl Add for &Degree {
    type Output = Degree;
    fn add(self, rhs: &Degree) -> Degree {
        debug_assert_eq!(self.rank(), rhs.rank());
        Degree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, PartialEq, Eq)]
struct SpaceData {
    rank: usize,
    labels: Vec<String>,
    degrees: Vec<Degree>,
}

/// A graded space given by an ordered homogeneous basis. Cloning is cheap.
#[derive(Clone)]
pub struct GradedSpace(Arc<SpaceData>);

impl PartialEq for GradedSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for GradedSpace {}

impl fmt::Debug for GradedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedSpace[")?;
        for (i, (l, d)) in self.0.labels.iter().zip(&self.0.degrees).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if i == 8 && self.dim() > 10 {
                write!(f, "... ({} total)", self.dim())?;
                break;
            }
            write!(f, "{l}:{d}")?;
        }
        write!(f, "]")
    }
}

impl GradedSpace {
    /// Builds a space from `(label, degree)` pairs. Labels must be unique,
    /// non-empty and free of the tensor separator.
    pub fn new<S: Into<String>>(
        rank: usize,
        basis: impl IntoIterator<Item = (S, Degree)>,
    ) -> Result<Self, LinalgError> {
        let mut labels = Vec::new();
        let mut degrees = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (label, degree) in basis {
            let label = label.into();
            if label.is_empty() || label.contains(TENSOR_SEP) || label.trim() != label {
                return Err(LinalgError::InvalidLabel(label));
            }
            if degree.rank() != rank {
                return Err(LinalgError::DegreeLength {
                    got: degree.rank(),
                    rank,
                });
            }
            if !seen.insert(label.clone()) {
                return Err(LinalgError::DuplicateLabel(label));
            }
            labels.push(label);
            degrees.push(degree);
        }
        Ok(Self(Arc::new(SpaceData {
            rank,
            labels,
            degrees,
        })))
    }

    /// The unit object: one basis vector of degree zero. Its label is empty
    /// so that it disappears from tensor labels.
    pub fn unit(rank: usize) -> Self {
        Self(Arc::new(SpaceData {
            rank,
            labels: vec![String::new()],
            degrees: vec![Degree::zero(rank)],
        }))
    }

    pub fn zero_space(rank: usize) -> Self {
        Self(Arc::new(SpaceData {
            rank,
            labels: Vec::new(),
            degrees: Vec::new(),
        }))
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.0.degrees
    }

    pub fn label(&self, i: usize) -> &str {
        let l = &self.0.labels[i];
        if l.is_empty() {
            "1"
        } else {
            l
        }
    }

    pub fn degree(&self, i: usize) -> &Degree {
        &self.0.degrees[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }

    /// Index of the basis tensor `parts[0] ⊗ parts[1] ⊗ ...`.
    pub fn index_of_tensor(&self, parts: &[&str]) -> Option<usize> {
        self.index_of(&parts.join(TENSOR_SEP))
    }

    /// `V ⊗ W` with row-major basis `(v_i ⊗ w_j)`.
    pub fn tensor(&self, other: &GradedSpace) -> Result<GradedSpace, LinalgError> {
        if self.rank() != other.rank() {
            return Err(LinalgError::RankMismatch(self.rank(), other.rank()));
        }
        let n = self.dim() * other.dim();
        let mut labels = Vec::with_capacity(n);
        let mut degrees = Vec::with_capacity(n);
        for (a, da) in self.0.labels.iter().zip(&self.0.degrees) {
            for (b, db) in other.0.labels.iter().zip(&other.0.degrees) {
                labels.push(join_labels(a, b));
                degrees.push(da + db);
            }
        }
        Ok(Self(Arc::new(SpaceData {
            rank: self.rank(),
            labels,
            degrees,
        })))
    }

    /// Tensor product of a nonempty list of factors.
    pub fn tensor_all(factors: &[GradedSpace]) -> Result<GradedSpace, LinalgError> {
        let (first, rest) = factors
            .split_first()
            .expect("tensor_all needs at least one factor");
        rest.iter().try_fold(first.clone(), |acc, f| acc.tensor(f))
    }

    /// `V ⊕ W` with the basis of `V` first.
    pub fn direct_sum(&self, other: &GradedSpace) -> Result<GradedSpace, LinalgError> {
        if self.rank() != other.rank() {
            return Err(LinalgError::RankMismatch(self.rank(), other.rank()));
        }
        for l in other.labels() {
            if self.index_of(l).is_some() {
                return Err(LinalgError::SummandOverlap(l.clone()));
            }
        }
        let labels = self.0.labels.iter().chain(&other.0.labels).cloned().collect();
        let degrees = self.0.degrees.iter().chain(&other.0.degrees).cloned().collect();
        Ok(Self(Arc::new(SpaceData {
            rank: self.rank(),
            labels,
            degrees,
        })))
    }

    /// Same degrees, new labels.
    pub fn relabeled<S: Into<String>>(
        &self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<GradedSpace, LinalgError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.dim() {
            return Err(LinalgError::ShapeMismatch {
                op: "relabel",
                left: format!("{} labels", labels.len()),
                right: format!("dimension {}", self.dim()),
            });
        }
        GradedSpace::new(self.rank(), labels.into_iter().zip(self.0.degrees.iter().cloned()))
    }
}

fn join_labels(a: &str, b: &str) -> String {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b.to_string(),
        (_, true) => a.to_string(),
        _ => format!("{a}{TENSOR_SEP}{b}"),
    }
}

type Column<F> = Vec<(usize, F)>;

/// Degree-preserving linear map stored column-sparse: column `j` lists the
/// nonzero `(row, value)` pairs of the image of basis vector `j`, sorted by
/// row.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism<F: Field> {
    source: GradedSpace,
    target: GradedSpace,
    cols: Vec<Column<F>>,
}

impl<F: Field> fmt::Debug for Morphism<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Morphism {}x{} ({} nonzero)",
            self.target.dim(),
            self.source.dim(),
            self.nnz()
        )?;
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                writeln!(
                    f,
                    "  {} -> {} : {}",
                    self.source.label(j),
                    self.target.label(*i),
                    v
                )?;
            }
        }
        Ok(())
    }
}

fn shape(s: &GradedSpace, t: &GradedSpace) -> String {
    format!("{}->{}", s.dim(), t.dim())
}

impl<F: Field> Morphism<F> {
    /// Builds a map from `(row, col, value)` triples; repeated positions are
    /// summed and zeros dropped. Entries between different degrees are
    /// rejected even when their value is zero.
    pub fn from_entries(
        source: &GradedSpace,
        target: &GradedSpace,
        entries: impl IntoIterator<Item = (usize, usize, F)>,
    ) -> Result<Self, LinalgError> {
        if source.rank() != target.rank() {
            return Err(LinalgError::RankMismatch(source.rank(), target.rank()));
        }
        let mut acc: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); source.dim()];
        for (row, col, value) in entries {
            if row >= target.dim() || col >= source.dim() {
                return Err(LinalgError::OutOfRange {
                    row,
                    col,
                    rows: target.dim(),
                    cols: source.dim(),
                });
            }
            if source.degree(col) != target.degree(row) {
                return Err(LinalgError::DegreeViolation {
                    row,
                    col,
                    from: source.degree(col).clone(),
                    to: target.degree(row).clone(),
                });
            }
            *acc[col].entry(row).or_insert_with(F::zero) += value;
        }
        Ok(Self::from_maps(source.clone(), target.clone(), acc))
    }

    fn from_maps(source: GradedSpace, target: GradedSpace, maps: Vec<BTreeMap<usize, F>>) -> Self {
        let cols = maps
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Self {
            source,
            target,
            cols,
        }
    }

    pub fn zero(source: &GradedSpace, target: &GradedSpace) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            cols: vec![Vec::new(); source.dim()],
        }
    }

    pub fn identity(space: &GradedSpace) -> Self {
        Self {
            source: space.clone(),
            target: space.clone(),
            cols: (0..space.dim()).map(|j| vec![(j, F::one())]).collect(),
        }
    }

    /// Map sending basis vector `j` of `source` to `scale(j)` times basis
    /// vector `image(j)` of `target` (e.g. a signed permutation).
    pub(crate) fn monomial(
        source: &GradedSpace,
        target: &GradedSpace,
        image: impl Fn(usize) -> (usize, F),
    ) -> Self {
        let cols = (0..source.dim())
            .map(|j| {
                let (i, v) = image(j);
                debug_assert_eq!(source.degree(j), target.degree(i));
                if v.is_zero() {
                    Vec::new()
                } else {
                    vec![(i, v)]
                }
            })
            .collect();
        Self {
            source: source.clone(),
            target: target.clone(),
            cols,
        }
    }

    pub fn source(&self) -> &GradedSpace {
        &self.source
    }

    pub fn target(&self) -> &GradedSpace {
        &self.target
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Image of basis vector `j` as sorted `(row, value)` pairs.
    pub fn column(&self, j: usize) -> &[(usize, F)] {
        &self.cols[j]
    }

    pub fn entry(&self, row: usize, col: usize) -> F {
        self.cols[col]
            .binary_search_by_key(&row, |(i, _)| *i)
            .map(|k| self.cols[col][k].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    /// All nonzero entries as `(row, col, value)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
    }

    /// Same matrix, re-typed onto equal-dimensional spaces with matching
    /// degrees.
    pub fn reinterpret(&self, source: &GradedSpace, target: &GradedSpace) -> Result<Self, LinalgError> {
        if source.degrees() != self.source.degrees() || target.degrees() != self.target.degrees() {
            return Err(LinalgError::ShapeMismatch {
                op: "reinterpret",
                left: shape(&self.source, &self.target),
                right: shape(source, target),
            });
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            cols: self.cols.clone(),
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Morphism<F>) -> Result<Self, LinalgError> {
        if other.target != self.source {
            return Err(LinalgError::ShapeMismatch {
                op: "compose",
                left: shape(&self.source, &self.target),
                right: shape(&other.source, &other.target),
            });
        }
        let mut cols = Vec::with_capacity(other.cols.len());
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for col in &other.cols {
            acc.clear();
            for (k, c) in col {
                for (i, v) in &self.cols[*k] {
                    *acc.entry(*i).or_insert_with(F::zero) += c.clone() * v.clone();
                }
            }
            cols.push(
                std::mem::take(&mut acc)
                    .into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            );
        }
        Ok(Self {
            source: other.source.clone(),
            target: self.target.clone(),
            cols,
        })
    }

    fn check_same_shape(&self, other: &Morphism<F>, op: &'static str) -> Result<(), LinalgError> {
        if self.source != other.source || self.target != other.target {
            return Err(LinalgError::ShapeMismatch {
                op,
                left: shape(&self.source, &self.target),
                right: shape(&other.source, &other.target),
            });
        }
        Ok(())
    }

    fn combine(&self, other: &Morphism<F>, sign: F) -> Self {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut p, mut q) = (0, 0);
                while p < a.len() || q < b.len() {
                    let take_a = q >= b.len() || (p < a.len() && a[p].0 < b[q].0);
                    let take_b = p >= a.len() || (q < b.len() && b[q].0 < a[p].0);
                    if take_a {
                        out.push(a[p].clone());
                        p += 1;
                    } else if take_b {
                        out.push((b[q].0, sign.clone() * b[q].1.clone()));
                        q += 1;
                    } else {
                        let v = a[p].1.clone() + sign.clone() * b[q].1.clone();
                        if !v.is_zero() {
                            out.push((a[p].0, v));
                        }
                        p += 1;
                        q += 1;
                    }
                }
                out
            })
            .collect();
        Self {
            source: self.source.clone(),
            target: self.target.clone(),
            cols,
        }
    }

    pub fn add(&self, other: &Morphism<F>) -> Result<Self, LinalgError> {
        self.check_same_shape(other, "add")?;
        Ok(self.combine(other, F::one()))
    }

    pub fn sub(&self, other: &Morphism<F>) -> Result<Self, LinalgError> {
        self.check_same_shape(other, "sub")?;
        Ok(self.combine(other, -F::one()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.source, &self.target);
        }
        Self {
            source: self.source.clone(),
            target: self.target.clone(),
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(i, v)| (*i, v.clone() * c.clone())).collect())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    /// Kronecker product `self ⊗ other` on row-major flattened bases.
    pub fn tensor(&self, other: &Morphism<F>) -> Result<Self, LinalgError> {
        let source = self.source.tensor(&other.source)?;
        let target = self.target.tensor(&other.target)?;
        let m = other.target.dim();
        let mut cols = Vec::with_capacity(source.dim());
        for a in &self.cols {
            for b in &other.cols {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (i1, v1) in a {
                    for (i2, v2) in b {
                        col.push((i1 * m + i2, v1.clone() * v2.clone()));
                    }
                }
                cols.push(col);
            }
        }
        Ok(Self {
            source,
            target,
            cols,
        })
    }

    /// `id_{ambient[..p]} ⊗ self ⊗ id_{rest}` where `self` occupies the
    /// consecutive factors starting at the 1-based `position` whose tensor
    /// product equals `self.source()`.
    pub fn leg(&self, position: usize, ambient: &[GradedSpace]) -> Result<Self, LinalgError> {
        if position == 0 || position > ambient.len() {
            return Err(LinalgError::LegSlot { position });
        }
        let start = position - 1;
        let mut span = None;
        let mut acc: Option<GradedSpace> = None;
        for (k, factor) in ambient[start..].iter().enumerate() {
            let next = match &acc {
                None => factor.clone(),
                Some(a) => a.tensor(factor)?,
            };
            if next.dim() > self.source.dim() && !self.source.labels().is_empty() {
                break;
            }
            if next == self.source {
                span = Some(k + 1);
                break;
            }
            acc = Some(next);
        }
        let span = span.ok_or(LinalgError::LegSlot { position })?;
        let mut out = self.clone();
        if start > 0 {
            let left = GradedSpace::tensor_all(&ambient[..start])?;
            out = Morphism::identity(&left).tensor(&out)?;
        }
        if start + span < ambient.len() {
            let right = GradedSpace::tensor_all(&ambient[start + span..])?;
            out = out.tensor(&Morphism::identity(&right))?;
        }
        Ok(out)
    }

    /// Restriction to a subset of source columns, re-typed onto `source`.
    fn select_columns(&self, source: &GradedSpace, columns: &[usize]) -> Self {
        Self {
            source: source.clone(),
            target: self.target.clone(),
            cols: columns.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    /// Rank, computed exactly per degree block.
    pub fn rank(&self) -> usize {
        degree_blocks(&self.source)
            .into_iter()
            .map(|(_, cols)| {
                let dense = self.dense_block(&cols);
                row_reduce(dense).1.len()
            })
            .sum()
    }

    fn dense_block(&self, cols: &[usize]) -> Vec<Vec<F>> {
        let mut m = vec![vec![F::zero(); cols.len()]; self.target.dim()];
        for (c, &j) in cols.iter().enumerate() {
            for (i, v) in &self.cols[j] {
                m[*i][c] = v.clone();
            }
        }
        m
    }

    /// Kernel `κ: K → source` with `self ∘ κ = 0`, computed per degree block
    /// by Gaussian elimination. Kernel vectors are ordered by their free
    /// column; `K` is labelled `ker0, ker1, ...`.
    pub fn kernel(&self) -> (GradedSpace, Morphism<F>) {
        let mut vectors: Vec<(usize, Vec<(usize, F)>)> = Vec::new();
        for (_, cols) in degree_blocks(&self.source) {
            let (rref, pivots) = row_reduce(self.dense_block(&cols));
            let is_pivot: Vec<bool> = {
                let mut v = vec![false; cols.len()];
                for &(_, c) in &pivots {
                    v[c] = true;
                }
                v
            };
            for free in (0..cols.len()).filter(|&c| !is_pivot[c]) {
                let mut vec = vec![(cols[free], F::one())];
                for &(r, pc) in &pivots {
                    let v = rref[r][free].clone();
                    if !v.is_zero() {
                        vec.push((cols[pc], -v));
                    }
                }
                vec.sort_by_key(|(i, _)| *i);
                vectors.push((cols[free], vec));
            }
        }
        vectors.sort_by_key(|(free, _)| *free);
        let space = GradedSpace::new(
            self.source.rank(),
            vectors
                .iter()
                .enumerate()
                .map(|(k, (free, _))| (format!("ker{k}"), self.source.degree(*free).clone())),
        )
        .expect("synthesized kernel labels are valid");
        let kappa = Morphism {
            source: space.clone(),
            target: self.source.clone(),
            cols: vectors.into_iter().map(|(_, v)| v).collect(),
        };
        (space, kappa)
    }

    /// The unique `X` with `self ∘ X = rhs`, for injective `self`.
    pub fn solve_injective(&self, rhs: &Morphism<F>) -> Result<Morphism<F>, LinalgError> {
        if rhs.target != self.target {
            return Err(LinalgError::ShapeMismatch {
                op: "solve",
                left: shape(&self.source, &self.target),
                right: shape(&rhs.source, &rhs.target),
            });
        }
        let all: Vec<usize> = (0..self.source.dim()).collect();
        let (rref, pivots) = {
            // Row-reduce the transpose-free augmented system [A | B].
            let n = self.source.dim();
            let mut aug = self.dense_block(&all);
            for (i, row) in aug.iter_mut().enumerate() {
                row.extend((0..rhs.source.dim()).map(|j| rhs.entry(i, j)));
            }
            let (r, p) = row_reduce(aug);
            (r, p.into_iter().filter(|&(_, c)| c < n).collect::<Vec<_>>())
        };
        let n = self.source.dim();
        if pivots.len() != n {
            return Err(LinalgError::Unsolvable("map is not injective"));
        }
        // Consistency: rows beyond the pivots must vanish on the right block.
        for row in rref.iter().skip(n) {
            if row[n..].iter().any(|v| !v.is_zero()) {
                return Err(LinalgError::Unsolvable("right-hand side outside the image"));
            }
        }
        let mut entries = Vec::new();
        for &(r, c) in &pivots {
            for j in 0..rhs.source.dim() {
                let v = rref[r][n + j].clone();
                if !v.is_zero() {
                    entries.push((c, j, v));
                }
            }
        }
        Morphism::from_entries(&rhs.source, &self.source, entries)
    }

    /// Restriction of `self` to the columns in `cols`, viewed on a new
    /// source space with those degrees.
    pub fn restrict_columns(&self, cols: &[usize], labels: &[String]) -> Result<Self, LinalgError> {
        let source = GradedSpace::new(
            self.source.rank(),
            cols.iter()
                .zip(labels)
                .map(|(&j, l)| (l.clone(), self.source.degree(j).clone())),
        )?;
        Ok(self.select_columns(&source, cols))
    }
}

/// Groups basis indices by degree, in order of first appearance.
fn degree_blocks(space: &GradedSpace) -> Vec<(Degree, Vec<usize>)> {
    let mut blocks: Vec<(Degree, Vec<usize>)> = Vec::new();
    for (j, d) in space.degrees().iter().enumerate() {
        match blocks.iter_mut().find(|(bd, _)| bd == d) {
            Some((_, v)) => v.push(j),
            None => blocks.push((d.clone(), vec![j])),
        }
    }
    blocks
}

/// Reduced row echelon form of a dense matrix. Returns the reduced matrix
/// and the `(row, column)` pivot positions.
pub(crate) fn row_reduce<F: Field>(mut m: Vec<Vec<F>>) -> (Vec<Vec<F>>, Vec<(usize, usize)>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("pivot is nonzero");
        for v in m[r].iter_mut() {
            *v *= inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for k in 0..cols {
                    let d = factor.clone() * m[r][k].clone();
                    m[i][k] -= d;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    (m, pivots)
}
