//! The JSON structure file: spaces, structure maps and their roles.

use std::collections::BTreeMap;

use cartier::{
    AddBicharacter, CartierContext, CrossedLieBialgebra, CrossedModule, Degree, Field, GradedSpace,
    LieBialgebra, LinalgError, Morphism, MultBicharacter,
};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub format_version: u32,
    /// `"Q"` or `"Fp:<p>"`.
    pub field: String,
    pub rank: usize,
    pub tau: Vec<Vec<String>>,
    pub eta: Vec<Vec<String>>,
    pub spaces: BTreeMap<String, Vec<BasisVector>>,
    pub maps: BTreeMap<String, MapSpec>,
    pub roles: Roles,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisVector {
    pub label: String,
    pub degree: Vec<i64>,
}

/// One space name, or a list of names for a tensor product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Factors {
    One(String),
    Many(Vec<String>),
}

impl Factors {
    fn from_vec(mut v: Vec<String>) -> Self {
        if v.len() == 1 {
            Factors::One(v.remove(0))
        } else {
            Factors::Many(v)
        }
    }

    fn parts(&self) -> Vec<&str> {
        match self {
            Factors::One(s) => vec![s.as_str()],
            Factors::Many(v) => v.iter().map(String::as_str).collect(),
        }
    }
}

/// `(target basis vector, source basis vector, scalar)`.
pub type MapEntry = (Factors, Factors, String);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub source: Factors,
    pub target: Factors,
    pub entries: Vec<MapEntry>,
}

/// Which spaces and maps play which part. A crossed Lie bialgebra sets
/// `base`, `module_space`, `alpha`, `lambda`, `beta` and `delta`; a split
/// Lie bialgebra sets `base`, `module_space`, `beta`, `delta`, `pi` and
/// `gamma`; a bare Lie bialgebra sets `module_space`, `beta` and `delta`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Roles {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_beta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_delta: Option<String>,
    pub module_space: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    pub beta: String,
    pub delta: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("schema violation at {at}: {message}")]
    Schema { at: String, message: String },
    #[error("malformed scalar {value:?} at {at}")]
    MalformedScalar { at: String, value: String },
    #[error("degree violation at {at}: {message}")]
    DegreeViolation { at: String, message: String },
    #[error("dangling label {label:?} at {at}")]
    DanglingLabel { at: String, label: String },
    #[error("unsupported field {0:?}; expected \"Q\" or \"Fp:<p>\" with a supported prime")]
    UnsupportedField(String),
    #[error("invalid structure at {at}: {message}")]
    Invalid { at: String, message: String },
}

impl FormatError {
    /// Stable machine-readable code, one per error kind.
    pub fn code(&self) -> &'static str {
        match self {
            FormatError::Io { .. } => "io",
            FormatError::Syntax { .. } => "syntax",
            FormatError::Schema { .. } => "schema",
            FormatError::MalformedScalar { .. } => "malformed-scalar",
            FormatError::DegreeViolation { .. } => "degree-violation",
            FormatError::DanglingLabel { .. } => "dangling-label",
            FormatError::UnsupportedField(_) => "unsupported-field",
            FormatError::Invalid { .. } => "invalid-structure",
        }
    }

    fn schema(at: impl Into<String>, message: impl Into<String>) -> Self {
        FormatError::Schema {
            at: at.into(),
            message: message.into(),
        }
    }

    fn invalid(at: impl Into<String>, e: impl ToString) -> Self {
        FormatError::Invalid {
            at: at.into(),
            message: e.to_string(),
        }
    }
}

/// Reads the JSON layer only. Scalars and labels are validated later, once
/// the field is known.
pub fn parse_file(text: &str) -> Result<StructureFile, FormatError> {
    serde_json::from_str(text).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Data => FormatError::Schema {
                at: format!("line {}, column {}", e.line(), e.column()),
                message: e.to_string(),
            },
            _ => FormatError::Syntax {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            },
        }
    })
}

pub fn read_file(path: &std::path::Path) -> Result<StructureFile, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_file(&text)
}

/// A split Lie bialgebra `π: g ⇄ f: γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split<F: Field> {
    pub g: LieBialgebra<F>,
    pub f: LieBialgebra<F>,
    pub pi: Morphism<F>,
    pub gamma: Morphism<F>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure<F: Field> {
    Crossed(CrossedLieBialgebra<F>),
    Split(Split<F>),
    Bialgebra(LieBialgebra<F>),
}

impl<F: Field> Structure<F> {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Crossed(_) => "crossed",
            Structure::Split(_) => "split",
            Structure::Bialgebra(_) => "bialgebra",
        }
    }

    pub fn context(&self) -> &CartierContext<F> {
        match self {
            Structure::Crossed(k) => k.base().ctx(),
            Structure::Split(s) => s.g.ctx(),
            Structure::Bialgebra(g) => g.ctx(),
        }
    }
}

fn scalar<F: Field>(at: impl Fn() -> String, s: &str) -> Result<F, FormatError> {
    F::parse_scalar(s).map_err(|_| FormatError::MalformedScalar {
        at: at(),
        value: s.to_string(),
    })
}

struct Decoder<'a, F: Field> {
    file: &'a StructureFile,
    spaces: BTreeMap<String, GradedSpace>,
    _field: std::marker::PhantomData<F>,
}

impl<'a, F: Field> Decoder<'a, F> {
    fn new(file: &'a StructureFile) -> Result<Self, FormatError> {
        if file.format_version != FORMAT_VERSION {
            return Err(FormatError::schema(
                "format_version",
                format!("expected {FORMAT_VERSION}, found {}", file.format_version),
            ));
        }
        if file.field != F::descriptor() {
            return Err(FormatError::UnsupportedField(file.field.clone()));
        }
        let mut spaces = BTreeMap::new();
        for (name, basis) in &file.spaces {
            for (i, b) in basis.iter().enumerate() {
                if b.degree.len() != file.rank {
                    return Err(FormatError::schema(
                        format!("spaces.{name}[{i}].degree"),
                        format!("length {} but rank is {}", b.degree.len(), file.rank),
                    ));
                }
            }
            let space = GradedSpace::new(
                file.rank,
                basis.iter().map(|b| (b.label.clone(), Degree::new(b.degree.clone()))),
            )
            .map_err(|e| FormatError::invalid(format!("spaces.{name}"), e))?;
            spaces.insert(name.clone(), space);
        }
        Ok(Self {
            file,
            spaces,
            _field: std::marker::PhantomData,
        })
    }

    fn matrix(&self, key: &str, rows: &[Vec<String>]) -> Result<Vec<Vec<F>>, FormatError> {
        let r = self.file.rank;
        if rows.len() != r || rows.iter().any(|row| row.len() != r) {
            return Err(FormatError::schema(key, format!("expected a {r}×{r} matrix")));
        }
        rows.iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, s)| scalar(|| format!("{key}[{i}][{j}]"), s))
                    .collect()
            })
            .collect()
    }

    fn context(&self) -> Result<CartierContext<F>, FormatError> {
        let tau = MultBicharacter::new(self.matrix("tau", &self.file.tau)?)
            .map_err(|e| FormatError::invalid("tau", e))?;
        let eta = AddBicharacter::new(self.matrix("eta", &self.file.eta)?)
            .map_err(|e| FormatError::invalid("eta", e))?;
        CartierContext::new(tau, eta).map_err(|e| FormatError::invalid("tau/eta", e))
    }

    fn space(&self, at: &str, name: &str) -> Result<&GradedSpace, FormatError> {
        self.spaces.get(name).ok_or_else(|| FormatError::DanglingLabel {
            at: at.to_string(),
            label: name.to_string(),
        })
    }

    fn factors(&self, at: &str, f: &Factors) -> Result<Vec<GradedSpace>, FormatError> {
        f.parts()
            .iter()
            .map(|n| self.space(at, n).cloned())
            .collect()
    }

    fn index(&self, at: &str, factors: &[GradedSpace], label: &Factors) -> Result<usize, FormatError> {
        let parts = label.parts();
        if parts.len() != factors.len() {
            return Err(FormatError::schema(
                at,
                format!("expected {} tensor factors, found {}", factors.len(), parts.len()),
            ));
        }
        let mut idx = 0;
        for (space, part) in factors.iter().zip(&parts) {
            let i = space.index_of(part).ok_or_else(|| FormatError::DanglingLabel {
                at: at.to_string(),
                label: part.to_string(),
            })?;
            idx = idx * space.dim() + i;
        }
        Ok(idx)
    }

    /// The map playing `role`, checked to run between `source` and `target`.
    fn map(&self, role: &str, name: &str, source: &[&str], target: &[&str]) -> Result<Morphism<F>, FormatError> {
        let at = format!("maps.{name}");
        let spec = self.file.maps.get(name).ok_or_else(|| FormatError::DanglingLabel {
            at: format!("roles.{role}"),
            label: name.to_string(),
        })?;
        for (what, got, want) in [("source", &spec.source, source), ("target", &spec.target, target)] {
            if got.parts() != want {
                return Err(FormatError::schema(
                    format!("{at}.{what}"),
                    format!("{role} must map {} → {}", source.join("⊗"), target.join("⊗")),
                ));
            }
        }
        let src_f = self.factors(&at, &spec.source)?;
        let tgt_f = self.factors(&at, &spec.target)?;
        let src = GradedSpace::tensor_all(&src_f).map_err(|e| FormatError::invalid(&at, e))?;
        let tgt = GradedSpace::tensor_all(&tgt_f).map_err(|e| FormatError::invalid(&at, e))?;
        let mut triples = Vec::with_capacity(spec.entries.len());
        for (k, (t, s, v)) in spec.entries.iter().enumerate() {
            let here = format!("{at}.entries[{k}]");
            let row = self.index(&here, &tgt_f, t)?;
            let col = self.index(&here, &src_f, s)?;
            triples.push((row, col, scalar(|| here.clone(), v)?));
            if src.degree(col) != tgt.degree(row) {
                return Err(FormatError::DegreeViolation {
                    at: here,
                    message: format!(
                        "{} has degree {} but {} has degree {}",
                        src.label(col),
                        src.degree(col),
                        tgt.label(row),
                        tgt.degree(row)
                    ),
                });
            }
        }
        Morphism::from_entries(&src, &tgt, triples).map_err(|e| match e {
            LinalgError::DegreeViolation { .. } => FormatError::DegreeViolation {
                at: at.clone(),
                message: e.to_string(),
            },
            e => FormatError::invalid(&at, e),
        })
    }

    fn required<'b>(&self, role: &str, v: &'b Option<String>) -> Result<&'b str, FormatError> {
        v.as_deref()
            .ok_or_else(|| FormatError::schema("roles", format!("missing role {role}")))
    }

    fn base(&self, ctx: &CartierContext<F>) -> Result<(String, LieBialgebra<F>), FormatError> {
        let roles = &self.file.roles;
        let name = self.required("base", &roles.base)?.to_string();
        let space = self.space("roles.base", &name)?.clone();
        let n = name.as_str();
        let beta = match &roles.base_beta {
            Some(m) => self.map("base_beta", m, &[n, n], &[n])?,
            None => Morphism::zero(&space.tensor(&space).map_err(|e| FormatError::invalid("roles.base", e))?, &space),
        };
        let delta = match &roles.base_delta {
            Some(m) => self.map("base_delta", m, &[n], &[n, n])?,
            None => Morphism::zero(&space, &space.tensor(&space).map_err(|e| FormatError::invalid("roles.base", e))?),
        };
        let lb = LieBialgebra::new(ctx.clone(), space, beta, delta).map_err(|e| FormatError::invalid("roles.base", e))?;
        Ok((name, lb))
    }

    fn decode(&self) -> Result<Structure<F>, FormatError> {
        let ctx = self.context()?;
        let roles = &self.file.roles;
        let v = roles.module_space.as_str();
        let vspace = self.space("roles.module_space", v)?.clone();
        let beta = self.map("beta", &roles.beta, &[v, v], &[v])?;
        let delta = self.map("delta", &roles.delta, &[v], &[v, v])?;
        let crossed = roles.alpha.is_some() || roles.lambda.is_some();
        let split = roles.pi.is_some() || roles.gamma.is_some();
        match (crossed, split) {
            (true, true) => Err(FormatError::schema(
                "roles",
                "alpha/lambda and pi/gamma cannot be combined",
            )),
            (true, false) => {
                let (f, base) = self.base(&ctx)?;
                let f = f.as_str();
                let alpha = self.map("alpha", self.required("alpha", &roles.alpha)?, &[f, v], &[v])?;
                let lambda = self.map("lambda", self.required("lambda", &roles.lambda)?, &[v], &[f, v])?;
                let module =
                    CrossedModule::new(base, vspace, alpha, lambda).map_err(|e| FormatError::invalid("roles", e))?;
                let k = CrossedLieBialgebra::new(module, beta, delta).map_err(|e| FormatError::invalid("roles", e))?;
                Ok(Structure::Crossed(k))
            }
            (false, true) => {
                let (f, base) = self.base(&ctx)?;
                let f = f.as_str();
                let pi = self.map("pi", self.required("pi", &roles.pi)?, &[v], &[f])?;
                let gamma = self.map("gamma", self.required("gamma", &roles.gamma)?, &[f], &[v])?;
                let g = LieBialgebra::new(ctx, vspace, beta, delta).map_err(|e| FormatError::invalid("roles", e))?;
                Ok(Structure::Split(Split { g, f: base, pi, gamma }))
            }
            (false, false) => {
                if roles.base.is_some() {
                    return Err(FormatError::schema("roles", "base given without alpha/lambda or pi/gamma"));
                }
                let g = LieBialgebra::new(ctx, vspace, beta, delta).map_err(|e| FormatError::invalid("roles", e))?;
                Ok(Structure::Bialgebra(g))
            }
        }
    }
}

/// Validates `file` over the field `F` named in it.
pub fn decode<F: Field>(file: &StructureFile) -> Result<Structure<F>, FormatError> {
    Decoder::<F>::new(file)?.decode()
}

struct Encoder<F: Field> {
    spaces: BTreeMap<String, Vec<BasisVector>>,
    maps: BTreeMap<String, MapSpec>,
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> Encoder<F> {
    fn new() -> Self {
        Self {
            spaces: BTreeMap::new(),
            maps: BTreeMap::new(),
            _field: std::marker::PhantomData,
        }
    }

    fn space(&mut self, name: &str, space: &GradedSpace) {
        let basis = (0..space.dim())
            .map(|i| BasisVector {
                label: space.label(i).to_string(),
                degree: space.degree(i).exponents().to_vec(),
            })
            .collect();
        self.spaces.insert(name.to_string(), basis);
    }

    fn labels(factors: &[(&str, &GradedSpace)], mut index: usize) -> Factors {
        let mut parts = vec![String::new(); factors.len()];
        for (slot, (_, space)) in parts.iter_mut().zip(factors).rev() {
            *slot = space.label(index % space.dim()).to_string();
            index /= space.dim();
        }
        Factors::from_vec(parts)
    }

    fn map(&mut self, name: &str, m: &Morphism<F>, source: &[(&str, &GradedSpace)], target: &[(&str, &GradedSpace)]) {
        let mut entries: Vec<(usize, usize, MapEntry)> = m
            .entries()
            .map(|(r, c, v)| (c, r, (Self::labels(target, r), Self::labels(source, c), v.canonical())))
            .collect();
        entries.sort_by_key(|(c, r, _)| (*c, *r));
        let names = |fs: &[(&str, &GradedSpace)]| Factors::from_vec(fs.iter().map(|(n, _)| n.to_string()).collect());
        self.maps.insert(
            name.to_string(),
            MapSpec {
                source: names(source),
                target: names(target),
                entries: entries.into_iter().map(|(_, _, e)| e).collect(),
            },
        );
    }

    fn finish(self, ctx: &CartierContext<F>, roles: Roles) -> StructureFile {
        let text = |m: &[Vec<F>]| m.iter().map(|row| row.iter().map(F::canonical).collect()).collect();
        StructureFile {
            format_version: FORMAT_VERSION,
            field: F::descriptor(),
            rank: ctx.rank(),
            tau: text(ctx.tau().matrix()),
            eta: text(ctx.eta().matrix()),
            spaces: self.spaces,
            maps: self.maps,
            roles,
        }
    }
}

fn encode_base<F: Field>(enc: &mut Encoder<F>, base: &LieBialgebra<F>, roles: &mut Roles) {
    let f = base.space();
    enc.space("f", f);
    enc.map("base_beta", base.beta(), &[("f", f), ("f", f)], &[("f", f)]);
    enc.map("base_delta", base.delta(), &[("f", f)], &[("f", f), ("f", f)]);
    roles.base = Some("f".into());
    roles.base_beta = Some("base_beta".into());
    roles.base_delta = Some("base_delta".into());
}

fn encode_bracket<F: Field>(enc: &mut Encoder<F>, name: &str, v: &GradedSpace, beta: &Morphism<F>, delta: &Morphism<F>) {
    enc.space(name, v);
    enc.map("beta", beta, &[(name, v), (name, v)], &[(name, v)]);
    enc.map("delta", delta, &[(name, v)], &[(name, v), (name, v)]);
}

pub fn encode<F: Field>(s: &Structure<F>) -> StructureFile {
    let mut enc = Encoder::<F>::new();
    match s {
        Structure::Crossed(k) => {
            let mut roles = Roles {
                module_space: "V".into(),
                alpha: Some("alpha".into()),
                lambda: Some("lambda".into()),
                beta: "beta".into(),
                delta: "delta".into(),
                ..Roles::default()
            };
            encode_base(&mut enc, k.base(), &mut roles);
            let (f, v) = (k.base().space(), k.space());
            encode_bracket(&mut enc, "V", v, k.beta(), k.delta());
            enc.map("alpha", k.alpha(), &[("f", f), ("V", v)], &[("V", v)]);
            enc.map("lambda", k.lambda(), &[("V", v)], &[("f", f), ("V", v)]);
            enc.finish(k.base().ctx(), roles)
        }
        Structure::Split(sp) => {
            let mut roles = Roles {
                module_space: "g".into(),
                beta: "beta".into(),
                delta: "delta".into(),
                pi: Some("pi".into()),
                gamma: Some("gamma".into()),
                ..Roles::default()
            };
            encode_base(&mut enc, &sp.f, &mut roles);
            let (f, g) = (sp.f.space(), sp.g.space());
            encode_bracket(&mut enc, "g", g, sp.g.beta(), sp.g.delta());
            enc.map("pi", &sp.pi, &[("g", g)], &[("f", f)]);
            enc.map("gamma", &sp.gamma, &[("f", f)], &[("g", g)]);
            enc.finish(sp.g.ctx(), roles)
        }
        Structure::Bialgebra(g) => {
            let roles = Roles {
                module_space: "g".into(),
                beta: "beta".into(),
                delta: "delta".into(),
                ..Roles::default()
            };
            encode_bracket(&mut enc, "g", g.space(), g.beta(), g.delta());
            enc.finish(g.ctx(), roles)
        }
    }
}

/// Pretty JSON with a trailing newline. Keys come out sorted.
pub fn to_json(file: &StructureFile) -> String {
    let value = serde_json::to_value(file).expect("structure files serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}
