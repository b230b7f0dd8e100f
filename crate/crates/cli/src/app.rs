use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use cartier::bosonization::{bisum, check_decomposition_theorem, check_split, split_decompose, BisumError};
use cartier::zoo::Example;
use cartier::{AxiomGroup, DecompositionError, Field, Fp, Rational, VerificationReport};
use clap::{Parser, Subcommand, ValueEnum};

use crate::emit::{emit_report, ReportFormat};
use crate::format::{decode, encode, read_file, to_json, FormatError, Split, Structure, StructureFile};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_AXIOM_FAILURE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cartier", version, about = "Verify curved Lie bialgebras and crossed modules exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the axiom suite on a structure file.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        axioms: AxiomFilter,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
    },
    /// Write one of the built-in examples as a structure file.
    Example {
        #[arg(value_enum)]
        name: ExampleName,
        #[arg(long = "G")]
        big_g: Option<usize>,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long = "chi-gh", allow_hyphen_values = true)]
        chi_gh: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Form the bisum of a crossed Lie bialgebra with its base.
    Bisum {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
    },
    /// Split a Lie bialgebra along its tagged π and γ.
    Decompose {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxiomFilter {
    All,
    Lie,
    Colie,
    Bialg,
    Module,
    Comodule,
    Crossed,
    Lemma,
}

impl AxiomFilter {
    fn keeps(self, g: AxiomGroup) -> bool {
        match self {
            AxiomFilter::All => true,
            AxiomFilter::Lie => g == AxiomGroup::Lie,
            AxiomFilter::Colie => g == AxiomGroup::CoLie,
            AxiomFilter::Bialg => g == AxiomGroup::Bialgebra,
            AxiomFilter::Module => g == AxiomGroup::Module,
            AxiomFilter::Comodule => g == AxiomGroup::Comodule,
            AxiomFilter::Crossed => g == AxiomGroup::Crossed,
            AxiomFilter::Lemma => g == AxiomGroup::Lemma,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExampleName {
    Jordan,
    Superjordan,
    Laistrygonian,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("error[{code}]: {source}", code = .source.code())]
    Format {
        #[from]
        source: FormatError,
    },
    #[error("error[usage]: {0}")]
    Usage(String),
    #[error("error[io]: cannot write {path}: {message}")]
    Write { path: String, message: String },
    #[error("error[structure]: {0}")]
    Structure(String),
}

struct Io<'a> {
    out: &'a mut dyn Write,
    color: bool,
}

impl Io<'_> {
    fn print(&mut self, s: &str) {
        // A closed stdout is not worth failing over.
        let _ = self.out.write_all(s.as_bytes());
    }

    fn report<F: Field>(&mut self, r: &VerificationReport<F>, format: ReportFormat) -> i32 {
        let s = emit_report(r, format, self.color);
        self.print(&s);
        if r.all_pass() {
            EXIT_PASS
        } else {
            EXIT_AXIOM_FAILURE
        }
    }
}

/// Primes accepted by `Fp:<p>`.
pub const SUPPORTED_PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 101];

macro_rules! with_field {
    ($desc:expr, $handler:ident ( $($arg:expr),* )) => {
        match $desc {
            "Q" => $handler::<Rational>($($arg),*),
            "Fp:2" => $handler::<Fp<2>>($($arg),*),
            "Fp:3" => $handler::<Fp<3>>($($arg),*),
            "Fp:5" => $handler::<Fp<5>>($($arg),*),
            "Fp:7" => $handler::<Fp<7>>($($arg),*),
            "Fp:11" => $handler::<Fp<11>>($($arg),*),
            "Fp:13" => $handler::<Fp<13>>($($arg),*),
            "Fp:17" => $handler::<Fp<17>>($($arg),*),
            "Fp:19" => $handler::<Fp<19>>($($arg),*),
            "Fp:23" => $handler::<Fp<23>>($($arg),*),
            "Fp:29" => $handler::<Fp<29>>($($arg),*),
            "Fp:31" => $handler::<Fp<31>>($($arg),*),
            "Fp:37" => $handler::<Fp<37>>($($arg),*),
            "Fp:41" => $handler::<Fp<41>>($($arg),*),
            "Fp:43" => $handler::<Fp<43>>($($arg),*),
            "Fp:47" => $handler::<Fp<47>>($($arg),*),
            "Fp:101" => $handler::<Fp<101>>($($arg),*),
            other => Err(CliError::from(FormatError::UnsupportedField(other.to_string()))),
        }
    };
}

/// Runs the command line `args` (including the program name). Returns the
/// process exit code: 0 when every check passes, 1 when a check fails and 2
/// for unusable input.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { out: stdout, color };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<i32, CliError> {
    match command {
        Command::Verify { file, axioms, report } => {
            let f = read_file(&file)?;
            with_field!(f.field.as_str(), verify(&f, axioms, report, io))
        }
        Command::Example {
            name,
            big_g,
            field,
            chi_gh,
            output,
        } => with_field!(field.as_str(), example(name, big_g, chi_gh.as_deref(), output.as_deref(), io)),
        Command::Bisum { file, output, report } => {
            let f = read_file(&file)?;
            with_field!(f.field.as_str(), bisum_command(&f, &output, report, io))
        }
        Command::Decompose { file, output, report } => {
            let f = read_file(&file)?;
            with_field!(f.field.as_str(), decompose_command(&f, &output, report, io))
        }
    }
}

/// The full suite appropriate to the kind of structure.
pub fn structure_suite<F: Field>(s: &Structure<F>) -> VerificationReport<F> {
    match s {
        Structure::Crossed(k) => k.suite(),
        Structure::Split(sp) => {
            let mut r = sp.g.ambient_suite();
            r.extend_prefixed("base", sp.f.ambient_suite());
            r.extend(check_split(&sp.g, &sp.f, &sp.pi, &sp.gamma));
            r
        }
        Structure::Bialgebra(g) => g.ambient_suite(),
    }
}

fn verify<F: Field>(
    file: &StructureFile,
    axioms: AxiomFilter,
    format: ReportFormat,
    io: &mut Io<'_>,
) -> Result<i32, CliError> {
    let s = decode::<F>(file)?;
    let report = structure_suite(&s).filtered(|g| axioms.keeps(g));
    Ok(io.report(&report, format))
}

fn write_structure(path: &Path, file: &StructureFile) -> Result<(), CliError> {
    std::fs::write(path, to_json(file)).map_err(|e| CliError::Write {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn example<F: Field>(
    name: ExampleName,
    big_g: Option<usize>,
    chi_gh: Option<&str>,
    output: Option<&Path>,
    io: &mut Io<'_>,
) -> Result<i32, CliError> {
    let ex = match name {
        ExampleName::Laistrygonian => {
            let big_g = big_g.ok_or_else(|| CliError::Usage("laistrygonian needs --G <n>".into()))?;
            let chi_gh = match chi_gh {
                Some(s) => F::parse_scalar(s).map_err(|_| FormatError::MalformedScalar {
                    at: "--chi-gh".into(),
                    value: s.to_string(),
                })?,
                None => F::one(),
            };
            Example::Laistrygonian { big_g, chi_gh }
        }
        _ if big_g.is_some() || chi_gh.is_some() => {
            return Err(CliError::Usage("--G and --chi-gh only apply to laistrygonian".into()));
        }
        ExampleName::Jordan => Example::Jordan,
        ExampleName::Superjordan => Example::SuperJordan,
    };
    let k = ex.build().map_err(|e| CliError::Structure(e.to_string()))?;
    let file = encode(&Structure::Crossed(k));
    match output {
        Some(path) => write_structure(path, &file)?,
        None => io.print(&to_json(&file)),
    }
    Ok(EXIT_PASS)
}

fn bisum_command<F: Field>(
    file: &StructureFile,
    output: &Path,
    format: ReportFormat,
    io: &mut Io<'_>,
) -> Result<i32, CliError> {
    let Structure::Crossed(k) = decode::<F>(file)? else {
        return Err(CliError::Usage("bisum expects a crossed Lie bialgebra (roles alpha and lambda)".into()));
    };
    match bisum(&k) {
        Ok(b) => {
            let split = Split {
                g: b.algebra.clone(),
                f: k.base().clone(),
                pi: b.canonical_pi().clone(),
                gamma: b.canonical_gamma().clone(),
            };
            write_structure(output, &encode(&Structure::Split(split)))?;
            Ok(io.report(&b.algebra.ambient_suite(), format))
        }
        Err(BisumError::Rejected(report)) => Ok(io.report(&report, format)),
        Err(BisumError::Linalg(e)) => Err(CliError::Structure(e.to_string())),
    }
}

fn decompose_command<F: Field>(
    file: &StructureFile,
    output: &Path,
    format: ReportFormat,
    io: &mut Io<'_>,
) -> Result<i32, CliError> {
    let Structure::Split(sp) = decode::<F>(file)? else {
        return Err(CliError::Usage("decompose expects a file tagging pi and gamma".into()));
    };
    match split_decompose(&sp.g, &sp.f, &sp.pi, &sp.gamma) {
        Ok((bp, k)) => {
            write_structure(output, &encode(&Structure::Crossed(k.clone())))?;
            Ok(io.report(&check_decomposition_theorem(&bp, &k), format))
        }
        Err(DecompositionError::Precondition(_)) => {
            Ok(io.report(&check_split(&sp.g, &sp.f, &sp.pi, &sp.gamma), format))
        }
        Err(e) => Err(CliError::Structure(e.to_string())),
    }
}
