//! Structure files and the `cartier` command line.

mod app;
pub mod emit;
pub mod format;

pub use app::{run, structure_suite, AxiomFilter, EXIT_AXIOM_FAILURE, EXIT_INPUT_ERROR, EXIT_PASS, SUPPORTED_PRIMES};
pub use emit::{emit_report, ReportFormat};
pub use format::{decode, encode, parse_file, to_json, FormatError, Split, Structure, StructureFile};
