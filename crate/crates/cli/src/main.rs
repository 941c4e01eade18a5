//! `ringcodes` command-line tool.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ringcodes", version, about = "Cyclic and LCD codes over F_q[u]/(u^e - 1) and their Gray images")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for parallel library operations (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Seed for randomized factorization.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Maximum codewords times length enumerated when computing distances.
    #[arg(long, global = true, default_value_t = ringcodes::DEFAULT_BUDGET)]
    pub budget: u128,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RootOrderArg {
    /// Roots of u^e - 1 in ascending order.
    Canonical,
    /// Ascending constant term of the linear factors u - alpha.
    FactorConstant,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Characteristic.
    #[arg(long)]
    pub p: Option<u64>,
    /// Extension degree.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Descending modulus coefficients of F_{p^m}, e.g. "1,2,2".
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct CodeArgs {
    /// JSON code spec; replaces the inline flags below.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[command(flatten)]
    pub field: FieldArgs,
    /// Ring parameter: R = F_q[u]/(u^e - 1).
    #[arg(long)]
    pub e: Option<usize>,
    /// Code length over R.
    #[arg(long)]
    pub n: Option<usize>,
    /// Component generators, descending coefficients separated by ';', e.g. "1,4;1,3,0,2,4".
    #[arg(long)]
    pub g: Option<String>,
    /// Gray matrix rows separated by ';', e.g. "1,-1;1,1".
    #[arg(long)]
    pub gray_matrix: Option<String>,
    /// Accept a Gray matrix whose gamma^e is not a square.
    #[arg(long)]
    pub allow_any_gamma: bool,
    #[arg(long, value_enum)]
    pub root_order: Option<RootOrderArg>,
    #[arg(long)]
    pub label: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor x^n - 1, or a given polynomial, over F_q.
    Factor {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: Option<usize>,
        /// Descending coefficients, e.g. "1,0,0,4".
        #[arg(long)]
        poly: Option<String>,
    },
    /// Primitive idempotents of F_q[u]/(u^e - 1).
    Idempotents {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        e: usize,
        #[arg(long, value_enum)]
        root_order: Option<RootOrderArg>,
    },
    /// Build a cyclic code and print its spec and classification.
    Build(CodeArgs),
    /// Gray image generator matrix of a code, or a Gray matrix for a ring.
    Gray {
        #[command(flatten)]
        code: CodeArgs,
        /// Requested gamma when searching for a matrix.
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Minimum distance and weight distribution of the Gray image.
    Distance(CodeArgs),
    /// Full classification: parameters, freeness, LCD, self-duality, MDS.
    Check(CodeArgs),
    /// Enumerate cyclic codes and rank their Gray images.
    Search {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        e: usize,
        /// Single length; use --n-min/--n-max for a range.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        gray_matrix: Option<String>,
        #[arg(long)]
        allow_any_gamma: bool,
        /// Keep only LCD codes.
        #[arg(long)]
        lcd: bool,
        /// Keep only codes that are not free R-modules.
        #[arg(long)]
        non_free: bool,
        #[arg(long, default_value_t = 0)]
        min_k: usize,
        #[arg(long, default_value_t = 0)]
        min_d: usize,
        #[arg(long, default_value_t = ringcodes::lcd_search::DEFAULT_MAX_COMBINATIONS)]
        max_combinations: u128,
        /// Print at most this many results in text mode.
        #[arg(long, default_value_t = 20)]
        top: usize,
    },
    /// Replay the bundled reference tables.
    Tables {
        #[arg(long, default_value = "all")]
        which: String,
    },
}

/// Failure of a command: usage errors exit 2, domain errors exit 1.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(ringcodes::Error),
    Io(std::io::Error),
}

impl From<ringcodes::Error> for Failure {
    fn from(e: ringcodes::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.global.jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.global.jobs).build_global();
    }
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => report(&cli.global, failure),
    }
}

fn report(global: &Global, failure: Failure) -> ExitCode {
    let (code, kind, message) = match &failure {
        Failure::Usage(m) => (2, "usage".to_string(), m.clone()),
        Failure::Domain(e) => (1, error_kind(e), e.to_string()),
        Failure::Io(e) => (1, "io".to_string(), e.to_string()),
    };
    let mut stderr = std::io::stderr();
    if global.format == Format::Json {
        let body = serde_json::json!({ "error": kind, "message": message });
        let _ = writeln!(stderr, "{body}");
    } else {
        let _ = writeln!(stderr, "error: {message}");
    }
    ExitCode::from(code)
}

/// Variant name of a library error in snake case.
fn error_kind(e: &ringcodes::Error) -> String {
    let debug = format!("{e:?}");
    let name: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
    let mut out = String::new();
    for (i, c) in name.chars().enumerate() {
        if c.is_uppercase() && i > 0 {
            out.push('_');
        }
        out.push(c.to_ascii_lowercase());
    }
    out
}
