use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use skewz4::cyclic::DEFAULT_SPAN_TUPLES;
use skewz4::z4::DEFAULT_CODEWORD_BOUND;

use skewz4_cli::commands::{
    self, AnalyzeConfig, KRange, SearchConfig, Selection,
};
use skewz4_cli::manifest::{KSpec, Manifest};
use skewz4_cli::output;
use skewz4_cli::parse;
use skewz4_cli::distance;

/// Exit codes: 0 success and all checks pass, 1 any failed check or
/// code-construction error, 2 usage or input syntax errors.
#[derive(Parser)]
#[command(name = "skewz4", version, about = "Skew-cyclic codes with derivation over Z4 + vZ4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Diagnose one generator polynomial and derive its Z4 codes
    Analyze {
        /// Generator, e.g. "3+x" or "(1+3v)+2x+(3+3v)x^2"
        generator: String,
        /// Code length
        #[arg(long)]
        n: usize,
        /// Span the first k twisted shifts of the generator
        #[arg(long, conflicts_with = "free", required_unless_present = "free")]
        k: Option<usize>,
        /// Build the free code of a right divisor of x^n - 1
        #[arg(long)]
        free: bool,
        /// Derivation kind: 1+2v or 3+2v
        #[arg(long, default_value = "1+2v")]
        derivation: String,
        /// Derived codes: gray, res, tor, plotkin, plotkin-res, plotkin-tor
        #[arg(long, value_name = "LIST")]
        select: Vec<String>,
        /// Largest codeword count distance enumeration will accept
        #[arg(long, default_value_t = DEFAULT_CODEWORD_BOUND)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Recompute every reference code and compare with expectations
    Verify {
        /// Manifest path; omitted, the bundled reference list is used
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CODEWORD_BOUND)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Enumerate or sample generators and report the Pareto front
    Search {
        /// Code length or inclusive range, e.g. 4 or 4..8
        #[arg(long)]
        n: String,
        /// Generator degree or inclusive range
        #[arg(long)]
        degree: String,
        /// Shift count or inclusive range (span mode)
        #[arg(long, conflicts_with = "free", required_unless_present = "free")]
        k: Option<String>,
        /// Search free codes from right divisors only
        #[arg(long)]
        free: bool,
        /// Derivation kind: 1+2v or 3+2v
        #[arg(long, default_value = "1+2v")]
        derivation: String,
        /// Derived codes: gray, res, tor, plotkin, plotkin-res, plotkin-tor
        #[arg(long, value_name = "LIST")]
        select: Vec<String>,
        /// Seed for sampled mode
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of seeded random candidates; omit to enumerate all
        #[arg(long)]
        samples: Option<u64>,
        /// Largest codeword count distance enumeration will accept
        #[arg(long, default_value_t = DEFAULT_CODEWORD_BOUND)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print the nontrivial ideals of Z4 + vZ4
    Ideals {
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Test whether a polynomial lies in the center of the skew ring
    CenterCheck {
        /// Polynomial to test
        polynomial: String,
        /// Derivation kind: 1+2v or 3+2v
        #[arg(long, default_value = "1+2v")]
        derivation: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            generator,
            n,
            k,
            free,
            derivation,
            select,
            bound,
            format,
        } => cmd_analyze(generator, n, k, free, derivation, select, bound, format),
        Command::Verify {
            manifest,
            bound,
            format,
        } => cmd_verify(manifest, bound, format),
        Command::Search {
            n,
            degree,
            k,
            free,
            derivation,
            select,
            seed,
            samples,
            bound,
            format,
        } => cmd_search(n, degree, k, free, derivation, select, seed, samples, bound, format),
        Command::Ideals { format } => cmd_ideals(format),
        Command::CenterCheck {
            polynomial,
            derivation,
            format,
        } => cmd_center_check(polynomial, derivation, format),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// Inclusive "lo..hi" or a single value.
fn parse_range(text: &str, what: &str) -> Result<(usize, usize), String> {
    let parse_end = |part: &str| {
        part.trim()
            .parse::<usize>()
            .map_err(|_| format!("{what}: '{part}' is not a number"))
    };
    match text.split_once("..") {
        Some((lo, hi)) => Ok((parse_end(lo)?, parse_end(hi)?)),
        None => {
            let v = parse_end(text)?;
            Ok((v, v))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_analyze(
    generator: String,
    n: usize,
    k: Option<usize>,
    free: bool,
    derivation: String,
    select: Vec<String>,
    bound: u64,
    format: OutputFormat,
) -> ExitCode {
    if format == OutputFormat::Csv {
        return usage_error("analyze supports text and json output only");
    }
    let kind = match parse::derivation(&derivation) {
        Ok(kind) => kind,
        Err(e) => return usage_error(&e.to_string()),
    };
    let g = match parse::poly(&generator, kind) {
        Ok(g) => g,
        Err(e) => return usage_error(&format!("generator: {e}")),
    };
    let selections = match Selection::parse_list(&select) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    if n == 0 {
        return usage_error("n must be at least 1");
    }
    let k = if free {
        KSpec::Free
    } else {
        let k = k.expect("clap requires k without --free");
        if k == 0 || k > n {
            return usage_error(&format!("k must be in 1..={n}"));
        }
        KSpec::Shifts(k)
    };
    let report = match commands::run_analyze(&AnalyzeConfig {
        generator: g,
        n,
        k,
        selections,
        bound,
        threads: distance::thread_count(),
        span_limit: DEFAULT_SPAN_TUPLES,
    }) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    print!(
        "{}",
        match format {
            OutputFormat::Text => output::analyze_text(&report),
            OutputFormat::Json => output::json(&report),
            OutputFormat::Csv => unreachable!("rejected above"),
        }
    );
    if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_verify(manifest: Option<PathBuf>, bound: u64, format: OutputFormat) -> ExitCode {
    let manifest = match manifest {
        Some(path) => match Manifest::load(&path) {
            Ok(m) => m,
            Err(e) => return usage_error(&e),
        },
        None => Manifest::bundled(),
    };
    let report = commands::run_verify(&manifest, bound, distance::thread_count());
    print!(
        "{}",
        match format {
            OutputFormat::Text => output::verify_text(&report),
            OutputFormat::Json => output::json(&report),
            OutputFormat::Csv => output::verify_csv(&report),
        }
    );
    if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    n: String,
    degree: String,
    k: Option<String>,
    free: bool,
    derivation: String,
    select: Vec<String>,
    seed: u64,
    samples: Option<u64>,
    bound: u64,
    format: OutputFormat,
) -> ExitCode {
    let kind = match parse::derivation(&derivation) {
        Ok(kind) => kind,
        Err(e) => return usage_error(&e.to_string()),
    };
    let selections = match Selection::parse_list(&select) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let (n_lo, n_hi) = match parse_range(&n, "--n") {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    if n_lo == 0 {
        return usage_error("--n must start at 1");
    }
    let (deg_lo, deg_hi) = match parse_range(&degree, "--degree") {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    let k = if free {
        KRange::Free
    } else {
        let text = k.expect("clap requires k without --free");
        let (lo, hi) = match parse_range(&text, "--k") {
            Ok(r) => r,
            Err(e) => return usage_error(&e),
        };
        if lo == 0 {
            return usage_error("--k must start at 1");
        }
        KRange::Shifts { lo, hi }
    };
    let report = commands::run_search(&SearchConfig {
        n_lo,
        n_hi,
        deg_lo,
        deg_hi,
        k,
        kind,
        selections,
        seed,
        samples,
        bound,
        threads: distance::thread_count(),
    });
    print!(
        "{}",
        match format {
            OutputFormat::Text => output::search_text(&report),
            OutputFormat::Json => output::json(&report),
            OutputFormat::Csv => output::search_csv(&report),
        }
    );
    ExitCode::SUCCESS
}

fn cmd_ideals(format: OutputFormat) -> ExitCode {
    let report = commands::ideals_report();
    print!(
        "{}",
        match format {
            OutputFormat::Text => output::ideals_text(&report),
            OutputFormat::Json => output::json(&report),
            OutputFormat::Csv => output::ideals_csv(&report),
        }
    );
    ExitCode::SUCCESS
}

fn cmd_center_check(polynomial: String, derivation: String, format: OutputFormat) -> ExitCode {
    if format == OutputFormat::Csv {
        return usage_error("center-check supports text and json output only");
    }
    let kind = match parse::derivation(&derivation) {
        Ok(kind) => kind,
        Err(e) => return usage_error(&e.to_string()),
    };
    let p = match parse::poly(&polynomial, kind) {
        Ok(p) => p,
        Err(e) => return usage_error(&format!("polynomial: {e}")),
    };
    let report = commands::center_report(&p);
    print!(
        "{}",
        match format {
            OutputFormat::Text => output::center_text(&report),
            OutputFormat::Json => output::json(&report),
            OutputFormat::Csv => unreachable!("rejected above"),
        }
    );
    ExitCode::SUCCESS
}
