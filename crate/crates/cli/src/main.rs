//! `wcatalan`: tabulates Catalan / w-Catalan polynomials, runs the identity
//! verification sweeps, and runs the p-adic oracle, with machine-readable
//! reports and CI-friendly exit codes.
//!
//! Exit codes: 0 all cells pass, 1 at least one cell failed, 2 usage or
//! parameter error.

mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use render::TableRow;
use std::path::PathBuf;
use std::process::ExitCode;
use wcatalan_core::catalan::w_catalan_series;
use wcatalan_core::defaults;
use wcatalan_core::identity;
use wcatalan_core::padic::{self, HalfBinomialSpec};
use wcatalan_core::report::{IdentityId, VerificationReport};

#[derive(Parser)]
#[command(
    name = "wcatalan",
    about = "Exact Catalan / w-Catalan polynomial tables and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this path instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate polynomials and their constant terms
    Table {
        #[command(subcommand)]
        kind: TableKind,
    },
    /// Verify identities coefficient-exactly over a parameter grid
    Verify(VerifyArgs),
    /// Check the closed forms against truncated fermionic p-adic sums
    Padic(PadicArgs),
}

#[derive(Subcommand)]
enum TableKind {
    /// Rows n, C_n, C_n(x)
    Catalan {
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Rows n, C_{n,w}, C_{n,w}(x)
    WCatalan {
        #[arg(long)]
        w: u32,
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// One identity tag: thm1, thm2, cor3, cor4, thm5, mult, stirling-form,
    /// gf-product, alt-series, double-ratio
    #[arg(long, conflicts_with = "all")]
    identity: Option<String>,
    /// Run every identity on its default grid
    #[arg(long)]
    all: bool,
    /// Largest n (default per identity)
    #[arg(long)]
    n_max: Option<u32>,
    /// Odd d values, comma-separated
    #[arg(long, value_delimiter = ',')]
    d: Option<Vec<u32>>,
    /// Odd w values, comma-separated
    #[arg(long, value_delimiter = ',')]
    w: Option<Vec<u32>>,
    /// One odd pair "w1,w2" per occurrence
    #[arg(long = "w-pairs", value_name = "W1,W2")]
    w_pairs: Option<Vec<String>>,
    /// Truncation order for the series identities
    #[arg(long)]
    order: Option<usize>,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct PadicArgs {
    /// Odd prime (default: 3, 5 and 7 in turn)
    #[arg(long)]
    p: Option<u32>,
    /// Residue precision M (modulus p^M)
    #[arg(long, default_value_t = defaults::PADIC_PRECISION)]
    precision: u32,
    /// Largest binomial order n
    #[arg(long, default_value_t = defaults::PADIC_N_MAX)]
    n_max: u32,
    /// Integer arguments x, comma-separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    x: Option<Vec<i64>>,
    /// Largest truncation exponent N (default depends on p)
    #[arg(long)]
    n_cap: Option<u32>,
    /// Odd shifts for the shift identity, comma-separated
    #[arg(long, value_delimiter = ',')]
    shifts: Option<Vec<u32>>,
    #[command(flatten)]
    out: OutputOpts,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("{message}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(true)` when every cell passed; `Err` carries a one-line diagnostic.
fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Table { kind } => {
            let (w, n_max, out) = match kind {
                TableKind::Catalan { n_max, out } => (None, n_max, out),
                TableKind::WCatalan { w, n_max, out } => (Some(w), n_max, out),
            };
            if w == Some(0) {
                return Err("w must be a positive integer".to_string());
            }
            let rows = table_rows(w.unwrap_or(1), n_max);
            write_output(&out, &render::render_table(w, &rows, out.format))?;
            Ok(true)
        }
        Command::Verify(args) => {
            let reports = verify_reports(&args)?;
            write_output(&args.out, &render::render_reports(&reports, args.out.format))?;
            Ok(reports.iter().all(VerificationReport::all_passed))
        }
        Command::Padic(args) => {
            let reports = padic_reports(&args)?;
            write_output(&args.out, &render::render_reports(&reports, args.out.format))?;
            Ok(reports.iter().all(VerificationReport::all_passed))
        }
    }
}

fn table_rows(w: u32, n_max: u32) -> Vec<TableRow> {
    let series = w_catalan_series(w, n_max as usize + 1);
    (0..=n_max)
        .map(|n| {
            let poly = series.coeff(n as usize);
            TableRow {
                n,
                number: poly.constant_term().to_string(),
                poly: poly.to_string(),
            }
        })
        .collect()
}

fn verify_reports(args: &VerifyArgs) -> Result<Vec<VerificationReport>, String> {
    if args.order == Some(0) {
        return Err("--order must be at least 1".to_string());
    }
    if args.all {
        return defaults::run_all().map_err(|e| e.to_string());
    }
    let tag = args
        .identity
        .as_deref()
        .ok_or("pass --identity <tag> or --all")?;
    let identity = IdentityId::parse(tag)
        .ok_or_else(|| format!("unknown identity tag: {tag} (run --help for the catalog)"))?;
    if !IdentityId::SYMBOLIC.contains(&identity) {
        return Err(format!("identity {tag} runs under the padic command"));
    }

    let n_max = |fallback: u32| args.n_max.unwrap_or(fallback);
    let d_list = || args.d.clone().unwrap_or_else(|| defaults::ODD_LIST.to_vec());
    let w_list = || args.w.clone().unwrap_or_else(|| defaults::ODD_LIST.to_vec());
    let pairs = |fallback: &[(u32, u32)]| -> Result<Vec<(u32, u32)>, String> {
        match &args.w_pairs {
            None => Ok(fallback.to_vec()),
            Some(raw) => raw.iter().map(|s| parse_pair(s)).collect(),
        }
    };

    let report = match identity {
        IdentityId::Theorem1 => identity::verify_theorem1(n_max(defaults::N_MAX), &d_list()),
        IdentityId::Theorem2 => {
            identity::verify_theorem2(n_max(defaults::N_MAX), &pairs(&defaults::odd_pairs())?)
        }
        IdentityId::Corollary3 => identity::verify_corollary3(n_max(defaults::N_MAX), &w_list()),
        IdentityId::Corollary4 => {
            identity::verify_corollary4(n_max(defaults::N_MAX), &pairs(&defaults::odd_pairs())?)
        }
        IdentityId::Theorem5 => {
            identity::verify_theorem5(n_max(defaults::N_MAX), &pairs(&defaults::odd_pairs())?)
        }
        IdentityId::MultFormula => {
            identity::verify_mult_formula(n_max(defaults::N_MAX), &w_list())
        }
        IdentityId::StirlingForm => {
            Ok(identity::verify_stirling_form(n_max(defaults::STIRLING_FORM_N_MAX)))
        }
        IdentityId::GfProduct => identity::verify_gf_product(
            args.order.unwrap_or(defaults::GF_PRODUCT_ORDER),
            &args.d.clone().unwrap_or_else(|| defaults::GF_PRODUCT_D.to_vec()),
        ),
        IdentityId::AltSeries => identity::verify_alt_series(
            args.order.unwrap_or(defaults::ALT_SERIES_ORDER),
            &d_list(),
            &w_list(),
        ),
        IdentityId::DoubleRatio => identity::verify_double_ratio(
            n_max(defaults::DOUBLE_RATIO_N_MAX),
            &pairs(&defaults::DOUBLE_RATIO_PAIRS)?,
        ),
        IdentityId::PadicCatalan | IdentityId::PadicShift => unreachable!("not symbolic"),
    };
    report.map(|r| vec![r]).map_err(|e| e.to_string())
}

fn padic_reports(args: &PadicArgs) -> Result<Vec<VerificationReport>, String> {
    if args.precision < 1 {
        return Err("--precision must be at least 1".to_string());
    }
    if args.n_cap.is_some_and(|cap| cap < 2) {
        return Err("--n-cap must be at least 2".to_string());
    }
    let primes = match args.p {
        Some(p) => vec![p],
        None => defaults::PADIC_PRIMES.to_vec(),
    };
    let x_list = args.x.clone().unwrap_or_else(|| defaults::PADIC_X.to_vec());
    let shifts = args
        .shifts
        .clone()
        .unwrap_or_else(|| defaults::SHIFT_LIST.to_vec());
    let specs: Vec<HalfBinomialSpec> = defaults::shift_specs();
    let mut reports = Vec::new();
    for p in primes {
        let n_cap = args.n_cap.unwrap_or_else(|| padic::default_n_cap(p));
        reports.push(
            padic::verify_catalan_integral(p, args.n_max, &x_list, args.precision, n_cap)
                .map_err(|e| e.to_string())?,
        );
        reports.push(
            padic::verify_shift_identity(p, &specs, &shifts, args.precision, n_cap)
                .map_err(|e| e.to_string())?,
        );
    }
    Ok(reports)
}

fn parse_pair(raw: &str) -> Result<(u32, u32), String> {
    let parse = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| format!("invalid pair component {s:?} in --w-pairs {raw:?}"))
    };
    match raw.split(',').collect::<Vec<_>>()[..] {
        [a, b] => Ok((parse(a)?, parse(b)?)),
        _ => Err(format!("--w-pairs expects \"w1,w2\", got {raw:?}")),
    }
}

fn write_output(out: &OutputOpts, content: &str) -> Result<(), String> {
    match &out.output {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}
