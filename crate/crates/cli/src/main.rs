//! Command-line front end: deterministic text, CSV, and JSON serializations
//! of triangle rows, grouped expressions, trajectory reports, distribution
//! summaries, and envelope comparisons.
//!
//! CSV output uses `,` field separators, `.` decimal separators, LF line
//! endings, a header row first, and full-decimal exact integers. Trailing
//! summary values ride as `# key=value` comment lines so the data table
//! stays rectangular.

use std::env;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qtriangles::distributions::{
    compare_envelopes, distribution_from_row, envelope_comparison_grid, estimate_exponent_from_row,
    half_mass_interval,
};
use qtriangles::trajectories::{endpoint_classes_with_cap, link_reports_with_cap, WalkSystem};
use qtriangles::triangles::{row, TriangleKind};
use qtriangles::words::{grouped_expression_with_cap, IndexKind, Word, DEFAULT_ENUMERATION_CAP};
use qtriangles::Error;

/// Environment variable that raises the exhaustive-enumeration cap.
const CAP_ENV_VAR: &str = "QTRIANGLES_ENUM_CAP";

/// Largest nonlinear row the `row` command emits without an explicit raise.
const DEFAULT_ROW_LIMIT: u32 = 1000;

const EXIT_USAGE: u8 = 2;
const EXIT_CAP_REFUSED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "qtriangles",
    about = "Exact rows, word tables, ray trajectories, and distribution reports for the linear and nonlinear arithmetic triangles",
    after_help = "Set QTRIANGLES_ENUM_CAP to raise the exhaustive-enumeration cap (default 26)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one triangle row with its exact coefficients and row sum
    Row(RowArgs),
    /// Group the 2^n words of (a+b)^n into p- or q-type similarity classes
    Expand(ExpandArgs),
    /// Endpoint classes and superimposed links of the branching ray system
    Trajectories(TrajectoriesArgs),
    /// Probabilities, cumulative envelope, half-mass interval, and exponent
    Dist(DistArgs),
    /// Rescaled sum-envelope comparison between the two triangles
    Compare(CompareArgs),
}

#[derive(Args)]
struct RowArgs {
    /// Triangle kind
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Row index
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Refusal threshold for nonlinear rows (their length grows quadratically)
    #[arg(long, default_value_t = DEFAULT_ROW_LIMIT)]
    row_limit: u32,
}

#[derive(Args)]
struct ExpandArgs {
    /// Word length (the binomial power)
    #[arg(long)]
    n: u32,
    /// Class kind: p-type or q-type grouping
    #[arg(long = "type", value_enum)]
    class_kind: KindArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TrajectoriesArgs {
    /// Word length (number of ray passages)
    #[arg(long)]
    n: u32,
    /// Branching system: p (plain walk) or q (integrated walk)
    #[arg(long, value_enum)]
    system: SystemArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct DistArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Row index; must be at least 1
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CompareArgs {
    /// Row index; must be at least 2
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Triangle selector; `p`/`q` are accepted as aliases.
#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(alias = "p")]
    Linear,
    #[value(alias = "q")]
    Nonlinear,
}

impl KindArg {
    fn triangle(self) -> TriangleKind {
        match self {
            KindArg::Linear => TriangleKind::Linear,
            KindArg::Nonlinear => TriangleKind::Nonlinear,
        }
    }

    fn index(self) -> IndexKind {
        match self {
            KindArg::Linear => IndexKind::P,
            KindArg::Nonlinear => IndexKind::Q,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    P,
    Q,
}

impl SystemArg {
    fn walk(self) -> WalkSystem {
        match self {
            SystemArg::P => WalkSystem::PlainWalk,
            SystemArg::Q => WalkSystem::IntegratedWalk,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

enum CliError {
    Usage(String),
    CapRefused(Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::CapRefused(_) => EXIT_CAP_REFUSED,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(msg) => msg.clone(),
            CliError::CapRefused(err) => err.to_string(),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::EnumerationCapExceeded { .. } => CliError::CapRefused(err),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Row(args) => cmd_row(args),
        Command::Expand(args) => cmd_expand(args),
        Command::Trajectories(args) => cmd_trajectories(args),
        Command::Dist(args) => cmd_dist(args),
        Command::Compare(args) => cmd_compare(args),
    }
}

/// The enumeration cap: the library default unless the environment raises it.
fn enumeration_cap() -> Result<u32, CliError> {
    match env::var(CAP_ENV_VAR) {
        Ok(value) => value.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{CAP_ENV_VAR} must be an unsigned integer, got {value:?}"
            ))
        }),
        Err(env::VarError::NotPresent) => Ok(DEFAULT_ENUMERATION_CAP),
        Err(env::VarError::NotUnicode(_)) => {
            Err(CliError::Usage(format!("{CAP_ENV_VAR} is not valid unicode")))
        }
    }
}

fn join_words(words: &[Word]) -> String {
    words
        .iter()
        .map(Word::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_row(args: RowArgs) -> Result<String, CliError> {
    let kind = args.kind.triangle();
    if kind == TriangleKind::Nonlinear && args.n > args.row_limit {
        return Err(CliError::Usage(format!(
            "nonlinear rows are limited to n <= {} (raise with --row-limit); got n = {}",
            args.row_limit, args.n
        )));
    }
    let row = row(kind, args.n);
    let sum = row.sum();
    let expected = qtriangles::BigUint::from(2u32).pow(args.n);
    assert_eq!(sum, expected, "row sum must equal 2^n");

    let mut out = String::new();
    match args.format {
        Format::Text | Format::Csv => {
            if args.format == Format::Csv {
                out.push_str("index,coefficient\n");
            }
            for (i, c) in row.coeffs().iter().enumerate() {
                writeln!(out, "{i},{c}").unwrap();
            }
            match args.format {
                Format::Text => writeln!(out, "sum={sum}").unwrap(),
                _ => writeln!(out, "# sum={sum}").unwrap(),
            }
        }
        Format::Json => {
            let coeffs: Vec<String> = row.coeffs().iter().map(|c| c.to_string()).collect();
            let value = json!({
                "kind": kind.to_string(),
                "n": args.n,
                "coefficients": coeffs,
                "sum": sum.to_string(),
            });
            writeln!(out, "{value}").unwrap();
        }
    }
    Ok(out)
}

fn cmd_expand(args: ExpandArgs) -> Result<String, CliError> {
    let cap = enumeration_cap()?;
    let expr = grouped_expression_with_cap(args.n, args.class_kind.index(), cap)?;

    let mut out = String::new();
    match args.format {
        Format::Text | Format::Csv => {
            if args.format == Format::Csv {
                out.push_str("index,multiplicity,words\n");
            }
            for class in &expr.classes {
                writeln!(
                    out,
                    "{},{},{}",
                    class.index,
                    class.multiplicity,
                    join_words(&class.words)
                )
                .unwrap();
            }
        }
        Format::Json => {
            let classes: Vec<_> = expr
                .classes
                .iter()
                .map(|class| {
                    json!({
                        "index": class.index,
                        "multiplicity": class.multiplicity,
                        "words": class.words.iter().map(Word::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let value = json!({
                "n": args.n,
                "type": expr.kind.to_string(),
                "classes": classes,
            });
            writeln!(out, "{value}").unwrap();
        }
    }
    Ok(out)
}

fn cmd_trajectories(args: TrajectoriesArgs) -> Result<String, CliError> {
    let cap = enumeration_cap()?;
    let system = args.system.walk();
    let endpoints = endpoint_classes_with_cap(args.n, system, cap)?;
    let reports = link_reports_with_cap(args.n, system, cap)?;
    let ambiguous: Vec<_> = reports.iter().filter(|r| r.is_ambiguous()).collect();

    let mut out = String::new();
    match args.format {
        Format::Text | Format::Csv => {
            out.push_str("# endpoints\n");
            out.push_str("index,endpoint,words\n");
            for class in &endpoints.classes {
                writeln!(
                    out,
                    "{},{},{}",
                    class.index,
                    class.endpoint,
                    join_words(&class.words)
                )
                .unwrap();
            }
            out.push_str("\n# ambiguous links\n");
            out.push_str("step,start,angle,letters,words\n");
            for report in &ambiguous {
                let letters: String = report.labels.iter().map(|l| l.as_char()).collect();
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    report.link.step,
                    report.link.start,
                    report.link.angle,
                    letters,
                    join_words(&report.words)
                )
                .unwrap();
            }
        }
        Format::Json => {
            let endpoint_rows: Vec<_> = endpoints
                .classes
                .iter()
                .map(|class| {
                    json!({
                        "index": class.index,
                        "endpoint": class.endpoint,
                        "words": class.words.iter().map(Word::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let link_rows: Vec<_> = ambiguous
                .iter()
                .map(|report| {
                    json!({
                        "step": report.link.step,
                        "start": report.link.start,
                        "angle": report.link.angle,
                        "letters": report.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                        "words": report.words.iter().map(Word::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let value = json!({
                "system": match system {
                    WalkSystem::PlainWalk => "p",
                    WalkSystem::IntegratedWalk => "q",
                },
                "n": args.n,
                "endpoints": endpoint_rows,
                "ambiguous_links": link_rows,
            });
            writeln!(out, "{value}").unwrap();
        }
    }
    Ok(out)
}

fn cmd_dist(args: DistArgs) -> Result<String, CliError> {
    if args.n < 1 {
        return Err(CliError::Usage("dist requires --n >= 1".into()));
    }
    let row = row(args.kind.triangle(), args.n);
    let summary = distribution_from_row(&row);
    let envelope = qtriangles::distributions::cumulative_envelope_from_row(&row);
    let interval = half_mass_interval(&row);
    // below n = 4 the width degenerates and the exponent is meaningless
    let exponent = (args.n >= 4).then(|| estimate_exponent_from_row(&row));

    let mut out = String::new();
    match args.format {
        Format::Text | Format::Csv => {
            out.push_str("index,probability,cumulative\n");
            for (i, (p, e)) in summary.probabilities.iter().zip(&envelope).enumerate() {
                writeln!(out, "{i},{p},{e}").unwrap();
            }
            let prefix = if args.format == Format::Csv { "# " } else { "" };
            writeln!(out, "{prefix}mean={}", summary.mean).unwrap();
            writeln!(out, "{prefix}variance={}", summary.variance).unwrap();
            let modes: Vec<String> = summary.modes.iter().map(u64::to_string).collect();
            writeln!(out, "{prefix}modes={}", modes.join(" ")).unwrap();
            writeln!(out, "{prefix}interval_lo={}", interval.lo).unwrap();
            writeln!(out, "{prefix}interval_hi={}", interval.hi).unwrap();
            writeln!(out, "{prefix}interval_width={}", interval.width).unwrap();
            writeln!(out, "{prefix}interval_mass={}", interval.mass).unwrap();
            if let Some(exp) = &exponent {
                writeln!(out, "{prefix}exponent_base={}", exp.base_length).unwrap();
                writeln!(out, "{prefix}exponent_width={}", exp.interval_width).unwrap();
                writeln!(out, "{prefix}exponent_k={}", exp.k).unwrap();
            }
        }
        Format::Json => {
            let value = json!({
                "kind": summary.kind.to_string(),
                "n": summary.n,
                "probabilities": summary.probabilities,
                "cumulative": envelope,
                "mean": summary.mean,
                "variance": summary.variance,
                "modes": summary.modes,
                "interval": {
                    "lo": interval.lo,
                    "hi": interval.hi,
                    "width": interval.width,
                    "mass": interval.mass.to_string(),
                },
                "exponent": exponent.as_ref().map(|exp| json!({
                    "base_length": exp.base_length,
                    "interval_width": exp.interval_width,
                    "k": exp.k,
                })),
            });
            writeln!(out, "{value}").unwrap();
        }
    }
    Ok(out)
}

fn cmd_compare(args: CompareArgs) -> Result<String, CliError> {
    if args.n < 2 {
        return Err(CliError::Usage("compare requires --n >= 2".into()));
    }
    let grid = envelope_comparison_grid(args.n);
    let report = compare_envelopes(args.n);

    let mut out = String::new();
    match args.format {
        Format::Text | Format::Csv => {
            out.push_str("index,linear,nonlinear_rescaled\n");
            for pair in &grid {
                writeln!(out, "{},{},{}", pair.index, pair.linear, pair.nonlinear_rescaled)
                    .unwrap();
            }
            let prefix = if args.format == Format::Csv { "# " } else { "" };
            writeln!(out, "{prefix}rescale_factor={}", report.rescale_factor).unwrap();
            writeln!(out, "{prefix}sup_distance={}", report.sup_distance).unwrap();
            writeln!(out, "{prefix}mean_abs_distance={}", report.mean_abs_distance).unwrap();
        }
        Format::Json => {
            let rows: Vec<_> = grid
                .iter()
                .map(|pair| {
                    json!({
                        "index": pair.index,
                        "linear": pair.linear,
                        "nonlinear_rescaled": pair.nonlinear_rescaled,
                    })
                })
                .collect();
            let value = json!({
                "n": report.n,
                "rescale_factor": report.rescale_factor,
                "sup_distance": report.sup_distance,
                "mean_abs_distance": report.mean_abs_distance,
                "grid": rows,
            });
            writeln!(out, "{value}").unwrap();
        }
    }
    Ok(out)
}
