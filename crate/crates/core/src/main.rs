use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use h2unknot::exactmat::IntSymMatrix;
use h2unknot::job::{run_job, run_mq, JobInput, JobObject, JobOptions, JobSpec};
use h2unknot::obstruction::ExternalBounds;
use h2unknot::render::{render_csv, render_text, scan_pretzels, write_csv, PretzelRanges};
use h2unknot::Error;

#[derive(Parser)]
#[command(name = "h2unknot", version, about = "Obstructions to H(2)-unknotting number one")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run both obstructions on one knot and report bounds on u2.
    Analyze(AnalyzeArgs),
    /// Analyze every pretzel knot P(p,q,r) in a box of parameters, as CSV.
    Scan(ScanArgs),
    /// Print the certified M_Q table of a Goeritz matrix as JSON.
    Mq(MqArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Pretzel parameters p,q,r (all positive).
    #[arg(long, value_name = "P,Q,R")]
    pretzel: Option<String>,
    /// PD code of a reduced alternating diagram, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)".
    #[arg(long, value_name = "CODE")]
    pd: Option<String>,
    /// Symmetric Goeritz matrix as a JSON array of rows.
    #[arg(long, value_name = "JSON")]
    matrix: Option<String>,
    /// The unknot (empty Goeritz matrix).
    #[arg(long)]
    unknot: bool,
    /// JSON job file ("-" for stdin) with one of pd, pretzel, matrix, unknot.
    #[arg(long, value_name = "FILE")]
    input: Option<String>,
}

#[derive(Args, Clone)]
struct BoundArgs {
    /// Crosscap number, an upper bound for u2.
    #[arg(long)]
    gamma: Option<u64>,
    /// Four-dimensional crosscap number, a lower bound for u2.
    #[arg(long = "gamma-star")]
    gamma_star: Option<u64>,
    /// Number of twisted bands known to unknot the knot.
    #[arg(long)]
    bands: Option<u64>,
    /// Cross-check M_Q against a naive box scan.
    #[arg(long)]
    oracle: bool,
    /// Abort if the enumeration radius would exceed this bound.
    #[arg(long = "max-radius")]
    max_radius: Option<u64>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Index of the black face deleted as f0 (PD input only).
    #[arg(long)]
    f0: Option<usize>,
    #[command(flatten)]
    bounds: BoundArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ScanArgs {
    /// Inclusive ranges for p, q and r.
    #[arg(long = "pretzel-range", num_args = 3, value_names = ["A,B", "C,D", "E,F"], required = true)]
    pretzel_range: Vec<String>,
    #[command(flatten)]
    bounds: BoundArgs,
}

#[derive(Args)]
struct MqArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    f0: Option<usize>,
    #[arg(long)]
    oracle: bool,
    #[arg(long = "max-radius")]
    max_radius: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn parse_list(s: &str, n: usize) -> Result<Vec<u64>, Error> {
    let parts: Result<Vec<u64>, _> = s.split(',').map(|x| x.trim().parse::<u64>()).collect();
    match parts {
        Ok(v) if v.len() == n => Ok(v),
        _ => Err(Error::InvalidJob(format!("expected {n} comma-separated non-negative integers, got {s:?}"))),
    }
}

fn read_input(args: &InputArgs, f0: Option<usize>) -> Result<(JobInput, Option<usize>), Error> {
    if let Some(t) = &args.pretzel {
        let v = parse_list(t, 3)?;
        return Ok((JobInput::Pretzel([v[0], v[1], v[2]]), f0));
    }
    if let Some(code) = &args.pd {
        return Ok((JobInput::Pd(code.clone()), f0));
    }
    if let Some(m) = &args.matrix {
        let rows: Vec<Vec<i64>> = serde_json::from_str(m).map_err(|e| Error::InvalidJob(format!("matrix: {e}")))?;
        return Ok((JobInput::Matrix(IntSymMatrix::from_rows(&rows)?), f0));
    }
    if args.unknot {
        return Ok((JobInput::Unknot, f0));
    }
    if let Some(path) = &args.input {
        let text = if path == "-" {
            std::io::read_to_string(std::io::stdin()).map_err(|e| Error::InvalidJob(e.to_string()))?
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::InvalidJob(format!("{path}: {e}")))?
        };
        let (input, file_f0) = JobObject::parse(&text)?.into_input()?;
        return Ok((input, f0.or(file_f0)));
    }
    Err(Error::InvalidJob("no input given".into()))
}

fn options(b: &BoundArgs, f0: Option<usize>) -> JobOptions {
    JobOptions {
        f0,
        bounds: ExternalBounds { gamma: b.gamma, gamma_star: b.gamma_star, known_band_count: b.bands },
        max_radius: b.max_radius,
        oracle: b.oracle,
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Error> {
    serde_json::to_string_pretty(v).map(|s| s + "\n").map_err(|e| Error::Internal(e.to_string()))
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.command {
        Command::Analyze(a) => {
            let (input, f0) = read_input(&a.input, a.f0)?;
            let spec = JobSpec { input, options: options(&a.bounds, f0) };
            let report = run_job(&spec)?;
            match a.format {
                Format::Json => to_json(&report),
                Format::Csv => render_csv(&report),
                Format::Text => Ok(render_text(&report)),
            }
        }
        Command::Scan(s) => {
            let mut ranges: PretzelRanges = [(0, 0); 3];
            for (slot, text) in ranges.iter_mut().zip(&s.pretzel_range) {
                let v = parse_list(text, 2)?;
                *slot = (v[0], v[1]);
            }
            let rows = scan_pretzels(&ranges, &options(&s.bounds, None))?;
            write_csv(rows)
        }
        Command::Mq(m) => {
            let (input, f0) = read_input(&m.input, m.f0)?;
            let opts = JobOptions { f0, oracle: m.oracle, max_radius: m.max_radius, ..Default::default() };
            to_json(&run_mq(&input, &opts)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(if e.is_internal() { 3 } else { 2 })
        }
    }
}
