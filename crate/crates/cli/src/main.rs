use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use multiseq_core::io::{emit_report, run_task, Options, ProblemFile, ReportFormat, TaskKind};
use multiseq_core::multseq::Route;
use multiseq_core::Error;

#[derive(Parser)]
#[command(name = "multiseq", version, about = "Multiplicity sequences, integral dependence and intersection degrees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity sequence c_0..c_d of an ideal
    Multseq(Args),
    /// j-multiplicity c_d
    Jmult(Args),
    /// Height and analytic spread read off the sequence, checked independently
    Endpoints(Args),
    /// Decide whether J is integral over I
    CheckIntegral(Args),
    /// Stückrad-Vogel intersection degrees of two projective schemes
    Sv(Args),
    /// Hilbert series, dimension and degree of R/I
    Hilbert(Args),
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum RouteArg {
    A,
    B,
    C,
}

#[derive(clap::Args)]
struct Args {
    /// Problem file (text or JSON)
    file: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    /// Number of seeds randomized results must agree across
    #[arg(long)]
    seeds: Option<usize>,
    /// Field characteristic, 0 for the rationals
    #[arg(long = "char")]
    characteristic: Option<u64>,
    #[arg(long, value_enum, ignore_case = true)]
    route: Option<RouteArg>,
    /// Cross-check against the other routes
    #[arg(long)]
    oracle: bool,
    /// Largest n tried by the reduction search
    #[arg(long)]
    max_n: Option<u32>,
    /// Replace J by I + J instead of requiring I ⊆ J
    #[arg(long)]
    join: bool,
    /// Assert that the quotient ring is equidimensional
    #[arg(long)]
    equidimensional: bool,
    #[arg(long)]
    json: bool,
    /// Leave out timings so that repeated runs are byte-identical
    #[arg(long)]
    normalize: bool,
}

fn run(kind: TaskKind, args: &Args) -> Result<String, Error> {
    let bytes = std::fs::read(&args.file)
        .map_err(|e| Error::Format(format!("cannot read {}: {e}", args.file.display())))?;
    let mut file = ProblemFile::from_bytes(&bytes)?;
    if let Some(p) = args.characteristic {
        file = file.with_characteristic(p)?;
    }
    let overrides = Options {
        seed: args.seed,
        seeds: args.seeds,
        route: args.route.map(|r| match r {
            RouteArg::A => Route::A,
            RouteArg::B => Route::B,
            RouteArg::C => Route::C,
        }),
        max_n: args.max_n,
        oracle: args.oracle.then_some(true),
        join: args.join.then_some(true),
        equidimensional: args.equidimensional.then_some(true),
        ..Options::default()
    };
    let report = run_task(&file, Some(kind), &overrides, args.normalize)?;
    let format = if args.json { ReportFormat::Json } else { ReportFormat::Text };
    Ok(emit_report(&report, format))
}

fn configure_threads() {
    if let Some(n) = std::env::var("MULTISEQ_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let (kind, args) = match &cli.command {
        Command::Multseq(a) => (TaskKind::Multseq, a),
        Command::Jmult(a) => (TaskKind::Jmult, a),
        Command::Endpoints(a) => (TaskKind::Endpoints, a),
        Command::CheckIntegral(a) => (TaskKind::CheckIntegral, a),
        Command::Sv(a) => (TaskKind::Sv, a),
        Command::Hilbert(a) => (TaskKind::Hilbert, a),
    };
    match run(kind, args) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if args.json {
                println!("{}", serde_json::json!({ "error": e.code(), "message": e.to_string() }));
            }
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
