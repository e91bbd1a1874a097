use std::process::ExitCode;
use std::time::Duration;

use clap::Parser;

use gr_verify::quadrature::QuadratureConfig;
use gr_verify::series_forms::SeriesConfig;
use gr_verify::verifier::{catalog, render_json, render_table, run_checks_with, RunOptions};

/// Replay every representation of the 3.248.5 integral and the identities
/// linking them.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Args {
    /// Run only these check ids (comma separated).
    #[arg(long, value_delimiter = ',')]
    only: Option<Vec<String>>,
    /// Absolute tolerance of every quadrature.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Tail tolerance of every series.
    #[arg(long, default_value_t = 1e-15)]
    series_tol: f64,
    /// Integrand evaluation budget per quadrature.
    #[arg(long, default_value_t = 200_000)]
    max_evals: usize,
    /// Per-check timeout; a check exceeding it is reported as no-converge.
    #[arg(long, default_value_t = 30)]
    timeout_secs: u64,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    /// Print the JSON report instead of the table.
    #[arg(long)]
    json: bool,
    /// Print the catalog and exit.
    #[arg(long)]
    list: bool,
}

const USAGE_ERROR: u8 = 2;

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(USAGE_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };

    if args.list {
        for c in catalog() {
            println!("{:<16} {:<60} {}", c.id, c.description, c.anchor);
        }
        return ExitCode::SUCCESS;
    }

    let configs = QuadratureConfig::new(args.tol, args.max_evals).and_then(|cfg| {
        let defaults = SeriesConfig::default();
        let scfg = SeriesConfig::new(defaults.max_terms(), args.series_tol, defaults.accelerate())?;
        Ok((cfg, scfg))
    });
    let (cfg, scfg) = match configs {
        Ok(c) => c,
        Err(e) => {
            eprintln!("verify: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    if args.jobs == Some(0) || args.timeout_secs == 0 {
        eprintln!("verify: --jobs and --timeout-secs must be positive");
        return ExitCode::from(USAGE_ERROR);
    }

    let mut options = RunOptions::new(cfg, scfg);
    options.selection = args.only;
    options.timeout = Duration::from_secs(args.timeout_secs);
    options.jobs = args.jobs;

    let report = match run_checks_with(&options) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("verify: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };

    if args.json {
        println!("{}", render_json(&report));
    } else {
        print!("{}", render_table(&report));
        eprintln!("overall: {}", if report.passed() { "pass" } else { "fail" });
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
