use std::io::Read;
use std::process::ExitCode;

use chebotarev::cli::{self, Command, RunOptions};
use chebotarev::exact::ExactOptions;
use chebotarev::group::DEFAULT_ORDER_CAP;
use chebotarev::spec::{parse_group_list, GroupSpec};
use clap::{Parser, Subcommand};

/// Chebotarev invariant of finite permutation groups.
#[derive(Parser)]
#[command(version)]
struct Args {
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum group order.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    cap_order: usize,
    /// Maximum sieve count for the Gray-code expansion.
    #[arg(long, global = true, default_value_t = chebotarev::exact::DEFAULT_SIEVE_CAP)]
    cap_sieves: usize,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact C(G) as a rational.
    Exact { spec: Vec<String> },
    /// Monte Carlo estimate of C(G).
    Mc {
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        spec: Vec<String>,
    },
    /// Upper bounds and their verdicts.
    Bounds { spec: Vec<String> },
    /// Complemented abelian chief factors up to G-isomorphism.
    Crowns { spec: Vec<String> },
    /// Runs the fixed regression checks.
    VerifyPaper,
}

/// The spec from the arguments, or one spec per line on stdin.
fn specs(words: &[String]) -> chebotarev::error::Result<Vec<GroupSpec>> {
    if !words.is_empty() {
        return Ok(vec![words.join(" ").parse()?]);
    }
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| chebotarev::error::Error::Parse(e.to_string()))?;
    parse_group_list(&text)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let opts = RunOptions {
        order_cap: args.cap_order,
        exact: ExactOptions {
            sieve_cap: args.cap_sieves,
            ..ExactOptions::default()
        },
    };
    let (cmd, words) = match args.command {
        Cmd::Exact { spec } => (Command::Exact, spec),
        Cmd::Mc { trials, seed, spec } => (Command::Mc { trials, seed }, spec),
        Cmd::Bounds { spec } => (Command::Bounds, spec),
        Cmd::Crowns { spec } => (Command::Crowns, spec),
        Cmd::VerifyPaper => (Command::VerifyPaper, Vec::new()),
    };
    let specs = if cmd == Command::VerifyPaper {
        vec![None]
    } else {
        match specs(&words) {
            Ok(s) => s.into_iter().map(Some).collect(),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    };
    let mut ok = true;
    for spec in &specs {
        match cli::run(&cmd, spec.as_ref(), &opts) {
            Ok(report) => {
                ok &= report.ok();
                if args.json {
                    println!("{}", report.to_json());
                } else {
                    print!("{}", cli::render_table(&report));
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
