use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use cthecke::composition::SkewShape;
use cthecke::hecke::partition_classes;
use cthecke::tableau::enumerate_sct;
use cthecke::verify::{class_records, verify_shape, verify_sweep, Suite, VerifyError};

#[derive(Parser)]
#[command(
    name = "cthecke",
    version,
    about = "0-Hecke modules of standard composition tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every standard composition tableau of a shape.
    Enumerate {
        /// e.g. "(1,4,3)" or "(1,3)/(2)"
        shape: String,
    },
    /// Decompose the tableaux of a shape into equivalence classes.
    Classes {
        shape: String,
        /// Emit a Hasse diagram per class in DOT.
        #[arg(long)]
        dot: bool,
        /// Emit class records as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites over all compositions up to a size.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// endo, poset, dominance, qsym or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check this one shape instead of the sweep.
        #[arg(long)]
        shape: Option<String>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_shape(s: &str) -> Result<SkewShape, ExitCode> {
    s.parse()
        .map_err(|e| usage(format!("cannot parse shape {s:?}: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) | Err(code) => code,
    }
}

fn run(command: Command) -> Result<ExitCode, ExitCode> {
    match command {
        Command::Enumerate { shape } => {
            let shape = parse_shape(&shape)?;
            let all = enumerate_sct(&shape);
            for t in &all {
                println!("{t}");
            }
            println!("count: {}", all.len());
        }
        Command::Classes { shape, dot, json } => {
            let shape = parse_shape(&shape)?;
            let records = class_records(&shape).map_err(usage)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&records).expect("records serialize")
                );
            } else if !dot {
                for r in &records {
                    println!(
                        "class {}: size {}, source [{}], sink [{}], ranks {:?}, interval [{}, {}]",
                        r.class_id,
                        r.size,
                        r.source,
                        r.sink,
                        r.rank_profile,
                        r.interval[0],
                        r.interval[1]
                    );
                }
            }
            if dot {
                for (k, class) in partition_classes(&shape).map_err(usage)?.iter().enumerate() {
                    print!("{}", class.to_dot(&format!("class{k}")));
                }
            }
        }
        Command::Verify {
            max_n,
            suite,
            seed,
            shape,
            out,
        } => {
            let suites = Suite::parse_list(&suite).map_err(usage)?;
            let start = Instant::now();
            let report = match shape {
                Some(s) => verify_shape(&parse_shape(&s)?, &suites, seed),
                None => verify_sweep(max_n, &suites, seed),
            };
            let report = match report {
                Ok(r) => r,
                Err(e @ (VerifyError::CeilingExceeded { .. } | VerifyError::UnknownSuite(_))) => {
                    return Err(usage(e))
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return Err(ExitCode::from(1));
                }
            };
            eprintln!("verified in {:.2?}", start.elapsed());
            let json = report.to_json();
            match out {
                Some(path) => {
                    fs::write(&path, json).map_err(|e| usage(format!("{}: {e}", path.display())))?
                }
                None => print!("{json}"),
            }
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
