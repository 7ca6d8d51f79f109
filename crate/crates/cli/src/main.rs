use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use virbialg_cli::selfcheck;
use virbialg_cli::{run_source, RunConfig};
use virbialg_core::Config;

#[derive(Parser)]
#[command(
    name = "virbialg",
    version,
    about = "Exact checks for Lie bialgebra structures on generalized Virasoro-like algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a script and print its certificate.
    Run {
        script: PathBuf,
        /// Box radius for degree-0 unknowns and random inputs.
        #[arg(long = "window", default_value_t = 5)]
        radius: i64,
        /// Maximum number of probes per witness search.
        #[arg(long, default_value_t = 64)]
        budget: usize,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also list vanishing defects.
        #[arg(long)]
        verbose: bool,
    },
    /// Run the embedded invariant suite.
    Selfcheck {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long = "window", default_value_t = 5)]
        radius: i64,
        #[arg(long, default_value_t = 64)]
        budget: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Cmd::Run {
            script,
            radius,
            budget,
            out,
            verbose,
        } => {
            let src = match fs::read_to_string(&script) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", script.display());
                    return ExitCode::from(2);
                }
            };
            let config = RunConfig {
                core: Config { radius, budget },
                verbose,
            };
            let cert = match run_source(&src, &config) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("{}: {e}", script.display());
                    return ExitCode::from(2);
                }
            };
            let text = cert.to_string();
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(cert.exit_code() as u8)
        }
        Cmd::Selfcheck {
            seed,
            radius,
            budget,
        } => {
            let results = selfcheck::run_all(seed, &Config { radius, budget });
            let mut ok = true;
            for r in &results {
                match &r.failure {
                    None => println!("PASS {} ({} cases)", r.name, r.cases),
                    Some(msg) => {
                        ok = false;
                        println!("FAIL {}: {msg}", r.name);
                    }
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
