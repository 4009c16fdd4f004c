//! `tessera` command line. Exit codes: 0 when every check passes, 1 when a
//! mathematical violation is found (a witness file is written), 2 on bad
//! usage or input, with a JSON error record on stderr.

mod args;
mod render;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::Cli;
use run::{CliError, Output};

fn configure_threads() {
    if let Some(n) = std::env::var("TESSERA_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // Only fails if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn fail(e: CliError) -> ExitCode {
    eprintln!("{}", e.record());
    ExitCode::from(2)
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => run::write(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(CliError::Usage(e.to_string().trim().to_string())),
    };
    configure_threads();
    let output = match run::run(&cli) {
        Ok(o) => o,
        Err(e) => return fail(e),
    };
    match output {
        Output::Raw(text) => match emit(&cli, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(e),
        },
        Output::Report { report, pass, witness } => {
            let mut doc = json!({ "config": cli, "pass": pass, "report": report });
            if let (false, Some(w)) = (pass, witness) {
                let text = serde_json::to_string_pretty(&w).expect("witness serializes");
                if let Err(e) = run::write(&cli.witness, &text) {
                    return fail(e);
                }
                doc["witness_file"] = json!(cli.witness);
            }
            let text = serde_json::to_string_pretty(&doc).expect("report serializes") + "\n";
            if let Err(e) = emit(&cli, &text) {
                return fail(e);
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
