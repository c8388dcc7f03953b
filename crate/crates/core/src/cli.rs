//! The `hackenbush` command line, runnable in-process through [`run`].
//!
//! Exit codes: 0 success, 1 disagreement (engines or a verification suite),
//! 2 bad input, unsupported query or configuration error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::classifiers::{classify_sum, evil_twin};
use crate::dsl::{self, PositionDoc};
use crate::error::Result;
use crate::model::Convention;
use crate::nim;
use crate::oracle::Solver;
use crate::verify::{self, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "hackenbush", version, about = "Outcomes and values of Hackenbush positions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Outcome class (N, P, L or R) of a position.
    Outcome {
        position: String,
        #[arg(long, default_value = "normal")]
        convention: Convention,
        #[arg(long, value_enum, default_value_t = Engine::Oracle)]
        engine: Engine,
    },
    /// Grundy value of a green position.
    Grundy {
        position: String,
        #[arg(long, default_value = "normal")]
        convention: Convention,
    },
    /// Normal-play value of a red-blue position.
    Value { position: String },
    /// Evil twin of a sum of shrubs, flowers and stalks.
    Twin { position: String },
    /// Nim-sum, upper nim-sum or lower nim-sum of two numbers.
    Nimsum {
        #[arg(value_enum)]
        op: NimOp,
        m: u64,
        n: u64,
    },
    /// Run a named verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Write the JSON-lines report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Override a suite bound, KEY=VAL. Repeatable.
        #[arg(long = "bound", value_name = "KEY=VAL")]
        bounds: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Oracle,
    Classifier,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NimOp {
    Xor,
    Upper,
    Lower,
}

/// Run the command line on `args` (program name first) and return the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn parse_doc(text: &str) -> Result<PositionDoc> {
    dsl::parse(text)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    let mut solver = Solver::new();
    match command {
        Command::Outcome {
            position,
            convention,
            engine,
        } => {
            let doc = parse_doc(&position)?;
            let oracle = || -> Result<_> {
                let p = doc.to_position()?;
                Ok(Solver::new().outcome(&p, convention))
            };
            let classifier = |solver: &mut Solver| -> Result<_> {
                classify_sum(&doc.to_sum_spec(solver)?, convention)
            };
            match engine {
                Engine::Oracle => writeln!(out, "{}", oracle()?)?,
                Engine::Classifier => writeln!(out, "{}", classifier(&mut solver)?)?,
                Engine::Both => {
                    let (o, c) = (oracle()?, classifier(&mut solver)?);
                    if o == c {
                        writeln!(out, "{o} agree")?;
                    } else {
                        writeln!(out, "oracle {o} classifier {c} disagree")?;
                        return Ok(1);
                    }
                }
            }
        }
        Command::Grundy {
            position,
            convention,
        } => {
            let p = parse_doc(&position)?.to_position()?;
            writeln!(out, "{}", solver.grundy_value(&p, convention)?)?;
        }
        Command::Value { position } => {
            let p = parse_doc(&position)?.to_position()?;
            writeln!(out, "{}", solver.redblue_value(&p)?)?;
        }
        Command::Twin { position } => {
            let spec = parse_doc(&position)?.to_sum_spec(&mut solver)?;
            writeln!(out, "{}", PositionDoc::from_sum_spec(&evil_twin(&spec)))?;
        }
        Command::Nimsum { op, m, n } => {
            let v = match op {
                NimOp::Xor => nim::xor(m, n),
                NimOp::Upper => nim::upper(m, n),
                NimOp::Lower => nim::lower(m, n),
            };
            writeln!(out, "{v}")?;
        }
        Command::Verify {
            suite,
            seed,
            report,
            bounds,
        } => {
            let mut options = VerifyOptions {
                seed,
                ..VerifyOptions::default()
            };
            for b in &bounds {
                let (k, v) = verify::parse_bound(b)?;
                options.bounds.insert(k, v);
            }
            let r = verify::run_suite(&suite, &options)?;
            match report {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(&path)?);
                    r.write_jsonl(&mut file)?;
                    file.flush()?;
                    let s = r.summary();
                    writeln!(
                        out,
                        "{}: {} checked, {} failed in {} ms",
                        s.suite, s.total, s.failures, s.elapsed_ms
                    )?;
                }
                None => r.write_jsonl(out)?,
            }
            return Ok(if r.failures() == 0 { 0 } else { 1 });
        }
    }
    Ok(0)
}
