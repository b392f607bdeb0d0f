//! `matdet`: determinantal ideals, singular loci and finite-determinacy
//! verdicts for matrices over local rings, reported as JSON.

mod error;
mod report;
mod session;
mod suite;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use error::{CliError, CliResult};
use session::{RingSpec, Session, Task};

#[derive(Parser, Debug)]
#[command(name = "matdet", version, about = "Finite determinacy of matrices over local rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ideals of j×j minors `I_j(A)`.
    Minors(Flags),
    /// Generalized annihilators `ann.coker_j(A)`.
    Anncoker(Flags),
    /// Singular-locus ideal `Sing_r(J)`.
    Sing(Flags),
    /// Saturation `Sat_J(I)` with `--ideal I --by J`.
    Sat(Flags),
    /// Loewy length of `--ideal`.
    Loewy(Flags),
    /// Annihilator of `T¹` for `--group`.
    T1(Flags),
    /// Full determinacy report for `--group`.
    Verdict(Flags),
    /// Randomized run of the invariant properties.
    Suite(Flags),
}

impl Command {
    fn split(self) -> (Task, Flags) {
        match self {
            Command::Minors(f) => (Task::Minors, f),
            Command::Anncoker(f) => (Task::AnnCoker, f),
            Command::Sing(f) => (Task::Sing, f),
            Command::Sat(f) => (Task::Sat, f),
            Command::Loewy(f) => (Task::Loewy, f),
            Command::T1(f) => (Task::T1, f),
            Command::Verdict(f) => (Task::Verdict, f),
            Command::Suite(f) => (Task::Suite, f),
        }
    }
}

#[derive(Args, Debug)]
struct Flags {
    /// Session JSON; `-` reads standard input. Other flags override its fields.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Comma-separated variable names, e.g. `x1,x2`.
    #[arg(long)]
    ring: Option<String>,
    /// `QQ` or `GFp:<prime>`.
    #[arg(long)]
    field: Option<String>,
    /// Rows separated by `;`, entries by `,`.
    #[arg(long)]
    matrix: Option<String>,
    /// gl, gr, glr, gcongr, aut, cgl, cgr, cglr or cgcongr; append `^(m)` for
    /// the subgroup trivial modulo m.
    #[arg(long)]
    group: Option<String>,
    /// full, sym or skew.
    #[arg(long)]
    space: Option<String>,
    /// Jet degree of the oracle cross-checks.
    #[arg(long)]
    jet_degree: Option<u32>,
    /// Largest power tried in radical membership; enables the radical check
    /// of `verdict`.
    #[arg(long)]
    power_bound: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    /// Index `j` for `minors` and `anncoker`.
    #[arg(short = 'j', long = "j")]
    j: Option<i64>,
    /// Expected height `r` for `sing`.
    #[arg(short = 'r', long = "r")]
    r: Option<usize>,
    /// Comma-separated generators.
    #[arg(long)]
    ideal: Option<String>,
    /// Comma-separated generators of the saturating ideal.
    #[arg(long)]
    by: Option<String>,
    /// unit, max or max2.
    #[arg(long)]
    derivations: Option<String>,
}

fn gens(s: &str) -> Vec<String> {
    s.split(',').map(|g| g.trim().to_string()).collect()
}

fn read_session(path: &PathBuf) -> CliResult<Session> {
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| CliError::Usage(format!("file {}: {e}", path.display())))?;
    session::parse_session(&text)
}

fn merge(task: Task, f: Flags) -> CliResult<Session> {
    let mut s = match &f.file {
        Some(p) => read_session(p)?,
        None => Session::default(),
    };
    s.task = Some(task.name().into());
    if let Some(vars) = &f.ring {
        let field = s.ring.take().map(|r| r.field).unwrap_or_else(|| "QQ".into());
        s.ring = Some(RingSpec {
            vars: gens(vars),
            field,
        });
    }
    if let Some(field) = f.field {
        match &mut s.ring {
            Some(r) => r.field = field,
            None if task == Task::Suite => {
                s.ring = Some(RingSpec {
                    vars: vec!["x1".into(), "x2".into()],
                    field,
                })
            }
            None => return Err(CliError::Usage("ring: --field needs --ring".into())),
        }
    }
    if let Some(m) = &f.matrix {
        s.matrix = Some(m.split(';').map(gens).collect());
    }
    s.space = f.space.or(s.space);
    s.group = f.group.or(s.group);
    let o = &mut s.options;
    o.jet_degree = f.jet_degree.or(o.jet_degree);
    o.power_bound = f.power_bound.or(o.power_bound);
    o.seed = f.seed.or(o.seed);
    o.j = f.j.or(o.j);
    o.r = f.r.or(o.r);
    o.derivations = f.derivations.or(o.derivations.take());
    if let Some(i) = &f.ideal {
        o.ideal = Some(gens(i));
    }
    if let Some(b) = &f.by {
        o.by = Some(gens(b));
    }
    Ok(s)
}

fn emit(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
}

fn main() -> ExitCode {
    let (task, flags) = Cli::parse().command.split();
    let start = Instant::now();
    let outcome = merge(task, flags).and_then(|s| {
        let loaded = session::load(&s, session::budget_from_env()?)?;
        let result = report::run(&loaded)?;
        Ok((loaded, result))
    });
    let elapsed_ms = start.elapsed().as_millis() as u64;
    match outcome {
        Ok((loaded, result)) => {
            let code = report::exit_code(task, &result);
            emit(&report::build(&loaded, result, elapsed_ms));
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("matdet: {e}");
            emit(&json!({
                "schema": session::SCHEMA,
                "task": task.name(),
                "error": {"kind": e.kind(), "message": e.to_string()},
                "elapsed_ms": elapsed_ms,
            }));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
