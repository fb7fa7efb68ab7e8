//! SAT backend selection and execution.
//!
//! Decisions route through either the built-in DPLL solver (complete but
//! capped, so misuse fails fast instead of hanging) or an external solver
//! process speaking the DIMACS conventions: it receives a CNF file path
//! as its final argument, prints an `s SATISFIABLE` or `s UNSATISFIABLE`
//! status line plus `v` model lines, and exits with code 10 or 20.
//!
//! The environment variable `DYNCOL_SAT_SOLVER` selects the external
//! command (whitespace-split); `DYNCOL_SAT_TIMEOUT_SECS` bounds its run
//! time. Satisfying assignments are re-checked clause by clause before
//! use, so a buggy solver cannot smuggle in a wrong model; unsatisfiable
//! verdicts are accepted only when the status line and the conventional
//! exit code 20 agree.

use std::io::Read;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use super::cnf::Cnf;
use super::dpll;
use crate::error::Error;

/// Variable cap for the built-in solver.
pub const INTERNAL_VAR_CAP: u32 = 64;

/// Environment variable naming the external solver command.
pub const SOLVER_ENV: &str = "DYNCOL_SAT_SOLVER";

/// Environment variable bounding the external solver's run time in
/// seconds.
pub const TIMEOUT_ENV: &str = "DYNCOL_SAT_TIMEOUT_SECS";

const DEFAULT_TIMEOUT: Duration = Duration::from_secs(600);

/// Where satisfiability queries are sent.
#[derive(Debug, Clone)]
pub enum SatBackend {
    /// The built-in DPLL solver, refusing formulas over `max_vars`
    /// variables.
    Internal { max_vars: u32 },
    /// An external DIMACS solver process.
    External {
        command: Vec<String>,
        timeout: Duration,
    },
}

impl SatBackend {
    pub fn internal() -> Self {
        SatBackend::Internal {
            max_vars: INTERNAL_VAR_CAP,
        }
    }

    pub fn external(command: Vec<String>, timeout: Duration) -> Result<Self, Error> {
        if command.is_empty() {
            return Err(Error::Parameter("empty external solver command".into()));
        }
        Ok(SatBackend::External { command, timeout })
    }

    /// Backend described by the environment: the command in
    /// `DYNCOL_SAT_SOLVER` if set and non-empty, the built-in solver
    /// otherwise.
    pub fn from_env() -> Self {
        let timeout = std::env::var(TIMEOUT_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .map(Duration::from_secs)
            .unwrap_or(DEFAULT_TIMEOUT);
        match std::env::var(SOLVER_ENV) {
            Ok(value) if !value.trim().is_empty() => SatBackend::External {
                command: value.split_whitespace().map(String::from).collect(),
                timeout,
            },
            _ => SatBackend::internal(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            SatBackend::Internal { max_vars } => {
                format!("built-in DPLL (up to {max_vars} variables)")
            }
            SatBackend::External { command, timeout } => {
                format!("external `{}` (timeout {}s)", command.join(" "), timeout.as_secs())
            }
        }
    }
}

/// Verdict of a satisfiability query. A `Sat` assignment is indexed by
/// `var - 1` and has already been validated against every clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatOutcome {
    Sat(Vec<bool>),
    Unsat,
}

/// Decides `cnf` with the chosen backend.
pub fn solve(cnf: &Cnf, backend: &SatBackend) -> Result<SatOutcome, Error> {
    let outcome = match backend {
        SatBackend::Internal { max_vars } => {
            if cnf.num_vars() > *max_vars {
                return Err(Error::Solver(format!(
                    "formula has {} variables, over the built-in solver's cap of \
                     {max_vars}; set {SOLVER_ENV}=<command> to use an external solver",
                    cnf.num_vars()
                )));
            }
            match dpll::solve(cnf) {
                Some(model) => SatOutcome::Sat(model),
                None => SatOutcome::Unsat,
            }
        }
        SatBackend::External { command, timeout } => run_external(cnf, command, *timeout)?,
    };
    if let SatOutcome::Sat(model) = &outcome {
        if model.len() != cnf.num_vars() as usize {
            return Err(Error::Solver(format!(
                "solver returned {} variable values for a formula of {}",
                model.len(),
                cnf.num_vars()
            )));
        }
        if let Some(idx) = cnf.first_violated(model) {
            return Err(Error::Solver(format!(
                "solver model falsifies clause {idx}; refusing to trust it"
            )));
        }
    }
    Ok(outcome)
}

fn run_external(
    cnf: &Cnf,
    command: &[String],
    timeout: Duration,
) -> Result<SatOutcome, Error> {
    let dir = tempfile::tempdir().map_err(|e| Error::io("<tempdir>", e))?;
    let cnf_path = dir.path().join("formula.cnf");
    let file = std::fs::File::create(&cnf_path)
        .map_err(|e| Error::io(cnf_path.display().to_string(), e))?;
    let mut writer = std::io::BufWriter::new(file);
    cnf.write_dimacs(&mut writer)
        .and_then(|()| std::io::Write::flush(&mut writer))
        .map_err(|e| Error::io(cnf_path.display().to_string(), e))?;
    drop(writer);

    let mut child = Command::new(&command[0])
        .args(&command[1..])
        .arg(&cnf_path)
        .stdin(Stdio::null())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| {
            Error::Solver(format!("failed to start `{}`: {e}", command.join(" ")))
        })?;

    let started = Instant::now();
    let status = loop {
        match child.try_wait() {
            Ok(Some(status)) => break status,
            Ok(None) => {
                if started.elapsed() > timeout {
                    let _ = child.kill();
                    let _ = child.wait();
                    return Err(Error::Solver(format!(
                        "`{}` exceeded the {}s timeout",
                        command.join(" "),
                        timeout.as_secs()
                    )));
                }
                std::thread::sleep(Duration::from_millis(5));
            }
            Err(e) => return Err(Error::Solver(format!("waiting for solver: {e}"))),
        }
    };

    let mut stdout = String::new();
    if let Some(mut pipe) = child.stdout.take() {
        let _ = pipe.read_to_string(&mut stdout);
    }
    let mut stderr = String::new();
    if let Some(mut pipe) = child.stderr.take() {
        let _ = pipe.read_to_string(&mut stderr);
    }

    parse_solver_output(cnf, &stdout, status.code(), command).map_err(|e| match e {
        Error::Solver(msg) if !stderr.trim().is_empty() => {
            Error::Solver(format!("{msg} (stderr: {})", stderr.trim()))
        }
        other => other,
    })
}

fn parse_solver_output(
    cnf: &Cnf,
    stdout: &str,
    exit_code: Option<i32>,
    command: &[String],
) -> Result<SatOutcome, Error> {
    let mut verdict = None;
    let mut model = vec![false; cnf.num_vars() as usize];
    let mut saw_model_terminator = false;
    for line in stdout.lines() {
        if let Some(rest) = line.strip_prefix("s ") {
            verdict = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("v ") {
            for token in rest.split_whitespace() {
                let lit: i64 = token.parse().map_err(|_| {
                    Error::Solver(format!("unparseable model token {token:?}"))
                })?;
                if lit == 0 {
                    saw_model_terminator = true;
                } else {
                    let var = lit.unsigned_abs();
                    if var == 0 || var > u64::from(cnf.num_vars()) {
                        return Err(Error::Solver(format!(
                            "model literal {lit} out of range"
                        )));
                    }
                    model[var as usize - 1] = lit > 0;
                }
            }
        }
    }
    match verdict.as_deref() {
        Some("SATISFIABLE") => {
            if !saw_model_terminator {
                return Err(Error::Solver(
                    "satisfiable verdict without a zero-terminated model".into(),
                ));
            }
            Ok(SatOutcome::Sat(model))
        }
        Some("UNSATISFIABLE") => {
            if exit_code != Some(20) {
                return Err(Error::Solver(format!(
                    "`{}` reported UNSATISFIABLE but exited with {exit_code:?}, \
                     not the conventional 20; refusing to trust the verdict",
                    command.join(" ")
                )));
            }
            Ok(SatOutcome::Unsat)
        }
        Some(other) => Err(Error::Solver(format!(
            "unrecognized solver status line `s {other}`"
        ))),
        None => Err(Error::Solver(format!(
            "`{}` produced no status line (exit code {exit_code:?})",
            command.join(" ")
        ))),
    }
}
