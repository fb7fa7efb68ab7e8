//! DIMACS CNF front end over the bundled CaDiCaL library, speaking the
//! conventional competition protocol: an `s` status line, `v` model
//! lines for satisfiable formulas, exit code 10 for SAT and 20 for
//! UNSAT. Exists so the workspace carries a real solver for the
//! `DYNCOL_SAT_SOLVER` hook without requiring one on the host.

use std::process::ExitCode;

fn main() -> ExitCode {
    let mut args = std::env::args_os().skip(1);
    let path = match (args.next(), args.next()) {
        (Some(path), None) => path,
        _ => {
            eprintln!("usage: dyncol-sat FORMULA.cnf");
            return ExitCode::from(2);
        }
    };
    let text = match std::fs::read_to_string(&path) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: cannot read {}: {err}", path.to_string_lossy());
            return ExitCode::from(2);
        }
    };
    let (num_vars, clauses) = match parse_dimacs(&text) {
        Ok(parsed) => parsed,
        Err(msg) => {
            eprintln!("error: {}: {msg}", path.to_string_lossy());
            return ExitCode::from(2);
        }
    };

    let mut solver: cadical::Solver = cadical::Solver::new();
    for clause in &clauses {
        solver.add_clause(clause.iter().copied());
    }
    match solver.solve() {
        Some(true) => {
            println!("s SATISFIABLE");
            let literals: Vec<i32> = (1..=num_vars as i32)
                .map(|v| match solver.value(v) {
                    Some(true) => v,
                    // Unassigned variables are don't-cares; fixing them
                    // false keeps the model well formed.
                    Some(false) | None => -v,
                })
                .collect();
            for chunk in literals.chunks(18) {
                let line: Vec<String> = chunk.iter().map(i32::to_string).collect();
                println!("v {}", line.join(" "));
            }
            println!("v 0");
            ExitCode::from(10)
        }
        Some(false) => {
            println!("s UNSATISFIABLE");
            ExitCode::from(20)
        }
        None => {
            println!("s UNKNOWN");
            ExitCode::from(0)
        }
    }
}

/// Parses a DIMACS CNF file: a `p cnf VARS CLAUSES` header, then
/// zero-terminated clauses. Comment lines start with `c`.
fn parse_dimacs(text: &str) -> Result<(u64, Vec<Vec<i32>>), String> {
    let mut num_vars: Option<u64> = None;
    let mut expected_clauses = 0u64;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p ") {
            if num_vars.is_some() {
                return Err("duplicate header".into());
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "cnf" {
                return Err(format!("malformed header {line:?}"));
            }
            num_vars = Some(
                fields[1]
                    .parse()
                    .map_err(|_| format!("bad variable count {:?}", fields[1]))?,
            );
            expected_clauses = fields[2]
                .parse()
                .map_err(|_| format!("bad clause count {:?}", fields[2]))?;
            continue;
        }
        let Some(vars) = num_vars else {
            return Err("clause before header".into());
        };
        for token in line.split_whitespace() {
            let literal: i32 = token
                .parse()
                .map_err(|_| format!("bad literal {token:?}"))?;
            if literal == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                if u64::from(literal.unsigned_abs()) > vars {
                    return Err(format!("literal {literal} outside {vars} variables"));
                }
                current.push(literal);
            }
        }
    }
    if num_vars.is_none() {
        return Err("missing header".into());
    }
    if !current.is_empty() {
        return Err("unterminated final clause".into());
    }
    if clauses.len() as u64 != expected_clauses {
        return Err(format!(
            "header promises {expected_clauses} clauses, found {}",
            clauses.len()
        ));
    }
    Ok((num_vars.unwrap(), clauses))
}
