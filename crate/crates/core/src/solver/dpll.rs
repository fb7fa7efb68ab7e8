//! A small complete SAT solver: DPLL with unit propagation, used as the
//! fallback backend so every decision procedure works out of the box.
//! It is deliberately simple and capped by the backend at a variable
//! count where simplicity is still fast; larger instances are routed to
//! an external solver.

use super::cnf::Cnf;

/// Complete search for a satisfying assignment. Returns the full
/// assignment (indexed by `var - 1`) or `None` when unsatisfiable.
pub(crate) fn solve(cnf: &Cnf) -> Option<Vec<bool>> {
    let n = cnf.num_vars() as usize;
    let mut assignment: Vec<Option<bool>> = vec![None; n];
    if search(cnf, &mut assignment) {
        Some(assignment.into_iter().map(|v| v.unwrap_or(false)).collect())
    } else {
        None
    }
}

enum Propagation {
    Conflict,
    Settled(Vec<usize>),
}

/// Runs unit propagation to a fixed point, recording which variables it
/// assigned so the caller can undo them.
fn propagate(cnf: &Cnf, assignment: &mut [Option<bool>]) -> Propagation {
    let mut trail = Vec::new();
    loop {
        let mut changed = false;
        for clause in cnf.clauses() {
            let mut unassigned = None;
            let mut satisfied = false;
            let mut open = 0;
            for &lit in clause {
                match assignment[lit.unsigned_abs() as usize - 1] {
                    None => {
                        open += 1;
                        unassigned = Some(lit);
                    }
                    Some(value) => {
                        if (lit > 0) == value {
                            satisfied = true;
                            break;
                        }
                    }
                }
            }
            if satisfied {
                continue;
            }
            match open {
                0 => {
                    for var in trail {
                        assignment[var] = None;
                    }
                    return Propagation::Conflict;
                }
                1 => {
                    let lit = unassigned.expect("one open literal");
                    let var = lit.unsigned_abs() as usize - 1;
                    assignment[var] = Some(lit > 0);
                    trail.push(var);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return Propagation::Settled(trail);
        }
    }
}

fn search(cnf: &Cnf, assignment: &mut [Option<bool>]) -> bool {
    let trail = match propagate(cnf, assignment) {
        Propagation::Conflict => return false,
        Propagation::Settled(trail) => trail,
    };
    let next = assignment.iter().position(|v| v.is_none());
    let var = match next {
        None => return true,
        Some(var) => var,
    };
    for value in [true, false] {
        assignment[var] = Some(value);
        if search(cnf, assignment) {
            return true;
        }
        assignment[var] = None;
    }
    for var in trail {
        assignment[var] = None;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(num_vars: u32, clauses: &[&[i32]]) -> Cnf {
        let mut f = Cnf::new();
        f.fresh_vars(num_vars);
        for c in clauses {
            f.add_clause(*c);
        }
        f
    }

    #[test]
    fn trivial_formulas() {
        let sat = cnf(2, &[&[1, 2], &[-1, 2], &[1, -2]]);
        let model = solve(&sat).unwrap();
        assert!(sat.first_violated(&model).is_none());

        let unsat = cnf(1, &[&[1], &[-1]]);
        assert!(solve(&unsat).is_none());

        let empty = cnf(0, &[]);
        assert_eq!(solve(&empty), Some(vec![]));
    }

    #[test]
    fn pigeonhole_three_into_two() {
        // p[i][j]: pigeon i sits in hole j. Three pigeons, two holes.
        let var = |i: i32, j: i32| i * 2 + j + 1;
        let mut clauses: Vec<Vec<i32>> = (0..3).map(|i| vec![var(i, 0), var(i, 1)]).collect();
        for j in 0..2 {
            for a in 0..3 {
                for b in a + 1..3 {
                    clauses.push(vec![-var(a, j), -var(b, j)]);
                }
            }
        }
        let refs: Vec<&[i32]> = clauses.iter().map(|c| c.as_slice()).collect();
        assert!(solve(&cnf(6, &refs)).is_none());
    }

    #[test]
    fn propagation_chains() {
        // Units force a long implication chain ending in a model.
        let f = cnf(4, &[&[1], &[-1, 2], &[-2, 3], &[-3, 4]]);
        let model = solve(&f).unwrap();
        assert_eq!(model, vec![true, true, true, true]);
    }
}
