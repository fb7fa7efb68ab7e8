//! CNF encodings of the three decision problems, plus model decoding that
//! re-checks every clause before trusting a satisfying assignment.
//!
//! Variables are 1-based DIMACS style. Colour classes are zero-based
//! inside the encodings and shifted back to `1..=k` when decoding.

use std::io::Write;

use crate::colouring::Colouring;
use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// A CNF formula in DIMACS conventions: variables `1..=num_vars`,
/// clauses as non-empty lists of non-zero literals.
#[derive(Debug, Clone, Default)]
pub struct Cnf {
    num_vars: u32,
    clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn new() -> Self {
        Cnf::default()
    }

    /// Allocates `count` fresh variables, returning the first.
    pub fn fresh_vars(&mut self, count: u32) -> u32 {
        let first = self.num_vars + 1;
        self.num_vars += count;
        first
    }

    pub fn add_clause(&mut self, lits: impl Into<Vec<i32>>) {
        let lits = lits.into();
        debug_assert!(
            lits.iter()
                .all(|&l| l != 0 && l.unsigned_abs() <= self.num_vars),
            "literal out of range in {lits:?}"
        );
        self.clauses.push(lits);
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Serializes in DIMACS `p cnf` format.
    pub fn write_dimacs(&self, mut w: impl Write) -> std::io::Result<()> {
        writeln!(w, "p cnf {} {}", self.num_vars, self.clauses.len())?;
        for clause in &self.clauses {
            let mut line = String::with_capacity(clause.len() * 4 + 2);
            for &lit in clause {
                line.push_str(itoa(lit).as_str());
                line.push(' ');
            }
            line.push('0');
            writeln!(w, "{line}")?;
        }
        Ok(())
    }

    /// Index of the first clause `assignment` falsifies, or `None` when
    /// every clause is satisfied. `assignment[var - 1]` is the value of
    /// `var`.
    pub fn first_violated(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses.iter().position(|clause| {
            !clause.iter().any(|&lit| {
                let value = assignment[lit.unsigned_abs() as usize - 1];
                (lit > 0) == value
            })
        })
    }
}

fn itoa(v: i32) -> String {
    v.to_string()
}

/// Describes how the variable range splits into named roles, for
/// diagnostics and for readers of emitted DIMACS files.
#[derive(Debug, Clone, Default)]
pub struct VariableMap {
    segments: Vec<(String, u32, u32)>,
}

impl VariableMap {
    fn push(&mut self, role: impl Into<String>, start: u32, len: u32) {
        self.segments.push((role.into(), start, len));
    }

    /// `(role, first variable, count)` for each segment, in variable
    /// order.
    pub fn segments(&self) -> impl Iterator<Item = (&str, u32, u32)> {
        self.segments
            .iter()
            .map(|(role, start, len)| (role.as_str(), *start, *len))
    }

    pub fn role_of(&self, var: u32) -> Option<&str> {
        self.segments
            .iter()
            .find(|(_, start, len)| var >= *start && var < start + len)
            .map(|(role, _, _)| role.as_str())
    }
}

fn colour_var(v: u32, c: u32, k: u32) -> i32 {
    (v * k + c + 1) as i32
}

fn properness_clauses(cnf: &mut Cnf, g: &Graph, k: u32) {
    for v in 0..g.vertex_count() as u32 {
        let all: Vec<i32> = (0..k).map(|c| colour_var(v, c, k)).collect();
        cnf.add_clause(all);
        for c1 in 0..k {
            for c2 in c1 + 1..k {
                cnf.add_clause([-colour_var(v, c1, k), -colour_var(v, c2, k)]);
            }
        }
    }
    for (u, v) in g.edges() {
        for c in 0..k {
            cnf.add_clause([-colour_var(u, c, k), -colour_var(v, c, k)]);
        }
    }
}

fn unit_clauses(cnf: &mut Cnf, units: &[(u32, u32)], k: u32) -> Result<(), Error> {
    for &(v, colour) in units {
        if colour < 1 || colour > k {
            return Err(Error::Parameter(format!(
                "unit assignment of colour {colour} outside 1..={k}"
            )));
        }
        cnf.add_clause([colour_var(v, colour - 1, k)]);
    }
    Ok(())
}

/// Proper `k`-colourability. `units` pins `(vertex, colour)` pairs, used
/// for symmetry breaking on vertices known to form a clique; colours are
/// 1-based.
pub fn encode_chromatic(
    g: &Graph,
    k: u32,
    units: &[(u32, u32)],
) -> Result<(Cnf, VariableMap), Error> {
    if k == 0 {
        return Err(Error::Parameter("palette must be non-empty".into()));
    }
    let vcount = g.vertex_count() as u32;
    let mut cnf = Cnf::new();
    let mut map = VariableMap::default();
    let first = cnf.fresh_vars(vcount * k);
    map.push("colour x[v,c]", first, vcount * k);
    properness_clauses(&mut cnf, g, k);
    unit_clauses(&mut cnf, units, k)?;
    Ok((cnf, map))
}

/// `r`-dynamic `k`-colourability: properness plus, for every vertex `v`,
/// at least `min(r, degree(v))` distinct colours on its neighbourhood.
///
/// For `r = 2` the neighbourhood condition is clausal directly: for every
/// colour, some neighbour avoids it. For larger `r`, per-vertex indicator
/// variables `y[v,c]` (colour `c` appears on the neighbourhood of `v`,
/// in the direction the counter needs) feed a sequential counter
/// enforcing the lower bound.
pub fn encode_r_dynamic(
    g: &Graph,
    r: u32,
    k: u32,
    units: &[(u32, u32)],
) -> Result<(Cnf, VariableMap), Error> {
    if r < 1 {
        return Err(Error::Parameter("r must be at least 1".into()));
    }
    let (mut cnf, mut map) = encode_chromatic(g, k, units)?;
    if r == 1 {
        // Properness already shows one colour on every non-empty
        // neighbourhood.
        return Ok((cnf, map));
    }
    for v in 0..g.vertex_count() as u32 {
        let degree = g.neighbours(v).len() as u32;
        let required = r.min(degree);
        if required < 2 {
            continue;
        }
        if required > k {
            // No k-colouring can show more than k colours; the instance
            // is unsatisfiable and one empty-equivalent clause says so.
            // Using the vertex's own colour variables keeps literals in
            // range: the vertex both must and must not take each colour.
            cnf.add_clause([colour_var(v, 0, k)]);
            cnf.add_clause([-colour_var(v, 0, k)]);
            continue;
        }
        if r == 2 {
            for c in 0..k {
                let clause: Vec<i32> = g
                    .neighbours(v)
                    .iter()
                    .map(|&u| -colour_var(u, c, k))
                    .collect();
                cnf.add_clause(clause);
            }
            continue;
        }
        // Indicators: y[c] true requires colour c on the neighbourhood.
        let y_first = cnf.fresh_vars(k);
        map.push(format!("indicator y[{v},c]"), y_first, k);
        for c in 0..k {
            let mut clause = vec![-((y_first + c) as i32)];
            clause.extend(g.neighbours(v).iter().map(|&u| colour_var(u, c, k)));
            cnf.add_clause(clause);
        }
        // Sequential counter: s[j][t] says at least t of y[1..=j] hold.
        // s[j][t] -> s[j-1][t] or (y[j] and s[j-1][t-1]), with the
        // boundary rows constant; asserting s[k][required] forces the
        // count.
        let s_first = cnf.fresh_vars(k * required);
        map.push(format!("counter s[{v},j,t]"), s_first, k * required);
        let s = |j: u32, t: u32| (s_first + (j - 1) * required + (t - 1)) as i32;
        for j in 1..=k {
            let y_j = (y_first + j - 1) as i32;
            for t in 1..=required {
                if j == 1 {
                    if t == 1 {
                        cnf.add_clause([-s(1, 1), y_j]);
                    } else {
                        cnf.add_clause([-s(1, t)]);
                    }
                    continue;
                }
                cnf.add_clause([-s(j, t), s(j - 1, t), y_j]);
                if t > 1 {
                    cnf.add_clause([-s(j, t), s(j - 1, t), s(j - 1, t - 1)]);
                }
            }
        }
        cnf.add_clause([s(k, required)]);
    }
    Ok((cnf, map))
}

/// Existence of a total dominating set whose induced subgraph admits a
/// proper `t`-colouring: selection variables `s[v]`, and colour variables
/// `z[v,c]` active only on selected vertices. Vertices may hold several
/// `z` colours; decoding keeps the smallest, which the per-colour edge
/// clauses keep proper.
pub fn encode_gamma(g: &Graph, t: u32) -> Result<(Cnf, VariableMap), Error> {
    if t == 0 {
        return Err(Error::Parameter("palette must be non-empty".into()));
    }
    let vcount = g.vertex_count() as u32;
    let mut cnf = Cnf::new();
    let mut map = VariableMap::default();
    let s_first = cnf.fresh_vars(vcount);
    map.push("selected s[v]", s_first, vcount);
    let z_first = cnf.fresh_vars(vcount * t);
    map.push("colour z[v,c]", z_first, vcount * t);
    let s = |v: u32| (s_first + v) as i32;
    let z = |v: u32, c: u32| (z_first + v * t + c) as i32;

    for v in 0..vcount {
        // Total domination: some neighbour is selected. An isolated
        // vertex yields the empty clause's role via a trivially false
        // pair, keeping the formula well-formed.
        let dominators: Vec<i32> = g.neighbours(v).iter().map(|&u| s(u)).collect();
        if dominators.is_empty() {
            cnf.add_clause([s(v)]);
            cnf.add_clause([-s(v)]);
        } else {
            cnf.add_clause(dominators);
        }
        // Selected vertices take a colour; colours imply selection.
        let mut takes = vec![-s(v)];
        takes.extend((0..t).map(|c| z(v, c)));
        cnf.add_clause(takes);
        for c in 0..t {
            cnf.add_clause([-z(v, c), s(v)]);
        }
    }
    for (u, v) in g.edges() {
        for c in 0..t {
            cnf.add_clause([-z(u, c), -z(v, c)]);
        }
    }
    Ok((cnf, map))
}

fn validated(cnf: &Cnf, assignment: &[bool]) -> Result<(), Error> {
    if assignment.len() != cnf.num_vars() as usize {
        return Err(Error::Model(format!(
            "assignment covers {} variables, formula has {}",
            assignment.len(),
            cnf.num_vars()
        )));
    }
    if let Some(idx) = cnf.first_violated(assignment) {
        return Err(Error::Model(format!(
            "assignment falsifies clause {idx}: {:?}",
            cnf.clauses()[idx]
        )));
    }
    Ok(())
}

/// Extracts the colouring from a model of [`encode_chromatic`] or
/// [`encode_r_dynamic`], after re-checking the model against every clause.
pub fn decode_colouring(
    cnf: &Cnf,
    g: &Graph,
    k: u32,
    assignment: &[bool],
) -> Result<Colouring, Error> {
    validated(cnf, assignment)?;
    let mut colours = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() as u32 {
        let mut chosen = None;
        for c in 0..k {
            if assignment[(v * k + c) as usize] {
                if chosen.is_some() {
                    return Err(Error::Model(format!(
                        "vertex {v} holds two colours in the model"
                    )));
                }
                chosen = Some(c + 1);
            }
        }
        colours.push(chosen.ok_or_else(|| {
            Error::Model(format!("vertex {v} holds no colour in the model"))
        })?);
    }
    Colouring::new(colours, k)
}

/// Extracts `(selected set, colour per selected vertex)` from a model of
/// [`encode_gamma`], after re-checking the model against every clause.
/// Vertices holding several colour variables keep the smallest.
pub fn decode_gamma(
    cnf: &Cnf,
    g: &Graph,
    t: u32,
    assignment: &[bool],
) -> Result<(VertexSet, Vec<(u32, u32)>), Error> {
    validated(cnf, assignment)?;
    let vcount = g.vertex_count() as u32;
    let mut set = VertexSet::new();
    let mut pairs = Vec::new();
    for v in 0..vcount {
        if !assignment[v as usize] {
            continue;
        }
        set.insert(v);
        let c = (0..t)
            .find(|&c| assignment[(vcount + v * t + c) as usize])
            .ok_or_else(|| {
                Error::Model(format!("selected vertex {v} holds no colour"))
            })?;
        pairs.push((v, c + 1));
    }
    Ok((set, pairs))
}
