//! Exact solvers for the three graph parameters, each available through
//! independent routes so results can be cross-checked: exhaustive
//! enumeration ([`brute_force_chromatic`] and friends), combinatorial
//! search ([`chromatic_number`]), and CNF encodings decided by a SAT
//! backend ([`decide_chromatic`], [`decide_r_dynamic`], [`decide_gamma`]
//! and the ascents built on them).
//!
//! Every satisfying assignment coming back from a backend is re-checked
//! against the formula, decoded, and then validated against the original
//! graph-theoretic condition; an inconsistency at any stage is an error,
//! never a silent answer.

pub mod backend;
mod brute;
pub mod cnf;
mod dpll;
mod sample;
mod search;

pub use backend::{SatBackend, SatOutcome};
pub use brute::{
    brute_force_chromatic, brute_force_decide, brute_force_gamma, brute_force_r_dynamic,
    BRUTE_FORCE_CAP,
};
pub use sample::sample_proper_colourings;
pub use search::{
    chromatic_bounds, chromatic_number, decide_chromatic_search, greedy_clique,
    saturation_colouring, DecideOutcome, SearchBudget,
};

use crate::colouring::{check_proper, check_r_dynamic, is_total_dominating, Colouring};
use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// Decides proper `k`-colourability through the SAT backend. `units`
/// pins `(vertex, 1-based colour)` pairs; pinning is only sound for
/// symmetry breaking when the pinned vertices form a clique.
pub fn decide_chromatic(
    g: &Graph,
    k: u32,
    units: &[(u32, u32)],
    backend: &SatBackend,
) -> Result<Option<Colouring>, Error> {
    let (formula, _) = cnf::encode_chromatic(g, k, units)?;
    match backend::solve(&formula, backend)? {
        SatOutcome::Unsat => Ok(None),
        SatOutcome::Sat(model) => {
            let col = cnf::decode_colouring(&formula, g, k, &model)?;
            if let Some(violation) = check_proper(g, &col)? {
                return Err(Error::Model(format!(
                    "decoded colouring violates properness: {violation}"
                )));
            }
            Ok(Some(col))
        }
    }
}

/// Decides `r`-dynamic `k`-colourability through the SAT backend, with
/// the same `units` contract as [`decide_chromatic`].
pub fn decide_r_dynamic(
    g: &Graph,
    r: u32,
    k: u32,
    units: &[(u32, u32)],
    backend: &SatBackend,
) -> Result<Option<Colouring>, Error> {
    let (formula, _) = cnf::encode_r_dynamic(g, r, k, units)?;
    match backend::solve(&formula, backend)? {
        SatOutcome::Unsat => Ok(None),
        SatOutcome::Sat(model) => {
            let col = cnf::decode_colouring(&formula, g, k, &model)?;
            if let Some(violation) = check_r_dynamic(g, &col, r)? {
                return Err(Error::Model(format!(
                    "decoded colouring violates the r-dynamic condition: {violation}"
                )));
            }
            Ok(Some(col))
        }
    }
}

/// A total dominating set together with a proper colouring of its
/// induced subgraph, as produced by [`decide_gamma`].
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GammaWitness {
    pub set: VertexSet,
    /// `(vertex, colour)` pairs covering exactly the set, ascending by
    /// vertex.
    pub colours: Vec<(u32, u32)>,
}

/// Checks a [`GammaWitness`] against the graph from first principles:
/// the set is total dominating, the pairs cover exactly the set with
/// colours in `1..=t`, and adjacent members get distinct colours.
pub fn validate_gamma_witness(g: &Graph, witness: &GammaWitness, t: u32) -> Result<(), Error> {
    if let Some(v) = is_total_dominating(g, &witness.set)? {
        return Err(Error::Precondition(format!(
            "vertex {v} has no neighbour in the claimed dominating set"
        )));
    }
    if witness.colours.len() != witness.set.len() {
        return Err(Error::Precondition(format!(
            "{} colour pairs for a set of {} vertices",
            witness.colours.len(),
            witness.set.len()
        )));
    }
    for &(v, c) in &witness.colours {
        if !witness.set.contains(v) {
            return Err(Error::Precondition(format!(
                "coloured vertex {v} is outside the set"
            )));
        }
        if c < 1 || c > t {
            return Err(Error::Precondition(format!(
                "vertex {v} has colour {c}, outside 1..={t}"
            )));
        }
    }
    for (idx, &(u, cu)) in witness.colours.iter().enumerate() {
        for &(v, cv) in &witness.colours[idx + 1..] {
            if cu == cv && g.has_edge(u, v) {
                return Err(Error::Precondition(format!(
                    "adjacent members {u} and {v} share colour {cu}"
                )));
            }
        }
    }
    Ok(())
}

/// Decides whether some total dominating set induces a properly
/// `t`-colourable subgraph, returning a validated witness if so.
pub fn decide_gamma(
    g: &Graph,
    t: u32,
    backend: &SatBackend,
) -> Result<Option<GammaWitness>, Error> {
    let (formula, _) = cnf::encode_gamma(g, t)?;
    match backend::solve(&formula, backend)? {
        SatOutcome::Unsat => Ok(None),
        SatOutcome::Sat(model) => {
            let (set, colours) = cnf::decode_gamma(&formula, g, t, &model)?;
            let witness = GammaWitness { set, colours };
            validate_gamma_witness(g, &witness, t)
                .map_err(|e| Error::Model(format!("decoded witness fails validation: {e}")))?;
            Ok(Some(witness))
        }
    }
}

/// The `r`-dynamic chromatic number: the least palette admitting a
/// proper colouring in which every vertex `v` sees at least
/// `min(r, degree(v))` colours on its neighbourhood.
///
/// Ascends from the larger of the chromatic number and the degree bound
/// `min(r, max degree) + 1`, deciding each palette through the backend.
/// `units` follows the [`decide_chromatic`] clique contract. A backend
/// failure mid-ascent is reported as [`Error::Unknown`] carrying the
/// bounds established so far.
pub fn r_dynamic_chromatic_number(
    g: &Graph,
    r: u32,
    units: &[(u32, u32)],
    backend: &SatBackend,
    budget: &SearchBudget,
) -> Result<u32, Error> {
    let vcount = g.vertex_count() as u32;
    if vcount == 0 {
        return Ok(0);
    }
    let chi = chromatic_number(g, budget)?;
    let max_degree = (0..vcount)
        .map(|v| g.neighbours(v).len() as u32)
        .max()
        .unwrap_or(0);
    let mut k = chi.max(if max_degree == 0 { 1 } else { r.min(max_degree) + 1 });
    loop {
        match decide_r_dynamic(g, r, k, units, backend) {
            Ok(Some(_)) => return Ok(k),
            Ok(None) => {
                debug_assert!(k < vcount, "an all-distinct colouring is r-dynamic");
                k += 1;
            }
            Err(Error::Solver(reason)) => {
                return Err(Error::Unknown {
                    reason: format!("palette {k} undecided: {reason}"),
                    lower: u64::from(k),
                    upper: u64::from(vcount),
                })
            }
            Err(other) => return Err(other),
        }
    }
}

/// The least `t` such that some total dominating set induces a properly
/// `t`-colourable subgraph.
///
/// Defined for graphs without isolated vertices (and trivially 0 for the
/// empty graph). Any qualifying set induces positive minimum degree, so
/// the ascent starts at 2; the full vertex set caps the answer at the
/// chromatic number, so the ascent terminates.
pub fn gamma(g: &Graph, backend: &SatBackend, budget: &SearchBudget) -> Result<u32, Error> {
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    if g.min_degree() == Some(0) {
        return Err(Error::Precondition(
            "an isolated vertex admits no total dominating set".into(),
        ));
    }
    let chi = chromatic_number(g, budget)?;
    for t in 2..=chi {
        match decide_gamma(g, t, backend) {
            Ok(Some(_)) => return Ok(t),
            Ok(None) => continue,
            Err(Error::Solver(reason)) => {
                return Err(Error::Unknown {
                    reason: format!("threshold {t} undecided: {reason}"),
                    lower: u64::from(t),
                    upper: u64::from(chi),
                })
            }
            Err(other) => return Err(other),
        }
    }
    Err(Error::Solver(
        "the full vertex set must satisfy the final threshold; \
         the ascent cannot end empty-handed"
            .into(),
    ))
}
