//! Exact chromatic number by branch and bound: a greedy clique for the
//! lower bound, a saturation-guided greedy colouring for the upper bound,
//! and a budgeted saturation-branching search deciding each palette size
//! between them.

use crate::colouring::Colouring;
use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// Node budget for the decision searches. When a single palette decision
/// exceeds it, [`chromatic_number`] reports the bounds it established
/// instead of an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 2_000_000,
        }
    }
}

/// Result of one budgeted palette decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecideOutcome {
    Sat(Colouring),
    Unsat,
    /// The search ran out of nodes before deciding.
    Exhausted { nodes: u64 },
}

/// A maximal clique found greedily: repeatedly adds the candidate with
/// the most neighbours among the remaining candidates (ties to the
/// smallest index). Deterministic; its size is a chromatic lower bound.
pub fn greedy_clique(g: &Graph) -> VertexSet {
    let vcount = g.vertex_count() as u32;
    if vcount == 0 {
        return VertexSet::new();
    }
    let start = (0..vcount)
        .max_by_key(|&v| (g.neighbours(v).len(), std::cmp::Reverse(v)))
        .expect("non-empty graph");
    let mut clique = vec![start];
    let mut candidates: Vec<u32> = g.neighbours(start).to_vec();
    while !candidates.is_empty() {
        let best = candidates
            .iter()
            .copied()
            .max_by_key(|&v| {
                let within = intersection_size(g.neighbours(v), &candidates);
                (within, std::cmp::Reverse(v))
            })
            .expect("non-empty candidates");
        clique.push(best);
        let kept: Vec<u32> = candidates
            .into_iter()
            .filter(|&v| v != best && g.has_edge(best, v))
            .collect();
        candidates = kept;
    }
    clique.into_iter().collect()
}

fn intersection_size(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Greedy colouring in saturation order: always colour the vertex seeing
/// the most distinct neighbour colours, with the smallest colour its
/// neighbourhood misses. The palette it ends up using is a chromatic
/// upper bound.
pub fn saturation_colouring(g: &Graph) -> Colouring {
    let vcount = g.vertex_count();
    let mut colours = vec![0u32; vcount];
    let mut used_max = 0u32;
    for _ in 0..vcount {
        let v = (0..vcount as u32)
            .filter(|&v| colours[v as usize] == 0)
            .max_by_key(|&v| {
                let mut seen: Vec<u32> = g
                    .neighbours(v)
                    .iter()
                    .map(|&u| colours[u as usize])
                    .filter(|&c| c != 0)
                    .collect();
                seen.sort_unstable();
                seen.dedup();
                (seen.len(), g.neighbours(v).len(), std::cmp::Reverse(v))
            })
            .expect("an uncoloured vertex remains");
        let taken: Vec<u32> = g
            .neighbours(v)
            .iter()
            .map(|&u| colours[u as usize])
            .collect();
        let c = (1..).find(|c| !taken.contains(c)).expect("colours are unbounded");
        colours[v as usize] = c;
        used_max = used_max.max(c);
    }
    Colouring::new(colours, used_max).expect("greedy colours are within the palette")
}

struct Decision<'a> {
    g: &'a Graph,
    k: u32,
    colours: Vec<u32>,
    // counts[v][c - 1]: neighbours of v currently coloured c.
    counts: Vec<Vec<u32>>,
    saturation: Vec<u32>,
    uncoloured: usize,
    nodes: u64,
    max_nodes: u64,
}

enum SearchResult {
    Found,
    Exhausted,
    Budget,
}

impl<'a> Decision<'a> {
    fn new(g: &'a Graph, k: u32, budget: &SearchBudget) -> Self {
        let vcount = g.vertex_count();
        Decision {
            g,
            k,
            colours: vec![0; vcount],
            counts: vec![vec![0; k as usize]; vcount],
            saturation: vec![0; vcount],
            uncoloured: vcount,
            nodes: 0,
            max_nodes: budget.max_nodes,
        }
    }

    fn assign(&mut self, v: u32, c: u32) {
        self.colours[v as usize] = c;
        self.uncoloured -= 1;
        for &u in self.g.neighbours(v) {
            let slot = &mut self.counts[u as usize][c as usize - 1];
            *slot += 1;
            if *slot == 1 {
                self.saturation[u as usize] += 1;
            }
        }
    }

    fn unassign(&mut self, v: u32, c: u32) {
        self.colours[v as usize] = 0;
        self.uncoloured += 1;
        for &u in self.g.neighbours(v) {
            let slot = &mut self.counts[u as usize][c as usize - 1];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u as usize] -= 1;
            }
        }
    }

    fn pick(&self) -> u32 {
        (0..self.g.vertex_count() as u32)
            .filter(|&v| self.colours[v as usize] == 0)
            .max_by_key(|&v| {
                (
                    self.saturation[v as usize],
                    self.g.neighbours(v).len(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("an uncoloured vertex remains")
    }

    fn search(&mut self, used_max: u32) -> SearchResult {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return SearchResult::Budget;
        }
        if self.uncoloured == 0 {
            return SearchResult::Found;
        }
        let v = self.pick();
        // Trying colours past the first untouched one only relabels the
        // palette, so the scan stops at used_max + 1.
        let limit = self.k.min(used_max + 1);
        for c in 1..=limit {
            if self.counts[v as usize][c as usize - 1] > 0 {
                continue;
            }
            self.assign(v, c);
            match self.search(used_max.max(c)) {
                SearchResult::Found => return SearchResult::Found,
                SearchResult::Budget => {
                    self.unassign(v, c);
                    return SearchResult::Budget;
                }
                SearchResult::Exhausted => self.unassign(v, c),
            }
        }
        SearchResult::Exhausted
    }
}

/// Decides proper `k`-colourability by saturation-branching search.
pub fn decide_chromatic_search(g: &Graph, k: u32, budget: &SearchBudget) -> DecideOutcome {
    if g.vertex_count() == 0 {
        return DecideOutcome::Sat(Colouring::new(Vec::new(), k).expect("empty colouring"));
    }
    if k == 0 {
        return DecideOutcome::Unsat;
    }
    let mut state = Decision::new(g, k, budget);
    match state.search(0) {
        SearchResult::Found => {
            let col = Colouring::new(state.colours, k).expect("search colours in range");
            debug_assert_eq!(
                crate::colouring::check_proper(g, &col).expect("shape matches"),
                None
            );
            DecideOutcome::Sat(col)
        }
        SearchResult::Exhausted => DecideOutcome::Unsat,
        SearchResult::Budget => DecideOutcome::Exhausted { nodes: state.nodes },
    }
}

/// Exact chromatic number. Establishes clique and greedy bounds, then
/// decides each palette size from the lower bound up; if a decision
/// exhausts the budget the established bounds come back inside
/// [`Error::Unknown`].
pub fn chromatic_number(g: &Graph, budget: &SearchBudget) -> Result<u32, Error> {
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    let lower = greedy_clique(g).len() as u32;
    let upper = saturation_colouring(g).colours_used();
    debug_assert!(lower <= upper);
    for k in lower..upper {
        match decide_chromatic_search(g, k, budget) {
            DecideOutcome::Sat(_) => return Ok(k),
            DecideOutcome::Unsat => continue,
            DecideOutcome::Exhausted { nodes } => {
                return Err(Error::Unknown {
                    reason: format!(
                        "deciding {k}-colourability exceeded the search budget \
                         after {nodes} nodes"
                    ),
                    lower: u64::from(k),
                    upper: u64::from(upper),
                });
            }
        }
    }
    Ok(upper)
}

/// The clique and greedy bounds on their own, for diagnostics.
pub fn chromatic_bounds(g: &Graph) -> (u32, u32) {
    if g.vertex_count() == 0 {
        return (0, 0);
    }
    (
        greedy_clique(g).len() as u32,
        saturation_colouring(g).colours_used(),
    )
}
