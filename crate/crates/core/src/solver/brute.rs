//! Exhaustive oracles for desk-scale graphs. These are the independent
//! reference implementations the faster solvers are tested against, so
//! they favour obviously-correct enumeration over speed and refuse
//! graphs beyond a caller-supplied vertex cap.

use crate::colouring::Colouring;
use crate::error::Error;
use crate::graph::Graph;

/// Default vertex cap for the exhaustive searches.
pub const BRUTE_FORCE_CAP: usize = 14;

fn check_cap(g: &Graph, cap: usize, hard_limit: usize) -> Result<(), Error> {
    let limit = cap.min(hard_limit);
    if g.vertex_count() > limit {
        return Err(Error::Capacity {
            quantity: "exhaustive search vertex count",
            value: g.vertex_count() as u128,
            limit: limit as u128,
        });
    }
    Ok(())
}

struct Enumeration<'a> {
    g: &'a Graph,
    r: u32,
    k: u32,
    colours: Vec<u32>,
    // counts[v][c - 1]: neighbours of v coloured c; distinct[v] is the
    // number of non-zero rows, the colours v currently sees.
    counts: Vec<Vec<u32>>,
    distinct: Vec<u32>,
    // coloured_neighbours[v]: how many neighbours of v are assigned.
    coloured_neighbours: Vec<u32>,
}

impl<'a> Enumeration<'a> {
    fn new(g: &'a Graph, r: u32, k: u32) -> Self {
        let vcount = g.vertex_count();
        Enumeration {
            g,
            r,
            k,
            colours: vec![0; vcount],
            counts: vec![vec![0; k as usize]; vcount],
            distinct: vec![0; vcount],
            coloured_neighbours: vec![0; vcount],
        }
    }

    fn requirement(&self, v: u32) -> u32 {
        self.r.min(self.g.neighbours(v).len() as u32)
    }

    /// After a change around `u`, can `u` still reach its quota of
    /// neighbourhood colours? Colours already seen plus neighbours still
    /// uncoloured bound what is achievable.
    fn still_viable(&self, u: u32) -> bool {
        let assigned = self.coloured_neighbours[u as usize];
        let remaining = self.g.neighbours(u).len() as u32 - assigned;
        self.distinct[u as usize] + remaining >= self.requirement(u)
    }

    fn assign(&mut self, v: u32, c: u32) -> bool {
        self.colours[v as usize] = c;
        let mut viable = true;
        for &u in self.g.neighbours(v) {
            self.coloured_neighbours[u as usize] += 1;
            let slot = &mut self.counts[u as usize][c as usize - 1];
            *slot += 1;
            if *slot == 1 {
                self.distinct[u as usize] += 1;
            }
            if !self.still_viable(u) {
                viable = false;
            }
        }
        viable
    }

    fn unassign(&mut self, v: u32, c: u32) {
        self.colours[v as usize] = 0;
        for &u in self.g.neighbours(v) {
            self.coloured_neighbours[u as usize] -= 1;
            let slot = &mut self.counts[u as usize][c as usize - 1];
            *slot -= 1;
            if *slot == 0 {
                self.distinct[u as usize] -= 1;
            }
        }
    }

    fn search(&mut self, v: u32, used_max: u32) -> bool {
        if v as usize == self.g.vertex_count() {
            return true;
        }
        // Colours in first-use order: going past the first fresh colour
        // only permutes colour names, and permutations preserve both
        // properness and the dynamism quota.
        let limit = self.k.min(used_max + 1);
        for c in 1..=limit {
            if self.counts[v as usize][c as usize - 1] > 0 {
                continue;
            }
            let viable = self.assign(v, c);
            if viable && self.search(v + 1, used_max.max(c)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

/// Exhaustively decides whether an `r`-dynamic proper `k`-colouring
/// exists (with `r = 1` this is plain proper colourability), returning
/// one if so. Complete within the cap; `None` is authoritative.
pub fn brute_force_decide(
    g: &Graph,
    r: u32,
    k: u32,
    cap: usize,
) -> Result<Option<Colouring>, Error> {
    check_cap(g, cap, 26)?;
    if g.vertex_count() == 0 {
        return Ok(Some(Colouring::new(Vec::new(), k)?));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut state = Enumeration::new(g, r, k);
    if !state.search(0, 0) {
        return Ok(None);
    }
    let col = Colouring::new(state.colours, k)?;
    debug_assert_eq!(
        crate::colouring::check_r_dynamic(g, &col, r).expect("shape matches"),
        None
    );
    Ok(Some(col))
}

/// Exhaustive chromatic number.
pub fn brute_force_chromatic(g: &Graph, cap: usize) -> Result<u32, Error> {
    brute_force_r_dynamic(g, 1, cap)
}

/// Exhaustive `r`-dynamic chromatic number: the least `k` admitting an
/// `r`-dynamic proper `k`-colouring. Colouring all vertices distinctly
/// is always such a colouring, so the ascent terminates by `k = |V|`.
pub fn brute_force_r_dynamic(g: &Graph, r: u32, cap: usize) -> Result<u32, Error> {
    check_cap(g, cap, 26)?;
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    for k in 1..=g.vertex_count() as u32 {
        if brute_force_decide(g, r, k, cap)?.is_some() {
            return Ok(k);
        }
    }
    unreachable!("colouring every vertex its own colour always satisfies the search")
}

/// Exhaustive minimum, over all total dominating sets `D`, of the
/// chromatic number of the subgraph induced by `D`.
///
/// Defined only when the graph has no isolated vertex (otherwise no total
/// dominating set exists); the empty graph trivially reports 0. Every
/// member of a total dominating set has a neighbour inside the set, so
/// the induced subgraph has no isolated vertex either and the answer is
/// at least 2; taking all vertices shows it is at most the chromatic
/// number.
pub fn brute_force_gamma(g: &Graph, cap: usize) -> Result<u32, Error> {
    check_cap(g, cap, 24)?;
    let vcount = g.vertex_count();
    if vcount == 0 {
        return Ok(0);
    }
    if g.min_degree() == Some(0) {
        return Err(Error::Precondition(
            "an isolated vertex admits no total dominating set".into(),
        ));
    }
    let chi = brute_force_chromatic(g, cap)?;
    let neighbour_masks: Vec<u32> = (0..vcount as u32)
        .map(|v| {
            g.neighbours(v)
                .iter()
                .fold(0u32, |mask, &u| mask | 1 << u)
        })
        .collect();
    for t in 2..=chi {
        for mask in 1u32..1 << vcount {
            if neighbour_masks.iter().any(|&nb| nb & mask == 0) {
                continue;
            }
            if induced_colourable(g, mask, t) {
                return Ok(t);
            }
        }
    }
    // The full vertex set is total dominating and chi-colourable, so the
    // t = chi round always succeeds.
    unreachable!("the full vertex set satisfies the final round")
}

/// Does the subgraph induced by the vertices in `mask` admit a proper
/// `t`-colouring? Backtracking over the members only, with the same
/// first-use colour cap as the full enumeration.
fn induced_colourable(g: &Graph, mask: u32, t: u32) -> bool {
    let members: Vec<u32> = (0..g.vertex_count() as u32)
        .filter(|&v| mask >> v & 1 == 1)
        .collect();
    fn go(g: &Graph, members: &[u32], colours: &mut [u32], at: usize, t: u32, used_max: u32) -> bool {
        if at == members.len() {
            return true;
        }
        let v = members[at];
        let limit = t.min(used_max + 1);
        'colour: for c in 1..=limit {
            for (idx, &u) in members[..at].iter().enumerate() {
                if colours[idx] == c && g.has_edge(u, v) {
                    continue 'colour;
                }
            }
            colours[at] = c;
            if go(g, members, colours, at + 1, t, used_max.max(c)) {
                return true;
            }
            colours[at] = 0;
        }
        false
    }
    let mut colours = vec![0u32; members.len()];
    go(g, &members, &mut colours, 0, t, 0)
}
