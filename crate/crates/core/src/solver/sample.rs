//! Seeded sampling of proper colourings, for stress-testing refuters
//! against a spread of inputs rather than a single witness.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::colouring::Colouring;
use crate::error::Error;
use crate::graph::Graph;

const NODE_BUDGET_PER_ATTEMPT: u64 = 2_000_000;
const ATTEMPTS_PER_SAMPLE: u32 = 32;

/// Draws `count` proper `k`-colourings by randomized backtracking, fully
/// determined by `seed`. Vertex order and colour preferences are
/// shuffled per sample, so the results spread over the colouring space
/// (no uniformity is claimed). Intended for `k` at or above the
/// chromatic number; a `k` too small (or a pathological graph) exhausts
/// the per-sample attempt budget and fails.
pub fn sample_proper_colourings(
    g: &Graph,
    k: u32,
    count: usize,
    seed: u64,
) -> Result<Vec<Colouring>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for sample in 0..count {
        let mut found = None;
        for _ in 0..ATTEMPTS_PER_SAMPLE {
            if let Some(col) = attempt(g, k, &mut rng) {
                found = Some(col);
                break;
            }
        }
        match found {
            Some(col) => out.push(col),
            None => {
                return Err(Error::Solver(format!(
                    "sample {sample} found no proper {k}-colouring in \
                     {ATTEMPTS_PER_SAMPLE} randomized attempts; is k at least \
                     the chromatic number?"
                )))
            }
        }
    }
    Ok(out)
}

fn attempt(g: &Graph, k: u32, rng: &mut ChaCha8Rng) -> Option<Colouring> {
    let vcount = g.vertex_count();
    if vcount == 0 {
        return Colouring::new(Vec::new(), k).ok();
    }
    if k == 0 {
        return None;
    }
    let mut order: Vec<u32> = (0..vcount as u32).collect();
    order.shuffle(rng);
    let mut preference: Vec<u32> = (1..=k).collect();
    preference.shuffle(rng);

    let mut colours = vec![0u32; vcount];
    if backtrack(g, &order, &preference, &mut colours) {
        Colouring::new(colours, k).ok()
    } else {
        None
    }
}

/// Depth-first search over partial colourings with an explicit stack;
/// recursion would grow with the vertex count and graphs here reach
/// tens of thousands of vertices. `choice[d]` is the next preference
/// index to try at depth `d`; vertices at depths below the cursor are
/// coloured, the rest hold zero.
fn backtrack(g: &Graph, order: &[u32], preference: &[u32], colours: &mut [u32]) -> bool {
    let mut choice = vec![0usize; order.len()];
    let mut depth = 0usize;
    let mut nodes = 0u64;
    loop {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        let mut advanced = false;
        while choice[depth] < preference.len() {
            let c = preference[choice[depth]];
            choice[depth] += 1;
            nodes += 1;
            if nodes > NODE_BUDGET_PER_ATTEMPT {
                return false;
            }
            if g
                .neighbours(v)
                .iter()
                .all(|&u| colours[u as usize] != c)
            {
                colours[v as usize] = c;
                depth += 1;
                if depth < order.len() {
                    choice[depth] = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            if depth == 0 {
                return false;
            }
            depth -= 1;
            colours[order[depth] as usize] = 0;
        }
    }
}
