//! Simple undirected graphs with sorted adjacency lists, plus the small
//! set of structural operations the rest of the crate builds on: induced
//! subgraphs, clique search, and degree bookkeeping.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Undirected loop-free graph on vertices `0..vertex_count()`.
///
/// Every construction path canonicalizes: each neighbour list is strictly
/// increasing, adjacency is symmetric, and self-loops are rejected. The
/// [`Graph::audit`] method re-checks those invariants and is run after every
/// construction in debug builds.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    edge_count: u64,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({} vertices, {} edges)",
            self.adj.len(),
            self.edge_count
        )
    }
}

impl Graph {
    /// Builds a graph from an edge list. Accepts each edge in either or both
    /// orientations and deduplicates; rejects self-loops and out-of-range
    /// endpoints.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, Error> {
        let mut adj = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            if u == v {
                return Err(Error::Parameter(format!("self-loop at vertex {u}")));
            }
            for w in [u, v] {
                if w as usize >= vertex_count {
                    return Err(Error::Index {
                        index: w.into(),
                        vertex_count: vertex_count as u64,
                    });
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut directed = 0u64;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            directed += list.len() as u64;
        }
        let g = Graph {
            adj,
            edge_count: directed / 2,
        };
        debug_assert!(g.audit().is_ok());
        Ok(g)
    }

    /// Builds a graph from prepared adjacency lists, sorting each list and
    /// verifying the canonical-form invariants. Intended for constructions
    /// that emit both orientations of every edge exactly once.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<u32>>) -> Result<Self, Error> {
        let mut directed = 0u64;
        for list in &mut adj {
            list.sort_unstable();
            directed += list.len() as u64;
        }
        if directed % 2 != 0 {
            return Err(Error::Label(
                "adjacency lists hold an odd number of directed edges".into(),
            ));
        }
        let g = Graph {
            adj,
            edge_count: directed / 2,
        };
        g.audit()?;
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    /// Neighbour list of `v`, strictly increasing. Panics if `v` is out of
    /// range; use [`Graph::degree`] for a checked variant.
    pub fn neighbours(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> Result<u32, Error> {
        self.adj
            .get(v as usize)
            .map(|list| list.len() as u32)
            .ok_or(Error::Index {
                index: v.into(),
                vertex_count: self.adj.len() as u64,
            })
    }

    /// The common degree if the graph is regular (including the empty graph,
    /// which reports `Some(0)`), otherwise `None`.
    pub fn regular_degree(&self) -> Option<u32> {
        match self.adj.first() {
            None => Some(0),
            Some(first) => {
                let d = first.len();
                self.adj.iter().all(|list| list.len() == d).then_some(d as u32)
            }
        }
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.adj.iter().map(|list| list.len() as u32).min()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        match self.adj.get(u as usize) {
            Some(list) => list.binary_search(&v).is_ok(),
            None => false,
        }
    }

    /// All edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Re-checks the canonical-form invariants: strictly increasing
    /// neighbour lists (hence no duplicates), no self-loops, symmetric
    /// adjacency, and a consistent edge count.
    pub fn audit(&self) -> Result<(), Error> {
        let mut directed = 0u64;
        for (u, list) in self.adj.iter().enumerate() {
            let u = u as u32;
            directed += list.len() as u64;
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::Label(format!(
                        "neighbour list of {u} is not strictly increasing"
                    )));
                }
            }
            for &v in list {
                if v == u {
                    return Err(Error::Label(format!("self-loop at vertex {u}")));
                }
                if v as usize >= self.adj.len() {
                    return Err(Error::Index {
                        index: v.into(),
                        vertex_count: self.adj.len() as u64,
                    });
                }
                if self.adj[v as usize].binary_search(&u).is_err() {
                    return Err(Error::Label(format!("edge {u}-{v} is not symmetric")));
                }
            }
        }
        if directed != 2 * self.edge_count {
            return Err(Error::Label(format!(
                "edge count {} inconsistent with adjacency size {directed}",
                self.edge_count
            )));
        }
        Ok(())
    }
}

/// A set of vertex indices, iterated in ascending order.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: BTreeSet<u32>,
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.members.contains(&v)
    }

    pub fn insert(&mut self, v: u32) -> bool {
        self.members.insert(v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.members.iter().copied().collect()
    }

    /// Checks that every member indexes a vertex of `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), Error> {
        match self.members.last() {
            Some(&max) if max as usize >= g.vertex_count() => Err(Error::Index {
                index: max.into(),
                vertex_count: g.vertex_count() as u64,
            }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        VertexSet {
            members: iter.into_iter().collect(),
        }
    }
}

impl Extend<u32> for VertexSet {
    fn extend<I: IntoIterator<Item = u32>>(&mut self, iter: I) {
        self.members.extend(iter);
    }
}

/// An induced subgraph together with its index translation. `vertices[new]`
/// is the original index of the new vertex `new`; the list is ascending.
#[derive(Debug, Clone)]
pub struct Induced {
    pub graph: Graph,
    pub vertices: Vec<u32>,
}

impl Induced {
    pub fn old_to_new(&self, old: u32) -> Option<u32> {
        self.vertices.binary_search(&old).ok().map(|i| i as u32)
    }
}

/// Subgraph of `g` induced by `s`, with vertices renumbered to
/// `0..s.len()` in ascending order of their original indices.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Induced, Error> {
    s.validate(g)?;
    let vertices: Vec<u32> = s.to_vec();
    let mut edges = Vec::new();
    for (new_u, &old_u) in vertices.iter().enumerate() {
        for &old_v in g.neighbours(old_u) {
            if old_v > old_u {
                if let Ok(new_v) = vertices.binary_search(&old_v) {
                    edges.push((new_u as u32, new_v as u32));
                }
            }
        }
    }
    Ok(Induced {
        graph: Graph::from_edges(vertices.len(), edges)?,
        vertices,
    })
}

/// Candidate-set size up to which [`find_clique`] searches exhaustively.
pub const CLIQUE_EXHAUSTIVE_CAP: usize = 64;

/// Searches `candidates` for a clique of exactly `size` vertices.
///
/// Up to [`CLIQUE_EXHAUSTIVE_CAP`] candidates the search is exhaustive, so
/// `None` means no such clique exists within the candidate set. Above the
/// cap a deterministic greedy pass runs instead and `None` is not
/// authoritative; callers wanting an authoritative answer on a large graph
/// restrict the candidates to one block of the construction, where the
/// greedy pass always succeeds.
pub fn find_clique(g: &Graph, candidates: &VertexSet, size: u32) -> Result<Option<VertexSet>, Error> {
    find_clique_capped(g, candidates, size, CLIQUE_EXHAUSTIVE_CAP)
}

/// [`find_clique`] with an explicit exhaustive-search cap.
pub fn find_clique_capped(
    g: &Graph,
    candidates: &VertexSet,
    size: u32,
    cap: usize,
) -> Result<Option<VertexSet>, Error> {
    candidates.validate(g)?;
    if size == 0 {
        return Ok(Some(VertexSet::new()));
    }
    let cand = candidates.to_vec();
    if (size as usize) > cand.len() {
        return Ok(None);
    }
    if cand.len() <= cap {
        let mut chosen = Vec::with_capacity(size as usize);
        if extend_clique(g, &cand, 0, size as usize, &mut chosen) {
            return Ok(Some(chosen.into_iter().collect()));
        }
        Ok(None)
    } else {
        let mut chosen: Vec<u32> = Vec::with_capacity(size as usize);
        for &v in &cand {
            if chosen.iter().all(|&u| g.has_edge(u, v)) {
                chosen.push(v);
                if chosen.len() == size as usize {
                    return Ok(Some(chosen.into_iter().collect()));
                }
            }
        }
        Ok(None)
    }
}

fn extend_clique(g: &Graph, cand: &[u32], from: usize, size: usize, chosen: &mut Vec<u32>) -> bool {
    if chosen.len() == size {
        return true;
    }
    for idx in from..cand.len() {
        if cand.len() - idx < size - chosen.len() {
            return false;
        }
        let v = cand[idx];
        if chosen.iter().all(|&u| g.has_edge(u, v)) {
            chosen.push(v);
            if extend_clique(g, cand, idx + 1, size, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
