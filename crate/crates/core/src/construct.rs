//! The counterexample family `G(r, n; m)` and its canonical vertex order.
//!
//! The graph has two layers. For each *block* `k` in `[m]` there are `n`
//! *parts*, each holding `N = C(m-1, n-1)` interchangeable vertices
//! `v(i, j, k)` (part `i`, row `j`, block `k`); two part vertices are
//! adjacent exactly when they share a block and differ in part, so each
//! block induces a complete `n`-partite graph. On top of that, for every
//! part index `i` and every `n`-element subset `X` of the blocks there is a
//! *selector* vertex `s(i, X)`, adjacent to all part-`i` vertices of the
//! blocks in `X`. Both layers have degree `n * N`, so the whole graph is
//! regular.
//!
//! The derived-parameter route picks `m = max(C(rn-1, r-1) * n^2, delta)`,
//! which makes the counting arguments in the refuters bite and pushes the
//! degree above `delta`. The explicit-`m` route exposes smaller members of
//! the family (down to `m = n`) for desk-scale experiments; the
//! [`ConstructionParams::pigeonhole_ok`] and
//! [`ConstructionParams::domination_ok`] flags report honestly whether the
//! two counting thresholds hold for the chosen `m`.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::combin::{binomial, colex_first, colex_rank, colex_successor, colex_unrank};
use crate::error::Error;
use crate::graph::Graph;

/// Size guard for builds. The defaults allow every desk-scale instance this
/// crate works with while failing fast on parameter choices whose graphs
/// could not be materialized anyway.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: u64,
    pub max_edges: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: 5_000_000,
            max_edges: 500_000_000,
        }
    }
}

/// Validated parameters of one member of the family, with every derived
/// count precomputed exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionParams {
    r: u32,
    n: u32,
    delta: Option<u64>,
    m: u64,
    big_n: u64,
    selectors_per_part: u64,
    vertex_count: u64,
    edge_count: u64,
}

impl ConstructionParams {
    /// Parameters with `m` derived from a target degree lower bound
    /// `delta`: `m = max(C(rn-1, r-1) * n^2, delta)`.
    pub fn standard(r: u32, n: u32, delta: u64, budget: &Budget) -> Result<Self, Error> {
        if r < 2 || n < 2 || delta < 2 {
            return Err(Error::Parameter(format!(
                "r, n, delta must all be at least 2 (got r={r}, n={n}, delta={delta})"
            )));
        }
        let pools = binomial(u64::from(r) * u64::from(n) - 1, u64::from(r) - 1).ok_or(
            Error::Capacity {
                quantity: "C(r*n - 1, r - 1)",
                value: u128::MAX,
                limit: u64::MAX as u128,
            },
        )?;
        let m = pools
            .checked_mul(u64::from(n) * u64::from(n))
            .ok_or(Error::Capacity {
                quantity: "m",
                value: u128::from(pools) * u128::from(n) * u128::from(n),
                limit: u64::MAX as u128,
            })?
            .max(delta);
        let params = Self::common(r, n, Some(delta), m, budget)?;
        // The construction degree must exceed the requested bound; this is
        // a theorem about the chosen m, asserted rather than assumed.
        if params.degree() <= delta {
            return Err(Error::Parameter(format!(
                "internal: degree {} does not exceed delta {delta}",
                params.degree()
            )));
        }
        Ok(params)
    }

    /// Parameters with an explicit block count `m >= n`. No claim is made
    /// about the counting thresholds; check the `*_ok` flags.
    pub fn with_explicit_m(r: u32, n: u32, m: u64, budget: &Budget) -> Result<Self, Error> {
        if r < 2 || n < 2 {
            return Err(Error::Parameter(format!(
                "r and n must be at least 2 (got r={r}, n={n})"
            )));
        }
        if m < u64::from(n) {
            return Err(Error::Parameter(format!(
                "m must be at least n (got m={m}, n={n})"
            )));
        }
        Self::common(r, n, None, m, budget)
    }

    fn common(r: u32, n: u32, delta: Option<u64>, m: u64, budget: &Budget) -> Result<Self, Error> {
        let cap = |quantity: &'static str, value: u128| Error::Capacity {
            quantity,
            value,
            limit: u64::MAX as u128,
        };
        let big_n =
            binomial(m - 1, u64::from(n) - 1).ok_or_else(|| cap("N = C(m-1, n-1)", u128::MAX))?;
        let selectors_per_part =
            binomial(m, u64::from(n)).ok_or_else(|| cap("C(m, n)", u128::MAX))?;

        let n128 = u128::from(n);
        let part_vertices = n128 * u128::from(big_n) * u128::from(m);
        let selectors = n128 * u128::from(selectors_per_part);
        let vertex_count = part_vertices + selectors;
        let degree = n128 * u128::from(big_n);
        let doubled_edges = vertex_count
            .checked_mul(degree)
            .ok_or_else(|| cap("2 * edge count", u128::MAX))?;
        debug_assert_eq!(doubled_edges % 2, 0, "degree sum must be even");
        let edge_count = doubled_edges / 2;

        if vertex_count > u128::from(budget.max_vertices) {
            return Err(Error::Capacity {
                quantity: "vertex count",
                value: vertex_count,
                limit: u128::from(budget.max_vertices),
            });
        }
        if edge_count > u128::from(budget.max_edges) {
            return Err(Error::Capacity {
                quantity: "edge count",
                value: edge_count,
                limit: u128::from(budget.max_edges),
            });
        }

        Ok(ConstructionParams {
            r,
            n,
            delta,
            m,
            big_n,
            selectors_per_part,
            vertex_count: vertex_count as u64,
            edge_count: edge_count as u64,
        })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The degree target `delta`, present only for derived-`m` parameters.
    pub fn delta(&self) -> Option<u64> {
        self.delta
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Rows per part: `N = C(m-1, n-1)`.
    pub fn big_n(&self) -> u64 {
        self.big_n
    }

    /// Common degree of every vertex: `n * N`.
    pub fn degree(&self) -> u64 {
        u64::from(self.n) * self.big_n
    }

    pub fn vertex_count(&self) -> u64 {
        self.vertex_count
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn part_vertex_count(&self) -> u64 {
        u64::from(self.n) * self.big_n * self.m
    }

    pub fn selector_count(&self) -> u64 {
        u64::from(self.n) * self.selectors_per_part
    }

    /// Number of selectors sharing one part index: `C(m, n)`.
    pub fn selectors_per_part(&self) -> u64 {
        self.selectors_per_part
    }

    /// Whether `m` clears the threshold `(n-1) * n * C(rn-1, r-1)` used by
    /// the dynamic-colouring refuter's counting argument.
    pub fn pigeonhole_ok(&self) -> bool {
        let pools = match binomial(u64::from(self.r) * u64::from(self.n) - 1, u64::from(self.r) - 1)
        {
            Some(p) => u128::from(p),
            // Threshold beyond u64 certainly exceeds m.
            None => return false,
        };
        let threshold = u128::from(self.n - 1) * u128::from(self.n) * pools;
        u128::from(self.m) > threshold
    }

    /// Whether `m` clears the threshold `(n-1) * n` used by the domination
    /// refuter's counting argument.
    pub fn domination_ok(&self) -> bool {
        u128::from(self.m) > u128::from(self.n - 1) * u128::from(self.n)
    }
}

/// Label of a vertex in the canonical order. All coordinates are 1-based:
/// parts `i` in `[n]`, rows `j` in `[N]`, blocks `k` in `[m]`, and selector
/// block sets are strictly increasing subsets of `[m]` of size `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexLabel {
    Part { part: u32, row: u32, block: u32 },
    Selector { part: u32, blocks: Vec<u32> },
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Part { part, row, block } => write!(f, "v({part},{row},{block})"),
            VertexLabel::Selector { part, blocks } => {
                write!(f, "s({part},{{")?;
                for (pos, b) in blocks.iter().enumerate() {
                    if pos > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{b}")?;
                }
                write!(f, "}})")
            }
        }
    }
}

/// A built instance: the graph plus its parameters. Labels are computed
/// from indices on demand (the canonical order makes both directions pure
/// arithmetic), so the labelling costs no memory beyond the parameters.
///
/// Canonical order: part vertices sorted by `(block, part, row)`, then
/// selectors sorted by `(part, blocks)` with block sets in colexicographic
/// order. All indices are 0-based; file formats add 1.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    graph: Graph,
    params: ConstructionParams,
}

impl LabeledGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn params(&self) -> &ConstructionParams {
        &self.params
    }

    /// Index of `v(part, row, block)`.
    pub fn part_index(&self, part: u32, row: u64, block: u64) -> Result<u32, Error> {
        let p = &self.params;
        if part < 1 || part > p.n || row < 1 || row > p.big_n || block < 1 || block > p.m {
            return Err(Error::Parameter(format!(
                "part vertex ({part},{row},{block}) outside [{}]x[{}]x[{}]",
                p.n, p.big_n, p.m
            )));
        }
        let idx = (block - 1) * p.degree() + u64::from(part - 1) * p.big_n + (row - 1);
        Ok(idx as u32)
    }

    /// Index of `s(part, blocks)`; `blocks` must be strictly increasing.
    pub fn selector_index(&self, part: u32, blocks: &[u32]) -> Result<u32, Error> {
        let p = &self.params;
        let sorted = blocks.windows(2).all(|w| w[0] < w[1]);
        let in_range = blocks
            .iter()
            .all(|&b| b >= 1 && u64::from(b) <= p.m);
        if part < 1 || part > p.n || blocks.len() != p.n as usize || !sorted || !in_range {
            return Err(Error::Parameter(format!(
                "selector ({part},{blocks:?}) is not a part index with {} increasing blocks in [{}]",
                p.n, p.m
            )));
        }
        let rank = colex_rank(blocks).ok_or(Error::Capacity {
            quantity: "selector rank",
            value: u128::MAX,
            limit: u64::MAX as u128,
        })?;
        let idx = p.part_vertex_count() + u64::from(part - 1) * p.selectors_per_part + rank;
        Ok(idx as u32)
    }

    pub fn index_of(&self, label: &VertexLabel) -> Result<u32, Error> {
        match label {
            VertexLabel::Part { part, row, block } => {
                self.part_index(*part, u64::from(*row), u64::from(*block))
            }
            VertexLabel::Selector { part, blocks } => self.selector_index(*part, blocks),
        }
    }

    pub fn label_of(&self, v: u32) -> Result<VertexLabel, Error> {
        let p = &self.params;
        let idx = u64::from(v);
        if idx >= p.vertex_count() {
            return Err(Error::Index {
                index: idx,
                vertex_count: p.vertex_count(),
            });
        }
        if idx < p.part_vertex_count() {
            let per_block = p.degree();
            let block = idx / per_block;
            let rem = idx % per_block;
            let part = rem / p.big_n;
            let row = rem % p.big_n;
            Ok(VertexLabel::Part {
                part: part as u32 + 1,
                row: row as u32 + 1,
                block: block as u32 + 1,
            })
        } else {
            let rem = idx - p.part_vertex_count();
            let part = rem / p.selectors_per_part;
            let rank = rem % p.selectors_per_part;
            Ok(VertexLabel::Selector {
                part: part as u32 + 1,
                blocks: colex_unrank(rank, p.n),
            })
        }
    }

    /// All labels in canonical (index) order.
    pub fn labels(&self) -> impl Iterator<Item = VertexLabel> + '_ {
        let p = &self.params;
        let parts = (0..p.part_vertex_count()).map(move |idx| {
            let per_block = p.degree();
            VertexLabel::Part {
                part: (idx % per_block / p.big_n) as u32 + 1,
                row: (idx % p.big_n) as u32 + 1,
                block: (idx / per_block) as u32 + 1,
            }
        });
        let selectors = (1..=p.n).flat_map(move |part| {
            SubsetIter::new(p.n, p.m as u32).map(move |blocks| VertexLabel::Selector { part, blocks })
        });
        parts.chain(selectors)
    }

    /// Indices of the row `{v(part, 1..=N, block)}`, a contiguous range.
    pub fn row_vertices(&self, part: u32, block: u64) -> Result<Range<u32>, Error> {
        let start = self.part_index(part, 1, block)?;
        Ok(start..start + self.params.big_n as u32)
    }

    /// Indices of all part vertices of one block, a contiguous range.
    pub fn block_vertices(&self, block: u64) -> Result<Range<u32>, Error> {
        let start = self.part_index(1, 1, block)?;
        Ok(start..start + self.params.degree() as u32)
    }

    /// Indices of all part vertices: `0..n*N*m`.
    pub fn part_vertices(&self) -> Range<u32> {
        0..self.params.part_vertex_count() as u32
    }

    /// Indices of all selector vertices.
    pub fn selector_vertices(&self) -> Range<u32> {
        self.params.part_vertex_count() as u32..self.params.vertex_count() as u32
    }
}

struct SubsetIter {
    current: Option<Vec<u32>>,
    m: u32,
}

impl SubsetIter {
    fn new(n: u32, m: u32) -> Self {
        SubsetIter {
            current: (n <= m).then(|| colex_first(n)),
            m,
        }
    }
}

impl Iterator for SubsetIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        if !colex_successor(cur, self.m) {
            self.current = None;
        }
        Some(out)
    }
}

/// Materializes the graph described by `params`.
pub fn build(params: &ConstructionParams) -> Result<LabeledGraph, Error> {
    let v_total = params.vertex_count();
    if v_total > u64::from(u32::MAX) {
        return Err(Error::Capacity {
            quantity: "vertex index range",
            value: u128::from(v_total),
            limit: u128::from(u32::MAX),
        });
    }
    let v_total = v_total as usize;
    let n = params.n() as usize;
    let big_n = params.big_n() as usize;
    let m = params.m() as usize;
    let degree = params.degree() as usize;

    let mut adj: Vec<Vec<u32>> = Vec::with_capacity(v_total);
    adj.resize_with(v_total, || Vec::with_capacity(degree));

    // Block-internal edges: parts of one block are pairwise completely
    // joined.
    for block in 0..m {
        let base = (block * degree) as u32;
        for p1 in 0..n {
            for p2 in p1 + 1..n {
                for j1 in 0..big_n {
                    let u = base + (p1 * big_n + j1) as u32;
                    for j2 in 0..big_n {
                        let v = base + (p2 * big_n + j2) as u32;
                        adj[u as usize].push(v);
                        adj[v as usize].push(u);
                    }
                }
            }
        }
    }

    // Selector edges: s(i, X) joins every part-i row of the blocks in X.
    let selector_base = params.part_vertex_count() as u32;
    let per_part = params.selectors_per_part() as u32;
    for part in 0..n as u32 {
        let mut blocks = colex_first(params.n());
        let mut rank = 0u32;
        loop {
            let s = selector_base + part * per_part + rank;
            for &block in &blocks {
                let row_base = (u64::from(block - 1) * params.degree()
                    + u64::from(part) * params.big_n()) as u32;
                for j in 0..big_n as u32 {
                    let u = row_base + j;
                    adj[s as usize].push(u);
                    adj[u as usize].push(s);
                }
            }
            if !colex_successor(&mut blocks, m as u32) {
                break;
            }
            rank += 1;
        }
    }

    let graph = Graph::from_adjacency(adj)?;
    if graph.edge_count() != params.edge_count() {
        return Err(Error::Label(format!(
            "internal: built {} edges, parameters predict {}",
            graph.edge_count(),
            params.edge_count()
        )));
    }
    debug_assert_eq!(graph.regular_degree(), Some(params.degree() as u32));
    Ok(LabeledGraph {
        graph,
        params: params.clone(),
    })
}

/// Reassembles a [`LabeledGraph`] from a graph and its label list, fully
/// validating both against a fresh build with the same parameters. `r` is
/// not recoverable from labels and must be supplied.
pub fn reassemble(
    graph: Graph,
    labels: &[VertexLabel],
    r: u32,
    budget: &Budget,
) -> Result<LabeledGraph, Error> {
    if graph.vertex_count() != labels.len() {
        return Err(Error::Label(format!(
            "{} labels for {} vertices",
            labels.len(),
            graph.vertex_count()
        )));
    }
    let n = labels
        .iter()
        .map(|l| match l {
            VertexLabel::Part { part, .. } | VertexLabel::Selector { part, .. } => *part,
        })
        .max()
        .ok_or_else(|| Error::Label("empty label list".into()))?;
    let m = labels
        .iter()
        .flat_map(|l| match l {
            VertexLabel::Part { block, .. } => vec![*block],
            VertexLabel::Selector { blocks, .. } => blocks.clone(),
        })
        .max()
        .ok_or_else(|| Error::Label("empty label list".into()))?;
    let params = ConstructionParams::with_explicit_m(r, n, m.into(), budget)?;
    let rebuilt = build(&params)?;
    if rebuilt.graph() != &graph {
        return Err(Error::Label(
            "graph does not match the construction described by the labels".into(),
        ));
    }
    for (v, label) in labels.iter().enumerate() {
        if rebuilt.label_of(v as u32)? != *label {
            return Err(Error::Label(format!(
                "label {label} out of canonical order at index {v}"
            )));
        }
    }
    Ok(rebuilt)
}
