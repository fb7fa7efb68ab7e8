//! Vertex colourings, the properness and dynamism checks, and the explicit
//! witness objects carried by the construction: a proper colouring on `n`
//! colours, an `r`-dynamic colouring on `r * n` colours, and a total
//! dominating set inducing an `n`-colourable subgraph.
//!
//! Colours are `1..=palette` throughout the public API; solver backends
//! translate to zero-based literals internally.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::construct::LabeledGraph;
use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// A total assignment of colours `1..=palette` to the vertices
/// `0..colours.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    colours: Vec<u32>,
    palette: u32,
}

impl Colouring {
    pub fn new(colours: Vec<u32>, palette: u32) -> Result<Self, Error> {
        for (v, &c) in colours.iter().enumerate() {
            if c < 1 || c > palette {
                return Err(Error::Colouring(format!(
                    "vertex {v} has colour {c}, outside 1..={palette}"
                )));
            }
        }
        Ok(Colouring { colours, palette })
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn vertex_count(&self) -> usize {
        self.colours.len()
    }

    pub fn colour(&self, v: u32) -> Result<u32, Error> {
        self.colours
            .get(v as usize)
            .copied()
            .ok_or(Error::Index {
                index: v.into(),
                vertex_count: self.colours.len() as u64,
            })
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    /// Number of distinct colours actually assigned.
    pub fn colours_used(&self) -> u32 {
        self.colours.iter().collect::<BTreeSet<_>>().len() as u32
    }

    /// The distinct colours actually assigned, ascending.
    pub fn used_colours(&self) -> Vec<u32> {
        self.colours
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    fn check_shape(&self, g: &Graph) -> Result<(), Error> {
        if self.colours.len() != g.vertex_count() {
            return Err(Error::Colouring(format!(
                "colouring covers {} vertices, graph has {}",
                self.colours.len(),
                g.vertex_count()
            )));
        }
        Ok(())
    }
}

/// A concrete reason a colouring fails to be proper or `r`-dynamic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// Edge `u-v` with both endpoints coloured `colour`.
    ImproperEdge { u: u32, v: u32, colour: u32 },
    /// `vertex` sees only `seen` distinct colours on its neighbourhood,
    /// short of the `required = min(r, degree)` the dynamism condition
    /// demands.
    StarvedVertex { vertex: u32, required: u32, seen: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ImproperEdge { u, v, colour } => {
                write!(f, "edge {u}-{v} has colour {colour} on both endpoints")
            }
            Violation::StarvedVertex {
                vertex,
                required,
                seen,
            } => write!(
                f,
                "vertex {vertex} sees {seen} distinct colours, needs {required}"
            ),
        }
    }
}

/// Checks properness. Returns the first violating edge in `(u, v)` order,
/// or `None` for a proper colouring.
pub fn check_proper(g: &Graph, col: &Colouring) -> Result<Option<Violation>, Error> {
    col.check_shape(g)?;
    for (u, v) in g.edges() {
        let cu = col.colours()[u as usize];
        if cu == col.colours()[v as usize] {
            return Ok(Some(Violation::ImproperEdge { u, v, colour: cu }));
        }
    }
    Ok(None)
}

/// Distinct colours on the open neighbourhood of `v`.
pub fn neighbourhood_colours(g: &Graph, col: &Colouring, v: u32) -> Result<Vec<u32>, Error> {
    col.check_shape(g)?;
    if v as usize >= g.vertex_count() {
        return Err(Error::Index {
            index: v.into(),
            vertex_count: g.vertex_count() as u64,
        });
    }
    let set: BTreeSet<u32> = g
        .neighbours(v)
        .iter()
        .map(|&u| col.colours()[u as usize])
        .collect();
    Ok(set.into_iter().collect())
}

/// Checks the `r`-dynamic condition: properness, plus every vertex `v`
/// seeing at least `min(r, degree(v))` distinct colours on its
/// neighbourhood. Returns the first violation (improper edges scanned
/// first, then starved vertices in index order), or `None` if the
/// colouring is `r`-dynamic.
pub fn check_r_dynamic(g: &Graph, col: &Colouring, r: u32) -> Result<Option<Violation>, Error> {
    if let Some(violation) = check_proper(g, col)? {
        return Ok(Some(violation));
    }
    for v in 0..g.vertex_count() as u32 {
        let required = r.min(g.neighbours(v).len() as u32);
        if required <= 1 {
            // Properness already gives one colour on any non-empty
            // neighbourhood.
            continue;
        }
        let seen = neighbourhood_colours(g, col, v)?.len() as u32;
        if seen < required {
            return Ok(Some(Violation::StarvedVertex {
                vertex: v,
                required,
                seen,
            }));
        }
    }
    Ok(None)
}

/// The explicit proper colouring on `n` colours: part vertices take their
/// part index, selectors the smallest other colour.
pub fn witness_proper(lg: &LabeledGraph) -> Colouring {
    let p = lg.params();
    let n = p.n();
    let mut colours = vec![0u32; p.vertex_count() as usize];
    for v in lg.part_vertices() {
        let per_block = p.degree();
        let part = (u64::from(v) % per_block / p.big_n()) as u32 + 1;
        colours[v as usize] = part;
    }
    for v in lg.selector_vertices() {
        let part =
            ((u64::from(v) - p.part_vertex_count()) / p.selectors_per_part()) as u32 + 1;
        colours[v as usize] = if part == 1 { 2 } else { 1 };
    }
    Colouring::new(colours, n).expect("witness stays inside its palette")
}

/// The explicit `r`-dynamic colouring on `r * n` colours. Within each
/// block, rows `1..=r` of part `i` cycle through the colours congruent to
/// `i` modulo `n`; later rows repeat colour `i`; selectors take the
/// smallest colour not congruent to their part. Requires `N >= r` so each
/// row really shows `r` distinct colours.
pub fn witness_r_dynamic(lg: &LabeledGraph) -> Result<Colouring, Error> {
    let p = lg.params();
    let (r, n) = (p.r(), p.n());
    if p.big_n() < u64::from(r) {
        return Err(Error::WitnessUnavailable(format!(
            "needs N >= r to spread {r} colours over a row, but N = {}",
            p.big_n()
        )));
    }
    let palette = r * n;
    let mut colours = vec![0u32; p.vertex_count() as usize];
    for v in lg.part_vertices() {
        let per_block = p.degree();
        let part = (u64::from(v) % per_block / p.big_n()) as u32 + 1;
        let row = (u64::from(v) % p.big_n()) as u32 + 1;
        colours[v as usize] = if row <= r { (row - 1) * n + part } else { part };
    }
    for v in lg.selector_vertices() {
        let part =
            ((u64::from(v) - p.part_vertex_count()) / p.selectors_per_part()) as u32 + 1;
        let c = (1..=palette)
            .find(|c| c % n != part % n)
            .expect("palette rn >= 2 holds a colour in another residue class");
        colours[v as usize] = c;
    }
    Colouring::new(colours, palette)
}

/// The explicit total dominating set whose induced subgraph is
/// `n`-colourable: all part vertices. Each block induces a complete
/// `n`-partite graph, so the induced subgraph is `n`-chromatic, and every
/// vertex of the graph has a part neighbour.
pub fn witness_total_dominating(lg: &LabeledGraph) -> VertexSet {
    lg.part_vertices().collect()
}

/// Checks that every vertex of `g` has a neighbour in `d`. Returns the
/// smallest undominated vertex, or `None` if `d` is total dominating.
pub fn is_total_dominating(g: &Graph, d: &VertexSet) -> Result<Option<u32>, Error> {
    d.validate(g)?;
    for v in 0..g.vertex_count() as u32 {
        if !g.neighbours(v).iter().any(|&u| d.contains(u)) {
            return Ok(Some(v));
        }
    }
    Ok(None)
}
