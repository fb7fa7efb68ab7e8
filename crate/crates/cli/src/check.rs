//! The `check` subcommand: standalone validation of every artifact
//! kind the pipeline leaves behind. Success prints one `ok:` line and
//! exits 0; the first violation prints and exits 1; unreadable or
//! malformed files exit 2.

use std::path::PathBuf;

use clap::{ArgGroup, Args};
use dyncol_core::io::{read_colouring, read_graph, read_json, read_vertex_set};
use dyncol_core::solver::{validate_gamma_witness, GammaWitness};
use dyncol_core::{check_proper, check_r_dynamic, is_total_dominating, Error, Graph, VertexSet};

#[derive(Args)]
#[command(group = ArgGroup::new("mode").required(true).args(["colouring", "set", "gamma_witness"]))]
pub struct CheckArgs {
    /// Graph file the artifact is checked against.
    #[arg(long)]
    pub graph: PathBuf,
    /// Colouring file; checked for properness unless --dynamic raises
    /// the bar.
    #[arg(long)]
    pub colouring: Option<PathBuf>,
    /// Require every vertex v to see min(R, deg(v)) distinct colours
    /// in its neighbourhood.
    #[arg(long, value_name = "R", requires = "colouring")]
    pub dynamic: Option<u32>,
    /// Vertex-set file; pair with --domination or --clique.
    #[arg(long)]
    pub set: Option<PathBuf>,
    /// Check that the set totally dominates the graph.
    #[arg(long, requires = "set")]
    pub domination: bool,
    /// Check that the set is pairwise adjacent.
    #[arg(long, requires = "set", conflicts_with = "domination")]
    pub clique: bool,
    /// JSON witness holding a dominating set and an induced colouring.
    #[arg(long, value_name = "FILE")]
    pub gamma_witness: Option<PathBuf>,
    /// Palette bound the gamma witness must respect.
    #[arg(long, requires = "gamma_witness")]
    pub palette: Option<u32>,
}

pub fn run(args: &CheckArgs) -> Result<u8, Error> {
    let g = read_graph(&args.graph)?;

    if let Some(path) = &args.colouring {
        let col = read_colouring(path)?;
        let violation = match args.dynamic {
            Some(r) => check_r_dynamic(&g, &col, r)?,
            None => check_proper(&g, &col)?,
        };
        return Ok(match violation {
            None => {
                let kind = match args.dynamic {
                    Some(r) => format!("{r}-dynamic"),
                    None => "proper".to_string(),
                };
                println!(
                    "ok: {kind} colouring on {} colours over {} vertices",
                    col.colours_used(),
                    col.vertex_count()
                );
                0
            }
            Some(v) => {
                println!("violation: {v}");
                1
            }
        });
    }

    if let Some(path) = &args.set {
        let (set, vertex_count) = read_vertex_set(path)?;
        if vertex_count != g.vertex_count() {
            return Err(Error::Parameter(format!(
                "set file covers {vertex_count} vertices but the graph has {}",
                g.vertex_count()
            )));
        }
        if args.domination {
            return Ok(match is_total_dominating(&g, &set)? {
                None => {
                    println!("ok: {} vertices totally dominate the graph", set.len());
                    0
                }
                Some(v) => {
                    println!("violation: vertex {v} has no neighbour in the set");
                    1
                }
            });
        }
        if args.clique {
            return Ok(match first_non_edge(&g, &set) {
                None => {
                    println!("ok: clique of size {}", set.len());
                    0
                }
                Some((u, v)) => {
                    println!("violation: vertices {u} and {v} are not adjacent");
                    1
                }
            });
        }
        return Err(Error::Parameter(
            "--set needs --domination or --clique".into(),
        ));
    }

    if let Some(path) = &args.gamma_witness {
        let witness: GammaWitness = read_json(path)?;
        let palette = args
            .palette
            .expect("clap requires --palette with --gamma-witness");
        return Ok(match validate_gamma_witness(&g, &witness, palette) {
            Ok(()) => {
                println!(
                    "ok: {} dominating vertices properly coloured within {palette} colours",
                    witness.set.len()
                );
                0
            }
            Err(err @ (Error::Io { .. } | Error::Format { .. })) => return Err(err),
            Err(err) => {
                println!("violation: {err}");
                1
            }
        });
    }

    unreachable!("clap enforces exactly one artifact flag")
}

fn first_non_edge(g: &Graph, set: &VertexSet) -> Option<(u32, u32)> {
    let members = set.to_vec();
    for (idx, &u) in members.iter().enumerate() {
        for &v in &members[idx + 1..] {
            if !g.has_edge(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}
