//! The `build` subcommand: construct one instance and write the DIMACS
//! graph plus the label sidecar that ties indices back to the
//! construction.

use std::path::PathBuf;

use clap::{ArgGroup, Args};
use dyncol_core::io::{write_graph, write_labels};
use dyncol_core::{build, ConstructionParams, Error, LabeledGraph};

use crate::BudgetArgs;

#[derive(Args)]
#[command(group = ArgGroup::new("size").required(true).args(["delta", "m"]))]
pub struct BuildArgs {
    /// Dynamism parameter r, at least 2.
    #[arg(short)]
    pub r: u32,
    /// Part count n, at least 2; equals the chromatic number.
    #[arg(short)]
    pub n: u32,
    /// Minimum degree to exceed; chooses the canonical block count.
    #[arg(long)]
    pub delta: Option<u64>,
    /// Explicit block count, at least n, instead of the delta rule.
    #[arg(short)]
    pub m: Option<u64>,
    /// Output stem; writes <stem>.col and <stem>.labels.
    #[arg(short)]
    pub o: String,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

/// Resolves parameters from either sizing flag, shared with
/// `verify-theorems`.
pub fn resolve_params(
    r: u32,
    n: u32,
    delta: Option<u64>,
    m: Option<u64>,
    budget: &dyncol_core::Budget,
) -> Result<ConstructionParams, Error> {
    match (delta, m) {
        (Some(delta), None) => ConstructionParams::standard(r, n, delta, budget),
        (None, Some(m)) => ConstructionParams::with_explicit_m(r, n, m, budget),
        _ => unreachable!("clap enforces exactly one sizing flag"),
    }
}

/// One-line provenance comment embedded in generated files; carries no
/// timestamp so repeated builds stay byte-identical.
pub fn provenance(params: &ConstructionParams) -> String {
    format!(
        "construction r={} n={} m={} N={} degree={}",
        params.r(),
        params.n(),
        params.m(),
        params.big_n(),
        params.degree()
    )
}

/// Writes <stem>.col and <stem>.labels, returning both paths.
pub fn write_instance(lg: &LabeledGraph, stem: &str) -> Result<(PathBuf, PathBuf), Error> {
    let graph_path = PathBuf::from(format!("{stem}.col"));
    let labels_path = PathBuf::from(format!("{stem}.labels"));
    let comments = vec![provenance(lg.params())];
    write_graph(&graph_path, lg.graph(), &comments)?;
    let labels: Vec<_> = lg.labels().collect();
    write_labels(&labels_path, &labels, &comments)?;
    Ok((graph_path, labels_path))
}

pub fn run(args: &BuildArgs) -> Result<u8, Error> {
    let budget = args.budget.to_budget();
    let params = resolve_params(args.r, args.n, args.delta, args.m, &budget)?;
    let lg = build(&params)?;
    let (graph_path, labels_path) = write_instance(&lg, &args.o)?;
    println!("vertices {}", params.vertex_count());
    println!("edges {}", params.edge_count());
    println!("degree {}", params.degree());
    println!("pigeonhole_ok {}", params.pigeonhole_ok());
    println!("wrote {}", graph_path.display());
    println!("wrote {}", labels_path.display());
    Ok(0)
}
