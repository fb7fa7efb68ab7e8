//! The `refute` subcommand: run a pigeonhole argument against a
//! colouring (dynamic mode) or a vertex set (domination mode) on a
//! labelled construction instance, writing the certificate as JSON.

use std::path::PathBuf;

use clap::{ArgGroup, Args};
use dyncol_core::io::{read_colouring, read_graph, read_labels, read_vertex_set, write_json};
use dyncol_core::{reassemble, refute_domination, refute_dynamic, DominationOutcome, Error};

use crate::BudgetArgs;

#[derive(Args)]
#[command(group = ArgGroup::new("target").required(true).args(["colouring", "set"]))]
pub struct RefuteArgs {
    /// Graph file of a construction instance.
    #[arg(long)]
    pub graph: PathBuf,
    /// Label sidecar naming every vertex of the instance.
    #[arg(long)]
    pub labels: PathBuf,
    /// Dynamism parameter the instance was built for.
    #[arg(short)]
    pub r: u32,
    /// Proper colouring to refute as r-dynamic.
    #[arg(long)]
    pub colouring: Option<PathBuf>,
    /// Vertex set to refute as a low-chromatic total dominating set.
    #[arg(long)]
    pub set: Option<PathBuf>,
    /// Certificate output path (JSON).
    #[arg(short)]
    pub o: PathBuf,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

pub fn run(args: &RefuteArgs) -> Result<u8, Error> {
    let graph = read_graph(&args.graph)?;
    let labels = read_labels(&args.labels)?;
    let lg = reassemble(graph, &labels, args.r, &args.budget.to_budget())?;

    if let Some(path) = &args.colouring {
        let col = read_colouring(path)?;
        let cert = refute_dynamic(&lg, &col)?;
        cert.verify(&lg, &col)?;
        write_json(&args.o, &cert)?;
        println!(
            "refuted: selector {} over blocks {:?} sees {} of {} required colours",
            cert.starved, cert.blocks, cert.seen, cert.required
        );
        println!("wrote {}", args.o.display());
        return Ok(0);
    }

    if let Some(path) = &args.set {
        let (set, vertex_count) = read_vertex_set(path)?;
        if vertex_count != lg.graph().vertex_count() {
            return Err(Error::Parameter(format!(
                "set file covers {vertex_count} vertices but the instance has {}",
                lg.graph().vertex_count()
            )));
        }
        let outcome = refute_domination(&lg, &set)?;
        outcome.verify(&lg, &set)?;
        write_json(&args.o, &outcome)?;
        match &outcome {
            DominationOutcome::CliqueWitness { block, members } => println!(
                "refuted: block {block} holds a clique of {} set members",
                members.len()
            ),
            DominationOutcome::Undominated { selector, part, blocks } => println!(
                "refuted: selector {selector} of part {part} over blocks {blocks:?} \
                 has no neighbour in the set"
            ),
        }
        println!("wrote {}", args.o.display());
        return Ok(0);
    }

    unreachable!("clap enforces exactly one refutation target")
}
