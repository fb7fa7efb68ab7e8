//! Refutation algorithms: counting arguments turned into certificate
//! producers.
//!
//! Both refuters follow the same shape. A claimed object (a proper
//! colouring on fewer than `r * n` colours, or a total dominating set) is
//! examined block by block; a pigeonhole step finds a coincidence among the
//! blocks; the coincidence pins down a concrete vertex whose neighbourhood
//! violates the claim. The returned certificate re-checks in linear time
//! without trusting the search that found it.
//!
//! The counting steps only bite when `m` clears the matching threshold
//! (see `ConstructionParams::pigeonhole_ok` and `domination_ok`); below
//! the thresholds the refuters stay honest and return
//! [`Error::NoWitnessFound`] with the full bucket histogram.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::colouring::{check_proper, Colouring};
use crate::combin::binomial;
use crate::construct::LabeledGraph;
use crate::error::Error;
use crate::graph::VertexSet;

/// One bucket of the pigeonhole histogram: how many blocks were filed
/// under a `(part, colour pool)` key. The domination refuter reuses the
/// type with an empty pool, counting blocks whose part-`part` row misses
/// the dominating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BucketCount {
    pub part: u32,
    pub pool: Vec<u32>,
    pub count: u32,
}

/// Per-block audit record: the part chosen for the block and the padded
/// colour pool covering that part's row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRow {
    pub block: u32,
    pub part: u32,
    pub pool: Vec<u32>,
}

/// Certificate that a proper colouring is not `r`-dynamic.
///
/// The selector `starved = s(part, blocks)` has its whole neighbourhood
/// coloured from `pool`, so it sees at most `r - 1` distinct colours. The
/// `rows` trail and `histogram` document the counting step that found it;
/// only the starved vertex itself is needed to re-check the claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynamicRefutation {
    pub starved: u32,
    pub part: u32,
    pub blocks: Vec<u32>,
    pub pool: Vec<u32>,
    pub seen: u32,
    pub required: u32,
    pub rows: Vec<BlockRow>,
    pub histogram: Vec<BucketCount>,
}

impl DynamicRefutation {
    /// Re-derives the starvation claim from scratch: the named vertex is
    /// the selector `s(part, blocks)`, every neighbour's colour lies in
    /// `pool`, and the pool is too small for the dynamism condition.
    pub fn verify(&self, lg: &LabeledGraph, col: &Colouring) -> Result<(), Error> {
        let expected = lg.selector_index(self.part, &self.blocks)?;
        if expected != self.starved {
            return Err(Error::Precondition(format!(
                "certificate names vertex {} but s({},{:?}) is {expected}",
                self.starved, self.part, self.blocks
            )));
        }
        let r = lg.params().r();
        if self.pool.len() as u32 > r - 1 {
            return Err(Error::Precondition(format!(
                "pool holds {} colours, refutation needs at most {}",
                self.pool.len(),
                r - 1
            )));
        }
        let mut seen = BTreeSet::new();
        for &u in lg.graph().neighbours(self.starved) {
            let c = col.colour(u)?;
            if !self.pool.contains(&c) {
                return Err(Error::Precondition(format!(
                    "neighbour {u} has colour {c}, outside the pool {:?}",
                    self.pool
                )));
            }
            seen.insert(c);
        }
        let degree = lg.graph().neighbours(self.starved).len() as u32;
        if seen.len() as u32 != self.seen || r.min(degree) != self.required {
            return Err(Error::Precondition(format!(
                "certificate records seen={} required={}, recheck gives {} and {}",
                self.seen,
                self.required,
                seen.len(),
                r.min(degree)
            )));
        }
        if self.seen >= self.required {
            return Err(Error::Precondition(format!(
                "vertex {} sees {} colours, meeting its requirement {}",
                self.starved, self.seen, self.required
            )));
        }
        Ok(())
    }
}

/// Refutes the claim that `col` is an `r`-dynamic colouring of `lg` using
/// fewer than `r * n` colours.
///
/// Preconditions checked here: the colouring is proper
/// ([`Error::Precondition`] otherwise) and uses at most `r * n - 1`
/// distinct colours ([`Error::TooManyColours`] otherwise; colourings on
/// the full palette can be genuinely dynamic).
///
/// The argument: within a block the parts see pairwise disjoint colour
/// sets, so fewer than `r * n` colours leave some part with at most
/// `r - 1` distinct colours. Filing each block under its starved part and
/// (padded) colour pool gives at most `n * C(rn - 1, r - 1)` buckets;
/// once `m` exceeds `n - 1` times that, some bucket holds `n` blocks, and
/// the selector over those blocks sees at most `r - 1` colours.
pub fn refute_dynamic(lg: &LabeledGraph, col: &Colouring) -> Result<DynamicRefutation, Error> {
    let p = lg.params();
    let (r, n) = (p.r(), p.n());
    if p.degree() < u64::from(r) {
        return Err(Error::Precondition(format!(
            "degree {} is below r = {r}, so the dynamism condition asks for \
             fewer than r colours and the starvation argument does not bite",
            p.degree()
        )));
    }
    if let Some(violation) = check_proper(lg.graph(), col)? {
        return Err(Error::Precondition(format!(
            "colouring is not proper: {violation}"
        )));
    }
    let used = col.used_colours();
    let limit = r * n - 1;
    if used.len() as u32 > limit {
        return Err(Error::TooManyColours {
            used: used.len() as u32,
            limit,
        });
    }

    // File each block under (starved part, padded pool).
    let pool_size = (r as usize - 1).min(used.len());
    let mut rows = Vec::with_capacity(p.m() as usize);
    let mut buckets: BTreeMap<(u32, Vec<u32>), Vec<u32>> = BTreeMap::new();
    for block in 1..=p.m() {
        let mut chosen: Option<(u32, BTreeSet<u32>)> = None;
        for part in 1..=n {
            let range = lg.row_vertices(part, block)?;
            let palette: BTreeSet<u32> =
                range.map(|v| col.colours()[v as usize]).collect();
            if palette.len() <= r as usize - 1 {
                chosen = Some((part, palette));
                break;
            }
        }
        let (part, palette) = chosen.ok_or_else(|| {
            Error::Precondition(format!(
                "block {block} shows at least r colours in every part despite \
                 only {} colours being used",
                used.len()
            ))
        })?;
        let mut pool: Vec<u32> = palette.iter().copied().collect();
        for &c in &used {
            if pool.len() >= pool_size {
                break;
            }
            if !palette.contains(&c) {
                pool.push(c);
            }
        }
        pool.sort_unstable();
        rows.push(BlockRow {
            block: block as u32,
            part,
            pool: pool.clone(),
        });
        buckets.entry((part, pool)).or_default().push(block as u32);
    }

    let histogram: Vec<BucketCount> = buckets
        .iter()
        .map(|((part, pool), blocks)| BucketCount {
            part: *part,
            pool: pool.clone(),
            count: blocks.len() as u32,
        })
        .collect();
    let largest = histogram.iter().map(|b| b.count).max().unwrap_or(0);

    // The counting bound behind the pigeonhole step, re-asserted on every
    // run: the filing scheme cannot produce more buckets than
    // n * C(rn - 1, r - 1), so the largest bucket holds at least
    // ceil(m / that many) blocks.
    let bound = u64::from(n)
        * binomial(u64::from(r) * u64::from(n) - 1, u64::from(r) - 1)
            .expect("desk-scale r and n keep the bound inside u64");
    assert!(
        histogram.len() as u64 <= bound,
        "bucket count {} exceeds the counting bound {bound}",
        histogram.len()
    );
    assert!(
        u64::from(largest) >= p.m().div_ceil(bound),
        "largest bucket {largest} is below the pigeonhole floor {}",
        p.m().div_ceil(bound)
    );

    let winner = buckets
        .iter()
        .find(|(_, blocks)| blocks.len() >= n as usize);
    let ((part, pool), blocks) = match winner {
        Some((key, blocks)) => (key.clone(), blocks),
        None => {
            return Err(Error::NoWitnessFound {
                histogram,
                largest,
                blocks: p.m() as u32,
            })
        }
    };
    let chosen: Vec<u32> = blocks[..n as usize].to_vec();
    let starved = lg.selector_index(part, &chosen)?;

    let seen: BTreeSet<u32> = lg
        .graph()
        .neighbours(starved)
        .iter()
        .map(|&u| col.colours()[u as usize])
        .collect();
    let refutation = DynamicRefutation {
        starved,
        part,
        blocks: chosen,
        pool,
        seen: seen.len() as u32,
        required: r.min(lg.graph().neighbours(starved).len() as u32),
        rows,
        histogram,
    };
    refutation.verify(lg, col)?;
    Ok(refutation)
}

/// Outcome of [`refute_domination`]: evidence against the claim that a
/// total dominating set induces a subgraph colourable with fewer than `n`
/// colours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum DominationOutcome {
    /// `members` lie in the set, one per part of `block`, and are pairwise
    /// adjacent, so the induced subgraph contains a complete graph on `n`
    /// vertices.
    CliqueWitness { block: u32, members: Vec<u32> },
    /// The selector `s(part, blocks)` has no neighbour in the set, so the
    /// set is not total dominating in the first place.
    Undominated {
        selector: u32,
        part: u32,
        blocks: Vec<u32>,
    },
}

impl DominationOutcome {
    /// Re-derives the evidence from scratch against the graph and the set.
    pub fn verify(&self, lg: &LabeledGraph, d: &VertexSet) -> Result<(), Error> {
        match self {
            DominationOutcome::CliqueWitness { block, members } => {
                if members.len() != lg.params().n() as usize {
                    return Err(Error::Precondition(format!(
                        "clique witness holds {} vertices, expected n = {}",
                        members.len(),
                        lg.params().n()
                    )));
                }
                let mut parts = BTreeSet::new();
                for &v in members {
                    if !d.contains(v) {
                        return Err(Error::Precondition(format!(
                            "clique member {v} is not in the set"
                        )));
                    }
                    match lg.label_of(v)? {
                        crate::construct::VertexLabel::Part { part, block: b, .. }
                            if u64::from(*block) == u64::from(b) =>
                        {
                            parts.insert(part);
                        }
                        label => {
                            return Err(Error::Precondition(format!(
                                "clique member {v} = {label} is not a part vertex of \
                                 block {block}"
                            )));
                        }
                    }
                }
                if parts.len() != members.len() {
                    return Err(Error::Precondition(
                        "clique members repeat a part".into(),
                    ));
                }
                for (a, &u) in members.iter().enumerate() {
                    for &v in &members[a + 1..] {
                        if !lg.graph().has_edge(u, v) {
                            return Err(Error::Precondition(format!(
                                "clique members {u} and {v} are not adjacent"
                            )));
                        }
                    }
                }
                Ok(())
            }
            DominationOutcome::Undominated {
                selector,
                part,
                blocks,
            } => {
                let expected = lg.selector_index(*part, blocks)?;
                if expected != *selector {
                    return Err(Error::Precondition(format!(
                        "certificate names vertex {selector} but s({part},{blocks:?}) \
                         is {expected}"
                    )));
                }
                if let Some(&u) = lg
                    .graph()
                    .neighbours(*selector)
                    .iter()
                    .find(|&&u| d.contains(u))
                {
                    return Err(Error::Precondition(format!(
                        "selector {selector} is dominated by {u}"
                    )));
                }
                Ok(())
            }
        }
    }
}

/// Refutes the claim that `d` is a total dominating set of `lg` whose
/// induced subgraph needs fewer than `n` colours.
///
/// The argument: if some part `i` misses `n` whole blocks, the selector
/// over those blocks is undominated. Otherwise every part hits at least
/// `m - n + 1` blocks, giving at least `n * (m - n + 1)` part-block
/// incidences; if no block were hit in all parts each block would carry at
/// most `n - 1`, capping the total at `m * (n - 1)`, impossible once
/// `m > (n - 1) * n`. A fully hit block yields `n` pairwise adjacent set
/// members, a complete subgraph forcing `n` colours.
pub fn refute_domination(lg: &LabeledGraph, d: &VertexSet) -> Result<DominationOutcome, Error> {
    let p = lg.params();
    d.validate(lg.graph())?;
    let n = p.n();
    let m = p.m();

    // hits[part - 1][block - 1]: does d meet the row (part, block)?
    let mut hits = vec![vec![false; m as usize]; n as usize];
    for v in d.iter() {
        if let crate::construct::VertexLabel::Part { part, block, .. } = lg.label_of(v)? {
            hits[part as usize - 1][block as usize - 1] = true;
        }
    }

    for block in 1..=m {
        if (1..=n).all(|part| hits[part as usize - 1][block as usize - 1]) {
            let mut members = Vec::with_capacity(n as usize);
            for part in 1..=n {
                let v = lg
                    .row_vertices(part, block)?
                    .find(|&v| d.contains(v))
                    .expect("hit rows contain a set member");
                members.push(v);
            }
            let outcome = DominationOutcome::CliqueWitness {
                block: block as u32,
                members,
            };
            outcome.verify(lg, d)?;
            return Ok(outcome);
        }
    }

    let mut histogram = Vec::with_capacity(n as usize);
    for part in 1..=n {
        let empties: Vec<u32> = (1..=m as u32)
            .filter(|&b| !hits[part as usize - 1][b as usize - 1])
            .collect();
        histogram.push(BucketCount {
            part,
            pool: Vec::new(),
            count: empties.len() as u32,
        });
        if empties.len() >= n as usize {
            let blocks: Vec<u32> = empties[..n as usize].to_vec();
            let selector = lg.selector_index(part, &blocks)?;
            let outcome = DominationOutcome::Undominated {
                selector,
                part,
                blocks,
            };
            outcome.verify(lg, d)?;
            return Ok(outcome);
        }
    }

    let largest = histogram.iter().map(|b| b.count).max().unwrap_or(0);
    Err(Error::NoWitnessFound {
        histogram,
        largest,
        blocks: m as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{witness_proper, witness_total_dominating};
    use crate::construct::{build, Budget, ConstructionParams};

    fn instance(r: u32, n: u32, m: u64) -> LabeledGraph {
        let params = ConstructionParams::with_explicit_m(r, n, m, &Budget::default()).unwrap();
        build(&params).unwrap()
    }

    fn standard(r: u32, n: u32, delta: u64) -> LabeledGraph {
        let params = ConstructionParams::standard(r, n, delta, &Budget::default()).unwrap();
        build(&params).unwrap()
    }

    #[test]
    fn refutes_the_proper_witness_on_the_standard_instance() {
        let lg = standard(2, 2, 2);
        assert!(lg.params().pigeonhole_ok());
        let col = witness_proper(&lg);
        let refutation = refute_dynamic(&lg, &col).unwrap();
        refutation.verify(&lg, &col).unwrap();
        assert!(refutation.seen < refutation.required);
        assert_eq!(refutation.rows.len(), lg.params().m() as usize);
        // The proper witness colours part-i rows with the single colour i,
        // so every block files under part 1 with pool {1} and the refuter
        // picks the first two blocks.
        assert_eq!(refutation.part, 1);
        assert_eq!(refutation.blocks, vec![1, 2]);
        assert_eq!(refutation.pool, vec![1]);
    }

    #[test]
    fn below_threshold_reports_the_histogram() {
        // m = 2 < (n-1) n C(rn-1, r-1) = 6 leaves too few blocks, but the
        // uniform witness still collides early enough to be refuted; use a
        // colouring spreading pools to force the miss instead.
        let lg = instance(2, 2, 2);
        assert!(!lg.params().pigeonhole_ok());
        // Parts of block 1 get colours {1, 2}; parts of block 2 get
        // {3, 2}: block 1 files under (1, {1}), block 2 under (1, {3}).
        let mut colours = vec![0u32; lg.graph().vertex_count()];
        colours[lg.part_index(1, 1, 1).unwrap() as usize] = 1;
        colours[lg.part_index(2, 1, 1).unwrap() as usize] = 2;
        colours[lg.part_index(1, 1, 2).unwrap() as usize] = 3;
        colours[lg.part_index(2, 1, 2).unwrap() as usize] = 2;
        colours[lg.selector_index(1, &[1, 2]).unwrap() as usize] = 2;
        colours[lg.selector_index(2, &[1, 2]).unwrap() as usize] = 1;
        let col = Colouring::new(colours, 3).unwrap();
        match refute_dynamic(&lg, &col) {
            Err(Error::NoWitnessFound {
                histogram, largest, ..
            }) => {
                assert_eq!(largest, 1);
                assert_eq!(histogram.len(), 2);
            }
            other => panic!("expected a histogram miss, got {other:?}"),
        }
    }

    #[test]
    fn rejects_improper_and_oversized_input() {
        let lg = instance(2, 2, 3);
        let improper = Colouring::new(vec![1; lg.graph().vertex_count()], 4).unwrap();
        assert!(matches!(
            refute_dynamic(&lg, &improper),
            Err(Error::Precondition(_))
        ));

        let full = crate::colouring::witness_r_dynamic(&lg).unwrap();
        assert!(matches!(
            refute_dynamic(&lg, &full),
            Err(Error::TooManyColours { used: 4, limit: 3 })
        ));
    }

    #[test]
    fn tampered_dynamic_certificate_is_rejected() {
        let lg = standard(2, 2, 2);
        let col = witness_proper(&lg);
        let good = refute_dynamic(&lg, &col).unwrap();

        let mut wrong_vertex = good.clone();
        wrong_vertex.starved += 1;
        assert!(wrong_vertex.verify(&lg, &col).is_err());

        let mut wrong_pool = good.clone();
        wrong_pool.pool = vec![2];
        assert!(wrong_pool.verify(&lg, &col).is_err());

        let mut wrong_blocks = good;
        wrong_blocks.blocks = vec![1, 3];
        assert!(wrong_blocks.verify(&lg, &col).is_err());
    }

    #[test]
    fn full_dominating_set_yields_a_clique() {
        let lg = instance(2, 3, 7);
        assert!(lg.params().domination_ok());
        let d = witness_total_dominating(&lg);
        match refute_domination(&lg, &d).unwrap() {
            DominationOutcome::CliqueWitness { block, members } => {
                assert_eq!(block, 1);
                assert_eq!(members.len(), 3);
            }
            other => panic!("expected a clique, got {other:?}"),
        }
    }

    #[test]
    fn sparse_set_is_undominated() {
        let lg = instance(2, 3, 7);
        // Members only in part 1 of blocks 1 and 2: part 1 still misses
        // five blocks, so a part-1 selector over three of them is exposed.
        let mut d = VertexSet::new();
        d.insert(lg.part_index(1, 1, 1).unwrap());
        d.insert(lg.part_index(1, 1, 2).unwrap());
        match refute_domination(&lg, &d).unwrap() {
            DominationOutcome::Undominated {
                selector,
                part,
                blocks,
            } => {
                assert_eq!(part, 1);
                assert_eq!(blocks, vec![3, 4, 5]);
                assert_eq!(
                    selector,
                    lg.selector_index(1, &[3, 4, 5]).unwrap()
                );
            }
            other => panic!("expected an undominated selector, got {other:?}"),
        }
    }

    #[test]
    fn clique_takes_precedence_over_undominated() {
        let lg = instance(2, 3, 7);
        // One full block and nothing else: both arguments apply; the
        // clique is reported.
        let mut d = VertexSet::new();
        for part in 1..=3 {
            d.insert(lg.part_index(part, 1, 1).unwrap());
        }
        match refute_domination(&lg, &d).unwrap() {
            DominationOutcome::CliqueWitness { block, .. } => assert_eq!(block, 1),
            other => panic!("expected a clique, got {other:?}"),
        }
    }

    #[test]
    fn small_m_can_evade_both_arguments() {
        // n = 3, m = 5 <= (n-1) n = 6: hit parts in a pattern leaving no
        // full block and at most two empty blocks per part.
        let lg = instance(2, 3, 5);
        assert!(!lg.params().domination_ok());
        let mut d = VertexSet::new();
        // Part 1 hits blocks 1..=3, part 2 hits 3..=5, part 3 hits
        // {1, 2, 4, 5}: no block is hit in all three parts, and every part
        // misses at most two blocks, below the n = 3 a selector needs.
        for b in [1, 2, 3] {
            d.insert(lg.part_index(1, 1, b).unwrap());
        }
        for b in [3, 4, 5] {
            d.insert(lg.part_index(2, 1, b).unwrap());
        }
        for b in [1, 2, 4, 5] {
            d.insert(lg.part_index(3, 1, b).unwrap());
        }
        match refute_domination(&lg, &d) {
            Err(Error::NoWitnessFound { histogram, .. }) => {
                let counts: Vec<u32> = histogram.iter().map(|b| b.count).collect();
                assert_eq!(counts, vec![2, 2, 1]);
            }
            other => panic!("expected a miss, got {other:?}"),
        }
    }

    #[test]
    fn tampered_domination_certificates_are_rejected() {
        let lg = instance(2, 3, 7);
        let d = witness_total_dominating(&lg);
        let outcome = refute_domination(&lg, &d).unwrap();
        if let DominationOutcome::CliqueWitness { block, members } = outcome {
            let mut repeated = members.clone();
            repeated[1] = repeated[0];
            let bad = DominationOutcome::CliqueWitness {
                block,
                members: repeated,
            };
            assert!(bad.verify(&lg, &d).is_err());

            let bad_block = DominationOutcome::CliqueWitness {
                block: block + 1,
                members,
            };
            assert!(bad_block.verify(&lg, &d).is_err());
        } else {
            panic!("expected a clique");
        }

        let sparse: VertexSet = [lg.part_index(1, 1, 1).unwrap()].into_iter().collect();
        if let DominationOutcome::Undominated {
            selector,
            part,
            blocks,
        } = refute_domination(&lg, &sparse).unwrap()
        {
            // Claiming a different selector index must fail.
            let bad = DominationOutcome::Undominated {
                selector: selector + 1,
                part,
                blocks,
            };
            assert!(bad.verify(&lg, &sparse).is_err());
        } else {
            panic!("expected an undominated selector");
        }
    }
}
