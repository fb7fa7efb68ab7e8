//! Construction fidelity against independently derived size accounting.
//!
//! Expected values below were computed by hand from the definitions
//! before the construction code existed: m = max(C(rn-1, r-1) * n^2,
//! delta), N = C(m-1, n-1), |V| = n N m + n C(m, n), degree n N, and
//! |E| = |V| n N / 2.

use dyncol_core::{build, Budget, ConstructionParams, Error, VertexLabel};

#[test]
fn standard_2_2_2_sizes() {
    // C(3,1) = 3, m = max(3 * 4, 2) = 12, N = C(11,1) = 11.
    let p = ConstructionParams::standard(2, 2, 2, &Budget::default()).unwrap();
    assert_eq!(p.m(), 12);
    assert_eq!(p.big_n(), 11);
    assert_eq!(p.degree(), 22);
    assert_eq!(p.part_vertex_count(), 264);
    assert_eq!(p.selector_count(), 132); // 2 * C(12, 2) = 2 * 66
    assert_eq!(p.vertex_count(), 396);
    assert_eq!(p.edge_count(), 4356);
    assert!(p.pigeonhole_ok());
    assert!(p.domination_ok());

    let lg = build(&p).unwrap();
    assert_eq!(lg.graph().vertex_count(), 396);
    assert_eq!(lg.graph().edge_count(), 4356);
    assert_eq!(lg.graph().regular_degree(), Some(22));
    lg.graph().audit().unwrap();
}

#[test]
fn standard_3_2_2_sizes() {
    // C(5,2) = 10, m = 40, N = C(39,1) = 39.
    let p = ConstructionParams::standard(3, 2, 2, &Budget::default()).unwrap();
    assert_eq!(p.m(), 40);
    assert_eq!(p.big_n(), 39);
    assert_eq!(p.degree(), 78);
    assert_eq!(p.vertex_count(), 4680); // 2*39*40 + 2*C(40,2) = 3120 + 1560
    assert_eq!(p.edge_count(), 182_520);
    assert!(p.pigeonhole_ok());

    let lg = build(&p).unwrap();
    assert_eq!(lg.graph().regular_degree(), Some(78));
    assert_eq!(lg.graph().edge_count(), 182_520);
}

#[test]
fn standard_2_3_2_sizes_without_building() {
    // C(5,1) = 5, m = 45, N = C(44,2) = 946.
    let p = ConstructionParams::standard(2, 3, 2, &Budget::default()).unwrap();
    assert_eq!(p.m(), 45);
    assert_eq!(p.big_n(), 946);
    assert_eq!(p.degree(), 2838);
    assert_eq!(p.vertex_count(), 170_280); // 3*946*45 + 3*C(45,3) = 127710 + 42570
    assert_eq!(p.edge_count(), 241_627_320);
    assert!(p.pigeonhole_ok());
    assert!(p.domination_ok());
}

#[test]
fn standard_3_3_2_exceeds_the_default_budget() {
    // C(8,2) = 28, m = 252, N = C(251,2) = 31375: about 31.6 million
    // vertices, far over the default guard.
    match ConstructionParams::standard(3, 3, 2, &Budget::default()) {
        Err(Error::Capacity {
            quantity, value, ..
        }) => {
            assert_eq!(quantity, "vertex count");
            assert_eq!(value, 31_626_000);
        }
        other => panic!("expected a capacity refusal, got {other:?}"),
    }
    // A raised budget accepts the same parameters.
    let roomy = Budget {
        max_vertices: 50_000_000,
        max_edges: u64::MAX,
    };
    let p = ConstructionParams::standard(3, 3, 2, &roomy).unwrap();
    assert_eq!(p.vertex_count(), 31_626_000);
}

#[test]
fn large_delta_drives_m() {
    // Once delta exceeds C(rn-1, r-1) n^2, it becomes m itself.
    let p = ConstructionParams::standard(2, 2, 100, &Budget::default()).unwrap();
    assert_eq!(p.m(), 100);
    assert_eq!(p.delta(), Some(100));
    assert!(p.degree() > 100);
}

#[test]
fn smallest_member_is_the_six_cycle() {
    let p = ConstructionParams::with_explicit_m(2, 2, 2, &Budget::default()).unwrap();
    assert_eq!(p.big_n(), 1);
    assert_eq!(p.vertex_count(), 6);
    assert_eq!(p.edge_count(), 6);
    let lg = build(&p).unwrap();
    let edges: Vec<(u32, u32)> = lg.graph().edges().collect();
    // Blocks contribute 0-1 and 2-3; selectors close the cycle
    // 0-1-5-3-2-4-0.
    assert_eq!(edges, vec![(0, 1), (0, 4), (1, 5), (2, 3), (2, 4), (3, 5)]);
    assert_eq!(lg.graph().regular_degree(), Some(2));
}

#[test]
fn explicit_2_3_7_sizes_and_thresholds() {
    let p = ConstructionParams::with_explicit_m(2, 3, 7, &Budget::default()).unwrap();
    assert_eq!(p.big_n(), 15); // C(6,2)
    assert_eq!(p.vertex_count(), 420); // 3*15*7 + 3*C(7,3) = 315 + 105
    assert_eq!(p.degree(), 45);
    assert_eq!(p.edge_count(), 9450);
    assert!(p.domination_ok()); // 7 > (3-1)*3
    assert!(!p.pigeonhole_ok()); // 7 <= (3-1)*3*C(5,1) = 30

    let lg = build(&p).unwrap();
    assert_eq!(lg.graph().regular_degree(), Some(45));
}

#[test]
fn pinned_canonical_indices_on_2_3_7() {
    let p = ConstructionParams::with_explicit_m(2, 3, 7, &Budget::default()).unwrap();
    let lg = build(&p).unwrap();
    // Part vertices order by (block, part, row) with N = 15 per row.
    assert_eq!(lg.part_index(1, 1, 1).unwrap(), 0);
    assert_eq!(lg.part_index(3, 15, 1).unwrap(), 44);
    assert_eq!(lg.part_index(1, 1, 2).unwrap(), 45);
    // Selector base 315; part 2 selectors start at 315 + 35; the set
    // {1,3,7} has colex rank C(0,1) + C(2,2) + C(6,3) = 0 + 1 + 20 = 21.
    assert_eq!(lg.selector_index(1, &[1, 2, 3]).unwrap(), 315);
    assert_eq!(
        lg.selector_index(2, &[1, 3, 7]).unwrap(),
        315 + 35 + 21
    );
    assert_eq!(
        lg.label_of(371).unwrap(),
        VertexLabel::Selector {
            part: 2,
            blocks: vec![1, 3, 7]
        }
    );
}

#[test]
fn adjacency_matches_the_definition_point_wise() {
    let p = ConstructionParams::with_explicit_m(2, 3, 5, &Budget::default()).unwrap();
    let lg = build(&p).unwrap();
    let g = lg.graph();
    for u in 0..g.vertex_count() as u32 {
        for v in u + 1..g.vertex_count() as u32 {
            let expected = match (lg.label_of(u).unwrap(), lg.label_of(v).unwrap()) {
                (
                    VertexLabel::Part {
                        part: p1, block: k1, ..
                    },
                    VertexLabel::Part {
                        part: p2, block: k2, ..
                    },
                ) => k1 == k2 && p1 != p2,
                (
                    VertexLabel::Part { part: pp, block, .. },
                    VertexLabel::Selector { part: sp, blocks },
                )
                | (
                    VertexLabel::Selector { part: sp, blocks },
                    VertexLabel::Part { part: pp, block, .. },
                ) => pp == sp && blocks.contains(&block),
                (VertexLabel::Selector { .. }, VertexLabel::Selector { .. }) => false,
            };
            assert_eq!(
                g.has_edge(u, v),
                expected,
                "adjacency of {} and {}",
                lg.label_of(u).unwrap(),
                lg.label_of(v).unwrap()
            );
        }
    }
}

#[test]
fn builds_are_deterministic() {
    let p = ConstructionParams::with_explicit_m(2, 2, 4, &Budget::default()).unwrap();
    let a = build(&p).unwrap();
    let b = build(&p).unwrap();
    assert_eq!(a.graph(), b.graph());
    let labels_a: Vec<_> = a.labels().collect();
    let labels_b: Vec<_> = b.labels().collect();
    assert_eq!(labels_a, labels_b);
}

#[test]
fn degree_exceeds_delta_on_standard_instances() {
    for (r, n, delta) in [(2, 2, 2), (2, 2, 50), (3, 2, 10), (2, 3, 2)] {
        let p = ConstructionParams::standard(r, n, delta, &Budget::default()).unwrap();
        assert!(
            p.degree() > delta,
            "degree {} vs delta {delta} at r={r} n={n}",
            p.degree()
        );
    }
}
