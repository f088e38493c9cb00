mod common;

use cyclespec::expansion::peel_to_expander;
use cyclespec::generators::{kneser, random_triangle_free};
use cyclespec::graph::io::{parse_edge_list_json, parse_graph6, to_edge_list_json, to_graph6};
use cyclespec::graph::{is_bipartite, is_clique_free};
use cyclespec::independence::{alpha, iota, is_independent};
use cyclespec::rotation::{
    longest_path, posa_long_cycle, rotation_closure, theta_subgraph, ChordedCycle, PosaOutcome, ThetaCase,
    ThetaOutcome,
};
use cyclespec::spectrum::{
    cycle_spectrum, cycle_spectrum_with, l_and_l_odd, paths_all_lengths, ramsey_binomial_check, speed_function_ks,
};
use cyclespec::expansion::SpeedFunction;
use cyclespec::{CycleCertificate, Graph, VertexSet};
use num_rational::Rational64;
use proptest::prelude::*;

/// Graphs on `1..=max_n` vertices from an arbitrary edge mask.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A cycle `0..len` with one chord that makes it non-bipartite.
fn chorded_cycle() -> impl Strategy<Value = (Graph, ChordedCycle)> {
    (4usize..=10)
        .prop_flat_map(|len| (Just(len), 0..len, 2..len))
        .prop_filter_map("chord must be non-bipartite", |(len, i, off)| {
            let j = (i + off) % len;
            let (a, b) = (i.min(j), i.max(j));
            if b - a < 2 || (a == 0 && b == len - 1) || (len % 2 == 0 && (b - a) % 2 == 1) {
                return None;
            }
            let mut edges: Vec<(usize, usize)> = (0..len).map(|k| (k.min((k + 1) % len), k.max((k + 1) % len))).collect();
            edges.push((a, b));
            let g = Graph::from_edges(len, edges).unwrap();
            let f = ChordedCycle::new(&g, CycleCertificate::new(&g, (0..len).collect()).unwrap(), (a, b)).unwrap();
            Some((g, f))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn spectrum_matches_edge_subset_oracle(g in graph(7).prop_filter("sparse", |g| g.edge_count() <= 14)) {
        let spec = cycle_spectrum(&g);
        prop_assert!(spec.validate(&g).is_ok());
        prop_assert_eq!(spec.lengths, common::edge_subset_cycle_lengths(&g));
    }

    #[test]
    fn budgeted_search_agrees_with_exact(g in graph(9)) {
        let exact = cycle_spectrum(&g);
        let searched = cycle_spectrum_with(&g, 0, 5_000_000);
        prop_assert!(searched.validate(&g).is_ok());
        if searched.is_exact() {
            prop_assert_eq!(&searched.lengths, &exact.lengths);
        } else {
            prop_assert!(searched.lengths.iter().all(|l| exact.lengths.contains(l)));
        }
    }

    #[test]
    fn reciprocal_sums_are_ordered(g in graph(9)) {
        let sums = l_and_l_odd(&cycle_spectrum(&g));
        prop_assert!(sums.l_odd <= sums.l);
        if is_bipartite(&g) {
            prop_assert_eq!(sums.l_odd, num_rational::BigRational::from_integer(0.into()));
        }
    }

    #[test]
    fn alpha_and_iota_match_naive(g in graph(9)) {
        let a = alpha(&g);
        prop_assert!(is_independent(&g, &a.witness));
        prop_assert_eq!(a.value, common::naive_alpha(&g));
        let i = iota(&g).unwrap();
        prop_assert_eq!(i.value, common::naive_iota(&g));
        prop_assert!(i.value >= Rational64::new(g.n() as i64, a.value as i64));
    }

    #[test]
    fn rotation_replays_are_sound(g in graph(9)) {
        if let Some(lp) = longest_path(&g, 18, 4).unwrap() {
            let state = rotation_closure(&g, &lp.path).unwrap();
            prop_assert!(state.boundary_law_holds(&g).unwrap());
            for e in state.endpoints.iter() {
                let p = state.replay(&g, e).unwrap();
                prop_assert!(p.validate(&g).is_ok());
                prop_assert_eq!(p.len(), lp.path.len());
                prop_assert_eq!(p.last(), lp.path.last());
                prop_assert_eq!(p.first(), e);
            }
        }
    }

    #[test]
    fn posa_cycle_covers_closure(g in graph(9)) {
        match posa_long_cycle(&g).unwrap() {
            PosaOutcome::NoCycle => prop_assert!(g.edge_count() + cyclespec::graph::components(&g).len() <= g.n()),
            PosaOutcome::Cycle(r) => {
                prop_assert!(r.cycle.validate(&g).is_ok());
                prop_assert!(r.boundary_law_holds);
                if r.construction == cyclespec::rotation::CycleConstruction::Rotation {
                    prop_assert!(r.covers_closure);
                }
            }
        }
    }

    #[test]
    fn theta_outputs_validate(g in graph(10)) {
        if let ThetaOutcome::Constructed(rep) = theta_subgraph(&g, Rational64::from_integer(1)).unwrap() {
            prop_assert!(rep.long_cycle.validate(&g).is_ok());
            if let ThetaCase::Found(c) = rep.case {
                prop_assert!(c.chorded.validate(&g).is_ok());
                prop_assert!(!c.chorded.cycle.consecutive(c.chorded.chord.0, c.chorded.chord.1));
                prop_assert_eq!(c.chorded.odd_witness.len() % 2, 1);
            }
        }
    }

    #[test]
    fn chorded_cycles_have_every_path_length((g, f) in chorded_cycle(), mask in any::<u64>()) {
        let n = g.n();
        let bits = mask % ((1u64 << n) - 2) + 1;
        let a = VertexSet::from_mask(n, bits);
        let b = a.complement();
        let paths = paths_all_lengths(&g, &f, &a, &b).unwrap();
        prop_assert_eq!(paths.len(), n - 1);
        for (i, p) in paths.iter().enumerate() {
            prop_assert_eq!(p.len(), i + 1);
            prop_assert!(a.contains(p.first()) && b.contains(p.last()));
        }
    }

    #[test]
    fn peeling_partitions_vertices(g in graph(12), kn in 1i64..=6, kd in 1i64..=2) {
        let k = Rational64::new(kn, kd);
        let r = peel_to_expander(&g, k).unwrap();
        prop_assert!(r.trace.is_partition(g.n()));
        match &r.independent_set {
            Some(i) => {
                prop_assert!(is_independent(&g, i));
                prop_assert!(Rational64::from_integer(i.len() as i64) * (k + 1) >= Rational64::from_integer(g.n() as i64));
            }
            None => prop_assert!(r.certificate.is_some()),
        }
    }

    #[test]
    fn graph_formats_round_trip(g in graph(20)) {
        prop_assert_eq!(&parse_graph6(to_graph6(&g).as_bytes()).unwrap(), &g);
        prop_assert_eq!(&parse_edge_list_json(to_edge_list_json(&g).as_bytes()).unwrap(), &g);
    }

    #[test]
    fn triangle_free_process_is_triangle_free(n in 1usize..30, budget in 0u64..600, seed in any::<u64>()) {
        let g = random_triangle_free(n, budget, seed);
        prop_assert!(is_clique_free(&g, 3).unwrap().clique_free);
        prop_assert_eq!(g, random_triangle_free(n, budget, seed));
    }

    #[test]
    fn clique_free_speed_inverts(s in 2u32..6, x in 0.5f64..1e4) {
        let f = speed_function_ks(s).unwrap();
        let y = f.apply(x);
        prop_assert!((f.inverse(y) - x).abs() <= 1e-9 * x.max(1.0));
        prop_assert!(f.apply(x * 1.01) > y);
    }

    #[test]
    fn ramsey_search_always_succeeds(g in graph(10).prop_filter("six or more vertices", |g| g.n() >= 6)) {
        let r = ramsey_binomial_check(2, 2, &g).unwrap();
        prop_assert_eq!(r.n, g.n());
    }
}

#[test]
fn kneser_regular_with_expected_alpha() {
    for (n, r) in [(5usize, 2usize), (6, 2), (7, 2), (7, 3), (8, 3)] {
        let g = kneser(n, r).unwrap();
        let binom = |a: usize, b: usize| (0..b).fold(1usize, |acc, i| acc * (a - i) / (i + 1));
        assert!((0..g.n()).all(|v| g.degree(v) == binom(n - r, r)));
        assert_eq!(alpha(&g).value, binom(n - 1, r - 1));
    }
}
