//! Seeded instance families for the acceptance criteria.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::generators::{derive_seed, kneser, named, Sequence};
use crate::graph::{CycleCertificate, Graph};
use crate::rotation::ChordedCycle;

/// `G(n, p)` with edges drawn in lexicographic order from a ChaCha8 stream.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

/// A named corpus graph.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

/// `K_t` (t ≤ 7), `K_{d,d}` (d ≤ 5), `C_n` (n ≤ 12) and the Petersen graph.
pub fn named_graphs() -> Vec<Instance> {
    let mut out = Vec::new();
    for t in 1..=7 {
        out.push(Instance { name: format!("K{t}"), graph: named::complete(t) });
    }
    for d in 1..=5 {
        out.push(Instance { name: format!("K{d},{d}"), graph: named::complete_bipartite(d) });
    }
    for n in 3..=12 {
        out.push(Instance { name: format!("C{n}"), graph: named::cycle(n) });
    }
    out.push(Instance { name: "petersen".into(), graph: named::petersen() });
    out
}

/// `count` graphs on 1 to 10 vertices with edge probability in `[0.15, 0.85]`.
pub fn random_small_graphs(master: u64, count: usize) -> Vec<Instance> {
    (0..count)
        .map(|i| {
            let seed = derive_seed(master, i as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.15..0.85);
            Instance {
                name: format!("gnp-{i}"),
                graph: random_gnp(n, p, rng.gen()),
            }
        })
        .collect()
}

/// The Kneser graphs `K_{5:2}`, `K_{6:2}`, the named graphs and the random small graphs.
pub fn theorem_corpus(master: u64, random: usize) -> Result<Vec<Instance>> {
    let mut out = vec![
        Instance { name: "kneser(5,2)".into(), graph: kneser(5, 2)? },
        Instance { name: "kneser(6,2)".into(), graph: kneser(6, 2)? },
    ];
    out.extend(named_graphs());
    out.extend(random_small_graphs(master, random));
    Ok(out)
}

/// A host with a chorded odd cycle planted in layer `layer` around vertex 0.
#[derive(Clone, Debug)]
pub struct PlantedHost {
    pub graph: Graph,
    pub root: usize,
    pub layer: usize,
    pub f: ChordedCycle,
}

/// Vertex 0 is the root; layers `1..layer` hold one to three tree vertices
/// each, and the `F` vertices sit in layer `layer`, each joined to one or
/// two vertices of the previous layer. `F` is a diamond, an odd cycle with a
/// chord, or an even cycle with a chord at even distance.
pub fn planted_host(seed: u64, layer: usize) -> Result<PlantedHost> {
    assert!(layer >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut prev = vec![0usize];
    let mut next_id = 1;
    for _ in 1..layer {
        let width = rng.gen_range(1..=3);
        let level: Vec<usize> = (next_id..next_id + width).collect();
        next_id += width;
        for &v in &level {
            edges.push((prev[rng.gen_range(0..prev.len())], v));
        }
        prev = level;
    }
    let len = [4usize, 5, 6, 7, 8][rng.gen_range(0..5)];
    let cycle: Vec<usize> = (next_id..next_id + len).collect();
    let n = next_id + len;
    for i in 0..len {
        edges.push((cycle[i], cycle[(i + 1) % len]));
    }
    let chords: Vec<(usize, usize)> = (0..len)
        .flat_map(|i| (i + 2..len).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 0 && j == len - 1))
        .filter(|&(i, j)| len % 2 == 1 || (j - i) % 2 == 0)
        .collect();
    let (ci, cj) = chords[rng.gen_range(0..chords.len())];
    edges.push((cycle[ci], cycle[cj]));
    for &v in &cycle {
        let a = prev[rng.gen_range(0..prev.len())];
        edges.push((a, v));
        if prev.len() > 1 && rng.gen_bool(0.3) {
            let b = prev[rng.gen_range(0..prev.len())];
            if b != a {
                edges.push((b, v));
            }
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    let graph = Graph::from_edges(n, edges)?;
    let c = CycleCertificate::new(&graph, cycle.clone())?;
    let f = ChordedCycle::new(&graph, c, (cycle[ci], cycle[cj]))?;
    Ok(PlantedHost { graph, root: 0, layer, f })
}

/// A random admissible sequence of 8 to 40 terms and a `τ` subsequence
/// starting at its first term.
pub fn random_sequence_spec(seed: u64) -> (Sequence, Vec<u64>, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = vec![rng.gen_range(3u64..=12)];
    let terms = rng.gen_range(8..=40);
    while values.len() < terms {
        let last = *values.last().unwrap();
        let cap = ((last as f64).exp().floor() as u64).min(last.saturating_mul(4)).max(last + 1);
        values.push(rng.gen_range(last + 1..=cap));
    }
    let mut tau = vec![values[0]];
    let mut i = 0;
    while tau.len() < 4 {
        let step = rng.gen_range(1..=10);
        if i + step >= values.len() {
            break;
        }
        i += step;
        tau.push(values[i]);
    }
    let n = rng.gen_range(10u64..=1_000_000_000);
    let sigma = Sequence::explicit(values).expect("terms respect ln s[r] <= s[r-1]");
    (sigma, tau, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bfs_distances;

    #[test]
    fn planted_layer_is_exact() {
        for seed in 0..30 {
            let layer = 1 + seed as usize % 3;
            let h = planted_host(seed, layer).unwrap();
            let d = bfs_distances(&h.graph, h.root).unwrap();
            for &v in h.f.cycle.vertices() {
                assert_eq!(d[v], Some(layer));
            }
        }
    }

    #[test]
    fn sequences_are_admissible() {
        for seed in 0..50 {
            let (sigma, tau, _) = random_sequence_spec(seed);
            assert_eq!(tau[0], sigma.first());
        }
    }

    #[test]
    fn gnp_is_reproducible() {
        assert_eq!(random_gnp(9, 0.5, 3), random_gnp(9, 0.5, 3));
        assert_eq!(random_gnp(6, 1.0, 1), named::complete(6));
    }
}
