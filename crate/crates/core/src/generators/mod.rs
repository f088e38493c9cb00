//! Graph families used as examples and corpora, plus admissible sequences.

pub mod named;
mod sequences;

pub use sequences::{is_prime, Sequence};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{chromatic_number_with_limit, odd_girth, Graph, VertexSet, DEFAULT_CHI_LIMIT};

/// Largest vertex count any generator will produce.
pub const GRAPH_SIZE_CAP: usize = 4096;

fn check_cap(what: &'static str, size: usize) -> Result<()> {
    if size > GRAPH_SIZE_CAP {
        return Err(Error::SizeLimit {
            what,
            size,
            limit: GRAPH_SIZE_CAP,
        });
    }
    Ok(())
}

/// A reproducible description of a generated graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    Kneser { n: usize, r: usize },
    Mycielski { base: Box<GeneratorSpec>, iterations: usize },
    GeneralizedMycielski { base: Box<GeneratorSpec>, levels: usize },
    Gkr { k: usize, r: usize },
    Complete { t: usize },
    CompleteBipartite { d: usize },
    Cycle { n: usize },
    Path { n: usize },
    Petersen,
    RandomTriangleFree { n: usize, edge_budget: u64, seed: u64 },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GeneratorSpec::Kneser { n, r } => kneser(*n, *r),
            GeneratorSpec::Mycielski { base, iterations } => {
                let mut g = base.build()?;
                for _ in 0..*iterations {
                    check_cap("mycielskian", 2 * g.n() + 1)?;
                    g = mycielski(&g);
                }
                Ok(g)
            }
            GeneratorSpec::GeneralizedMycielski { base, levels } => {
                generalized_mycielski(&base.build()?, *levels)
            }
            GeneratorSpec::Gkr { k, r } => g_kr(*k, *r).map(|(g, _)| g),
            GeneratorSpec::Complete { t } => {
                check_cap("complete graph", *t)?;
                Ok(named::complete(*t))
            }
            GeneratorSpec::CompleteBipartite { d } => {
                check_cap("complete bipartite graph", 2 * d)?;
                Ok(named::complete_bipartite(*d))
            }
            GeneratorSpec::Cycle { n } => {
                if *n < 3 {
                    return Err(Error::domain("a cycle needs at least three vertices"));
                }
                check_cap("cycle", *n)?;
                Ok(named::cycle(*n))
            }
            GeneratorSpec::Path { n } => {
                check_cap("path", *n)?;
                Ok(named::path(*n))
            }
            GeneratorSpec::Petersen => Ok(named::petersen()),
            GeneratorSpec::RandomTriangleFree { n, edge_budget, seed } => {
                check_cap("random triangle-free graph", *n)?;
                Ok(random_triangle_free(*n, *edge_budget, *seed))
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    let k = k.min(n.saturating_sub(k));
    (0..k).try_fold(1usize, |acc, i| acc.checked_mul(n - i).map(|x| x / (i + 1)))
}

/// Kneser graph `K_{n:r}`: `r`-subsets of `{1..n}` in colexicographic order,
/// adjacent when disjoint. Labels are the subsets, e.g. `{1,2}`.
pub fn kneser(n: usize, r: usize) -> Result<Graph> {
    if r == 0 || n < 2 * r {
        return Err(Error::domain(format!("kneser graph needs n >= 2r >= 2, got n={n}, r={r}")));
    }
    let count = binomial(n, r).unwrap_or(usize::MAX);
    check_cap("kneser graph", count)?;
    if n > 64 {
        return Err(Error::SizeLimit {
            what: "kneser ground set",
            size: n,
            limit: 64,
        });
    }
    // Colex order on masks is plain numeric order.
    let mut subsets: Vec<u64> = Vec::with_capacity(count);
    let mut mask: u64 = (1u64 << r) - 1;
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    loop {
        subsets.push(mask);
        // Gosper's hack: next mask with the same popcount.
        let c = mask & mask.wrapping_neg();
        let Some(next) = mask.checked_add(c) else { break };
        let next = (((next ^ mask) >> 2) / c) | next;
        if next > limit || next.count_ones() as usize != r {
            break;
        }
        mask = next;
    }
    let edges: Vec<(usize, usize)> = (0..subsets.len())
        .flat_map(|i| {
            let subsets = &subsets;
            (i + 1..subsets.len())
                .filter(move |&j| subsets[i] & subsets[j] == 0)
                .map(move |j| (i, j))
        })
        .collect();
    let labels = subsets
        .iter()
        .map(|&m| {
            let items: Vec<String> = (0..n).filter(|b| m >> b & 1 == 1).map(|b| (b + 1).to_string()).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    Graph::from_edges_lenient(subsets.len(), edges).with_labels(labels)
}

/// The Mycielskian: originals `0..n`, shadows `n..2n` (shadow of `u` is
/// adjacent to the original neighbors of `u`), apex `2n` adjacent to all shadows.
pub fn mycielski(g: &Graph) -> Graph {
    generalized_mycielski(g, 1).expect("one level is always valid")
}

/// Level-`m` generalized Mycielskian: layers `0..=m` of copies of `V(G)`
/// plus an apex. Layer 0 carries the edges of `G`; `(u, i) ~ (v, i + 1)` for
/// every edge `uv`; the apex is adjacent to all of layer `m`. Vertex `(v, i)`
/// has id `i * n + v` and the apex is last. If `G` has odd girth `g`, the
/// result has odd girth `min(g, 2m + 3)`.
pub fn generalized_mycielski(g: &Graph, levels: usize) -> Result<Graph> {
    if levels == 0 {
        return Err(Error::domain("generalized mycielskian needs at least one level"));
    }
    let n = g.n();
    let size = n
        .checked_mul(levels + 1)
        .and_then(|x| x.checked_add(1))
        .unwrap_or(usize::MAX);
    check_cap("generalized mycielskian", size)?;
    let apex = (levels + 1) * n;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..levels {
        for (u, v) in g.edges() {
            edges.push((i * n + u, (i + 1) * n + v));
            edges.push((i * n + v, (i + 1) * n + u));
        }
    }
    edges.extend((0..n).map(|v| (levels * n + v, apex)));
    Ok(Graph::from_edges_lenient(size, edges))
}

/// What `g_kr` built and how it compares with the closed-form size
/// `2^(3-k) (r+2)^(k-2)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GkrReport {
    pub k: usize,
    pub r: usize,
    /// Levels used by each generalized Mycielskian step.
    pub levels: usize,
    pub vertices: usize,
    pub formula_size: f64,
    pub formula_is_integer: bool,
    pub matches_formula: bool,
    /// Exact chromatic number when within the exact limit.
    pub chromatic_number: Option<usize>,
    /// Shortest odd cycle length, `None` for bipartite output.
    pub odd_girth: Option<usize>,
    /// `chromatic_number == k` and no odd cycle of length `<= r`.
    pub verified: Option<bool>,
}

/// Starts from `C_{r+2}` (chromatic number 3) and applies the
/// level-`(r+1)/2` generalized Mycielskian `k - 3` times.
pub fn g_kr(k: usize, r: usize) -> Result<(Graph, GkrReport)> {
    g_kr_with_chi_limit(k, r, DEFAULT_CHI_LIMIT)
}

pub fn g_kr_with_chi_limit(k: usize, r: usize, chi_limit: usize) -> Result<(Graph, GkrReport)> {
    if k < 3 {
        return Err(Error::domain(format!("k must be at least 3, got {k}")));
    }
    if r < 3 || r % 2 == 0 {
        return Err(Error::domain(format!("r must be odd and at least 3, got {r}")));
    }
    let levels = r.div_ceil(2);
    let formula_size = 2f64.powi(3 - k as i32) * ((r + 2) as f64).powi(k as i32 - 2);
    let mut predicted = r + 2;
    for _ in 3..k {
        predicted = predicted.saturating_mul(levels + 1).saturating_add(1);
        if predicted > GRAPH_SIZE_CAP {
            return Err(Error::SizeLimit {
                what: "g_kr construction (formula predicts a comparable size)",
                size: predicted,
                limit: GRAPH_SIZE_CAP,
            });
        }
    }
    let mut g = named::cycle(r + 2);
    for _ in 3..k {
        g = generalized_mycielski(&g, levels)?;
    }
    let chromatic = if g.n() <= chi_limit {
        Some(chromatic_number_with_limit(&g, chi_limit)?.chromatic_number)
    } else {
        None
    };
    let girth = odd_girth(&g).map(|c| c.len());
    let verified = chromatic.map(|chi| chi == k && girth.is_none_or(|l| l > r));
    let report = GkrReport {
        k,
        r,
        levels,
        vertices: g.n(),
        formula_size,
        formula_is_integer: formula_size.fract() == 0.0,
        matches_formula: formula_size == g.n() as f64,
        chromatic_number: chromatic,
        odd_girth: girth,
        verified,
    };
    Ok((g, report))
}

/// Triangle-free process: `edge_budget` times, pick a uniformly random
/// current non-edge and add it unless it closes a triangle.
pub fn random_triangle_free(n: usize, edge_budget: u64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![VertexSet::new(n); n];
    let mut non_edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut edges = Vec::new();
    for _ in 0..edge_budget {
        if non_edges.is_empty() {
            break;
        }
        let i = rng.gen_range(0..non_edges.len());
        let (u, v) = non_edges[i];
        if rows[u].is_disjoint(&rows[v]) {
            non_edges.swap_remove(i);
            rows[u].insert(v);
            rows[v].insert(u);
            edges.push((u, v));
        }
    }
    edges.sort_unstable();
    Graph::from_edges_lenient(n, edges)
}

/// Per-instance seed derived from a master seed (splitmix64 finalizer).
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{chromatic_number, is_clique_free};

    #[test]
    fn kneser_basics() {
        let p = kneser(5, 2).unwrap();
        assert_eq!(p.n(), 10);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(odd_girth(&p).unwrap().len(), 5);
        assert_eq!(&p.labels().unwrap()[..4], ["{1,2}", "{1,3}", "{2,3}", "{1,4}"]);

        let m = kneser(6, 3).unwrap();
        assert_eq!(m.n(), 20);
        assert!((0..20).all(|v| m.degree(v) == 1));

        let k62 = kneser(6, 2).unwrap();
        assert_eq!(k62.n(), 15);
        assert!((0..15).all(|v| k62.degree(v) == 6));
        assert!(kneser(3, 2).is_err());
    }

    #[test]
    fn mycielski_examples() {
        let c5 = mycielski(&named::complete(2));
        assert_eq!(c5.n(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(c5.is_connected());

        let grotzsch = mycielski(&named::cycle(5));
        assert_eq!(grotzsch.n(), 11);
        assert!(is_clique_free(&grotzsch, 3).unwrap().clique_free);
        assert_eq!(chromatic_number(&grotzsch).unwrap().chromatic_number, 4);

        let p3 = mycielski(&Graph::empty(1));
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edge_count(), 1);
        assert_eq!(chromatic_number(&p3).unwrap().chromatic_number, 2);
    }

    #[test]
    fn generalized_levels() {
        let base = named::cycle(5);
        assert_eq!(generalized_mycielski(&base, 1).unwrap(), mycielski(&base));
        // The base copy keeps its 5-cycle, so odd girth stays 5 while every
        // new odd cycle through the apex has length at least 2m + 3.
        let m2 = generalized_mycielski(&base, 2).unwrap();
        assert_eq!(odd_girth(&m2).unwrap().len(), 5);
        let m3 = generalized_mycielski(&named::cycle(7), 3).unwrap();
        assert!(is_clique_free(&m3, 3).unwrap().clique_free);
        assert_eq!(odd_girth(&m3).unwrap().len(), 7);
        assert_eq!(chromatic_number(&m3).unwrap().chromatic_number, 4);
        let m2_c9 = generalized_mycielski(&named::cycle(9), 2).unwrap();
        assert_eq!(odd_girth(&m2_c9).unwrap().len(), 7);
    }

    #[test]
    fn gkr_small_cases() {
        let (g, rep) = g_kr(3, 5).unwrap();
        assert_eq!(g, named::cycle(7));
        assert!(rep.matches_formula);
        assert_eq!(rep.verified, Some(true));

        let (g, rep) = g_kr(4, 3).unwrap();
        assert_eq!(g.n(), 16);
        assert!(is_clique_free(&g, 3).unwrap().clique_free);
        assert_eq!(rep.chromatic_number, Some(4));
        assert!(!rep.matches_formula);

        assert!(g_kr(2, 3).is_err());
        assert!(g_kr(3, 4).is_err());
    }

    #[test]
    fn random_triangle_free_is_deterministic() {
        let a = random_triangle_free(10, 100, 42);
        let b = random_triangle_free(10, 100, 42);
        assert_eq!(a, b);
        assert!(is_clique_free(&a, 3).unwrap().clique_free);
        assert_eq!(random_triangle_free(1, 100, 0).edge_count(), 0);
        let dense = random_triangle_free(4, 10_000, 7);
        assert!(is_clique_free(&dense, 3).unwrap().clique_free);
        // Maximal: every non-edge would close a triangle.
        for u in 0..4 {
            for v in u + 1..4 {
                if !dense.has_edge(u, v) {
                    assert!(!dense.neighbor_set(u).is_disjoint(dense.neighbor_set(v)));
                }
            }
        }
    }

    #[test]
    fn spec_round_trip() {
        let spec = GeneratorSpec::Mycielski {
            base: Box::new(GeneratorSpec::Cycle { n: 5 }),
            iterations: 1,
        };
        let json = serde_json::to_string(&spec).unwrap();
        let back: GeneratorSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back.build().unwrap().n(), 11);
    }
}
