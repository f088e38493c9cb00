//! Reference implementations written for clarity rather than speed. They
//! share no code with the library's searches.
#![allow(dead_code)]

use cyclespec::Graph;
use num_rational::Rational64;

/// Cycle lengths by checking every edge subset: a subset is a cycle when
/// every touched vertex has degree two and the touched vertices are connected.
pub fn edge_subset_cycle_lengths(g: &Graph) -> Vec<usize> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() <= 22, "edge-subset oracle is for sparse graphs");
    let n = g.n();
    let mut found = vec![false; n + 1];
    for mask in 1u32..(1u32 << edges.len()) {
        let size = mask.count_ones() as usize;
        if size < 3 || size > n || found[size] {
            continue;
        }
        let chosen: Vec<(usize, usize)> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let mut degree = vec![0; n];
        for &(u, v) in &chosen {
            degree[u] += 1;
            degree[v] += 1;
        }
        if degree.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        let touched = degree.iter().filter(|&&d| d == 2).count();
        if touched != size {
            continue;
        }
        // Walk the cycle from one touched vertex.
        let start = chosen[0].0;
        let (mut prev, mut at, mut steps) = (usize::MAX, start, 0);
        loop {
            let next = chosen
                .iter()
                .find_map(|&(u, v)| match () {
                    _ if u == at && v != prev => Some(v),
                    _ if v == at && u != prev => Some(u),
                    _ => None,
                })
                .unwrap();
            prev = at;
            at = next;
            steps += 1;
            if at == start {
                break;
            }
        }
        if steps == size {
            found[size] = true;
        }
    }
    (3..=n).filter(|&l| found[l]).collect()
}

fn is_independent_mask(g: &Graph, mask: u64) -> bool {
    g.edges().all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
}

/// Largest independent subset of `within`, by trying every subset.
pub fn naive_alpha_within(g: &Graph, within: u64) -> usize {
    let mut best = 0;
    let mut sub = within;
    loop {
        if sub.count_ones() as usize > best && is_independent_mask(g, sub) {
            best = sub.count_ones() as usize;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & within;
    }
    best
}

pub fn naive_alpha(g: &Graph) -> usize {
    naive_alpha_within(g, (1u64 << g.n()) - 1)
}

/// `max |X| / α(X)` over every non-empty subset.
pub fn naive_iota(g: &Graph) -> Rational64 {
    let mut best = Rational64::from_integer(0);
    for mask in 1u64..(1u64 << g.n()) {
        let r = Rational64::new(mask.count_ones() as i64, naive_alpha_within(g, mask) as i64);
        if r > best {
            best = r;
        }
    }
    best
}

/// Smallest `k` admitting a proper colouring, by trying every assignment.
pub fn naive_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colours = vec![0usize; n];
        loop {
            if g.edges().all(|(u, v)| colours[u] != colours[v]) {
                return k;
            }
            let mut i = 0;
            while i < n && colours[i] == k - 1 {
                colours[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colours[i] += 1;
        }
    }
    n
}
