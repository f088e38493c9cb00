//! Longest paths: exact subset dynamic programming on small graphs and a
//! rotation–extension heuristic above that.

use serde::Serialize;

use super::closure::rotation_closure_with_budget;
use crate::error::Result;
use crate::graph::{Graph, PathCertificate};

pub const DEFAULT_PATH_LIMIT: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathMode {
    Exact,
    Heuristic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LongestPath {
    pub path: PathCertificate,
    pub mode: PathMode,
}

/// A longest path, exact when `n <= exact_limit`. Returns `None` only for
/// the empty graph.
pub fn longest_path(g: &Graph, exact_limit: usize, restarts: usize) -> Result<Option<LongestPath>> {
    if g.n() == 0 {
        return Ok(None);
    }
    if g.n() <= exact_limit.min(24) {
        let vs = exact_longest(g)?;
        return Ok(Some(LongestPath {
            path: PathCertificate::trusted(g, vs),
            mode: PathMode::Exact,
        }));
    }
    let vs = heuristic_longest(g, restarts);
    Ok(Some(LongestPath {
        path: PathCertificate::trusted(g, vs),
        mode: PathMode::Heuristic,
    }))
}

/// `ends[mask]` holds the vertices at which some Hamiltonian path of
/// `G[mask]` ends. Among the longest paths the one on the numerically
/// smallest vertex mask is returned, reconstructed through lowest ids and
/// oriented lexicographically.
fn exact_longest(g: &Graph) -> Result<Vec<usize>> {
    let adj = g.adjacency_masks()?;
    let n = g.n();
    let size = 1usize << n;
    let mut ends = vec![0u32; size];
    let mut best = (0u32, 0usize);
    for mask in 1..size {
        let m = mask as u64;
        if m.count_ones() == 1 {
            ends[mask] = m as u32;
        } else {
            let mut rest = m;
            let mut acc = 0u32;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if ends[mask ^ (1 << v)] as u64 & adj[v] != 0 {
                    acc |= 1 << v;
                }
            }
            ends[mask] = acc;
        }
        if ends[mask] != 0 && m.count_ones() > best.0 {
            best = (m.count_ones(), mask);
        }
    }
    let mut mask = best.1;
    let mut v = ends[mask].trailing_zeros() as usize;
    let mut rev = vec![v];
    while mask.count_ones() > 1 {
        mask ^= 1 << v;
        let cand = ends[mask] as u64 & adj[v];
        v = cand.trailing_zeros() as usize;
        rev.push(v);
    }
    Ok(canonical(rev))
}

/// Extends at the free end (index 0) whenever possible, otherwise rotates
/// to an endpoint that can be extended. Restarts from the first `restarts`
/// vertices in both directions; the longest, lexicographically smallest
/// path wins.
fn heuristic_longest(g: &Graph, restarts: usize) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for start in 0..g.n().min(restarts.max(1)) {
        let cand = grow(g, vec![start]);
        let cand = grow(g, cand.into_iter().rev().collect());
        let cand = canonical(cand);
        if cand.len() > best.len() || (cand.len() == best.len() && cand < best) {
            best = cand;
        }
    }
    best
}

fn canonical(p: Vec<usize>) -> Vec<usize> {
    let r: Vec<usize> = p.iter().rev().copied().collect();
    if r < p {
        r
    } else {
        p
    }
}

fn grow(g: &Graph, mut path: Vec<usize>) -> Vec<usize> {
    let mut on = vec![false; g.n()];
    for &v in &path {
        on[v] = true;
    }
    loop {
        let free = |p: &[usize], on: &[bool]| g.neighbors(p[0]).iter().copied().find(|&w| !on[w]);
        if let Some(w) = free(&path, &on) {
            on[w] = true;
            path.insert(0, w);
            continue;
        }
        if path.len() < 3 {
            return path;
        }
        let cert = PathCertificate::trusted(g, path.clone());
        let state = rotation_closure_with_budget(g, &cert, 0).expect("path is valid");
        let extendable = state
            .endpoints
            .iter()
            .find(|&x| g.neighbors(x).iter().any(|&w| !on[w]));
        match extendable {
            Some(x) => path = state.replay(g, x).expect("derivation replays").into_vertices(),
            None => return path,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    #[test]
    fn exact_lengths() {
        assert_eq!(longest_path(&named::petersen(), 18, 8).unwrap().unwrap().path.len(), 9);
        assert_eq!(longest_path(&named::path(5), 18, 8).unwrap().unwrap().path.vertices(), &[0, 1, 2, 3, 4]);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(longest_path(&star, 18, 8).unwrap().unwrap().path.vertices(), &[1, 0, 2]);
        assert!(longest_path(&Graph::empty(0), 18, 8).unwrap().is_none());
    }

    #[test]
    fn heuristic_finds_hamiltonian_paths() {
        let lp = longest_path(&named::petersen(), 0, 10).unwrap().unwrap();
        assert_eq!(lp.mode, PathMode::Heuristic);
        assert_eq!(lp.path.len(), 9);
        assert_eq!(longest_path(&named::cycle(30), 0, 4).unwrap().unwrap().path.len(), 29);
    }
}
