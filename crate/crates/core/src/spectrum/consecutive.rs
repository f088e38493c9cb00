//! Paths of every length across a partition of a chorded odd cycle, and the
//! cycles of consecutive lengths they produce through a BFS tree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, CycleCertificate, Graph, PathCertificate, VertexSet};
use crate::rotation::ChordedCycle;

/// Adjacency of `cycle ∪ chord` keyed by host ids.
fn local_adjacency(f: &ChordedCycle) -> Vec<(usize, Vec<usize>)> {
    let vs = f.cycle.vertices();
    let len = vs.len();
    let mut out: Vec<(usize, Vec<usize>)> = vs
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut nb = vec![vs[(i + len - 1) % len], vs[(i + 1) % len]];
            if v == f.chord.0 {
                nb.push(f.chord.1);
            } else if v == f.chord.1 {
                nb.push(f.chord.0);
            }
            nb.sort_unstable();
            nb.dedup();
            (v, nb)
        })
        .collect();
    out.sort_by_key(|e| e.0);
    out
}

/// For each `ℓ = 1, …, |V(F)| − 1` a path of length `ℓ` in `F` starting in
/// `A` and ending in `B`. Exhaustive DFS from `A` in ascending order; the
/// first path met for each length is kept.
pub fn paths_all_lengths(g: &Graph, f: &ChordedCycle, a: &VertexSet, b: &VertexSet) -> Result<Vec<PathCertificate>> {
    f.validate(g)?;
    let vf = VertexSet::from_vertices(g.n(), f.cycle.vertices().iter().copied())?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::precondition("both sides of the partition must be non-empty"));
    }
    if !a.is_disjoint(b) || a.union(b) != vf {
        return Err(Error::precondition("A and B must partition V(F)"));
    }
    let adj = local_adjacency(f);
    let nbrs = |v: usize| -> &[usize] { &adj[adj.binary_search_by_key(&v, |e| e.0).unwrap()].1 };
    let target = vf.len() - 1;
    let mut found: Vec<Option<Vec<usize>>> = vec![None; target + 1];
    let mut remaining = target;
    let mut on = VertexSet::new(g.n());
    for start in a.iter() {
        let mut path = vec![start];
        on.insert(start);
        dfs(&nbrs, b, &mut path, &mut on, &mut found, &mut remaining);
        on.remove(start);
        if remaining == 0 {
            break;
        }
    }
    let mut out = Vec::with_capacity(target);
    for (len, p) in found.into_iter().enumerate().skip(1) {
        match p {
            Some(p) => out.push(PathCertificate::new(g, p)?),
            None => {
                return Err(Error::PropositionViolation(format!(
                    "no path of length {len} between the two sides of the partition"
                )))
            }
        }
    }
    Ok(out)
}

fn dfs<'a>(
    nbrs: &impl Fn(usize) -> &'a [usize],
    b: &VertexSet,
    path: &mut Vec<usize>,
    on: &mut VertexSet,
    found: &mut [Option<Vec<usize>>],
    remaining: &mut usize,
) {
    let u = *path.last().unwrap();
    let len = path.len() - 1;
    if len >= 1 && b.contains(u) && found[len].is_none() {
        found[len] = Some(path.clone());
        *remaining -= 1;
        if *remaining == 0 {
            return;
        }
    }
    for &w in nbrs(u) {
        if on.contains(w) {
            continue;
        }
        on.insert(w);
        path.push(w);
        dfs(nbrs, b, path, on, found, remaining);
        path.pop();
        on.remove(w);
        if *remaining == 0 {
            return;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsecutiveCycles {
    pub v: usize,
    pub layer_index: usize,
    /// Branching root of the minimal subtree spanning `V(F)`.
    pub root: usize,
    /// Set when the root is not `v` itself.
    pub rerooted: bool,
    pub height: usize,
    pub a: VertexSet,
    pub b: VertexSet,
    /// Cycles of lengths `2h + 1, …, 2h + |V(F)| − 1`, ascending.
    pub cycles: Vec<CycleCertificate>,
}

impl ConsecutiveCycles {
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(CycleCertificate::len).collect()
    }
}

/// Splices each `A`–`B` path of `F` with the two tree paths back to the
/// branching root of the BFS tree rooted at `v` (parents are the lowest-id
/// neighbours one layer up).
pub fn consecutive_cycles(g: &Graph, v: usize, f: &ChordedCycle, layer_index: usize) -> Result<ConsecutiveCycles> {
    g.check_vertex(v)?;
    f.validate(g).map_err(|e| Error::precondition(format!("F is not a non-bipartite chorded cycle: {e}")))?;
    let dist = bfs_distances(g, v)?;
    for &u in f.cycle.vertices() {
        if dist[u] != Some(layer_index) {
            return Err(Error::precondition(format!(
                "vertex {u} of F is not at distance {layer_index} from {v}"
            )));
        }
    }
    if layer_index == 0 {
        return Err(Error::precondition("layer 0 holds a single vertex"));
    }
    let parent = |u: usize| -> usize {
        let d = dist[u].unwrap();
        g.neighbors(u)
            .iter()
            .copied()
            .find(|&w| dist[w] == Some(d - 1))
            .expect("BFS layers are connected upward")
    };

    // Climb all leaves together until they meet.
    let n = g.n();
    let leaves: Vec<usize> = {
        let mut l = f.cycle.vertices().to_vec();
        l.sort_unstable();
        l
    };
    let mut level: Vec<usize> = leaves.clone();
    let mut ancestry: Vec<Vec<usize>> = vec![level.clone()];
    let mut height = 0;
    loop {
        let mut distinct = level.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() == 1 {
            break;
        }
        level = level.iter().map(|&u| parent(u)).collect();
        ancestry.push(level.clone());
        height += 1;
    }
    let root = level[0];
    // Child of the root on each leaf's branch.
    let branch: Vec<usize> = ancestry[height - 1].clone();
    let first_branch = *branch.iter().min().unwrap();
    let a = VertexSet::from_vertices(n, leaves.iter().zip(&branch).filter(|(_, &c)| c == first_branch).map(|(&l, _)| l))?;
    let b = VertexSet::from_vertices(n, leaves.iter().zip(&branch).filter(|(_, &c)| c != first_branch).map(|(&l, _)| l))?;

    let up = |mut u: usize| -> Vec<usize> {
        let mut out = vec![u];
        while u != root {
            u = parent(u);
            out.push(u);
        }
        out
    };
    let mut cycles = Vec::new();
    for p in paths_all_lengths(g, f, &a, &b)? {
        let vs = p.vertices();
        let mut cyc: Vec<usize> = up(vs[0]).into_iter().rev().collect();
        cyc.extend_from_slice(&vs[1..]);
        let back = up(*vs.last().unwrap());
        cyc.extend_from_slice(&back[1..back.len() - 1]);
        cycles.push(CycleCertificate::new(g, cyc)?);
    }
    Ok(ConsecutiveCycles {
        v,
        layer_index,
        root,
        rerooted: root != v,
        height,
        a,
        b,
        cycles,
    })
}
