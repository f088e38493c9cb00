use std::collections::VecDeque;

use serde::Serialize;

use super::{CycleCertificate, Graph, VertexSet};
use crate::error::Result;

/// Distances from `v`; unreachable vertices get `None`.
pub fn bfs_distances(g: &Graph, v: usize) -> Result<Vec<Option<usize>>> {
    g.check_vertex(v)?;
    let mut dist = vec![None; g.n()];
    dist[v] = Some(0);
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].expect("queued vertices have a distance");
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// Layer `i` holds the vertices at distance exactly `i` from `v`.
pub fn bfs_layers(g: &Graph, v: usize) -> Result<Vec<VertexSet>> {
    let dist = bfs_distances(g, v)?;
    let depth = dist.iter().flatten().max().copied().unwrap_or(0);
    let mut layers = vec![VertexSet::new(g.n()); depth + 1];
    for (u, d) in dist.iter().enumerate() {
        if let Some(d) = d {
            layers[*d].insert(u);
        }
    }
    Ok(layers)
}

/// Vertices outside `x` with at least one neighbor in `x`.
pub fn boundary(g: &Graph, x: &VertexSet) -> Result<VertexSet> {
    g.check_set(x)?;
    let mut out = VertexSet::new(g.n());
    for v in x {
        out.union_with(g.neighbor_set(v));
    }
    out.difference_with(x);
    Ok(out)
}

/// Connected components, each listed by its vertex set, ordered by least vertex.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut comp = VertexSet::new(g.n());
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            comp.insert(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bipartiteness {
    OddCycle(CycleCertificate),
    /// Proper 2-coloring; the least vertex of each component gets color 0.
    Bipartition(Vec<u8>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartition(_))
    }
}

struct BfsTree {
    parent: Vec<usize>,
    depth: Vec<usize>,
}

impl BfsTree {
    /// Tree path joining `a` and `b` through their lowest common ancestor,
    /// listed from `a` to `b`.
    fn path_between(&self, mut a: usize, mut b: usize) -> Vec<usize> {
        let mut left = Vec::new();
        let mut right = Vec::new();
        while self.depth[a] > self.depth[b] {
            left.push(a);
            a = self.parent[a];
        }
        while self.depth[b] > self.depth[a] {
            right.push(b);
            b = self.parent[b];
        }
        while a != b {
            left.push(a);
            right.push(b);
            a = self.parent[a];
            b = self.parent[b];
        }
        left.push(a);
        left.extend(right.into_iter().rev());
        left
    }
}

fn bfs_tree_from(g: &Graph, root: usize, allowed: Option<&[bool]>) -> BfsTree {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    parent[root] = root;
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if depth[w] == usize::MAX && allowed.is_none_or(|a| a[w]) {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    BfsTree { parent, depth }
}

/// Either an odd cycle or a proper 2-coloring of every component.
pub fn odd_cycle_or_bipartition(g: &Graph) -> Bipartiteness {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        parent[s] = s;
        depth[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    let tree = BfsTree {
                        parent: parent.clone(),
                        depth: depth.clone(),
                    };
                    let cycle = tree.path_between(u, w);
                    return Bipartiteness::OddCycle(CycleCertificate::trusted(g, cycle));
                }
            }
        }
    }
    Bipartiteness::Bipartition(color)
}

pub fn is_bipartite(g: &Graph) -> bool {
    odd_cycle_or_bipartition(g).is_bipartite()
}

/// A shortest odd cycle, or `None` for bipartite graphs.
pub fn odd_girth(g: &Graph) -> Option<CycleCertificate> {
    let mut best: Option<(usize, usize, usize, usize)> = None;
    for s in 0..g.n() {
        let tree = bfs_tree_from(g, s, None);
        for (a, b) in g.edges() {
            let (da, db) = (tree.depth[a], tree.depth[b]);
            if da == db && da != usize::MAX {
                let len = 2 * da + 1;
                if best.is_none_or(|(l, ..)| len < l) {
                    best = Some((len, s, a, b));
                }
            }
        }
    }
    best.map(|(_, s, a, b)| {
        let tree = bfs_tree_from(g, s, None);
        CycleCertificate::trusted(g, tree.path_between(a, b))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    fn layer_vecs(g: &Graph, v: usize) -> Vec<Vec<usize>> {
        bfs_layers(g, v).unwrap().iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn layers_of_cycle_and_clique() {
        assert_eq!(
            layer_vecs(&named::cycle(6), 0),
            vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]
        );
        assert_eq!(layer_vecs(&named::complete(4), 0), vec![vec![0], vec![1, 2, 3]]);
        let sizes: Vec<usize> = bfs_layers(&named::petersen(), 0)
            .unwrap()
            .iter()
            .map(VertexSet::len)
            .collect();
        assert_eq!(sizes, vec![1, 3, 6]);
        assert!(bfs_layers(&named::cycle(4), 4).is_err());
    }

    #[test]
    fn boundary_examples() {
        let k4 = named::complete(4);
        let x = VertexSet::from_vertices(4, [0]).unwrap();
        assert_eq!(boundary(&k4, &x).unwrap().to_vec(), vec![1, 2, 3]);
        let c6 = named::cycle(6);
        let x = VertexSet::from_vertices(6, [0, 3]).unwrap();
        assert_eq!(boundary(&c6, &x).unwrap().to_vec(), vec![1, 2, 4, 5]);
        assert!(boundary(&c6, &c6.vertex_set()).unwrap().is_empty());
        assert!(boundary(&c6, &VertexSet::new(5)).is_err());
    }

    #[test]
    fn odd_cycles_and_bipartitions() {
        match odd_cycle_or_bipartition(&named::cycle(5)) {
            Bipartiteness::OddCycle(c) => assert_eq!(c.len(), 5),
            other => panic!("{other:?}"),
        }
        match odd_cycle_or_bipartition(&named::cycle(6)) {
            Bipartiteness::Bipartition(col) => {
                assert_eq!(col.iter().filter(|&&c| c == 0).count(), 3);
            }
            other => panic!("{other:?}"),
        }
        let p = named::petersen();
        match odd_cycle_or_bipartition(&p) {
            Bipartiteness::OddCycle(c) => {
                c.validate(&p).unwrap();
                assert_eq!(c.len(), 5);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn odd_girth_examples() {
        assert_eq!(odd_girth(&named::petersen()).unwrap().len(), 5);
        assert_eq!(odd_girth(&named::complete(4)).unwrap().len(), 3);
        assert!(odd_girth(&named::complete_bipartite(3)).is_none());
        assert_eq!(odd_girth(&named::cycle(9)).unwrap().len(), 9);
    }
}
