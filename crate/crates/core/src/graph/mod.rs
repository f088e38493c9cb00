//! Simple undirected graphs on dense vertex ids and the structural
//! primitives the rest of the crate is built from.

mod blocks;
mod cert;
mod cliques;
mod coloring;
mod flow;
pub mod io;
mod structure;
mod vset;

pub use blocks::{block_decomposition, BlockDecomposition};
pub use cert::{CycleCertificate, PathCertificate};
pub use cliques::{find_clique, is_clique_free, CliqueFreeness};
pub use coloring::{chromatic_number, chromatic_number_with_limit, ChromaticResult, DEFAULT_CHI_LIMIT};
pub use flow::two_disjoint_paths;
pub use structure::{
    bfs_distances, bfs_layers, boundary, components, is_bipartite, odd_cycle_or_bipartition,
    odd_girth, Bipartiteness,
};
pub use vset::VertexSet;

use crate::error::{Error, Result};

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted ascending; a bitset row per vertex backs the
/// set operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
    labels: Option<Vec<String>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            rows: vec![VertexSet::new(n); n],
            labels: None,
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Builder-style edge insertion used by generators; duplicates are ignored.
    pub(crate) fn from_edges_lenient<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u != v && !g.rows[u].contains(v) {
                g.add_edge_checked(u, v).expect("edge validated above");
            }
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        g
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::IndexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::Validation(format!("self-loop at vertex {u}")));
        }
        if self.rows[u].contains(v) {
            return Err(Error::Validation(format!("duplicate edge {{{u},{v}}}")));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::Validation(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n() {
            return Err(Error::Validation(format!(
                "vertex set over {} vertices used with graph on {}",
                s.universe(),
                self.n()
            )));
        }
        Ok(())
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Neighborhoods as 64-bit masks, for the bit-parallel exact searches.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n() > 64 {
            return Err(Error::SizeLimit {
                what: "bit-parallel graph",
                size: self.n(),
                limit: 64,
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|r| r.to_mask().expect("n <= 64"))
            .collect())
    }

    /// The subgraph induced by `keep`, renumbered in ascending order of the
    /// original ids. Labels are carried over.
    pub fn induced(&self, keep: &VertexSet) -> Subgraph {
        let map: Vec<usize> = keep.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let edges = map.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v]
                .iter()
                .filter(move |&&w| index[w] != usize::MAX && index[w] > i)
                .map(move |&w| (i, index[w]))
        });
        let mut graph = Graph::from_edges_lenient(map.len(), edges.collect::<Vec<_>>());
        if let Some(labels) = &self.labels {
            graph.labels = Some(map.iter().map(|&v| labels[v].clone()).collect());
        }
        Subgraph { graph, map }
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || components(self).len() == 1
    }

    /// Canonical form used for determinism checks: sorted edges plus labels.
    pub fn canonical_edges(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }
}

/// An induced subgraph together with the map from its ids back to the host.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `map[i]` is the host vertex of subgraph vertex `i`.
    pub map: Vec<usize>,
}

impl Subgraph {
    pub fn to_host(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn vertices_to_host(&self, vs: &[usize]) -> Vec<usize> {
        vs.iter().map(|&v| self.map[v]).collect()
    }

    pub fn set_to_host(&self, s: &VertexSet, host_n: usize) -> VertexSet {
        VertexSet::from_vertices(host_n, s.iter().map(|v| self.map[v])).expect("subgraph ids map into host")
    }

    /// Position of a host vertex inside the subgraph, if present.
    pub fn from_host(&self, v: usize) -> Option<usize> {
        self.map.binary_search(&v).ok()
    }
}
