use serde::Serialize;

use super::{Graph, VertexSet};

/// Block–cut structure of a graph, computed per connected component.
///
/// Isolated vertices form singleton blocks. Blocks are listed in ascending
/// order of their sorted vertex lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    /// `(block index, its unique cut vertex)` for every endblock.
    pub endblocks: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    /// True when the graph is a single block on at least three vertices.
    pub fn is_two_connected(&self, n: usize) -> bool {
        n >= 3 && self.blocks.len() == 1 && self.blocks[0].len() == n
    }
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut blocks: Vec<VertexSet> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        if g.degree(root) == 0 {
            blocks.push(VertexSet::singleton(n, root));
            continue;
        }
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (u, parent, idx) = *frame;
            if idx < g.degree(u) {
                frame.2 += 1;
                let w = g.neighbors(u)[idx];
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = VertexSet::new(n);
                        while let Some((a, b)) = edge_stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (p, u) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }

    blocks.sort_by_key(|b| b.to_vec());
    let mut membership = vec![0usize; n];
    for b in &blocks {
        for v in b {
            membership[v] += 1;
        }
    }
    let cut_vertices =
        VertexSet::from_vertices(n, (0..n).filter(|&v| membership[v] >= 2)).expect("in range");
    let endblocks = blocks
        .iter()
        .enumerate()
        .filter_map(|(i, b)| {
            let cuts = b.intersection(&cut_vertices);
            (cuts.len() == 1).then(|| (i, cuts.first().expect("one cut vertex")))
        })
        .collect();
    BlockDecomposition {
        blocks,
        cut_vertices,
        endblocks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    #[test]
    fn bowtie_has_two_endblocks() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices.to_vec(), vec![0]);
        assert_eq!(d.endblocks, vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn complete_graph_is_one_block() {
        let d = block_decomposition(&named::complete(4));
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
        assert!(d.endblocks.is_empty());
        assert!(d.is_two_connected(4));
    }

    #[test]
    fn path_has_edge_blocks() {
        let d = block_decomposition(&named::path(4));
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices.to_vec(), vec![1, 2]);
        assert_eq!(d.endblocks.len(), 2);
    }

    #[test]
    fn blocks_cover_every_edge() {
        let g = Graph::from_edges(
            8,
            [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (6, 7)],
        )
        .unwrap();
        let d = block_decomposition(&g);
        for (u, v) in g.edges() {
            assert!(d.blocks.iter().any(|b| b.contains(u) && b.contains(v)));
        }
        assert_eq!(d.cut_vertices.to_vec(), vec![2, 3]);
    }
}
