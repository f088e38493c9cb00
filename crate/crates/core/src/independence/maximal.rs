use crate::graph::{Graph, VertexSet};

/// Bron–Kerbosch with pivoting on the complement graph. Each maximal
/// independent set is produced exactly once, in a fixed order.
pub struct MaximalIndependentSets {
    non_adj: Vec<VertexSet>,
    stack: Vec<Frame>,
    empty_pending: bool,
}

struct Frame {
    chosen: VertexSet,
    cand: VertexSet,
    excluded: VertexSet,
    todo: Vec<usize>,
    next: usize,
}

pub fn enumerate_maximal_independent_sets(g: &Graph) -> MaximalIndependentSets {
    let n = g.n();
    let all = g.vertex_set();
    let non_adj: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut s = all.difference(g.neighbor_set(v));
            s.remove(v);
            s
        })
        .collect();
    let mut it = MaximalIndependentSets {
        non_adj,
        stack: Vec::new(),
        empty_pending: n == 0,
    };
    if n > 0 {
        let frame = it.frame(VertexSet::new(n), all, VertexSet::new(n));
        it.stack.push(frame);
    }
    it
}

impl MaximalIndependentSets {
    fn frame(&self, chosen: VertexSet, cand: VertexSet, excluded: VertexSet) -> Frame {
        let pivot = cand
            .iter()
            .chain(excluded.iter())
            .max_by_key(|&u| (self.non_adj[u].intersection_len(&cand), usize::MAX - u))
            .expect("frames are created with candidates");
        let todo = cand.difference(&self.non_adj[pivot]).to_vec();
        Frame {
            chosen,
            cand,
            excluded,
            todo,
            next: 0,
        }
    }
}

impl Iterator for MaximalIndependentSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if std::mem::take(&mut self.empty_pending) {
            return Some(VertexSet::new(0));
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.next == top.todo.len() {
                self.stack.pop();
                continue;
            }
            let v = top.todo[top.next];
            top.next += 1;
            let mut chosen = top.chosen.clone();
            chosen.insert(v);
            let cand = top.cand.intersection(&self.non_adj[v]);
            let excluded = top.excluded.intersection(&self.non_adj[v]);
            top.cand.remove(v);
            top.excluded.insert(v);
            if cand.is_empty() {
                if excluded.is_empty() {
                    return Some(chosen);
                }
                continue;
            }
            let frame = self.frame(chosen, cand, excluded);
            self.stack.push(frame);
        }
    }
}
