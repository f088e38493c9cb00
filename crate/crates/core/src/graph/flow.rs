use std::collections::VecDeque;

use super::{Graph, PathCertificate, VertexSet};
use crate::error::{Error, Result};

struct Arc {
    to: usize,
    cap: u32,
}

/// Residual network with paired arcs (`i ^ 1` is the reverse of `i`).
struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// One BFS augmentation of a unit of flow. Arcs are scanned in insertion
    /// order, which follows ascending vertex ids.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    via[arc.to] = a;
                    queue.push_back(arc.to);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut v = sink;
        while v != source {
            let a = via[v];
            self.arcs[a].cap -= 1;
            self.arcs[a ^ 1].cap += 1;
            v = self.arcs[a ^ 1].to;
        }
        true
    }

    fn reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }
}

/// Two vertex-disjoint paths from `s` to `t` whose internal vertices avoid
/// `s ∪ t`.
///
/// Internal vertices have unit capacity. A terminal set that is a single
/// vertex may be shared by both paths (the classical two-path form of
/// Menger's theorem); otherwise the endpoints are distinct as well.
/// Augmenting paths are found by BFS in ascending vertex order, so the
/// output is deterministic.
pub fn two_disjoint_paths(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
) -> Result<(PathCertificate, PathCertificate)> {
    g.check_set(s)?;
    g.check_set(t)?;
    if s.is_empty() || t.is_empty() {
        return Err(Error::precondition("terminal sets must be non-empty"));
    }
    if !s.is_disjoint(t) {
        return Err(Error::precondition("terminal sets must be disjoint"));
    }
    let n = g.n();
    let (source, sink) = (2 * n, 2 * n + 1);
    let vin = |v: usize| 2 * v;
    let vout = |v: usize| 2 * v + 1;
    let shared = |v: usize| (s.len() == 1 && s.contains(v)) || (t.len() == 1 && t.contains(v));

    let mut net = Network::new(2 * n + 2);
    for v in 0..n {
        net.add(vin(v), vout(v), if shared(v) { 2 } else { 1 });
    }
    for v in s {
        net.add(source, vin(v), if shared(v) { 2 } else { 1 });
    }
    for u in 0..n {
        for &w in g.neighbors(u) {
            // Edge arcs never bind except between two shared terminals, so a
            // deficient flow leaves its bottleneck on a vertex.
            let cap = if shared(u) && shared(w) { 1 } else { 2 };
            net.add(vout(u), vin(w), cap);
        }
    }
    for v in t {
        net.add(vout(v), sink, if shared(v) { 2 } else { 1 });
    }

    let mut flow = 0;
    while flow < 2 && net.augment(source, sink) {
        flow += 1;
    }
    if flow < 2 {
        let reach = net.reachable(source);
        let cut = VertexSet::from_vertices(n, (0..n).filter(|&v| reach[vin(v)] && !reach[vout(v)]))
            .expect("in range");
        return Err(Error::MengerDeficient { flow, cut });
    }

    // Flow on a forward arc = capacity moved onto its reverse.
    let mut used: Vec<u32> = (0..net.arcs.len())
        .map(|a| if a % 2 == 0 { net.arcs[a ^ 1].cap } else { 0 })
        .collect();
    let mut paths = Vec::with_capacity(2);
    for _ in 0..2 {
        let mut nodes = vec![source];
        let mut u = source;
        while u != sink {
            let a = *net.out[u]
                .iter()
                .find(|&&a| a % 2 == 0 && used[a] > 0)
                .expect("flow conservation");
            used[a] -= 1;
            u = net.arcs[a].to;
            nodes.push(u);
        }
        let mut vertices: Vec<usize> = Vec::new();
        for &x in &nodes[1..nodes.len() - 1] {
            let v = x / 2;
            if vertices.last() != Some(&v) {
                vertices.push(v);
            }
        }
        let start = vertices.iter().rposition(|&v| s.contains(v)).expect("starts in s");
        let end = start + vertices[start..].iter().position(|&v| t.contains(v)).expect("ends in t");
        paths.push(PathCertificate::trusted(g, vertices[start..=end].to_vec()));
    }
    let second = paths.pop().expect("two paths");
    let first = paths.pop().expect("two paths");
    Ok((first, second))
}
