use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_CHI_LIMIT: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub chromatic_number: usize,
    /// An optimal proper coloring, colors `0..chromatic_number`.
    pub coloring: Vec<usize>,
    /// Clique size used as the lower bound.
    pub clique_bound: usize,
}

pub fn chromatic_number(g: &Graph) -> Result<ChromaticResult> {
    chromatic_number_with_limit(g, DEFAULT_CHI_LIMIT)
}

/// Exact chromatic number by DSATUR branch and bound.
///
/// Branching picks the uncolored vertex of maximum saturation, then maximum
/// uncolored degree, then lowest id.
pub fn chromatic_number_with_limit(g: &Graph, limit: usize) -> Result<ChromaticResult> {
    let n = g.n();
    if n > limit {
        return Err(Error::SizeLimit {
            what: "exact chromatic number",
            size: n,
            limit,
        });
    }
    if n == 0 {
        return Ok(ChromaticResult {
            chromatic_number: 0,
            coloring: Vec::new(),
            clique_bound: 0,
        });
    }
    let clique_bound = greedy_clique(g);
    let mut search = Search::new(g);
    let (ub, greedy) = search.greedy();
    search.best = ub;
    search.best_coloring = greedy;
    search.lower = clique_bound;
    if ub > clique_bound {
        search.branch(0);
    }
    Ok(ChromaticResult {
        chromatic_number: search.best,
        coloring: search.best_coloring,
        clique_bound,
    })
}

fn greedy_clique(g: &Graph) -> usize {
    let mut best = 1;
    for start in 0..g.n() {
        let mut clique = vec![start];
        let mut cand: Vec<usize> = g.neighbors(start).to_vec();
        while !cand.is_empty() {
            let &pick = cand
                .iter()
                .max_by_key(|&&v| (cand.iter().filter(|&&w| g.has_edge(v, w)).count(), usize::MAX - v))
                .expect("non-empty");
            clique.push(pick);
            cand.retain(|&w| g.has_edge(pick, w));
        }
        best = best.max(clique.len());
    }
    best
}

const UNCOLORED: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    /// `seen[v][c]`: neighbors of `v` currently holding color `c`.
    seen: Vec<Vec<u8>>,
    saturation: Vec<usize>,
    best: usize,
    best_coloring: Vec<usize>,
    lower: usize,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Search {
            g,
            color: vec![UNCOLORED; n],
            seen: vec![vec![0; n + 1]; n],
            saturation: vec![0; n],
            best: n,
            best_coloring: (0..n).collect(),
            lower: 1,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for &w in self.g.neighbors(v) {
            if self.seen[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.seen[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = std::mem::replace(&mut self.color[v], UNCOLORED);
        for &w in self.g.neighbors(v) {
            self.seen[w][c] -= 1;
            if self.seen[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.color[v] == UNCOLORED)
            .max_by_key(|&v| {
                let free_deg = self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| self.color[w] == UNCOLORED)
                    .count();
                (self.saturation[v], free_deg, usize::MAX - v)
            })
    }

    fn greedy(&mut self) -> (usize, Vec<usize>) {
        let mut used = 0;
        while let Some(v) = self.pick() {
            let c = (0..).find(|&c| self.seen[v][c] == 0).expect("some color is free");
            used = used.max(c + 1);
            self.assign(v, c);
        }
        let coloring = self.color.clone();
        for v in 0..self.g.n() {
            self.unassign(v);
        }
        (used, coloring)
    }

    fn branch(&mut self, used: usize) {
        if self.best <= self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            if used < self.best {
                self.best = used;
                self.best_coloring = self.color.clone();
            }
            return;
        };
        if self.saturation[v] >= self.best - 1 {
            return;
        }
        let top = (used + 1).min(self.best - 1);
        for c in 0..top {
            if self.seen[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            self.branch(used.max(c + 1));
            self.unassign(v);
            if self.best <= self.lower {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{mycielski, named};

    fn check_proper(g: &Graph, r: &ChromaticResult) {
        for (u, v) in g.edges() {
            assert_ne!(r.coloring[u], r.coloring[v]);
        }
        assert!(r.coloring.iter().all(|&c| c < r.chromatic_number));
    }

    #[test]
    fn named_values() {
        let p = named::petersen();
        let r = chromatic_number(&p).unwrap();
        assert_eq!(r.chromatic_number, 3);
        check_proper(&p, &r);
        for t in 1..=6 {
            assert_eq!(chromatic_number(&named::complete(t)).unwrap().chromatic_number, t);
        }
        let grotzsch = mycielski(&named::cycle(5));
        let r = chromatic_number(&grotzsch).unwrap();
        assert_eq!(r.chromatic_number, 4);
        check_proper(&grotzsch, &r);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap().chromatic_number, 0);
        assert_eq!(chromatic_number(&Graph::empty(3)).unwrap().chromatic_number, 1);
    }

    #[test]
    fn size_limit() {
        assert!(matches!(
            chromatic_number_with_limit(&named::cycle(12), 10),
            Err(Error::SizeLimit { .. })
        ));
    }
}
