//! Exact maximum independent set by branch and bound.

use super::bits::Bits;

pub(crate) struct MaxIndependent<'a, B: Bits> {
    adj: &'a [B],
    best: B,
    best_len: usize,
}

impl<'a, B: Bits> MaxIndependent<'a, B> {
    /// Maximum independent subset of `cand`. `empty` is the zero set of the
    /// right universe.
    pub(crate) fn solve(adj: &'a [B], cand: B, empty: B) -> B {
        let mut s = MaxIndependent {
            adj,
            best: empty.clone(),
            best_len: 0,
        };
        s.search(cand, empty);
        s.best
    }

    /// Greedy clique cover of `cand`; each clique contributes at most one
    /// vertex to an independent set.
    fn cover_bound(&self, cand: &B) -> usize {
        let mut rest = cand.clone();
        let mut cliques = 0;
        while let Some(v) = rest.lowest() {
            rest = rest.without(v);
            let mut common = rest.and(&self.adj[v]);
            while let Some(w) = common.lowest() {
                rest = rest.without(w);
                common = common.without(w).and(&self.adj[w]);
            }
            cliques += 1;
        }
        cliques
    }

    fn search(&mut self, mut cand: B, mut cur: B) {
        // Vertices of degree at most one in the candidate graph belong to
        // some maximum independent set.
        loop {
            let forced = cand
                .ones()
                .into_iter()
                .find(|&v| self.adj[v].and(&cand).count() <= 1);
            match forced {
                Some(v) => {
                    cur = cur.with(v);
                    cand = cand.and_not(&self.adj[v]).without(v);
                }
                None => break,
            }
        }
        let have = cur.count();
        if cand.zero() {
            if have > self.best_len {
                self.best_len = have;
                self.best = cur;
            }
            return;
        }
        if have + cand.count() <= self.best_len || have + self.cover_bound(&cand) <= self.best_len {
            return;
        }
        let v = cand
            .ones()
            .into_iter()
            .max_by_key(|&v| (self.adj[v].and(&cand).count(), usize::MAX - v))
            .expect("non-empty");
        self.search(cand.and_not(&self.adj[v]).without(v), cur.with(v));
        self.search(cand.without(v), cur);
    }
}
