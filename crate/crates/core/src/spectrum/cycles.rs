//! The cycle spectrum `C(G)`, reciprocal sums and `log*`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CycleCertificate, Graph};
use crate::util::big_ratio_as_string;

pub const DEFAULT_SPECTRUM_LIMIT: usize = 16;
/// Largest `n` the exact table is ever built for, whatever the configured limit.
pub const EXACT_SPECTRUM_CAP: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum SpectrumMode {
    Exact,
    /// Lengths in `undecided` were neither found nor ruled out.
    Partial { node_budget: u64, undecided: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleSpectrum {
    pub n: usize,
    pub lengths: Vec<usize>,
    /// One cycle per entry of `lengths`.
    pub certificates: Vec<CycleCertificate>,
    pub mode: SpectrumMode,
}

impl CycleSpectrum {
    pub fn is_exact(&self) -> bool {
        self.mode == SpectrumMode::Exact
    }

    pub fn contains(&self, len: usize) -> bool {
        self.lengths.binary_search(&len).is_ok()
    }

    pub fn odd_lengths(&self) -> Vec<usize> {
        self.lengths.iter().copied().filter(|l| l % 2 == 1).collect()
    }

    /// `(start, count)` of the longest run of consecutive lengths; the
    /// earliest run wins ties.
    pub fn longest_consecutive_run(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut i = 0;
        while i < self.lengths.len() {
            let mut j = i;
            while j + 1 < self.lengths.len() && self.lengths[j + 1] == self.lengths[j] + 1 {
                j += 1;
            }
            let run = (self.lengths[i], j - i + 1);
            if best.is_none_or(|b| run.1 > b.1) {
                best = Some(run);
            }
            i = j + 1;
        }
        best
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.lengths.len() != self.certificates.len() {
            return Err(Error::Validation("one certificate per length expected".into()));
        }
        for (&l, c) in self.lengths.iter().zip(&self.certificates) {
            c.validate(g)?;
            if c.len() != l {
                return Err(Error::Validation(format!("certificate for length {l} has length {}", c.len())));
            }
        }
        Ok(())
    }
}

pub fn cycle_spectrum(g: &Graph) -> CycleSpectrum {
    cycle_spectrum_with(g, DEFAULT_SPECTRUM_LIMIT, 20_000_000)
}

/// Exact for `n <= exact_limit` (capped at [`EXACT_SPECTRUM_CAP`]); above
/// that, a per-length search limited to `node_budget` DFS nodes in total.
pub fn cycle_spectrum_with(g: &Graph, exact_limit: usize, node_budget: u64) -> CycleSpectrum {
    let n = g.n();
    let (lengths, certificates, mode) = if n <= exact_limit.min(EXACT_SPECTRUM_CAP) {
        let (l, c) = exact_spectrum(g);
        (l, c, SpectrumMode::Exact)
    } else {
        budgeted_spectrum(g, node_budget)
    };
    CycleSpectrum {
        n,
        lengths,
        certificates,
        mode,
    }
}

/// For each anchor `s`, `ends[X]` is the set of vertices at which a path
/// from `s` through exactly `X` (all ids `>= s`) can end. A cycle of length
/// `|X|` with least vertex `s` exists iff some end is adjacent to `s`. Per
/// length the certificate has the least anchor, then the numerically least
/// `X`, and is traced back through lowest ids.
fn exact_spectrum(g: &Graph) -> (Vec<usize>, Vec<CycleCertificate>) {
    let n = g.n();
    let adj = g.adjacency_masks().expect("n within the exact cap");
    let mut found: Vec<Option<Vec<usize>>> = vec![None; n + 1];
    let mut missing = n.saturating_sub(2);
    for s in 0..n {
        let w = n - s;
        if w < 3 || missing == 0 {
            break;
        }
        let adjr: Vec<u32> = (0..w).map(|v| (adj[s + v] >> s) as u32).collect();
        let size = 1usize << (w - 1);
        let mut ends = vec![0u32; size];
        ends[0] = 1;
        for idx in 1..size {
            let sub = (idx as u32) << 1 | 1;
            let mut rest = sub & !1;
            let mut acc = 0u32;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                if ends[((sub ^ (1 << v)) >> 1) as usize] & adjr[v as usize] != 0 {
                    acc |= 1 << v;
                }
            }
            ends[idx] = acc;
            let len = sub.count_ones() as usize;
            let closing = acc & adjr[0];
            if len >= 3 && closing != 0 && found[len].is_none() {
                let mut v = closing.trailing_zeros();
                let mut cur = sub;
                let mut rev = vec![v as usize + s];
                while cur != (1 | 1 << v) {
                    cur ^= 1 << v;
                    let prev = ends[(cur >> 1) as usize] & adjr[v as usize] & !1;
                    v = prev.trailing_zeros();
                    rev.push(v as usize + s);
                }
                rev.push(s);
                rev.reverse();
                found[len] = Some(rev);
                missing -= 1;
            }
        }
    }
    collect(g, found)
}

fn collect(g: &Graph, found: Vec<Option<Vec<usize>>>) -> (Vec<usize>, Vec<CycleCertificate>) {
    let mut lengths = Vec::new();
    let mut certs = Vec::new();
    for (l, c) in found.into_iter().enumerate() {
        if let Some(c) = c {
            lengths.push(l);
            certs.push(CycleCertificate::trusted(g, c));
        }
    }
    (lengths, certs)
}

fn budgeted_spectrum(g: &Graph, node_budget: u64) -> (Vec<usize>, Vec<CycleCertificate>, SpectrumMode) {
    let n = g.n();
    let mut found: Vec<Option<Vec<usize>>> = vec![None; n + 1];
    let mut undecided = Vec::new();
    let mut search = Search {
        g,
        budget: node_budget,
        used: 0,
        dist: Vec::new(),
        on: vec![false; n],
        path: Vec::new(),
    };
    for (len, slot) in found.iter_mut().enumerate().take(n + 1).skip(3) {
        match search.length(len) {
            Some(Some(c)) => *slot = Some(c),
            Some(None) => {}
            None => undecided.push(len),
        }
    }
    let (lengths, certs) = collect(g, found);
    let mode = if undecided.is_empty() {
        SpectrumMode::Exact
    } else {
        SpectrumMode::Partial { node_budget, undecided }
    };
    (lengths, certs, mode)
}

struct Search<'a> {
    g: &'a Graph,
    budget: u64,
    used: u64,
    /// Distances to the anchor inside the vertices `>= anchor`.
    dist: Vec<usize>,
    on: Vec<bool>,
    path: Vec<usize>,
}

impl Search<'_> {
    /// `Some(Some(cycle))` if found, `Some(None)` if ruled out, `None` if
    /// the budget ran out.
    fn length(&mut self, len: usize) -> Option<Option<Vec<usize>>> {
        let n = self.g.n();
        for s in 0..n {
            if n - s < len {
                break;
            }
            self.anchor_distances(s);
            self.path.clear();
            self.path.push(s);
            self.on[s] = true;
            let r = self.extend(s, len);
            self.on[s] = false;
            match r {
                Some(true) => {
                    let c = self.path.clone();
                    for &v in &c {
                        self.on[v] = false;
                    }
                    return Some(Some(c));
                }
                Some(false) => {}
                None => {
                    for &v in &self.path {
                        self.on[v] = false;
                    }
                    return None;
                }
            }
        }
        Some(None)
    }

    fn anchor_distances(&mut self, s: usize) {
        let n = self.g.n();
        self.dist = vec![usize::MAX; n];
        self.dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in self.g.neighbors(u) {
                if w > s && self.dist[w] == usize::MAX {
                    self.dist[w] = self.dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    fn extend(&mut self, s: usize, len: usize) -> Option<bool> {
        self.used += 1;
        if self.used > self.budget {
            return None;
        }
        let u = *self.path.last().unwrap();
        let depth = self.path.len();
        if depth == len {
            return Some(self.g.has_edge(u, s));
        }
        for &w in self.g.neighbors(u) {
            if w <= s || self.on[w] || self.dist[w] == usize::MAX || self.dist[w] > len - depth {
                continue;
            }
            self.on[w] = true;
            self.path.push(w);
            match self.extend(s, len) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            self.path.pop();
            self.on[w] = false;
        }
        Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReciprocalSums {
    /// `L(G) = Σ 1/t` over `C(G)`.
    #[serde(serialize_with = "big_ratio_as_string")]
    pub l: BigRational,
    /// `L∘(G)`, odd lengths only.
    #[serde(serialize_with = "big_ratio_as_string")]
    pub l_odd: BigRational,
    /// Set when the spectrum is partial, so both sums are lower bounds.
    pub lower_bounds: bool,
}

pub fn l_and_l_odd(spec: &CycleSpectrum) -> ReciprocalSums {
    let mut l = BigRational::zero();
    let mut l_odd = BigRational::zero();
    for &t in &spec.lengths {
        let r = BigRational::new(BigInt::from(1), BigInt::from(t));
        if t % 2 == 1 {
            l_odd += &r;
        }
        l += r;
    }
    ReciprocalSums {
        l,
        l_odd,
        lower_bounds: !spec.is_exact(),
    }
}

/// Sum of `1/t` over the given lengths.
pub fn reciprocal_sum<I: IntoIterator<Item = usize>>(lengths: I) -> BigRational {
    lengths
        .into_iter()
        .fold(BigRational::zero(), |acc, t| acc + BigRational::new(BigInt::from(1), BigInt::from(t)))
}

/// Number of natural-log applications needed to bring `x` below one.
pub fn log_star(x: f64) -> Result<u32> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!("log* needs a positive finite argument, got {x}")));
    }
    let mut v = x;
    let mut j = 0;
    while v >= 1.0 {
        v = v.ln();
        j += 1;
    }
    Ok(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;
    use num_traits::ToPrimitive;

    #[test]
    fn named_spectra() {
        assert_eq!(cycle_spectrum(&named::complete_bipartite(4)).lengths, vec![4, 6, 8]);
        assert_eq!(cycle_spectrum(&named::petersen()).lengths, vec![5, 6, 8, 9]);
        assert_eq!(cycle_spectrum(&named::complete(5)).lengths, vec![3, 4, 5]);
        assert!(cycle_spectrum(&named::path(6)).lengths.is_empty());
        for g in [named::petersen(), named::complete(6), named::cycle(9)] {
            let s = cycle_spectrum(&g);
            s.validate(&g).unwrap();
            assert!(s.is_exact());
        }
    }

    #[test]
    fn budgeted_search_agrees_when_unbounded() {
        for g in [named::petersen(), named::complete_bipartite(4), named::cycle(7)] {
            let exact = cycle_spectrum(&g);
            let dfs = cycle_spectrum_with(&g, 0, u64::MAX);
            assert!(dfs.is_exact());
            assert_eq!(dfs.lengths, exact.lengths);
            dfs.validate(&g).unwrap();
        }
        let tiny = cycle_spectrum_with(&named::petersen(), 0, 10);
        assert!(matches!(tiny.mode, SpectrumMode::Partial { .. }));
        tiny.validate(&named::petersen()).unwrap();
    }

    #[test]
    fn reciprocal_sums() {
        let k5 = l_and_l_odd(&cycle_spectrum(&named::complete(5)));
        assert_eq!(k5.l, BigRational::new(47.into(), 60.into()));
        assert_eq!(k5.l_odd, BigRational::new(8.into(), 15.into()));
        let p = l_and_l_odd(&cycle_spectrum(&named::petersen()));
        assert_eq!(p.l_odd, BigRational::new(14.into(), 45.into()));
        let f = l_and_l_odd(&cycle_spectrum(&named::path(4)));
        assert!(f.l.is_zero() && f.l_odd.is_zero());
        assert!((reciprocal_sum([3, 5, 7, 9]).to_f64().unwrap() - 0.787_301_587).abs() < 1e-8);
    }

    #[test]
    fn log_star_values() {
        assert_eq!(log_star(0.5).unwrap(), 0);
        assert_eq!(log_star(2.0).unwrap(), 1);
        assert_eq!(log_star(16.0).unwrap(), 3);
        assert_eq!(log_star(9.0).unwrap(), 2);
        assert_eq!(log_star(1e6).unwrap(), 3);
        assert_eq!(log_star(1e9).unwrap(), 4);
        assert!(log_star(0.0).is_err());
        assert!(log_star(-1.0).is_err());
    }

    #[test]
    fn runs() {
        let s = cycle_spectrum(&named::petersen());
        assert_eq!(s.longest_consecutive_run(), Some((5, 2)));
        assert_eq!(cycle_spectrum(&named::complete(7)).longest_consecutive_run(), Some((3, 5)));
    }
}
