//! Independence number, the independence ratio `ι(G) = max |X| / α(X)`, and
//! enumeration of maximal independent sets.

mod bits;
mod maximal;
mod mis;

pub use maximal::{enumerate_maximal_independent_sets, MaximalIndependentSets};

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::util::ratio_as_string;
use mis::MaxIndependent;

/// Default vertex limit for the full subset table.
pub const DEFAULT_ALPHA_TABLE_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaResult {
    pub value: usize,
    pub witness: VertexSet,
}

/// Exact independence number with a witness set.
pub fn alpha(g: &Graph) -> AlphaResult {
    let witness = max_independent_in(g, &g.vertex_set());
    AlphaResult {
        value: witness.len(),
        witness,
    }
}

/// A maximum independent subset of `within` (same universe as `g`).
pub fn max_independent_in(g: &Graph, within: &VertexSet) -> VertexSet {
    let n = g.n();
    match (g.adjacency_masks(), within.to_mask()) {
        (Ok(adj), Some(cand)) => VertexSet::from_mask(n, MaxIndependent::solve(&adj, cand, 0u64)),
        _ => {
            let adj: Vec<VertexSet> = (0..n).map(|v| g.neighbor_set(v).clone()).collect();
            MaxIndependent::solve(&adj, within.clone(), VertexSet::new(n))
        }
    }
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.neighbor_set(v).is_disjoint(s))
}

/// `α(X)` for every subset `X`, indexed by the subset's bitmask.
#[derive(Clone, Debug)]
pub struct AlphaTable {
    n: usize,
    values: Vec<u8>,
}

impl AlphaTable {
    pub fn build(g: &Graph) -> Result<AlphaTable> {
        Self::build_with_limit(g, DEFAULT_ALPHA_TABLE_LIMIT)
    }

    /// Fills the table with `α(X) = max(α(X − v), 1 + α(X − N[v]))`, `v`
    /// the lowest vertex of `X`.
    pub fn build_with_limit(g: &Graph, limit: usize) -> Result<AlphaTable> {
        let n = g.n();
        if n > limit.min(30) {
            return Err(Error::SizeLimit {
                what: "alpha table",
                size: n,
                limit: limit.min(30),
            });
        }
        let adj = g.adjacency_masks()?;
        let closed: Vec<u64> = adj.iter().enumerate().map(|(v, &m)| m | 1 << v).collect();
        let mut values = vec![0u8; 1usize << n];
        for mask in 1..values.len() {
            let v = mask.trailing_zeros() as usize;
            let skip = values[mask & !(1 << v)];
            let take = 1 + values[mask & !(closed[v] as usize)];
            values[mask] = skip.max(take);
        }
        Ok(AlphaTable { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self, mask: u64) -> usize {
        self.values[mask as usize] as usize
    }

    pub fn alpha_of(&self, s: &VertexSet) -> usize {
        self.alpha(s.to_mask().expect("table graphs fit in one word"))
    }

    /// Re-checks the recurrence at one entry against `g`.
    pub fn entry_consistent(&self, g: &Graph, mask: u64) -> bool {
        if mask == 0 {
            return self.alpha(0) == 0;
        }
        let v = mask.trailing_zeros() as usize;
        let closed = g.neighbor_set(v).to_mask().expect("one word") | 1 << v;
        let expect = self.alpha(mask & !(1 << v)).max(1 + self.alpha(mask & !closed));
        self.alpha(mask) == expect
    }
}

pub fn build_alpha_table(g: &Graph) -> Result<AlphaTable> {
    AlphaTable::build(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IotaMode {
    /// Maximum over every non-empty subset.
    Exact,
    /// Best ratio over a peeling sequence of subsets; each `α` is exact, so
    /// the value is a certified lower bound.
    LowerBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IotaResult {
    #[serde(serialize_with = "ratio_as_string")]
    pub value: Rational64,
    pub argmax_set: VertexSet,
    pub alpha_of_argmax: usize,
    pub mode: IotaMode,
}

impl IotaResult {
    pub fn is_exact(&self) -> bool {
        self.mode == IotaMode::Exact
    }
}

pub fn iota(g: &Graph) -> Result<IotaResult> {
    iota_with_limit(g, DEFAULT_ALPHA_TABLE_LIMIT)
}

/// Independence ratio over non-empty subsets. Exact up to `limit` vertices.
pub fn iota_with_limit(g: &Graph, limit: usize) -> Result<IotaResult> {
    if g.n() == 0 {
        return Err(Error::domain("independence ratio of the empty graph is undefined"));
    }
    if g.n() > limit.min(30) {
        return Ok(iota_lower_bound(g));
    }
    let table = AlphaTable::build_with_limit(g, limit)?;
    let (mut best_mask, mut best_size, mut best_alpha) = (1u64, 1u64, 1u64);
    for mask in 1..(1u64 << g.n()) {
        let size = mask.count_ones() as u64;
        let a = table.alpha(mask) as u64;
        if size * best_alpha > best_size * a {
            (best_mask, best_size, best_alpha) = (mask, size, a);
        }
    }
    Ok(IotaResult {
        value: Rational64::new(best_size as i64, best_alpha as i64),
        argmax_set: VertexSet::from_mask(g.n(), best_mask),
        alpha_of_argmax: best_alpha as usize,
        mode: IotaMode::Exact,
    })
}

/// Starts from `V(G)` and repeatedly drops the vertex of a maximum
/// independent set with the fewest neighbors inside the current set.
fn iota_lower_bound(g: &Graph) -> IotaResult {
    let mut current = g.vertex_set();
    let mut best: Option<(VertexSet, usize)> = None;
    while !current.is_empty() {
        let witness = max_independent_in(g, &current);
        let a = witness.len();
        let better = match &best {
            None => true,
            Some((set, ba)) => current.len() * ba > set.len() * a,
        };
        if better {
            best = Some((current.clone(), a));
        }
        let drop = witness
            .iter()
            .min_by_key(|&v| (g.neighbor_set(v).intersection_len(&current), v))
            .expect("non-empty set has a non-empty independent set");
        current.remove(drop);
    }
    let (set, a) = best.expect("graph is non-empty");
    IotaResult {
        value: Rational64::new(set.len() as i64, a as i64),
        argmax_set: set,
        alpha_of_argmax: a,
        mode: IotaMode::LowerBound,
    }
}

/// `n (d ln d − d + 1) / (d − 1)²`, the independence bound for triangle-free
/// graphs of average degree `d`.
pub fn shearer_lower_bound(n: f64, d: f64) -> Result<f64> {
    if d.is_nan() || d < 2.0 {
        return Err(Error::domain(format!("degree parameter must be at least 2, got {d}")));
    }
    if n < 0.0 {
        return Err(Error::domain("vertex count must be non-negative"));
    }
    Ok(n * (d * d.ln() - d + 1.0) / ((d - 1.0) * (d - 1.0)))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TriangleFreeAlphaBound {
    pub value: f64,
    /// Whether `n >= e^15`, where the bound is guaranteed.
    pub valid: bool,
}

/// `(n ln n / 2)^{1/2}`, a lower bound on `α` of triangle-free graphs on
/// `n >= e^15` vertices.
pub fn triangle_free_alpha_bound(n: f64) -> TriangleFreeAlphaBound {
    let value = if n <= 1.0 { 0.0 } else { (n * n.ln() / 2.0).sqrt() };
    TriangleFreeAlphaBound {
        value,
        valid: n >= 15f64.exp(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{kneser, named};

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&named::complete_bipartite(5)).value, 5);
        let p = alpha(&named::petersen());
        assert_eq!(p.value, 4);
        assert!(is_independent(&named::petersen(), &p.witness));
        assert_eq!(alpha(&named::cycle(7)).value, 3);
        assert_eq!(alpha(&Graph::empty(0)).value, 0);
        assert_eq!(alpha(&named::cycle(80)).value, 40);
    }

    #[test]
    fn table_examples() {
        let t = AlphaTable::build(&named::complete(3)).unwrap();
        assert!((1..8).all(|m| t.alpha(m) == 1));
        let e = AlphaTable::build(&Graph::empty(3)).unwrap();
        assert!((0..8u64).all(|m| e.alpha(m) == m.count_ones() as usize));
        let c5 = named::cycle(5);
        let t = AlphaTable::build(&c5).unwrap();
        assert_eq!(t.alpha(0b11111), 2);
        for v in 0..5 {
            assert_eq!(t.alpha(0b11111 & !(1 << v)), 2);
        }
        assert!((0..32).all(|m| t.entry_consistent(&c5, m)));
        assert!(matches!(
            AlphaTable::build(&named::cycle(25)),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn iota_examples() {
        for t in 1..=6 {
            assert_eq!(iota(&named::complete(t)).unwrap().value, Rational64::from_integer(t as i64));
        }
        let c5 = iota(&named::cycle(5)).unwrap();
        assert_eq!(c5.value, Rational64::new(5, 2));
        assert_eq!(c5.argmax_set.len(), 5);
        assert_eq!(
            iota(&kneser(6, 2).unwrap()).unwrap().value,
            Rational64::from_integer(3)
        );
        assert!(iota(&Graph::empty(0)).is_err());
    }

    #[test]
    fn iota_lower_bound_mode() {
        let g = named::cycle(27);
        let r = iota(&g).unwrap();
        assert_eq!(r.mode, IotaMode::LowerBound);
        assert!(r.value >= Rational64::new(27, 13));
        assert_eq!(max_independent_in(&g, &r.argmax_set).len(), r.alpha_of_argmax);
    }

    #[test]
    fn closed_form_bounds() {
        let v = shearer_lower_bound(100.0, 2.0).unwrap();
        assert!((v - 100.0 * (2.0 * 2f64.ln() - 1.0)).abs() < 1e-12);
        assert!((v - 38.629).abs() < 1e-3);
        let e = std::f64::consts::E;
        let at_e = shearer_lower_bound(10.0, e).unwrap();
        assert!((at_e - 10.0 / ((e - 1.0) * (e - 1.0))).abs() < 1e-12);
        assert_eq!(shearer_lower_bound(0.0, 3.0).unwrap(), 0.0);
        assert!(shearer_lower_bound(10.0, 1.5).is_err());

        let big = triangle_free_alpha_bound(15f64.exp());
        assert!(big.valid);
        assert!((big.value - 4951.7).abs() < 1.0);
        let small = triangle_free_alpha_bound(100.0);
        assert!(!small.valid);
        assert!((small.value - 15.17).abs() < 0.01);
        assert_eq!(triangle_free_alpha_bound(1.0).value, 0.0);
    }
}
