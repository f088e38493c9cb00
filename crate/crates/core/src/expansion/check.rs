//! Expansion predicates decided by enumeration, with certificates.

use std::collections::HashSet;

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::independence::enumerate_maximal_independent_sets;
use crate::util::ratio_as_string;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExpansionKind {
    IndependentSets,
    WeakIndependentSets,
    AllSets,
    WeakAllSets,
}

/// Proof by enumeration that every qualifying set `X` has `|∂X| > k|X|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionCertificate {
    pub kind: ExpansionKind,
    #[serde(serialize_with = "ratio_as_string")]
    pub k: Rational64,
    /// Size cap for the all-sets kinds.
    pub t: Option<usize>,
    /// The vertex whose exemption makes a weak kind hold. For independent
    /// sets every set containing it is exempt; for all sets only `{v}` is.
    /// `None` when nothing needed exempting.
    pub exempt_vertex: Option<usize>,
    /// Every qualifying set of at most this size was checked.
    pub verified_up_to: usize,
    /// Whether every qualifying set was checked.
    pub exhaustive: bool,
    pub sets_checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionViolation {
    pub kind: ExpansionKind,
    #[serde(serialize_with = "ratio_as_string")]
    pub k: Rational64,
    pub t: Option<usize>,
    pub set: VertexSet,
    pub boundary: VertexSet,
    /// For weak kinds: the exemption that leaves the fewest violations.
    pub exempt_vertex: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ExpansionOutcome {
    Certified(ExpansionCertificate),
    Violated(ExpansionViolation),
}

impl ExpansionOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, ExpansionOutcome::Certified(_))
    }

    pub fn certificate(&self) -> Option<&ExpansionCertificate> {
        match self {
            ExpansionOutcome::Certified(c) => Some(c),
            ExpansionOutcome::Violated(_) => None,
        }
    }

    pub fn violation(&self) -> Option<&ExpansionViolation> {
        match self {
            ExpansionOutcome::Certified(_) => None,
            ExpansionOutcome::Violated(v) => Some(v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Enumerate every independent set up to this many vertices.
    pub exhaustive_n: usize,
    pub set_budget: u64,
    pub samples: u64,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions::from_config(&Config::default())
    }
}

impl CheckOptions {
    pub fn from_config(c: &Config) -> Self {
        CheckOptions {
            exhaustive_n: c.limits.expansion_n,
            set_budget: c.budgets.expansion_sets,
            samples: c.budgets.expansion_samples,
            seed: c.seeds.master,
        }
    }
}

/// Graph data for the mask-based enumerations.
struct Masks {
    n: usize,
    adj: Vec<u64>,
    /// `k = num / den` with `den > 0`.
    num: i128,
    den: i128,
}

impl Masks {
    fn new(g: &Graph, k: Rational64) -> Result<Masks> {
        if k < Rational64::from_integer(0) {
            return Err(Error::domain(format!("expansion factor must be non-negative, got {k}")));
        }
        Ok(Masks {
            n: g.n(),
            adj: g.adjacency_masks()?,
            num: *k.numer() as i128,
            den: *k.denom() as i128,
        })
    }

    fn boundary(&self, set: u64) -> u64 {
        let mut b = 0;
        let mut m = set;
        while m != 0 {
            b |= self.adj[m.trailing_zeros() as usize];
            m &= m - 1;
        }
        b & !set
    }

    /// `|∂X| <= k|X|`.
    fn violates(&self, set: u64) -> bool {
        let b = self.boundary(set).count_ones() as i128;
        self.den * b <= self.num * set.count_ones() as i128
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn set(&self, mask: u64) -> VertexSet {
        VertexSet::from_mask(self.n, mask)
    }

    /// Independent sets in lexicographic order of their sorted vertex lists,
    /// up to `max_size` vertices. `visit` returns `true` to stop.
    fn independent_sets(&self, max_size: usize, visit: &mut dyn FnMut(u64) -> bool) -> bool {
        self.dfs(0, self.full(), max_size, visit)
    }

    fn dfs(&self, cur: u64, cand: u64, room: usize, visit: &mut dyn FnMut(u64) -> bool) -> bool {
        if room == 0 {
            return false;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = cur | 1 << v;
            if visit(next) || self.dfs(next, rest & !self.adj[v], room - 1, visit) {
                return true;
            }
        }
        false
    }
}

fn maximal_sets_sorted(g: &Graph, budget: u64) -> Result<Vec<u64>> {
    let mut sets = Vec::new();
    for s in enumerate_maximal_independent_sets(g) {
        if sets.len() as u64 >= budget {
            return Err(Error::Budget {
                budget,
                checked: sets.len() as u64,
            });
        }
        if !s.is_empty() {
            sets.push(s.to_mask().expect("n <= 64"));
        }
    }
    sets.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), lex_key(m)));
    Ok(sets)
}

/// Sort key giving lexicographic order of sorted vertex lists.
fn lex_key(mask: u64) -> Vec<usize> {
    VertexSet::from_mask(64, mask).to_vec()
}

/// Is every non-empty independent set `I` (avoiding `exempt`, if given)
/// expanding by more than `k`?
///
/// Maximal independent sets are tried first (largest first, then in
/// lexicographic order), then every independent set in lexicographic order.
/// Above `opts.exhaustive_n` vertices the second phase covers all sets up
/// to the largest size the budget allows, followed by seeded random subsets
/// of maximal sets.
fn first_violation(
    g: &Graph,
    m: &Masks,
    exempt: Option<usize>,
    opts: &CheckOptions,
) -> Result<(Option<u64>, usize, bool, u64)> {
    let skip = exempt.map_or(0, |v| 1u64 << v);
    let mut checked = 0u64;
    let maximal = maximal_sets_sorted(g, opts.set_budget)?;
    for &s in &maximal {
        checked += 1;
        if s & skip == 0 && m.violates(s) {
            return Ok((Some(s), 0, false, checked));
        }
    }
    let alpha = maximal.first().map_or(0, |s| s.count_ones() as usize);
    if g.n() <= opts.exhaustive_n {
        let mut found = None;
        let mut over = false;
        m.independent_sets(usize::MAX, &mut |s| {
            checked += 1;
            if checked > opts.set_budget {
                over = true;
                return true;
            }
            if s & skip == 0 && m.violates(s) {
                found = Some(s);
                return true;
            }
            false
        });
        if over {
            return Err(Error::Budget {
                budget: opts.set_budget,
                checked,
            });
        }
        return Ok((found, alpha, true, checked));
    }
    let mut verified = 0;
    for size in 1..=alpha {
        let mut found = None;
        let mut over = false;
        let mut level_checked = 0u64;
        m.independent_sets(size, &mut |s| {
            level_checked += 1;
            if checked + level_checked > opts.set_budget {
                over = true;
                return true;
            }
            if s & skip == 0 && m.violates(s) {
                found = Some(s);
                return true;
            }
            false
        });
        checked += level_checked;
        if found.is_some() {
            return Ok((found, verified, false, checked));
        }
        if over {
            break;
        }
        verified = size;
    }
    if verified == alpha {
        return Ok((None, alpha, true, checked));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.samples {
        let base = maximal[rng.gen_range(0..maximal.len())] & !skip;
        let sub = base & rng.gen::<u64>();
        checked += 1;
        if sub != 0 && m.violates(sub) {
            return Ok((Some(sub), verified, false, checked));
        }
    }
    Ok((None, verified, false, checked))
}

pub fn check_independent_set_expansion(g: &Graph, k: Rational64, weak: bool) -> Result<ExpansionOutcome> {
    check_independent_set_expansion_with(g, k, weak, &CheckOptions::default())
}

/// Definition of (weak) `k`-expansion on independent sets. In weak mode a
/// vertex `v` is sought such that every independent set avoiding `v`
/// expands; on failure the reported exemption is the vertex lying in the
/// most violating sets.
pub fn check_independent_set_expansion_with(
    g: &Graph,
    k: Rational64,
    weak: bool,
    opts: &CheckOptions,
) -> Result<ExpansionOutcome> {
    let m = Masks::new(g, k)?;
    if !weak {
        return exempting(g, &m, k, None, ExpansionKind::IndependentSets, opts);
    }
    // Gather every violator (deduplicated) to find the best exemption.
    let mut counts = vec![0u64; g.n()];
    let mut common = m.full();
    let mut any = false;
    let mut seen = HashSet::new();
    let mut checked = 0u64;
    let mut note = |s: u64, counts: &mut Vec<u64>| {
        if seen.insert(s) && m.violates(s) {
            any = true;
            common &= s;
            for v in VertexSet::from_mask(64, s).iter() {
                counts[v] += 1;
            }
        }
    };
    if g.n() <= opts.exhaustive_n {
        let mut over = false;
        m.independent_sets(usize::MAX, &mut |s| {
            checked += 1;
            if checked > opts.set_budget {
                over = true;
                return true;
            }
            note(s, &mut counts);
            false
        });
        if over {
            return Err(Error::Budget {
                budget: opts.set_budget,
                checked,
            });
        }
    } else {
        for s in maximal_sets_sorted(g, opts.set_budget)? {
            note(s, &mut counts);
        }
        m.independent_sets(2, &mut |s| {
            note(s, &mut counts);
            false
        });
    }
    let best = if !any {
        None
    } else if common != 0 {
        Some(common.trailing_zeros() as usize)
    } else {
        (0..g.n()).max_by_key(|&v| (counts[v], std::cmp::Reverse(v)))
    };
    let outcome = exempting(g, &m, k, best, ExpansionKind::WeakIndependentSets, opts)?;
    Ok(match outcome {
        ExpansionOutcome::Certified(mut c) => {
            c.exempt_vertex = best;
            ExpansionOutcome::Certified(c)
        }
        v => v,
    })
}

/// Every independent set avoiding `v` expands by more than `k`.
pub fn check_independent_set_expansion_exempting(
    g: &Graph,
    k: Rational64,
    v: usize,
    opts: &CheckOptions,
) -> Result<ExpansionOutcome> {
    g.check_vertex(v)?;
    let m = Masks::new(g, k)?;
    exempting(g, &m, k, Some(v), ExpansionKind::WeakIndependentSets, opts)
}

fn exempting(
    g: &Graph,
    m: &Masks,
    k: Rational64,
    exempt: Option<usize>,
    kind: ExpansionKind,
    opts: &CheckOptions,
) -> Result<ExpansionOutcome> {
    let (found, verified_up_to, exhaustive, sets_checked) = first_violation(g, m, exempt, opts)?;
    Ok(match found {
        Some(s) => ExpansionOutcome::Violated(ExpansionViolation {
            kind,
            k,
            t: None,
            set: m.set(s),
            boundary: m.set(m.boundary(s)),
            exempt_vertex: exempt,
        }),
        None => ExpansionOutcome::Certified(ExpansionCertificate {
            kind,
            k,
            t: None,
            exempt_vertex: exempt,
            verified_up_to,
            exhaustive,
            sets_checked,
        }),
    })
}

fn binomial_sum(n: usize, t: usize) -> u128 {
    let mut total = 0u128;
    let mut c = 1u128;
    for i in 1..=t.min(n) {
        c = c * (n + 1 - i) as u128 / i as u128;
        total += c;
    }
    total
}

pub fn check_set_expansion(g: &Graph, k: Rational64, t: usize, weak: bool) -> Result<ExpansionOutcome> {
    check_set_expansion_with(g, k, t, weak, CheckOptions::default().set_budget)
}

/// Definition of (weak) `k`-expansion on sets of size at most `t`.
///
/// Sets are tried from size `t` down to 1, in increasing bitmask order within
/// a size. Weak mode exempts only the singleton `{v}`, where `v` is the
/// lowest vertex whose singleton violates.
pub fn check_set_expansion_with(
    g: &Graph,
    k: Rational64,
    t: usize,
    weak: bool,
    budget: u64,
) -> Result<ExpansionOutcome> {
    let m = Masks::new(g, k)?;
    let n = g.n();
    let t = t.min(n);
    let total = binomial_sum(n, t);
    if total > budget as u128 {
        return Err(Error::Budget {
            budget,
            checked: 0,
        });
    }
    let exempt = if weak {
        (0..n).find(|&v| m.violates(1 << v))
    } else {
        None
    };
    let kind = if weak {
        ExpansionKind::WeakAllSets
    } else {
        ExpansionKind::AllSets
    };
    let skip = exempt.map(|v| 1u64 << v);
    for size in (1..=t).rev() {
        let mut mask: u64 = if size == 64 { u64::MAX } else { (1u64 << size) - 1 };
        loop {
            if Some(mask) != skip && m.violates(mask) {
                return Ok(ExpansionOutcome::Violated(ExpansionViolation {
                    kind,
                    k,
                    t: Some(t),
                    set: m.set(mask),
                    boundary: m.set(m.boundary(mask)),
                    exempt_vertex: exempt,
                }));
            }
            match next_same_popcount(mask, n) {
                Some(next) => mask = next,
                None => break,
            }
        }
    }
    Ok(ExpansionOutcome::Certified(ExpansionCertificate {
        kind,
        k,
        t: Some(t),
        exempt_vertex: exempt,
        verified_up_to: t,
        exhaustive: true,
        sets_checked: total as u64,
    }))
}

/// Next larger mask with the same number of bits, within `n` bits.
fn next_same_popcount(mask: u64, n: usize) -> Option<u64> {
    let c = mask & mask.wrapping_neg();
    let r = mask.checked_add(c)?;
    let next = (((r ^ mask) >> 2) / c) | r;
    (n == 64 || next < 1u64 << n).then_some(next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    fn r(p: i64, q: i64) -> Rational64 {
        Rational64::new(p, q)
    }

    #[test]
    fn independent_set_examples() {
        assert!(check_independent_set_expansion(&named::complete(4), r(2, 1), false)
            .unwrap()
            .is_certified());

        let c6 = check_independent_set_expansion(&named::cycle(6), r(1, 1), false).unwrap();
        let v = c6.violation().unwrap();
        assert_eq!(v.set.to_vec(), vec![0, 2, 4]);
        assert_eq!(v.boundary.to_vec(), vec![1, 3, 5]);

        let p = check_independent_set_expansion(&named::petersen(), r(2, 1), false).unwrap();
        let v = p.violation().unwrap();
        assert_eq!(v.set.len(), 4);
        assert_eq!(v.boundary.len(), 6);
    }

    #[test]
    fn weak_independent_exempts_sets_through_v() {
        // K_4 plus a pendant vertex 4 on 0: only sets containing 4 fail k = 2.
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]).unwrap();
        assert!(!check_independent_set_expansion(&g, r(2, 1), false).unwrap().is_certified());
        let weak = check_independent_set_expansion(&g, r(2, 1), true).unwrap();
        assert_eq!(weak.certificate().unwrap().exempt_vertex, Some(4));
        // Two pendant vertices cannot both be exempt.
        let g2 = Graph::from_edges(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 5)],
        )
        .unwrap();
        let out = check_independent_set_expansion(&g2, r(2, 1), true).unwrap();
        let v = out.violation().unwrap();
        assert!(!v.set.contains(v.exempt_vertex.unwrap()));
    }

    #[test]
    fn set_examples() {
        assert!(check_set_expansion(&named::complete(5), r(2, 1), 1, false).unwrap().is_certified());
        let c8 = check_set_expansion(&named::cycle(8), r(2, 1), 2, false).unwrap();
        let v = c8.violation().unwrap();
        assert_eq!(v.set.to_vec(), vec![0, 1]);
        assert_eq!(v.boundary.to_vec(), vec![2, 7]);
        let k44 = check_set_expansion(&named::complete_bipartite(4), r(2, 1), 2, false).unwrap();
        let v = k44.violation().unwrap();
        assert_eq!(v.set.to_vec(), vec![0, 1]);
        assert_eq!(v.boundary.len(), 4);
    }

    #[test]
    fn weak_sets_exempt_only_the_singleton() {
        // Vertex 4 has degree 1; with k = 1 and T = 1 only {4} fails.
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]).unwrap();
        let weak = check_set_expansion(&g, r(1, 1), 1, true).unwrap();
        assert_eq!(weak.certificate().unwrap().exempt_vertex, Some(4));
        // {0, 4} has boundary {1, 2, 3}: 3 <= 2·2 fails k = 2 even in weak mode.
        let weak2 = check_set_expansion(&g, r(2, 1), 2, true).unwrap();
        assert!(!weak2.is_certified());
    }

    #[test]
    fn budget_errors() {
        assert!(matches!(
            check_set_expansion_with(&named::cycle(20), r(1, 1), 5, false, 100),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn sampled_mode_reports_partial_bound() {
        let g = named::complete(30);
        let opts = CheckOptions {
            exhaustive_n: 10,
            ..CheckOptions::default()
        };
        let out = check_independent_set_expansion_with(&g, r(2, 1), false, &opts).unwrap();
        let c = out.certificate().unwrap();
        assert_eq!(c.verified_up_to, 1);
        assert!(c.exhaustive);
    }
}
