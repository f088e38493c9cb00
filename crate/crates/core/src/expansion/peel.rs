//! Peeling to an expanding induced subgraph, and the 2-connected piece
//! that is weakly expanding.

use num_rational::Rational64;
use serde::Serialize;

use super::check::{
    check_independent_set_expansion_exempting, check_independent_set_expansion_with,
    check_set_expansion_with, CheckOptions, ExpansionCertificate, ExpansionOutcome,
};
use crate::error::{Error, Result};
use crate::graph::{block_decomposition, boundary, is_clique_free, Graph, Subgraph, VertexSet};
use crate::independence::alpha;
use crate::util::{ratio_as_string, ratio_to_f64};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelStep {
    /// Independent in the residual graph at this step.
    pub set: VertexSet,
    /// Its boundary in the residual graph.
    pub boundary: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelingTrace {
    pub removed: Vec<PeelStep>,
    pub survivor: VertexSet,
}

impl PeelingTrace {
    /// Union of the removed independent sets; independent in the host.
    pub fn removed_union(&self, n: usize) -> VertexSet {
        let mut u = VertexSet::new(n);
        for step in &self.removed {
            u.union_with(&step.set);
        }
        u
    }

    /// Removed sets, boundaries and survivor partition `V(G)`.
    pub fn is_partition(&self, n: usize) -> bool {
        let mut seen = VertexSet::new(n);
        let mut total = 0;
        let parts = self
            .removed
            .iter()
            .flat_map(|s| [&s.set, &s.boundary])
            .chain(std::iter::once(&self.survivor));
        for part in parts {
            if !seen.is_disjoint(part) {
                return false;
            }
            seen.union_with(part);
            total += part.len();
        }
        total == n
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PeelResult {
    #[serde(serialize_with = "ratio_as_string")]
    pub k: Rational64,
    pub trace: PeelingTrace,
    /// The survivor as a graph, with `map` back to host ids.
    #[serde(skip)]
    pub subgraph: Subgraph,
    /// Certificate for the survivor when it is non-empty.
    pub certificate: Option<ExpansionCertificate>,
    /// When nothing survives: the union of removed sets, of size at least
    /// `n / (k + 1)`.
    pub independent_set: Option<VertexSet>,
    /// `α(G) < n / (k + 1)`.
    pub hypothesis_holds: bool,
}

pub fn peel_to_expander(g: &Graph, k: Rational64) -> Result<PeelResult> {
    peel_to_expander_with(g, k, &CheckOptions::default())
}

/// Repeatedly removes an independent set `I` with `|∂I| <= k|I|` together
/// with its boundary, taking the first violation in enumeration order.
pub fn peel_to_expander_with(g: &Graph, k: Rational64, opts: &CheckOptions) -> Result<PeelResult> {
    let n = g.n();
    let mut residual = g.vertex_set();
    let mut removed = Vec::new();
    let certificate = loop {
        if residual.is_empty() {
            break None;
        }
        let sub = g.induced(&residual);
        match check_independent_set_expansion_with(&sub.graph, k, false, opts)? {
            ExpansionOutcome::Certified(c) => break Some(c),
            ExpansionOutcome::Violated(v) => {
                let set = sub.set_to_host(&v.set, n);
                let bound = boundary(g, &set)?.intersection(&residual);
                residual.difference_with(&set);
                residual.difference_with(&bound);
                removed.push(PeelStep { set, boundary: bound });
            }
        }
    };
    let trace = PeelingTrace {
        removed,
        survivor: residual.clone(),
    };
    debug_assert!(trace.is_partition(n));
    let independent_set = residual.is_empty().then(|| trace.removed_union(n));
    let a = alpha(g).value as i64;
    let hypothesis_holds = Rational64::from_integer(a) * (k + 1) < Rational64::from_integer(n as i64);
    Ok(PeelResult {
        k,
        subgraph: g.induced(&residual),
        trace,
        certificate,
        independent_set,
        hypothesis_holds,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EndblockResult {
    /// Vertices of `F` in the host.
    pub vertices: VertexSet,
    #[serde(skip)]
    pub f: Subgraph,
    /// Host id of the exempt vertex: the endblock's cut vertex, or the lowest
    /// vertex when `F` is the whole survivor component.
    pub exempt_vertex: usize,
    /// `F` is a 2-connected component of the survivor rather than an endblock.
    pub whole_component: bool,
    /// `F` has at least three vertices and no cut vertex.
    pub two_connected: bool,
    pub certificate: ExpansionCertificate,
    pub peel: PeelResult,
}

pub fn weakly_expanding_endblock(g: &Graph, k: Rational64) -> Result<EndblockResult> {
    weakly_expanding_endblock_with(g, k, &CheckOptions::default())
}

/// A 2-connected subgraph `F` of the peeled survivor `H` that is weakly
/// `k`-expanding on independent sets. Prefers a 2-connected component of
/// `H`; otherwise the largest endblock, exempting its cut vertex.
pub fn weakly_expanding_endblock_with(g: &Graph, k: Rational64, opts: &CheckOptions) -> Result<EndblockResult> {
    let peel = peel_to_expander_with(g, k, opts)?;
    if peel.trace.survivor.is_empty() {
        return Err(Error::HypothesisFailure(format!(
            "peeling with k = {k} removed every vertex; independent set of size {} found",
            peel.independent_set.as_ref().map_or(0, VertexSet::len)
        )));
    }
    let h = &peel.subgraph;
    let blocks = block_decomposition(&h.graph);
    let whole = blocks
        .blocks
        .iter()
        .filter(|b| b.len() >= 3 && b.is_disjoint(&blocks.cut_vertices))
        .max_by_key(|b| b.len());
    let (block, cut, whole_component) = match whole {
        Some(b) => (b.clone(), b.first().expect("non-empty"), true),
        None => match blocks
            .endblocks
            .iter()
            .max_by_key(|&&(i, _)| (blocks.blocks[i].len(), std::cmp::Reverse(i)))
        {
            Some(&(i, cut)) => (blocks.blocks[i].clone(), cut, false),
            None => {
                let b = blocks
                    .blocks
                    .iter()
                    .max_by_key(|b| b.len())
                    .expect("non-empty survivor has a block");
                (b.clone(), b.first().expect("non-empty"), true)
            }
        },
    };
    let vertices = h.set_to_host(&block, g.n());
    let f = g.induced(&vertices);
    let exempt_host = h.to_host(cut);
    let exempt_local = f.from_host(exempt_host).expect("cut vertex lies in its block");
    let certificate = match check_independent_set_expansion_exempting(&f.graph, k, exempt_local, opts)? {
        ExpansionOutcome::Certified(mut c) => {
            c.exempt_vertex = Some(exempt_host);
            c
        }
        ExpansionOutcome::Violated(v) => {
            return Err(Error::PropositionViolation(format!(
                "endblock fails weak expansion on {:?}",
                v.set
            )))
        }
    };
    let two_connected = f.graph.n() >= 3 && block_decomposition(&f.graph).is_two_connected(f.graph.n());
    Ok(EndblockResult {
        vertices,
        f,
        exempt_vertex: exempt_host,
        whole_component,
        two_connected,
        certificate,
        peel,
    })
}

/// An increasing bijection of `[1, ∞)` with a known inverse.
pub trait SpeedFunction {
    fn apply(&self, x: f64) -> f64;
    fn inverse(&self, y: f64) -> f64;
    fn name(&self) -> String;
}

pub struct IdentitySpeed;

impl SpeedFunction for IdentitySpeed {
    fn apply(&self, x: f64) -> f64 {
        x
    }
    fn inverse(&self, y: f64) -> f64 {
        y
    }
    fn name(&self) -> String {
        "identity".into()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StrengtheningReport {
    #[serde(serialize_with = "ratio_as_string")]
    pub k: Rational64,
    /// Expansion factor handed to the peeling (`3k` or `6k`).
    #[serde(serialize_with = "ratio_as_string")]
    pub peel_factor: Rational64,
    pub alpha: usize,
    pub n: usize,
    pub hypothesis_holds: bool,
    pub endblock: Option<EndblockResult>,
    /// Largest `T` for which weak 2-expansion on sets of size at most `T`
    /// was certified by exhaustive enumeration on the endblock.
    pub certified_t: Option<usize>,
    /// Why the scan for larger `T` stopped.
    pub stopped_by: Option<String>,
    /// Size bound the lemma promises (`k² ln k` or `f^{-1}(k)`).
    pub target_t: f64,
    pub target_met: Option<bool>,
    /// Whether the lemma's own side condition holds (`k >= e^15` for the
    /// triangle-free form).
    pub lemma_applies: bool,
}

fn measure_t(f: &Graph, max_t: usize, budget: u64) -> Result<(usize, String)> {
    let two = Rational64::from_integer(2);
    let mut certified = 0;
    for t in 1..=max_t.min(f.n()) {
        match check_set_expansion_with(f, two, t, true, budget) {
            Ok(ExpansionOutcome::Certified(_)) => certified = t,
            Ok(ExpansionOutcome::Violated(v)) => {
                return Ok((certified, format!("violation at T = {t}: {:?}", v.set)))
            }
            Err(Error::Budget { .. }) => return Ok((certified, format!("budget reached at T = {t}"))),
            Err(e) => return Err(e),
        }
    }
    Ok((certified, format!("scan limit T = {}", max_t.min(f.n()))))
}

fn strengthen(
    g: &Graph,
    k: Rational64,
    factor: i64,
    target_t: f64,
    lemma_applies: bool,
    max_t: usize,
    opts: &CheckOptions,
) -> Result<StrengtheningReport> {
    let n = g.n();
    let a = alpha(g).value;
    let peel_factor = k * factor;
    let hypothesis_holds =
        Rational64::from_integer(a as i64) * (peel_factor + 1) < Rational64::from_integer(n as i64);
    let mut report = StrengtheningReport {
        k,
        peel_factor,
        alpha: a,
        n,
        hypothesis_holds,
        endblock: None,
        certified_t: None,
        stopped_by: None,
        target_t,
        target_met: None,
        lemma_applies,
    };
    if !hypothesis_holds {
        return Ok(report);
    }
    let end = weakly_expanding_endblock_with(g, peel_factor, opts)?;
    let (t, why) = measure_t(&end.f.graph, max_t, opts.set_budget)?;
    report.certified_t = Some(t);
    report.stopped_by = Some(why);
    report.target_met = Some(t as f64 >= target_t);
    report.endblock = Some(end);
    Ok(report)
}

pub fn triangle_free_strengthening(g: &Graph, k: Rational64) -> Result<StrengtheningReport> {
    triangle_free_strengthening_with(g, k, 6, &CheckOptions::default())
}

/// Triangle-free strengthening: peel with `3k`, take the weakly expanding
/// endblock and measure how far weak 2-expansion on small sets extends.
pub fn triangle_free_strengthening_with(
    g: &Graph,
    k: Rational64,
    max_t: usize,
    opts: &CheckOptions,
) -> Result<StrengtheningReport> {
    let tri = is_clique_free(g, 3)?;
    if let Some(w) = tri.witness {
        return Err(Error::Precondition(format!("graph has a triangle {w:?}")));
    }
    let kf = ratio_to_f64(&k);
    let target = if kf > 1.0 { kf * kf * kf.ln() } else { 0.0 };
    strengthen(g, k, 3, target, kf >= 15f64.exp(), max_t, opts)
}

pub fn hereditary_strengthening(g: &Graph, k: Rational64, speed: &dyn SpeedFunction) -> Result<StrengtheningReport> {
    hereditary_strengthening_with(g, k, speed, 6, &CheckOptions::default())
}

/// Hereditary-property strengthening: peel with `6k`, then compare the
/// measured weak 2-expansion range with `f^{-1}(k)`.
pub fn hereditary_strengthening_with(
    g: &Graph,
    k: Rational64,
    speed: &dyn SpeedFunction,
    max_t: usize,
    opts: &CheckOptions,
) -> Result<StrengtheningReport> {
    let kf = ratio_to_f64(&k);
    strengthen(g, k, 6, speed.inverse(kf), kf >= 1.0, max_t, opts)
}
