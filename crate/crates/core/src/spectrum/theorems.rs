//! Checkers that evaluate each theorem's hypothesis and conclusion on a
//! concrete graph and classify the outcome.

use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::consecutive::{consecutive_cycles, ConsecutiveCycles};
use super::cycles::{cycle_spectrum_with, l_and_l_odd, log_star, reciprocal_sum, CycleSpectrum};
use super::speed::CliqueFreeSpeed;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::expansion::{peel_to_expander_with, CheckOptions, SpeedFunction};
use crate::generators::{named, Sequence};
use crate::graph::{bfs_layers, is_bipartite, is_clique_free, Graph, VertexSet};
use crate::independence::{iota_with_limit, IotaResult};
use crate::rotation::{theta_subgraph_with, ChordedCycle, PosaOptions, ThetaCase, ThetaOutcome};
use crate::util::ratio_to_f64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Hypothesis and conclusion both hold.
    Pass,
    /// Hypothesis false.
    Vacuous,
    /// Hypothesis true, conclusion false.
    Violation,
    /// Not decidable within the configured limits.
    Undetermined,
}

impl Verdict {
    pub fn is_violation(self) -> bool {
        self == Verdict::Violation
    }
}

/// Limits shared by the checkers.
#[derive(Clone, Debug)]
pub struct CheckerLimits {
    pub alpha_n: usize,
    pub spectrum_n: usize,
    pub spectrum_nodes: u64,
    pub expansion: CheckOptions,
    pub posa: PosaOptions,
}

impl Default for CheckerLimits {
    fn default() -> Self {
        CheckerLimits::from_config(&Config::default())
    }
}

impl CheckerLimits {
    pub fn from_config(cfg: &Config) -> Self {
        CheckerLimits {
            alpha_n: cfg.limits.alpha_n,
            spectrum_n: cfg.limits.spectrum_n,
            spectrum_nodes: cfg.budgets.spectrum_nodes,
            expansion: CheckOptions::from_config(cfg),
            posa: PosaOptions::from_config(cfg),
        }
    }

    fn spectrum(&self, g: &Graph) -> CycleSpectrum {
        cycle_spectrum_with(g, self.spectrum_n, self.spectrum_nodes)
    }

    fn iota(&self, g: &Graph) -> Result<Option<IotaResult>> {
        if g.n() == 0 {
            return Ok(None);
        }
        iota_with_limit(g, self.alpha_n).map(Some)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IotaSummary {
    pub value: String,
    pub approx: f64,
    pub exact: bool,
}

fn summarize(i: &IotaResult) -> IotaSummary {
    IotaSummary {
        value: i.value.to_string(),
        approx: ratio_to_f64(&i.value),
        exact: i.is_exact(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LengthsReport {
    pub n: usize,
    pub sequence: String,
    pub iota: Option<IotaSummary>,
    /// `σ_1 · exp(8 log* n)`.
    pub threshold: f64,
    pub hypothesis: bool,
    pub spectrum: Vec<usize>,
    pub spectrum_exact: bool,
    /// Sequence terms present in the spectrum.
    pub hits: Vec<usize>,
    pub conclusion: bool,
    pub verdict: Verdict,
}

pub fn check_lengths_theorem(g: &Graph, sigma: &Sequence, limits: &CheckerLimits) -> Result<LengthsReport> {
    let n = g.n();
    let spec = limits.spectrum(g);
    let hits: Vec<usize> = spec
        .lengths
        .iter()
        .copied()
        .filter(|&l| sigma.iter().take_while(|&s| s <= l as u64).any(|s| s == l as u64))
        .collect();
    let conclusion = !hits.is_empty();
    let threshold = sigma.first() as f64 * (8.0 * log_star(n.max(1) as f64)? as f64).exp();
    // ι <= n, so a threshold above n settles the hypothesis without α.
    let iota = if (n as f64) < threshold { None } else { limits.iota(g)? };
    let (hypothesis, known) = match &iota {
        None => (false, true),
        Some(i) => (ratio_to_f64(&i.value) >= threshold, i.is_exact() || ratio_to_f64(&i.value) >= threshold),
    };
    let verdict = match (known, hypothesis, conclusion) {
        (false, _, _) => Verdict::Undetermined,
        (true, false, _) => Verdict::Vacuous,
        (true, true, true) => Verdict::Pass,
        (true, true, false) if spec.is_exact() => Verdict::Violation,
        _ => Verdict::Undetermined,
    };
    Ok(LengthsReport {
        n,
        sequence: sigma.name().into(),
        iota: iota.as_ref().map(summarize),
        threshold,
        hypothesis,
        spectrum: spec.lengths.clone(),
        spectrum_exact: spec.is_exact(),
        hits,
        conclusion,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OddInterval {
    pub index: u32,
    pub low: f64,
    pub high: f64,
    pub odd_count: u64,
    pub present: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecipReport {
    pub n: usize,
    pub iota: Option<IotaSummary>,
    pub l_odd: String,
    pub l_odd_approx: f64,
    pub l_odd_lower_bound: bool,
    pub log_star_n: u32,
    /// `½ ln ι − 8 log* n`, with `ι` replaced by `n` when only a lower bound is known.
    pub rhs: f64,
    pub holds: bool,
    /// `ι <= exp(16 log* n)`, where the inequality is immediate.
    pub trivial_regime: bool,
    /// `s = ι / exp(8 log* n)` and the odd intervals `[s^i, s^{i+1})` up to `n`.
    pub s: f64,
    pub intervals: Vec<OddInterval>,
    pub verdict: Verdict,
}

pub fn check_recip_theorem(g: &Graph, limits: &CheckerLimits) -> Result<RecipReport> {
    let n = g.n();
    let spec = limits.spectrum(g);
    let sums = l_and_l_odd(&spec);
    let l_odd_approx = sums.l_odd.to_f64().unwrap_or(f64::NAN);
    let iota = limits.iota(g)?;
    let ls = log_star(n.max(1) as f64)?;
    let Some(i) = iota else {
        return Ok(RecipReport {
            n,
            iota: None,
            l_odd: sums.l_odd.to_string(),
            l_odd_approx,
            l_odd_lower_bound: sums.lower_bounds,
            log_star_n: ls,
            rhs: f64::NEG_INFINITY,
            holds: true,
            trivial_regime: true,
            s: 0.0,
            intervals: Vec::new(),
            verdict: Verdict::Vacuous,
        });
    };
    let t = if i.is_exact() { ratio_to_f64(&i.value) } else { n as f64 };
    let rhs = 0.5 * t.ln() - 8.0 * ls as f64;
    let holds = l_odd_approx >= rhs - 1e-9;
    let s = t / (8.0 * ls as f64).exp();
    let mut intervals = Vec::new();
    if s > 1.0 {
        let mut idx = 0u32;
        while s.powi(idx as i32) <= n as f64 {
            let (low, high) = (s.powi(idx as i32), s.powi(idx as i32 + 1));
            let odds: Vec<usize> = (low.ceil() as usize..high.ceil() as usize).filter(|x| x % 2 == 1).collect();
            intervals.push(OddInterval {
                index: idx,
                low,
                high,
                odd_count: odds.len() as u64,
                present: !odds.is_empty() && odds.iter().all(|&x| spec.contains(x)),
            });
            idx += 1;
        }
    }
    let verdict = if holds {
        Verdict::Pass
    } else if spec.is_exact() && i.is_exact() {
        Verdict::Violation
    } else {
        Verdict::Undetermined
    };
    Ok(RecipReport {
        n,
        iota: Some(summarize(&i)),
        l_odd: sums.l_odd.to_string(),
        l_odd_approx,
        l_odd_lower_bound: sums.lower_bounds,
        log_star_n: ls,
        rhs,
        holds,
        trivial_regime: t <= (16.0 * ls as f64).exp(),
        s,
        intervals,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UpperBoundEntry {
    pub family: String,
    pub param: usize,
    /// `L(K_{d,d})` or `L∘(K_t)` from the closed-form spectrum.
    pub value: String,
    pub value_approx: f64,
    pub rhs: f64,
    pub holds: bool,
    /// Closed form equal to the searched spectrum (and `ι(K_t) = t`), when checked.
    pub cross_checked: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UpperBoundReport {
    pub entries: Vec<UpperBoundEntry>,
    pub verdict: Verdict,
}

/// `L(K_{d,d}) <= ½ ln d + 1` for `2 <= d <= d_max` and
/// `L∘(K_t) <= ½ ln t + 1` for `3 <= t <= t_max`.
pub fn check_upper_bound_examples(d_max: usize, t_max: usize, cross_d: usize, cross_t: usize) -> Result<UpperBoundReport> {
    let mut entries = Vec::new();
    for d in 2..=d_max {
        let closed: Vec<usize> = (2..=d).map(|h| 2 * h).collect();
        let value = reciprocal_sum(closed.iter().copied());
        let cross_checked = (d <= cross_d).then(|| super::cycle_spectrum(&named::complete_bipartite(d)).lengths == closed);
        entries.push(entry("complete-bipartite", d, value, 0.5 * (d as f64).ln() + 1.0, cross_checked));
    }
    for t in 3..=t_max {
        let closed_odd: Vec<usize> = (3..=t).filter(|x| x % 2 == 1).collect();
        let value = reciprocal_sum(closed_odd.iter().copied());
        let cross_checked = if t <= cross_t {
            let g = named::complete(t);
            let spectrum_ok = super::cycle_spectrum(&g).lengths == (3..=t).collect::<Vec<_>>();
            let iota_ok = iota_with_limit(&g, 24)?.value == Rational64::from_integer(t as i64);
            Some(spectrum_ok && iota_ok)
        } else {
            None
        };
        entries.push(entry("complete", t, value, 0.5 * (t as f64).ln() + 1.0, cross_checked));
    }
    let all_ok = entries.iter().all(|e| e.holds && e.cross_checked != Some(false));
    Ok(UpperBoundReport {
        entries,
        verdict: if all_ok { Verdict::Pass } else { Verdict::Violation },
    })
}

fn entry(
    family: &str,
    param: usize,
    value: num_rational::BigRational,
    rhs: f64,
    cross_checked: Option<bool>,
) -> UpperBoundEntry {
    let approx = value.to_f64().unwrap_or(f64::NAN);
    UpperBoundEntry {
        family: family.into(),
        param,
        value: value.to_string(),
        value_approx: approx,
        rhs,
        holds: approx <= rhs + 1e-9,
        cross_checked,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum ConsecutiveFamily {
    /// Triangle-free graphs; target `k² ln k`, needs `k >= e^15`.
    TriangleFree,
    /// All graphs, speed `f(x) = x`; target `½ k`.
    Identity,
    /// `K_{s+1}`-free graphs; target `½ (k/s)^{s/(s−1)}`.
    CliqueFree { s: u32 },
}

impl ConsecutiveFamily {
    pub fn target(&self, k: f64) -> f64 {
        match *self {
            ConsecutiveFamily::TriangleFree => k * k * k.ln(),
            ConsecutiveFamily::Identity => 0.5 * k,
            ConsecutiveFamily::CliqueFree { s } => {
                let s = s as f64;
                0.5 * (k / s).powf(s / (s - 1.0))
            }
        }
    }

    fn speed_inverse(&self, k: f64) -> f64 {
        match *self {
            ConsecutiveFamily::CliqueFree { s } => CliqueFreeSpeed { s }.inverse(k),
            _ => k,
        }
    }

    fn member(&self, g: &Graph) -> Result<bool> {
        Ok(match *self {
            ConsecutiveFamily::TriangleFree => is_clique_free(g, 3)?.clique_free,
            ConsecutiveFamily::Identity => true,
            ConsecutiveFamily::CliqueFree { s } => is_clique_free(g, s as usize + 1)?.clique_free,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PipelineRun {
    pub host: VertexSet,
    pub host_from_peeling: bool,
    /// Best construction found: root `v`, layer `i`, the chorded odd cycle and the cycles.
    pub best: Option<PipelineHit>,
    pub obstruction: Option<String>,
    pub run_length: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PipelineHit {
    pub v: usize,
    pub layer: usize,
    pub chorded: ChordedCycle,
    pub cycles: ConsecutiveCycles,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConsecutiveReport {
    pub family: ConsecutiveFamily,
    #[serde(serialize_with = "crate::util::ratio_as_string")]
    pub k: Rational64,
    pub member: bool,
    pub iota: Option<IotaSummary>,
    /// `18k + 4`.
    pub threshold: String,
    pub hypothesis: bool,
    pub target: f64,
    /// `f^{-1}(k)` for the family's speed function.
    pub speed_inverse: f64,
    pub forced: bool,
    pub pipeline: Option<PipelineRun>,
    pub ground_truth_run: Option<(usize, usize)>,
    pub spectrum_exact: bool,
    pub verdict: Verdict,
}

pub fn check_consecutive_theorems(
    g: &Graph,
    k: Rational64,
    family: ConsecutiveFamily,
    forced: bool,
    limits: &CheckerLimits,
) -> Result<ConsecutiveReport> {
    if k < Rational64::from_integer(1) {
        return Err(Error::domain(format!("k must be at least 1, got {k}")));
    }
    if let ConsecutiveFamily::CliqueFree { s } = family {
        if s < 2 {
            return Err(Error::domain("clique-free family needs s >= 2"));
        }
    }
    let kf = ratio_to_f64(&k);
    let member = family.member(g)?;
    let threshold = k * 18 + 4;
    let iota = if (g.n() as i64) > threshold.floor().to_integer() { limits.iota(g)? } else { None };
    let iota_above = iota.as_ref().is_some_and(|i| i.value > threshold);
    let k_large_enough = family != ConsecutiveFamily::TriangleFree || kf >= 15f64.exp();
    let hypothesis = member && iota_above && k_large_enough;
    let spec = limits.spectrum(g);
    let ground_truth_run = spec.longest_consecutive_run();
    let target = family.target(kf);
    let pipeline = if hypothesis || forced {
        Some(run_pipeline(g, k, hypothesis, limits)?)
    } else {
        None
    };
    let verdict = if !hypothesis {
        Verdict::Vacuous
    } else if ground_truth_run.is_some_and(|r| r.1 as f64 >= target) {
        Verdict::Pass
    } else if spec.is_exact() {
        Verdict::Violation
    } else {
        Verdict::Undetermined
    };
    Ok(ConsecutiveReport {
        family,
        k,
        member,
        iota: iota.as_ref().map(summarize),
        threshold: threshold.to_string(),
        hypothesis,
        target,
        speed_inverse: family.speed_inverse(kf),
        forced,
        pipeline,
        ground_truth_run,
        spectrum_exact: spec.is_exact(),
        verdict,
    })
}

/// Expander host (peeled with `18k + 3` when the hypothesis holds, the
/// whole graph otherwise), then for every root `v` and layer `N_i(v)` a
/// chorded odd cycle inside the layer and the consecutive cycles through it.
/// Outside forced mode a layer is only used when `ι(N_i) > 6k + 1`.
fn run_pipeline(g: &Graph, k: Rational64, hypothesis: bool, limits: &CheckerLimits) -> Result<PipelineRun> {
    let n = g.n();
    let (host, host_from_peeling) = if hypothesis {
        let peel = peel_to_expander_with(g, k * 18 + 3, &limits.expansion)?;
        (peel.trace.survivor.clone(), true)
    } else {
        (g.vertex_set(), false)
    };
    let mut run = PipelineRun {
        host: host.clone(),
        host_from_peeling,
        best: None,
        obstruction: None,
        run_length: 0,
    };
    if host.is_empty() {
        run.obstruction = Some("peeling left no survivor".into());
        return Ok(run);
    }
    let h = g.induced(&host);
    if is_bipartite(&h.graph) {
        run.obstruction = Some("bipartite host".into());
        return Ok(run);
    }
    let layer_threshold = k * 6 + 1;
    for v in 0..h.graph.n() {
        let layers = bfs_layers(&h.graph, v)?;
        for (i, layer) in layers.iter().enumerate().skip(1) {
            if layer.len() < 3 {
                continue;
            }
            let sub = h.graph.induced(layer);
            if hypothesis {
                let li = iota_with_limit(&sub.graph, limits.alpha_n)?;
                if li.value <= layer_threshold {
                    continue;
                }
            }
            let theta = theta_subgraph_with(&sub.graph, k * 2, &limits.expansion, &limits.posa, limits.alpha_n)?;
            let ThetaOutcome::Constructed(report) = theta else { continue };
            let ThetaCase::Found(found) = report.case else { continue };
            let f_host = found.chorded.mapped(&sub.map);
            let cycles = consecutive_cycles(&h.graph, v, &f_host, i)?;
            let len = cycles.cycles.len();
            if run.best.is_none() || len > run.run_length {
                let to_g = |c: &ChordedCycle| c.mapped(&h.map);
                run.run_length = len;
                run.best = Some(PipelineHit {
                    v: h.map[v],
                    layer: i,
                    chorded: to_g(&f_host),
                    cycles: map_cycles(cycles, &h.map, n)?,
                });
            }
        }
    }
    if run.best.is_none() {
        run.obstruction = Some("no layer yields a chorded odd cycle".into());
    }
    Ok(run)
}

fn map_cycles(c: ConsecutiveCycles, map: &[usize], n: usize) -> Result<ConsecutiveCycles> {
    let set = |s: &VertexSet| VertexSet::from_vertices(n, s.iter().map(|v| map[v]));
    Ok(ConsecutiveCycles {
        v: map[c.v],
        layer_index: c.layer_index,
        root: map[c.root],
        rerooted: c.rerooted,
        height: c.height,
        a: set(&c.a)?,
        b: set(&c.b)?,
        cycles: c.cycles.iter().map(|x| x.mapped(map)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> CheckerLimits {
        CheckerLimits::default()
    }

    #[test]
    fn lengths_examples() {
        let r = check_lengths_theorem(&named::complete(5), &Sequence::Primes, &limits()).unwrap();
        assert_eq!(r.verdict, Verdict::Vacuous);
        assert!(r.conclusion);
        assert_eq!(r.hits, vec![3, 5]);
        let r = check_lengths_theorem(&named::path(5), &Sequence::Primes, &limits()).unwrap();
        assert_eq!(r.verdict, Verdict::Vacuous);
        assert!(!r.conclusion);
    }

    #[test]
    fn recip_examples() {
        let r = check_recip_theorem(&named::complete(9), &limits()).unwrap();
        assert_eq!(r.l_odd, "248/315");
        assert_eq!(r.log_star_n, 2);
        assert!((r.rhs - (0.5 * 9f64.ln() - 16.0)).abs() < 1e-12);
        assert_eq!(r.verdict, Verdict::Pass);
        let b = check_recip_theorem(&named::complete_bipartite(3), &limits()).unwrap();
        assert_eq!(b.l_odd, "0");
        assert_eq!(b.verdict, Verdict::Pass);
        let p = check_recip_theorem(&named::petersen(), &limits()).unwrap();
        assert_eq!(p.iota.unwrap().value, "5/2");
        assert_eq!(p.verdict, Verdict::Pass);
    }

    #[test]
    fn upper_bounds() {
        let r = check_upper_bound_examples(8, 9, 4, 6).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let d4 = r.entries.iter().find(|e| e.family == "complete-bipartite" && e.param == 4).unwrap();
        assert_eq!(d4.value, "13/24");
        assert_eq!(d4.cross_checked, Some(true));
    }

    #[test]
    fn forced_pipeline_on_wheel() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        let one = Rational64::from_integer(1);
        let r = check_consecutive_theorems(&g, one, ConsecutiveFamily::Identity, true, &limits()).unwrap();
        assert_eq!(r.verdict, Verdict::Vacuous);
        let p = r.pipeline.unwrap();
        assert!(p.run_length >= 3, "{p:?}");
        assert!(r.ground_truth_run.unwrap().1 >= p.run_length);
        let b = check_consecutive_theorems(&named::cycle(6), one, ConsecutiveFamily::TriangleFree, true, &limits()).unwrap();
        assert_eq!(b.pipeline.unwrap().obstruction.as_deref(), Some("bipartite host"));
        assert!(b.ground_truth_run.is_some());
    }

    #[test]
    fn complete_graph_meets_identity_target() {
        // ι(K_23) = 23 > 18 + 4, so the identity-speed statement is live.
        let g = named::complete(23);
        let one = Rational64::from_integer(1);
        let r = check_consecutive_theorems(&g, one, ConsecutiveFamily::Identity, false, &limits()).unwrap();
        assert!(r.hypothesis);
        assert_eq!(r.verdict, Verdict::Pass);
    }
}
