//! Long cycles through `S(P) ∪ ∂S(P)` built from a longest path.

use serde::Serialize;

use super::closure::{rotation_closure_with_budget, RotationState};
use super::longest::{longest_path, PathMode, DEFAULT_PATH_LIMIT};
use crate::config::Config;
use crate::error::Result;
use crate::graph::{boundary, Graph, PathCertificate, VertexSet};
use crate::graph::CycleCertificate;

#[derive(Clone, Debug)]
pub struct PosaOptions {
    pub exact_path_limit: usize,
    pub restarts: usize,
    pub rotation_budget: u64,
    /// The vertex `v` exempted by weak expansion; `v_1` avoids it.
    pub exempt_vertex: Option<usize>,
}

impl Default for PosaOptions {
    fn default() -> Self {
        PosaOptions {
            exact_path_limit: DEFAULT_PATH_LIMIT,
            restarts: 64,
            rotation_budget: 200_000,
            exempt_vertex: None,
        }
    }
}

impl PosaOptions {
    pub fn from_config(cfg: &Config) -> Self {
        PosaOptions {
            exact_path_limit: cfg.limits.path_n,
            restarts: cfg.budgets.path_restarts as usize,
            rotation_budget: cfg.budgets.rotation_paths,
            exempt_vertex: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CycleConstruction {
    /// Rotated path to `x ∈ S(P)` closed by the edge `{x, y}`, `y` the last
    /// boundary vertex on `P`.
    Rotation,
    /// The rotation step degenerated; closed the longest path at its free end.
    PathClosure,
    /// No cycle through the longest path; any cycle of the graph.
    AnyCycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PosaResult {
    pub cycle: CycleCertificate,
    pub state: RotationState,
    pub path_mode: PathMode,
    pub construction: CycleConstruction,
    pub closure_boundary: VertexSet,
    pub covers_closure: bool,
    pub boundary_law_holds: bool,
    /// Set when `v_1` had to be the exempt vertex.
    pub endpoint_is_exempt: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum PosaOutcome {
    Cycle(Box<PosaResult>),
    NoCycle,
}

impl PosaOutcome {
    pub fn result(&self) -> Option<&PosaResult> {
        match self {
            PosaOutcome::Cycle(r) => Some(r),
            PosaOutcome::NoCycle => None,
        }
    }
}

pub fn posa_long_cycle(g: &Graph) -> Result<PosaOutcome> {
    posa_long_cycle_with(g, &PosaOptions::default())
}

pub fn posa_long_cycle_with(g: &Graph, opts: &PosaOptions) -> Result<PosaOutcome> {
    if let Some(v) = opts.exempt_vertex {
        g.check_vertex(v)?;
    }
    if !has_cycle(g) {
        return Ok(PosaOutcome::NoCycle);
    }
    let lp = longest_path(g, opts.exact_path_limit, opts.restarts)?.expect("graph with a cycle is non-empty");
    let forward = lp.path.vertices().to_vec();
    let backward: Vec<usize> = forward.iter().rev().copied().collect();
    let orientations: Vec<Vec<usize>> = match opts.exempt_vertex {
        Some(v) if forward[0] == v => vec![backward],
        Some(_) => vec![forward],
        None => vec![forward, backward],
    };
    let mut best: Option<PosaResult> = None;
    for vs in orientations {
        let r = construct(g, vs, lp.mode, opts)?;
        let better = match &best {
            None => true,
            Some(b) => rank(&r) > rank(b),
        };
        if better {
            best = Some(r);
        }
    }
    Ok(PosaOutcome::Cycle(Box::new(best.expect("at least one orientation"))))
}

fn rank(r: &PosaResult) -> (bool, usize) {
    (r.construction == CycleConstruction::Rotation, r.cycle.len())
}

fn construct(g: &Graph, vs: Vec<usize>, path_mode: PathMode, opts: &PosaOptions) -> Result<PosaResult> {
    let n = g.n();
    let endpoint_is_exempt = opts.exempt_vertex == Some(vs[0]);
    let p = PathCertificate::trusted(g, vs.clone());
    let state = rotation_closure_with_budget(g, &p, opts.rotation_budget)?;
    let bd = boundary(g, &state.endpoints)?;
    let boundary_law_holds = state.boundary_law_holds(g)?;
    let y = vs.iter().rev().copied().find(|&u| bd.contains(u));
    let mut built = None;
    if let Some(y) = y {
        let x = state.endpoints.iter().find(|&x| g.has_edge(x, y));
        if let Some(x) = x {
            let q = state.replay(g, x)?;
            let pos = q.vertices().iter().position(|&u| u == y).expect("rotations keep the tail");
            if pos >= 2 {
                built = Some((
                    CycleCertificate::new(g, q.vertices()[..=pos].to_vec())?,
                    CycleConstruction::Rotation,
                ));
            }
        }
    }
    let (cycle, construction) = match built {
        Some(b) => b,
        None => fallback_cycle(g, &vs)?,
    };
    let on_cycle = VertexSet::from_vertices(n, cycle.vertices().iter().copied())?;
    let covers_closure = state.endpoints.union(&bd).is_subset(&on_cycle);
    Ok(PosaResult {
        cycle,
        state,
        path_mode,
        construction,
        closure_boundary: bd,
        covers_closure,
        boundary_law_holds,
        endpoint_is_exempt,
    })
}

fn fallback_cycle(g: &Graph, vs: &[usize]) -> Result<(CycleCertificate, CycleConstruction)> {
    for end in [vs.to_vec(), vs.iter().rev().copied().collect()] {
        if let Some(j) = (2..end.len()).rev().find(|&j| g.has_edge(end[0], end[j])) {
            return Ok((CycleCertificate::new(g, end[..=j].to_vec())?, CycleConstruction::PathClosure));
        }
    }
    let c = any_cycle(g).expect("caller checked for a cycle");
    Ok((CycleCertificate::new(g, c)?, CycleConstruction::AnyCycle))
}

pub(crate) fn has_cycle(g: &Graph) -> bool {
    let comps = crate::graph::components(g).len();
    g.edge_count() + comps > g.n()
}

/// Shortest cycle through the first edge (in edge order) that lies on a cycle.
fn any_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for (u, v) in g.edges() {
        let mut prev = vec![usize::MAX; n];
        prev[u] = u;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(a) = queue.pop_front() {
            for &b in g.neighbors(a) {
                if prev[b] != usize::MAX || (a == u && b == v) {
                    continue;
                }
                prev[b] = a;
                queue.push_back(b);
            }
        }
        if prev[v] != usize::MAX {
            let mut cyc = vec![v];
            let mut c = v;
            while c != u {
                c = prev[c];
                cyc.push(c);
            }
            return Some(cyc);
        }
    }
    None
}
