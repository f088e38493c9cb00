//! Elementary rotations with a fixed last vertex and the closure `S(P)`.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{boundary, Graph, PathCertificate, VertexSet};

/// Rotates `P = v_1 … v_m` at the vertex in position `pivot` (0-based, so
/// `v_i` with `i = pivot + 1`): returns `v_{i-1} … v_1 v_i … v_m`. Needs the
/// edge `{v_1, v_i}` and `pivot >= 2`; `pivot = 1` would reproduce `P`.
pub fn elementary_rotation(g: &Graph, p: &PathCertificate, pivot: usize) -> Result<PathCertificate> {
    let vs = p.vertices();
    if pivot < 2 || pivot >= vs.len() {
        return Err(Error::precondition(format!(
            "rotation position {pivot} outside 2..{}",
            vs.len()
        )));
    }
    if !g.has_edge(vs[0], vs[pivot]) {
        return Err(Error::precondition(format!(
            "{{{}, {}}} is not an edge",
            vs[0], vs[pivot]
        )));
    }
    Ok(PathCertificate::trusted(g, rotated(vs, pivot)))
}

fn rotated(vs: &[usize], pivot: usize) -> Vec<usize> {
    let mut out: Vec<usize> = vs[..pivot].iter().rev().copied().collect();
    out.extend_from_slice(&vs[pivot..]);
    out
}

/// Positions `pivot` at which the path can be rotated, ordered by the
/// resulting new endpoint id.
fn rotation_pivots(g: &Graph, vs: &[usize]) -> Vec<usize> {
    let mut pos: Vec<usize> = (2..vs.len()).filter(|&j| g.has_edge(vs[0], vs[j])).collect();
    pos.sort_by_key(|&j| vs[j - 1]);
    pos
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureMode {
    /// Every path reachable by rotations was visited.
    Exact,
    /// One path kept per endpoint. The endpoint set is a subset of `S(P)`
    /// and obeys the same boundary law when `P` is a longest path.
    EndpointKeyed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Derivation {
    pub endpoint: usize,
    /// Pivot vertices (`v_i` of each rotation) in application order.
    pub pivots: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RotationState {
    pub base_path: PathCertificate,
    /// Free endpoints reachable by rotations keeping the last vertex fixed.
    pub endpoints: VertexSet,
    /// One derivation per endpoint, ascending by endpoint.
    pub derivations: Vec<Derivation>,
    pub mode: ClosureMode,
    pub paths_explored: u64,
}

impl RotationState {
    pub fn derivation(&self, endpoint: usize) -> Option<&Derivation> {
        self.derivations.iter().find(|d| d.endpoint == endpoint)
    }

    /// Replays the derivation of `endpoint`, checking every rotation.
    pub fn replay(&self, g: &Graph, endpoint: usize) -> Result<PathCertificate> {
        let d = self
            .derivation(endpoint)
            .ok_or_else(|| Error::precondition(format!("{endpoint} is not a rotation endpoint")))?;
        let mut p = self.base_path.clone();
        for &pivot_vertex in &d.pivots {
            let pivot = p
                .vertices()
                .iter()
                .position(|&v| v == pivot_vertex)
                .ok_or_else(|| Error::Validation(format!("pivot {pivot_vertex} not on path")))?;
            p = elementary_rotation(g, &p, pivot)?;
        }
        if p.first() != endpoint {
            return Err(Error::Validation(format!(
                "derivation ends at {} instead of {endpoint}",
                p.first()
            )));
        }
        Ok(p)
    }

    /// Vertices preceding or succeeding an endpoint on the base path.
    pub fn neighbours_on_path(&self) -> VertexSet {
        let vs = self.base_path.vertices();
        let n = self.endpoints.universe();
        let mut out = VertexSet::new(n);
        for (i, &v) in vs.iter().enumerate() {
            if self.endpoints.contains(v) {
                if i > 0 {
                    out.insert(vs[i - 1]);
                }
                if i + 1 < vs.len() {
                    out.insert(vs[i + 1]);
                }
            }
        }
        out
    }

    /// `∂S ⊆ S⁻ ∪ S⁺` with respect to the base path.
    pub fn boundary_law_holds(&self, g: &Graph) -> Result<bool> {
        Ok(boundary(g, &self.endpoints)?.is_subset(&self.neighbours_on_path()))
    }
}

pub fn rotation_closure(g: &Graph, p: &PathCertificate) -> Result<RotationState> {
    rotation_closure_with_budget(g, p, 200_000)
}

/// Breadth-first closure under elementary rotations, new endpoints in
/// ascending order. Visits whole paths while `path_budget` allows and falls
/// back to one path per endpoint otherwise.
pub fn rotation_closure_with_budget(g: &Graph, p: &PathCertificate, path_budget: u64) -> Result<RotationState> {
    p.validate(g)?;
    let keyed = explore(g, p, true, u64::MAX).expect("keyed exploration is bounded by n");
    if path_budget > 0 {
        if let Some(exact) = explore(g, p, false, path_budget) {
            return Ok(exact);
        }
    }
    Ok(keyed)
}

fn explore(g: &Graph, p: &PathCertificate, keyed: bool, budget: u64) -> Option<RotationState> {
    let base = p.vertices().to_vec();
    let n = g.n();
    let interior = base.len() - 1;
    let mut derivs: HashMap<usize, Vec<usize>> = HashMap::from([(base[0], Vec::new())]);
    let mut seen_paths: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: VecDeque<(Vec<usize>, Vec<usize>)> = VecDeque::new();
    if !keyed {
        seen_paths.insert(base.clone());
    }
    queue.push_back((base.clone(), Vec::new()));
    let mut explored = 0u64;
    while let Some((path, deriv)) = queue.pop_front() {
        explored += 1;
        if derivs.len() == interior && !keyed {
            // Every vertex other than the fixed end is already an endpoint.
            break;
        }
        for pivot in rotation_pivots(g, &path) {
            let next = rotated(&path, pivot);
            let end = next[0];
            let fresh_end = !derivs.contains_key(&end);
            let enqueue = if keyed { fresh_end } else { seen_paths.insert(next.clone()) };
            if !enqueue {
                continue;
            }
            if !keyed && seen_paths.len() as u64 > budget {
                return None;
            }
            let mut d = deriv.clone();
            d.push(path[pivot]);
            if fresh_end {
                derivs.insert(end, d.clone());
            }
            queue.push_back((next, d));
        }
    }
    let endpoints = VertexSet::from_vertices(n, derivs.keys().copied()).expect("path vertices");
    let mut derivations: Vec<Derivation> = derivs
        .into_iter()
        .map(|(endpoint, pivots)| Derivation { endpoint, pivots })
        .collect();
    derivations.sort_by_key(|d| d.endpoint);
    Some(RotationState {
        base_path: p.clone(),
        endpoints,
        derivations,
        mode: if keyed { ClosureMode::EndpointKeyed } else { ClosureMode::Exact },
        paths_explored: explored,
    })
}
