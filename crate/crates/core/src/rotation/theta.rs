//! Non-bipartite chorded cycles: a long cycle plus one chord whose union
//! contains an odd cycle.

use num_rational::Rational64;
use serde::Serialize;

use super::posa::{has_cycle, posa_long_cycle_with, PosaOptions};
use crate::error::{Error, Result};
use crate::expansion::{weakly_expanding_endblock_with, CheckOptions};
use crate::graph::{
    block_decomposition, is_bipartite, is_clique_free, odd_cycle_or_bipartition, two_disjoint_paths, Bipartiteness,
    CycleCertificate, Graph, VertexSet,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordedCycle {
    pub cycle: CycleCertificate,
    pub chord: (usize, usize),
    /// An odd cycle inside `cycle ∪ chord`.
    pub odd_witness: CycleCertificate,
}

impl ChordedCycle {
    /// Checks the chord and derives the odd witness; fails when the union
    /// is bipartite.
    pub fn new(g: &Graph, cycle: CycleCertificate, chord: (usize, usize)) -> Result<Self> {
        cycle.validate(g)?;
        let (a, b) = chord;
        let (Some(pa), Some(pb)) = (cycle.position(a), cycle.position(b)) else {
            return Err(Error::Validation("chord endpoints must lie on the cycle".into()));
        };
        if !g.has_edge(a, b) || cycle.consecutive(a, b) {
            return Err(Error::Validation(format!("{{{a}, {b}}} is not a chord")));
        }
        let vs = cycle.vertices();
        let (i, j) = (pa.min(pb), pa.max(pb));
        let odd_witness = if vs.len() % 2 == 1 {
            cycle.clone()
        } else if (j - i) % 2 == 0 {
            CycleCertificate::new(g, vs[i..=j].to_vec())?
        } else {
            return Err(Error::Validation("cycle with this chord is bipartite".into()));
        };
        Ok(ChordedCycle {
            cycle,
            chord: (a.min(b), a.max(b)),
            odd_witness,
        })
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        ChordedCycle::new(g, self.cycle.clone(), self.chord)?;
        self.odd_witness.validate(g)?;
        let w = self.odd_witness.vertices();
        if w.len() % 2 == 0 {
            return Err(Error::Validation("odd witness has even length".into()));
        }
        for k in 0..w.len() {
            let (u, v) = (w[k], w[(k + 1) % w.len()]);
            if (u.min(v), u.max(v)) != self.chord && !self.cycle.consecutive(u, v) {
                return Err(Error::Validation(format!("witness edge {{{u}, {v}}} not in cycle ∪ chord")));
            }
        }
        Ok(())
    }

    pub fn mapped(&self, map: &[usize]) -> ChordedCycle {
        let (a, b) = (map[self.chord.0], map[self.chord.1]);
        ChordedCycle {
            cycle: self.cycle.mapped(map),
            chord: (a.min(b), a.max(b)),
            odd_witness: self.odd_witness.mapped(map),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThetaBranch {
    /// `V(C)` induces a non-bipartite graph; `C` plus one of its chords.
    CycleChord,
    /// `P_1` has a chord; `P_1 ∪ Q_i`.
    PathChord,
    /// Special vertex `w` with `R_1 ∪ Q_i`.
    SpecialVertexR1,
    /// Special vertex `w` with `R_2 ∪ Q_i`.
    SpecialVertexR2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaConstruction {
    pub chorded: ChordedCycle,
    pub branch: ThetaBranch,
    /// Parity index `i` of the connector `Q_i` (odd for 1, even for 2).
    pub connector: Option<u8>,
    pub odd_cycle_d: Option<CycleCertificate>,
    /// Set when no special vertex qualified and another vertex of `P_1` was used.
    pub non_special_pivot: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ThetaCase {
    Found(Box<ThetaConstruction>),
    Degenerate { reason: String },
}

/// The case analysis on a fixed host `h` and cycle `c ⊂ h`. `special`
/// defaults the roles of special vertices; pass `V(C)` if unknown.
pub fn theta_from_cycle(h: &Graph, c: &CycleCertificate, special: &VertexSet) -> Result<ThetaCase> {
    c.validate(h)?;
    h.check_set(special)?;
    let vs = c.vertices();
    let len = vs.len();
    let odd = len % 2 == 1;
    for i in 0..len {
        for j in i + 2..len {
            if (i == 0 && j == len - 1) || !h.has_edge(vs[i], vs[j]) {
                continue;
            }
            if odd || (j - i) % 2 == 0 {
                return Ok(found(
                    ChordedCycle::new(h, c.clone(), (vs[i], vs[j]))?,
                    ThetaBranch::CycleChord,
                    None,
                    None,
                    false,
                ));
            }
        }
    }
    branch_b(h, c, special)
}

fn found(
    chorded: ChordedCycle,
    branch: ThetaBranch,
    connector: Option<u8>,
    d: Option<CycleCertificate>,
    non_special_pivot: bool,
) -> ThetaCase {
    ThetaCase::Found(Box::new(ThetaConstruction {
        chorded,
        branch,
        connector,
        odd_cycle_d: d,
        non_special_pivot,
    }))
}

fn degenerate(reason: impl Into<String>) -> Result<ThetaCase> {
    Ok(ThetaCase::Degenerate { reason: reason.into() })
}

fn branch_b(h: &Graph, c: &CycleCertificate, special: &VertexSet) -> Result<ThetaCase> {
    let n = h.n();
    let vs = c.vertices();
    let len = vs.len();
    let on_c = VertexSet::from_vertices(n, vs.iter().copied())?;
    let rest = h.induced(&on_c.complement());
    let d = match odd_cycle_or_bipartition(&rest.graph) {
        Bipartiteness::OddCycle(d) => d.mapped(&rest.map),
        Bipartiteness::Bipartition(_) => return degenerate("H − V(C) is bipartite"),
    };
    let on_d = VertexSet::from_vertices(n, d.vertices().iter().copied())?;
    let (q1, q2) = two_disjoint_paths(h, &on_d, &on_c)?;

    // Connectors w1 … d1 ~D~ d2 … w2 of both parities.
    let (d1, d2) = (q1.first(), q2.first());
    let dv = d.vertices();
    let (p1, p2) = (d.position(d1).unwrap(), d.position(d2).unwrap());
    let forward: Vec<usize> = (0..=(p2 + dv.len() - p1) % dv.len()).map(|s| dv[(p1 + s) % dv.len()]).collect();
    let backward: Vec<usize> = (0..=(p1 + dv.len() - p2) % dv.len()).map(|s| dv[(p1 + dv.len() - s) % dv.len()]).collect();
    let base_edges = q1.len() + q2.len();
    let connector = |arc: &[usize]| -> Vec<usize> {
        let mut q: Vec<usize> = q1.vertices().iter().rev().copied().collect();
        q.extend_from_slice(&arc[1..]);
        q.extend_from_slice(&q2.vertices()[1..]);
        q
    };
    let mut conn: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for arc in [&forward, &backward] {
        let parity = (base_edges + arc.len() - 1) % 2;
        // Q_1 is odd, Q_2 even.
        conn[1 - parity] = connector(arc);
    }

    // Orient so that P_1 runs clockwise from w1 to w2.
    let (mut w1, mut w2) = (q1.last(), q2.last());
    let arc_cw = |a: usize, b: usize| -> Vec<usize> {
        let (pa, pb) = (c.position(a).unwrap(), c.position(b).unwrap());
        (0..=(pb + len - pa) % len).map(|s| vs[(pa + s) % len]).collect()
    };
    let count = |arc: &[usize]| arc.iter().filter(|&&v| special.contains(v)).count();
    if count(&arc_cw(w2, w1)) > count(&arc_cw(w1, w2)) {
        std::mem::swap(&mut w1, &mut w2);
        for q in conn.iter_mut() {
            q.reverse();
        }
    }
    let p1 = arc_cw(w1, w2);
    let close = |path: &[usize], q: &[usize]| -> Vec<usize> {
        // `path` runs w1 → w2, `q` runs w1 → w2.
        let mut cyc = path.to_vec();
        cyc.extend(q[1..q.len() - 1].iter().rev());
        cyc
    };
    let try_connectors = |path: &[usize], chord: (usize, usize)| -> Result<Option<(ChordedCycle, u8)>> {
        for (idx, q) in conn.iter().enumerate() {
            let cyc = CycleCertificate::new(h, close(path, q))?;
            if let Ok(cc) = ChordedCycle::new(h, cyc, chord) {
                return Ok(Some((cc, idx as u8 + 1)));
            }
        }
        Ok(None)
    };

    for i in 0..p1.len() {
        for j in i + 2..p1.len() {
            if h.has_edge(p1[i], p1[j]) {
                if let Some((cc, idx)) = try_connectors(&p1, (p1[i], p1[j]))? {
                    return Ok(found(cc, ThetaBranch::PathChord, Some(idx), Some(d), false));
                }
            }
        }
    }

    let arr = arc_cw(w1, vs[(c.position(w1).unwrap() + len - 1) % len]);
    let pos2 = p1.len() - 1;
    let p2_interior = pos2 + 1..len;
    let nbrs_in_p2 = |w: usize| -> Vec<usize> { p2_interior.clone().filter(|&k| h.has_edge(w, arr[k])).collect() };
    let mut interior: Vec<usize> = (1..pos2).collect();
    interior.sort_by_key(|&k| arr[k]);
    let pick = interior
        .iter()
        .copied()
        .find(|&k| special.contains(arr[k]) && nbrs_in_p2(arr[k]).len() >= 2)
        .map(|k| (k, false))
        .or_else(|| interior.iter().copied().find(|&k| nbrs_in_p2(arr[k]).len() >= 2).map(|k| (k, true)));
    let Some((pw, non_special)) = pick else {
        return degenerate("P_1 has no chord and no vertex with two neighbours inside P_2");
    };
    let w = arr[pw];
    let xs = nbrs_in_p2(w);
    let (px2, px1) = (xs[0], *xs.last().unwrap());
    let (x1, x2) = (arr[px1], arr[px2]);

    let mut r1: Vec<usize> = arr[..=pw].to_vec();
    r1.extend((pos2..=px1).rev().map(|k| arr[k]));
    let mut r2: Vec<usize> = vec![arr[0]];
    r2.extend((px2..len).rev().map(|k| arr[k]));
    r2.extend(arr[pw..=pos2].iter());

    let candidates = if 2 * r1.len() >= len {
        [(r1, (w, x2), ThetaBranch::SpecialVertexR1), (r2, (w, x1), ThetaBranch::SpecialVertexR2)]
    } else {
        [(r2, (w, x1), ThetaBranch::SpecialVertexR2), (r1, (w, x2), ThetaBranch::SpecialVertexR1)]
    };
    let (r, chord, branch) = &candidates[0];
    if let Some((cc, idx)) = try_connectors(r, *chord)? {
        return Ok(found(cc, *branch, Some(idx), Some(d), non_special));
    }
    degenerate("no connector parity makes R ∪ Q non-bipartite")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HostSource {
    /// Endblock of the survivor of peeling with `3k`.
    PeeledEndblock,
    /// Largest non-bipartite block of the input.
    Block,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaReport {
    #[serde(serialize_with = "crate::util::ratio_as_string")]
    pub k: Rational64,
    pub triangle_free: bool,
    /// `α(G) < n/(3k+1)`; `None` when α was not computed.
    pub hypothesis_holds: Option<bool>,
    pub host: VertexSet,
    pub host_source: HostSource,
    pub long_cycle: CycleCertificate,
    pub special: VertexSet,
    pub case: ThetaCase,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ThetaOutcome {
    Constructed(Box<ThetaReport>),
    NoCycle,
    /// Every block of the graph is bipartite.
    BipartiteObstruction,
}

pub fn theta_subgraph(g: &Graph, k: Rational64) -> Result<ThetaOutcome> {
    theta_subgraph_with(g, k, &CheckOptions::default(), &PosaOptions::default(), 24)
}

/// Host, long cycle and case analysis, all in `g`'s vertex ids.
pub fn theta_subgraph_with(
    g: &Graph,
    k: Rational64,
    check: &CheckOptions,
    posa: &PosaOptions,
    alpha_limit: usize,
) -> Result<ThetaOutcome> {
    if k <= Rational64::from_integer(0) {
        return Err(Error::domain(format!("k must be positive, got {k}")));
    }
    if !has_cycle(g) {
        return Ok(ThetaOutcome::NoCycle);
    }
    let n = g.n();
    let triangle_free = is_clique_free(g, 3)?.clique_free;
    let hypothesis_holds = if n <= alpha_limit {
        let a = crate::independence::alpha(g).value as i64;
        Some(Rational64::from_integer(a) * (k * 3 + 1) < Rational64::from_integer(n as i64))
    } else {
        None
    };

    let peeled = match weakly_expanding_endblock_with(g, k * 3, check) {
        Ok(eb) if !is_bipartite(&eb.f.graph) && eb.vertices.len() >= 3 => {
            Some((eb.vertices.clone(), Some(eb.exempt_vertex)))
        }
        Ok(_) | Err(Error::HypothesisFailure(_)) | Err(Error::SizeLimit { .. }) | Err(Error::Budget { .. }) => None,
        Err(e) => return Err(e),
    };
    let (host, host_source, exempt) = match peeled {
        Some((h, v)) => (h, HostSource::PeeledEndblock, v),
        None => {
            let blocks = block_decomposition(g).blocks;
            let best = blocks
                .into_iter()
                .filter(|b| b.len() >= 3 && !is_bipartite(&g.induced(b).graph))
                .fold(None::<VertexSet>, |acc, b| match acc {
                    Some(a) if a.len() >= b.len() => Some(a),
                    _ => Some(b),
                });
            match best {
                Some(b) => (b, HostSource::Block, None),
                None => return Ok(ThetaOutcome::BipartiteObstruction),
            }
        }
    };
    let sub = g.induced(&host);
    let mut opts = posa.clone();
    opts.exempt_vertex = exempt.and_then(|v| sub.from_host(v));
    let pr = posa_long_cycle_with(&sub.graph, &opts)?;
    let pr = pr.result().expect("non-bipartite block has a cycle");
    let case = match theta_from_cycle(&sub.graph, &pr.cycle, &pr.state.endpoints)? {
        ThetaCase::Found(t) => {
            let map = &sub.map;
            ThetaCase::Found(Box::new(ThetaConstruction {
                chorded: t.chorded.mapped(map),
                branch: t.branch,
                connector: t.connector,
                odd_cycle_d: t.odd_cycle_d.map(|d| d.mapped(map)),
                non_special_pivot: t.non_special_pivot,
            }))
        }
        d => d,
    };
    Ok(ThetaOutcome::Constructed(Box::new(ThetaReport {
        k,
        triangle_free,
        hypothesis_holds,
        host,
        host_source,
        long_cycle: pr.cycle.mapped(&sub.map),
        special: sub.set_to_host(&pr.state.endpoints, n),
        case,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    fn case_of(h: &Graph, cycle: &[usize], special: Option<&[usize]>) -> ThetaConstruction {
        let c = CycleCertificate::new(h, cycle.to_vec()).unwrap();
        let s = match special {
            Some(s) => VertexSet::from_vertices(h.n(), s.iter().copied()).unwrap(),
            None => VertexSet::from_vertices(h.n(), cycle.iter().copied()).unwrap(),
        };
        match theta_from_cycle(h, &c, &s).unwrap() {
            ThetaCase::Found(t) => {
                t.chorded.validate(h).unwrap();
                *t
            }
            ThetaCase::Degenerate { reason } => panic!("{reason}"),
        }
    }

    /// Even cycle `0..len` with `extra` chords, an odd cycle on fresh
    /// vertices, and two 2-paths joining `a` and `b` to it.
    fn gadget(len: usize, extra: &[(usize, usize)], a: usize, b: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
        edges.extend_from_slice(extra);
        let d0 = len;
        edges.extend((0..5).map(|i| (d0 + i, d0 + (i + 1) % 5)));
        let (m1, m2) = (len + 5, len + 6);
        edges.extend([(a, m1), (m1, d0), (b, m2), (m2, d0 + 2)]);
        Graph::from_edges(len + 7, edges).unwrap()
    }

    #[test]
    fn diamond_uses_the_cycle_chord() {
        let h = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let t = case_of(&h, &[0, 1, 2, 3], None);
        assert_eq!(t.branch, ThetaBranch::CycleChord);
        assert_eq!(t.chorded.chord, (0, 2));
        assert_eq!(t.chorded.odd_witness.len(), 3);
    }

    #[test]
    fn chorded_path_branch_on_thirteen_vertices() {
        let h = gadget(6, &[(0, 3)], 0, 3);
        assert_eq!(h.n(), 13);
        assert!(is_clique_free(&h, 3).unwrap().clique_free);
        let t = case_of(&h, &[0, 1, 2, 3, 4, 5], None);
        assert_eq!(t.branch, ThetaBranch::PathChord);
        assert_eq!(t.chorded.chord, (0, 3));
        assert!(t.odd_cycle_d.is_some());
    }

    #[test]
    fn special_vertex_branch() {
        let h = gadget(8, &[(2, 5), (2, 7), (6, 1), (6, 3)], 0, 4);
        assert!(is_clique_free(&h, 3).unwrap().clique_free);
        let t = case_of(&h, &[0, 1, 2, 3, 4, 5, 6, 7], None);
        assert!(matches!(t.branch, ThetaBranch::SpecialVertexR1 | ThetaBranch::SpecialVertexR2));
        assert!(!t.non_special_pivot);
    }

    #[test]
    fn plain_even_cycle_is_degenerate() {
        let h = gadget(6, &[], 0, 3);
        let c = CycleCertificate::new(&h, (0..6).collect()).unwrap();
        let s = h.vertex_set();
        assert!(matches!(theta_from_cycle(&h, &c, &s).unwrap(), ThetaCase::Degenerate { .. }));
    }

    #[test]
    fn subgraph_outcomes() {
        let one = Rational64::from_integer(1);
        assert_eq!(theta_subgraph(&named::path(5), one).unwrap(), ThetaOutcome::NoCycle);
        assert_eq!(theta_subgraph(&named::cycle(6), one).unwrap(), ThetaOutcome::BipartiteObstruction);
        match theta_subgraph(&named::petersen(), one).unwrap() {
            ThetaOutcome::Constructed(r) => {
                assert!(r.triangle_free);
                assert_eq!(r.long_cycle.len(), 9);
                match &r.case {
                    ThetaCase::Found(t) => t.chorded.validate(&named::petersen()).unwrap(),
                    other => panic!("{other:?}"),
                }
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn chorded_cycle_rejects_bad_chords() {
        let g = named::complete_bipartite(3);
        let c = CycleCertificate::new(&g, vec![0, 3, 1, 4, 2, 5]).unwrap();
        assert!(ChordedCycle::new(&g, c.clone(), (0, 4)).is_err());
        assert!(ChordedCycle::new(&g, c, (0, 3)).is_err());
    }
}
