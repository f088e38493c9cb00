//! The speed functions of `K_{s+1}`-free graphs and the binomial Ramsey bound
//! behind them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansion::SpeedFunction;
use crate::graph::Graph;

/// `f_s(x) = min{x, s·x^{1−1/s}}` on `[1, ∞)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueFreeSpeed {
    pub s: u32,
}

pub fn speed_function_ks(s: u32) -> Result<CliqueFreeSpeed> {
    if s < 2 {
        return Err(Error::domain(format!("speed function needs s >= 2, got {s}")));
    }
    Ok(CliqueFreeSpeed { s })
}

impl SpeedFunction for CliqueFreeSpeed {
    fn apply(&self, x: f64) -> f64 {
        let s = self.s as f64;
        x.min(s * x.powf(1.0 - 1.0 / s))
    }

    fn inverse(&self, k: f64) -> f64 {
        let s = self.s as f64;
        k.max((k / s).powf(s / (s - 1.0)))
    }

    fn name(&self) -> String {
        format!("clique-free-{}", self.s)
    }
}

pub fn binomial(n: u64, k: u64) -> Option<u64> {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "kebab-case")]
pub enum RamseyWitness {
    /// A clique of order `s + 1`.
    Clique(Vec<usize>),
    /// An independent set of order `t + 1`.
    Independent(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyReport {
    pub s: u32,
    pub t: u32,
    pub threshold: u64,
    pub n: usize,
    pub witness: RamseyWitness,
}

/// Follows the inductive proof of `r(K_{s+1}, K_{t+1}) <= C(s+t, s)`: the
/// lowest remaining vertex goes to the side whose part is large enough.
pub fn ramsey_binomial_check(s: u32, t: u32, g: &Graph) -> Result<RamseyReport> {
    if s + t > 60 {
        return Err(Error::domain("s + t must stay at most 60"));
    }
    let threshold = binomial((s + t) as u64, s as u64).expect("s + t <= 60 fits in u64");
    if (g.n() as u64) < threshold {
        return Err(Error::precondition(format!(
            "need at least C({}, {}) = {threshold} vertices, graph has {}",
            s + t,
            s,
            g.n()
        )));
    }
    let mut pool: Vec<usize> = (0..g.n()).collect();
    let (mut cs, mut ct) = (s, t);
    let mut clique = Vec::new();
    let mut indep = Vec::new();
    let witness = loop {
        if cs == 0 {
            clique.push(pool[0]);
            break RamseyWitness::Clique(clique);
        }
        if ct == 0 {
            indep.push(pool[0]);
            break RamseyWitness::Independent(indep);
        }
        let v = pool[0];
        let (nbrs, others): (Vec<usize>, Vec<usize>) = pool[1..].iter().partition(|&&w| g.has_edge(v, w));
        if nbrs.len() as u64 >= binomial((cs - 1 + ct) as u64, (cs - 1) as u64).unwrap() {
            clique.push(v);
            pool = nbrs;
            cs -= 1;
        } else if others.len() as u64 >= binomial((cs + ct - 1) as u64, cs as u64).unwrap() {
            indep.push(v);
            pool = others;
            ct -= 1;
        } else {
            return Err(Error::PropositionViolation(format!(
                "neither side of vertex {v} is large enough"
            )));
        }
    };
    check_witness(g, s, t, &witness)?;
    Ok(RamseyReport {
        s,
        t,
        threshold,
        n: g.n(),
        witness,
    })
}

fn check_witness(g: &Graph, s: u32, t: u32, w: &RamseyWitness) -> Result<()> {
    let (vs, want, adjacent) = match w {
        RamseyWitness::Clique(v) => (v, s as usize + 1, true),
        RamseyWitness::Independent(v) => (v, t as usize + 1, false),
    };
    let ok = vs.len() == want
        && vs
            .iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b) == adjacent));
    if ok {
        Ok(())
    } else {
        Err(Error::PropositionViolation(format!("invalid Ramsey witness {w:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;
    use rand::{Rng, SeedableRng};

    fn coin_flip_graph(n: usize, seed: u64) -> Graph {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn speed_examples() {
        let f3 = speed_function_ks(3).unwrap();
        assert_eq!(f3.apply(8.0), 8.0);
        assert!((f3.inverse(9.0) - 9.0).abs() < 1e-12);
        for s in 2..6 {
            assert!((speed_function_ks(s).unwrap().apply(1.0) - 1.0).abs() < 1e-12);
        }
        assert!(speed_function_ks(1).is_err());
        // Past the crossover the power branch is the active one.
        let big = f3.inverse(100.0);
        assert!((big - (100.0f64 / 3.0).powf(1.5)).abs() < 1e-9);
        assert!((f3.apply(big) - 100.0).abs() < 1e-9);
    }

    #[test]
    fn ramsey_cases() {
        let r = ramsey_binomial_check(1, 1, &named::path(2)).unwrap();
        assert_eq!(r.witness, RamseyWitness::Clique(vec![0, 1]));
        assert!(matches!(
            ramsey_binomial_check(1, 1, &Graph::empty(2)).unwrap().witness,
            RamseyWitness::Independent(_)
        ));
        assert!(ramsey_binomial_check(2, 2, &named::cycle(5)).is_err());
        for seed in 0..20 {
            ramsey_binomial_check(2, 2, &coin_flip_graph(6, seed)).unwrap();
            ramsey_binomial_check(2, 3, &coin_flip_graph(10, seed)).unwrap();
        }
        assert_eq!(binomial(5, 2), Some(10));
    }
}
