//! Tower/τ selection for admissible sequences and the `ι` upper bound for
//! graphs avoiding every sequence length up to `τ_r`.

use num_rational::Rational64;
use serde::Serialize;

use super::cycles::log_star;
use crate::error::{Error, Result};
use crate::generators::Sequence;

/// Tower values past this are not searched exhaustively for the largest term.
const TOWER_SEARCH_CAP: f64 = 1e12;
/// Terms checked for admissibility before a selection.
const ADMISSIBILITY_PREFIX: usize = 4096;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TauSelection {
    pub n: u64,
    pub two_ln_n: f64,
    /// `T(1) = σ_1`, `T(j) = e^{T(j−1)}`.
    pub tower: Vec<f64>,
    /// `τ_1 = σ_1`; `τ_j` is the largest term in `(T(j−1), T(j)]`.
    pub tau: Vec<u64>,
    /// Least `r` with `τ_r > 2 ln n`.
    pub r: usize,
    pub log_star_n: u32,
    pub within_log_star: bool,
    /// Set when a tower value was too large to search below, and the
    /// smallest term above `T(j−1)` was taken instead.
    pub clamped: bool,
}

pub fn tower_and_tau(sigma: &Sequence, n: u64) -> Result<TauSelection> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    sigma.check_prefix(ADMISSIBILITY_PREFIX)?;
    let two_ln_n = 2.0 * (n as f64).ln();
    let s1 = sigma.first();
    let mut tower = vec![s1 as f64];
    let mut tau = vec![s1];
    let mut clamped = false;
    while (*tau.last().unwrap() as f64) <= two_ln_n {
        let lo = *tower.last().unwrap();
        let hi = lo.exp();
        let pick = if hi <= TOWER_SEARCH_CAP {
            sigma.largest_at_most(hi).filter(|&s| s as f64 > lo)
        } else {
            clamped = true;
            sigma.smallest_above(lo).filter(|&s| (s as f64) <= hi)
        };
        let Some(t) = pick else {
            return Err(Error::Validation(format!(
                "sequence `{}` has no term in ({lo}, {hi}]",
                sigma.name()
            )));
        };
        tower.push(hi);
        tau.push(t);
    }
    let r = tau.len();
    let log_star_n = log_star(n as f64)?;
    Ok(TauSelection {
        n,
        two_ln_n,
        tower,
        tau,
        r,
        log_star_n,
        within_log_star: r as u32 <= log_star_n,
        clamped,
    })
}

/// A sequence with a chosen subsequence `τ` and the quantities derived from it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SequenceSpec {
    pub sigma: Sequence,
    pub tau: Vec<u64>,
    /// `Δ_r = max{σ_j − σ_{j−1} : σ_j ≤ τ_r}`, with `Δ_1 = 1`.
    pub gaps: Vec<u64>,
    /// `δ_r = 1/⌈τ_r/2⌉`, listed from `δ_0 = 1`.
    #[serde(serialize_with = "ratios_as_strings")]
    pub deltas: Vec<Rational64>,
}

fn ratios_as_strings<S: serde::Serializer>(v: &[Rational64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&r.to_string())?;
    }
    seq.end()
}

impl SequenceSpec {
    pub fn new(sigma: Sequence, tau: Vec<u64>) -> Result<Self> {
        let Some(&first) = tau.first() else {
            return Err(Error::Validation("τ must be non-empty".into()));
        };
        if first != sigma.first() {
            return Err(Error::Validation(format!("τ_1 = {first} differs from σ_1 = {}", sigma.first())));
        }
        for (i, w) in tau.windows(2).enumerate() {
            if w[1] <= w[0] {
                return Err(Error::Validation(format!("τ_{} = {} does not exceed τ_{}", i + 2, w[1], i + 1)));
            }
        }
        for (i, &t) in tau.iter().enumerate() {
            if !is_term(&sigma, t) {
                return Err(Error::Validation(format!("τ_{} = {t} is not a term of σ", i + 1)));
            }
        }
        let mut gaps = vec![1];
        for &t in &tau[1..] {
            gaps.push(sigma.max_gap_up_to(t).unwrap_or(1));
        }
        let mut deltas = vec![Rational64::from_integer(1)];
        deltas.extend(tau.iter().map(|&t| Rational64::new(1, t.div_ceil(2) as i64)));
        Ok(SequenceSpec { sigma, tau, gaps, deltas })
    }

    pub fn from_selection(sigma: Sequence, sel: &TauSelection) -> Result<Self> {
        SequenceSpec::new(sigma, sel.tau.clone())
    }

    pub fn r_max(&self) -> usize {
        self.tau.len()
    }
}

fn is_term(sigma: &Sequence, t: u64) -> bool {
    match sigma {
        Sequence::Primes => t >= 3 && crate::generators::is_prime(t),
        _ => sigma.iter().take_while(|&s| s <= t).any(|s| s == t),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lengths2Bound {
    pub n: u64,
    pub r: usize,
    pub sigma_1: u64,
    pub tau: Vec<u64>,
    pub gaps: Vec<u64>,
    /// `δ_0, …, δ_r`.
    pub deltas: Vec<String>,
    /// `a_1 = 27 σ_1`.
    pub a_1: u64,
    /// `ln a_1, …, ln a_r`.
    pub ln_a: Vec<f64>,
    /// `Σ_{i ≤ r} 2 ln Δ_i / τ_{i−1}`.
    pub gap_sum: f64,
    /// `ln` of `27^r σ_1 exp(gap_sum + 2 ln n / τ_r)`.
    pub ln_bound: f64,
    pub bound: f64,
    /// `ln(a_r n^{δ_r})`.
    pub ln_chain: f64,
    pub chain_within_bound: bool,
    /// `ln Δ_i <= τ_{i−1}` for `2 <= i <= r`.
    pub gap_premise_holds: bool,
    /// `gap_sum <= 2r`.
    pub gap_sum_at_most_2r: bool,
}

pub const BOUND_MARGIN: f64 = 1e-9;

pub fn bound_lengths2(spec: &SequenceSpec, n: u64, r: usize) -> Result<Lengths2Bound> {
    if r == 0 || r > spec.r_max() {
        return Err(Error::Validation(format!("r = {r} outside 1..={}", spec.r_max())));
    }
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    let sigma_1 = spec.tau[0];
    let ln_n = (n as f64).ln();
    let tau_prev = |i: usize| -> f64 { if i == 1 { 1.0 } else { spec.tau[i - 2] as f64 } };
    let gap_sum: f64 = (1..=r).map(|i| 2.0 * (spec.gaps[i - 1] as f64).ln() / tau_prev(i)).sum();
    let ln_bound = r as f64 * 27f64.ln() + (sigma_1 as f64).ln() + gap_sum + 2.0 * ln_n / spec.tau[r - 1] as f64;

    let a_1 = 27 * sigma_1;
    let mut ln_a = vec![(a_1 as f64).ln()];
    for i in 2..=r {
        let d = crate::util::ratio_to_f64(&spec.deltas[i - 1]);
        let prev = *ln_a.last().unwrap();
        ln_a.push(27f64.ln() + prev + d * (spec.gaps[i - 1] as f64).ln());
    }
    let ln_chain = ln_a[r - 1] + crate::util::ratio_to_f64(&spec.deltas[r]) * ln_n;
    let gap_premise_holds = (2..=r).all(|i| (spec.gaps[i - 1] as f64).ln() <= spec.tau[i - 2] as f64);
    Ok(Lengths2Bound {
        n,
        r,
        sigma_1,
        tau: spec.tau[..r].to_vec(),
        gaps: spec.gaps[..r].to_vec(),
        deltas: spec.deltas[..=r].iter().map(ToString::to_string).collect(),
        a_1,
        ln_a,
        gap_sum,
        ln_bound,
        bound: ln_bound.exp(),
        ln_chain,
        chain_within_bound: ln_chain <= ln_bound + BOUND_MARGIN,
        gap_premise_holds,
        gap_sum_at_most_2r: gap_sum <= 2.0 * r as f64 + BOUND_MARGIN,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd_numbers() -> Sequence {
        Sequence::explicit((1..200).map(|i| 2 * i + 1).collect()).unwrap()
    }

    #[test]
    fn odd_numbers_single_step() {
        let spec = SequenceSpec::new(odd_numbers(), vec![3]).unwrap();
        let b = bound_lengths2(&spec, 100, 1).unwrap();
        assert_eq!(b.a_1, 81);
        assert_eq!(b.deltas, vec!["1", "1/2"]);
        let expected = 81.0 * (2.0 * 100f64.ln() / 3.0).exp();
        assert!((b.bound - expected).abs() < 1e-9 * expected);
        assert!((b.bound - 1745.1).abs() < 0.1);
        assert!(b.chain_within_bound);
    }

    #[test]
    fn tower_values() {
        let sel = tower_and_tau(&Sequence::Primes, 100).unwrap();
        assert_eq!(sel.tower[0], 3.0);
        assert!((sel.tower[1] - 3f64.exp()).abs() < 1e-12);
        assert_eq!(sel.tau, vec![3, 19]);
        assert!(sel.within_log_star);
        for n in [10u64, 1_000, 1_000_000, 1_000_000_000] {
            for s in [Sequence::Primes, Sequence::PowersOfThree, Sequence::FermatLike] {
                let sel = tower_and_tau(&s, n).unwrap();
                assert!(sel.within_log_star, "{} n={n}: {sel:?}", s.name());
                assert!(*sel.tau.last().unwrap() as f64 > sel.two_ln_n);
            }
        }
    }

    #[test]
    fn inadmissible_sequences_are_rejected() {
        let err = Sequence::explicit(vec![3, 25]).unwrap_err();
        assert!(err.to_string().contains("term 2"));
    }

    #[test]
    fn multi_step_chain() {
        let sel = tower_and_tau(&Sequence::PowersOfThree, 1_000).unwrap();
        let spec = SequenceSpec::from_selection(Sequence::PowersOfThree, &sel).unwrap();
        assert_eq!(spec.gaps[1], 6);
        for r in 1..=spec.r_max() {
            let b = bound_lengths2(&spec, 1_000, r).unwrap();
            assert!(b.chain_within_bound);
            assert!(b.gap_sum_at_most_2r);
            // ln(3^18 - 3^17) > 9: powers of three outgrow the gap premise at the third level.
            assert_eq!(b.gap_premise_holds, r < 3, "r = {r}");
        }
        assert_eq!(spec.r_max(), 3);
        assert!(SequenceSpec::new(Sequence::Primes, vec![3, 9]).is_err());
        assert!(SequenceSpec::new(Sequence::Primes, vec![5]).is_err());
    }
}
