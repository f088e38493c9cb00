//! Admissible integer sequences: increasing, first term at least 3, and
//! `ln s[r] <= s[r-1]` for every later term.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Sequence {
    /// Odd primes 3, 5, 7, 11, ...
    Primes,
    /// 3, 9, 27, ... (as far as `u64` reaches).
    PowersOfThree,
    /// 3, 5, 17, 65537: `a + 1` for `a = 2, 2^2, 2^(2^2), ...`.
    FermatLike,
    /// A validated finite sequence.
    Explicit { values: Vec<u64> },
}

impl Sequence {
    /// Parses a CLI tag: `primes`, `pow3`, `fermat-like`.
    pub fn from_tag(tag: &str) -> Result<Sequence> {
        match tag {
            "primes" => Ok(Sequence::Primes),
            "pow3" | "powers-of-three" => Ok(Sequence::PowersOfThree),
            "fermat-like" | "iterated-exponential" => Ok(Sequence::FermatLike),
            other => Err(Error::Validation(format!("unknown sequence `{other}`"))),
        }
    }

    /// Builds an explicit sequence, rejecting anything not admissible.
    pub fn explicit(values: Vec<u64>) -> Result<Sequence> {
        check_admissible(&values)?;
        Ok(Sequence::Explicit { values })
    }

    /// Reads whitespace/comma separated integers or a JSON array.
    pub fn parse_file(text: &str) -> Result<Sequence> {
        let trimmed = text.trim();
        let values: Vec<u64> = if trimmed.starts_with('[') {
            serde_json::from_str(trimmed).map_err(|e| Error::Parse {
                location: format!("line {}, column {}", e.line(), e.column()),
                message: e.to_string(),
            })?
        } else {
            trimmed
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .enumerate()
                .map(|(i, t)| {
                    t.parse::<u64>().map_err(|e| Error::Parse {
                        location: format!("item {}", i + 1),
                        message: format!("`{t}`: {e}"),
                    })
                })
                .collect::<Result<_>>()?
        };
        Sequence::explicit(values)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Sequence::Primes => "primes",
            Sequence::PowersOfThree => "pow3",
            Sequence::FermatLike => "fermat-like",
            Sequence::Explicit { .. } => "file",
        }
    }

    pub fn first(&self) -> u64 {
        self.iter().next().expect("admissible sequences are non-empty")
    }

    /// The terms in order. Only the prime sequence is unbounded.
    pub fn iter(&self) -> Box<dyn Iterator<Item = u64> + '_> {
        match self {
            Sequence::Primes => Box::new((3u64..).step_by(2).filter(|&p| is_prime(p))),
            Sequence::PowersOfThree => Box::new(std::iter::successors(Some(3u64), |&x| x.checked_mul(3))),
            Sequence::FermatLike => Box::new([3u64, 5, 17, 65537].into_iter()),
            Sequence::Explicit { values } => Box::new(values.iter().copied()),
        }
    }

    /// The largest term `<= x`.
    pub fn largest_at_most(&self, x: f64) -> Option<u64> {
        if x < 3.0 {
            return None;
        }
        match self {
            Sequence::Primes => {
                let mut p = if x >= u64::MAX as f64 { u64::MAX } else { x.floor() as u64 };
                if p % 2 == 0 {
                    p -= 1;
                }
                while p >= 3 {
                    if is_prime(p) {
                        return Some(p);
                    }
                    p -= 2;
                }
                None
            }
            _ => self.iter().take_while(|&s| s as f64 <= x).last(),
        }
    }

    /// The smallest term `> x`, if the representable part of the sequence has one.
    pub fn smallest_above(&self, x: f64) -> Option<u64> {
        match self {
            Sequence::Primes => {
                let start = if x < 2.0 { 3 } else { x.floor() as u64 + 1 };
                (start.max(3)..).find(|&p| p % 2 == 1 && is_prime(p))
            }
            _ => self.iter().find(|&s| s as f64 > x),
        }
    }

    /// Largest gap `s[j] - s[j-1]` over terms `s[j] <= x`; `None` when fewer
    /// than two terms are `<= x`.
    pub fn max_gap_up_to(&self, x: u64) -> Option<u64> {
        match self {
            Sequence::Primes => prime_max_gap(x),
            _ => {
                let terms: Vec<u64> = self.iter().take_while(|&s| s <= x).collect();
                terms.windows(2).map(|w| w[1] - w[0]).max()
            }
        }
    }

    /// Verifies admissibility of the first `count` terms (fewer if the
    /// sequence is finite). For primes each step is also checked against
    /// Bertrand's postulate `p' <= 2p`.
    pub fn check_prefix(&self, count: usize) -> Result<Vec<u64>> {
        let prefix: Vec<u64> = self.iter().take(count).collect();
        check_admissible(&prefix)?;
        if *self == Sequence::Primes {
            for (i, w) in prefix.windows(2).enumerate() {
                if w[1] > 2 * w[0] {
                    return Err(Error::Validation(format!(
                        "term {}: {} exceeds twice its predecessor",
                        i + 2,
                        w[1]
                    )));
                }
            }
        }
        Ok(prefix)
    }
}

fn check_admissible(values: &[u64]) -> Result<()> {
    match values.first() {
        None => return Err(Error::Validation("empty sequence".into())),
        Some(&s) if s < 3 => {
            return Err(Error::Validation(format!("term 1 is {s}; the first term must be at least 3")))
        }
        _ => {}
    }
    for (i, w) in values.windows(2).enumerate() {
        let r = i + 2;
        if w[1] <= w[0] {
            return Err(Error::Validation(format!("term {r}: {} does not exceed {}", w[1], w[0])));
        }
        if (w[1] as f64).ln() > w[0] as f64 {
            return Err(Error::Validation(format!(
                "term {r}: ln {} = {:.4} exceeds previous term {}",
                w[1],
                (w[1] as f64).ln(),
                w[0]
            )));
        }
    }
    Ok(())
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return n == 2 || n == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Maximum gap between consecutive odd primes up to `x`, by segmented sieve.
fn prime_max_gap(x: u64) -> Option<u64> {
    if x < 5 {
        return None;
    }
    let root = (x as f64).sqrt() as u64 + 1;
    let base: Vec<u64> = (3..=root).step_by(2).filter(|&p| is_prime(p)).collect();
    const SEGMENT: u64 = 1 << 20;
    let mut prev = 3u64;
    let mut best = 0u64;
    let mut lo = 5u64;
    let mut composite = vec![false; SEGMENT as usize];
    while lo <= x {
        let hi = (lo + SEGMENT - 1).min(x);
        composite.iter_mut().for_each(|c| *c = false);
        for &p in &base {
            if p * p > hi {
                break;
            }
            let mut m = (lo.div_ceil(p) * p).max(p * p);
            while m <= hi {
                composite[(m - lo) as usize] = true;
                m += p;
            }
        }
        let mut v = if lo % 2 == 0 { lo + 1 } else { lo };
        while v <= hi {
            if !composite[(v - lo) as usize] {
                best = best.max(v - prev);
                prev = v;
            }
            v += 2;
        }
        lo = hi + 1;
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefixes() {
        assert_eq!(Sequence::Primes.check_prefix(5).unwrap(), vec![3, 5, 7, 11, 13]);
        assert_eq!(Sequence::PowersOfThree.check_prefix(3).unwrap(), vec![3, 9, 27]);
        assert_eq!(Sequence::FermatLike.check_prefix(10).unwrap(), vec![3, 5, 17, 65537]);
    }

    #[test]
    fn inadmissible_file() {
        let err = Sequence::parse_file("3 30").unwrap_err();
        assert!(err.to_string().contains("term 2"), "{err}");
        assert!(Sequence::parse_file("2 3").is_err());
        assert!(Sequence::parse_file("3 3").is_err());
        assert_eq!(Sequence::parse_file("[3, 20]").unwrap().first(), 3);
    }

    #[test]
    fn prime_gaps_match_trial_division() {
        for x in [5u64, 30, 1000, 5000] {
            let primes: Vec<u64> = Sequence::Primes.iter().take_while(|&p| p <= x).collect();
            let expected = primes.windows(2).map(|w| w[1] - w[0]).max();
            assert_eq!(prime_max_gap(x), expected, "x = {x}");
        }
        // Known record gap of 34 following 1327.
        assert_eq!(prime_max_gap(1400), Some(34));
    }

    #[test]
    fn neighbours_of_a_bound() {
        assert_eq!(Sequence::Primes.largest_at_most(20.09), Some(19));
        assert_eq!(Sequence::Primes.smallest_above(20.09), Some(23));
        assert_eq!(Sequence::PowersOfThree.largest_at_most(20.09), Some(9));
        assert_eq!(Sequence::FermatLike.smallest_above(20.0), Some(65537));
        assert_eq!(Sequence::FermatLike.largest_at_most(2.0), None);
    }
}
