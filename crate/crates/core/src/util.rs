//! Small shared helpers.

use num_rational::{BigRational, Rational64};
use serde::Serializer;

/// Serializes a rational as `"p/q"` (or `"p"` when integral).
pub fn ratio_as_string<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn big_ratio_as_string<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn ratio_to_f64(r: &Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Parses `"3"`, `"3/2"` or a terminating decimal such as `"1.9"` exactly.
pub fn parse_rational(text: &str) -> Option<Rational64> {
    let t = text.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: i64 = p.trim().parse().ok()?;
        let q: i64 = q.trim().parse().ok()?;
        return (q != 0).then(|| Rational64::new(p, q));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || frac.len() > 12 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let w: i64 = if whole.is_empty() || whole == "-" { 0 } else { whole.parse().ok()? };
        let scale = 10i64.checked_pow(frac.len() as u32)?;
        let f: i64 = frac.parse().ok()?;
        let signed_f = if negative { -f } else { f };
        return Some(Rational64::new(w.checked_mul(scale)?.checked_add(signed_f)?, scale));
    }
    t.parse::<i64>().ok().map(Rational64::from_integer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/2"), Some(Rational64::new(3, 2)));
        assert_eq!(parse_rational("1.9"), Some(Rational64::new(19, 10)));
        assert_eq!(parse_rational("2"), Some(Rational64::from_integer(2)));
        assert_eq!(parse_rational("-0.5"), Some(Rational64::new(-1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
    }
}
