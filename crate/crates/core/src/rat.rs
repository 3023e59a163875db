//! Exact rationals.

use crate::error::{Error, Result};
use num_traits::{One, Zero};

/// Exact rational number in canonical form (backed by `num-rational`).
pub type Rat = num_rational::Ratio<i64>;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Parse `p/q`, an integer, or a finite decimal such as `0.3` or `-2.25`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::InvalidValue(format!("not a rational: `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(Error::InvalidValue("zero denominator".into()));
        }
        return Ok(Rat::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() || !body.chars().all(|c| c.is_ascii_digit() || c == '.') {
        return Err(bad());
    }
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() || fp.contains('.') || fp.len() > 17 {
        return Err(bad());
    }
    let digits = format!("{ip}{fp}");
    let n: i64 = digits.parse().map_err(|_| bad())?;
    let d = 10i64.checked_pow(fp.len() as u32).ok_or_else(bad)?;
    let r = Rat::new(n, d);
    Ok(if neg { -r } else { r })
}

pub fn in_unit_interval(r: &Rat) -> bool {
    *r >= Rat::zero() && *r <= Rat::one()
}

pub fn to_f64(r: &Rat) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Reduced denominator of a rational.
pub fn denom(r: &Rat) -> i64 {
    *r.denom()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rat("3/10").unwrap(), rat(3, 10));
        assert_eq!(parse_rat("0.3").unwrap(), rat(3, 10));
        assert_eq!(parse_rat("-2.25").unwrap(), rat(-9, 4));
        assert_eq!(parse_rat("7").unwrap(), int(7));
        assert_eq!(parse_rat("2/4").unwrap(), rat(1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
        assert!(parse_rat(".").is_err());
    }
}
