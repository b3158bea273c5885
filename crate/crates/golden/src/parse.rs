use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::{GoldenInt, GoldenRat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseGoldenError {
    #[error("empty input")]
    Empty,
    #[error("malformed term `{0}`")]
    BadTerm(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Parses one additive term such as `3`, `-tau`, `2tau`, `tau^2`, `2*tau^3`.
fn parse_term(term: &str) -> Result<GoldenInt, ParseGoldenError> {
    let bad = || ParseGoldenError::BadTerm(term.to_string());
    let t = term.replace('τ', "tau").replace('*', "");
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, t.strip_prefix('+').unwrap_or(&t).to_string()),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let value = match body.find("tau") {
        None => GoldenInt::from_int(body.parse::<BigInt>().map_err(|_| bad())?),
        Some(pos) => {
            let coeff = if pos == 0 {
                BigInt::one()
            } else {
                body[..pos].parse::<BigInt>().map_err(|_| bad())?
            };
            let rest = &body[pos + 3..];
            let exp = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse::<u32>()
                    .map_err(|_| bad())?
            };
            GoldenInt::tau_pow(exp).scale(&coeff)
        }
    };
    Ok(if neg { -value } else { value })
}

impl FromStr for GoldenInt {
    type Err = ParseGoldenError;

    /// Accepts sums of terms in any order, e.g. `2tau+1`, `1-tau`, `tau^2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ParseGoldenError::Empty);
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        let mut acc = GoldenInt::zero();
        for t in terms {
            acc += &parse_term(t)?;
        }
        Ok(acc)
    }
}

impl FromStr for GoldenRat {
    type Err = ParseGoldenError;

    /// Accepts `x` or `x/d` where `x` parses as a [`GoldenInt`] (optionally
    /// parenthesised) and `d` is a nonzero integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.rsplit_once('/') {
            None => Ok(GoldenRat::from(s.parse::<GoldenInt>()?)),
            Some((n, d)) => {
                let n = n.trim();
                let n = n.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(n);
                let d: BigInt =
                    d.trim().parse().map_err(|_| ParseGoldenError::BadTerm(d.to_string()))?;
                if d == BigInt::from(0) {
                    return Err(ParseGoldenError::ZeroDenominator);
                }
                Ok(GoldenRat::new(n.parse()?, d))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepted_forms() {
        assert_eq!("2tau+1".parse::<GoldenInt>().unwrap(), GoldenInt::new(1, 2));
        assert_eq!("tau^2".parse::<GoldenInt>().unwrap(), GoldenInt::new(1, 1));
        assert_eq!("1-tau".parse::<GoldenInt>().unwrap(), GoldenInt::new(1, -1));
        assert_eq!("-3".parse::<GoldenInt>().unwrap(), GoldenInt::new(-3, 0));
        assert_eq!("2τ".parse::<GoldenInt>().unwrap(), GoldenInt::new(0, 2));
        assert_eq!("(1+tau)/2".parse::<GoldenRat>().unwrap(), GoldenRat::from_ints(1, 1, 2));
    }

    #[test]
    fn rejected_forms() {
        assert!("".parse::<GoldenInt>().is_err());
        assert!("2x".parse::<GoldenInt>().is_err());
        assert!("tau^".parse::<GoldenInt>().is_err());
        assert!("1/0".parse::<GoldenRat>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for (a, b) in [(0, 0), (1, 0), (0, 1), (-2, 3), (5, -7)] {
            let x = GoldenInt::new(a, b);
            assert_eq!(x.to_string().parse::<GoldenInt>().unwrap(), x);
        }
    }
}
