//! Exact rational arithmetic used for every endpoint and coordinate.

use core::fmt;

use num_traits::{One, Zero};

pub type Rational = num_rational::Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}")]
    Invalid(alloc::string::String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(alloc::string::String),
    #[error("rational literal {0:?} does not fit in 64-bit numerator/denominator")]
    Overflow(alloc::string::String),
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"-1.25"` exactly.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let invalid = || ParseRationalError::Invalid(s.into());
    let overflow = || ParseRationalError::Overflow(s.into());

    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = parse_int(num.trim()).ok_or_else(invalid)?;
        let den: i64 = parse_int(den.trim()).ok_or_else(invalid)?;
        if den == 0 {
            return Err(ParseRationalError::ZeroDenominator(s.into()));
        }
        return Ok(Rational::new(num, den));
    }

    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(invalid());
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(invalid());
    }
    let mut numer: i64 = 0;
    let mut denom: i64 = 1;
    for b in int_part.bytes().chain(frac_part.bytes()) {
        numer = numer
            .checked_mul(10)
            .and_then(|x| x.checked_add(i64::from(b - b'0')))
            .ok_or_else(overflow)?;
    }
    for _ in 0..frac_part.len() {
        denom = denom.checked_mul(10).ok_or_else(overflow)?;
    }
    if negative {
        numer = -numer;
    }
    Ok(Rational::new(numer, denom))
}

fn parse_int(s: &str) -> Option<i64> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// `Display` adapter printing a rational as `p/q`, or `p` for integers.
pub struct RationalDisplay<'a>(pub &'a Rational);

impl fmt::Display for RationalDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

pub fn half() -> Rational {
    Rational::new(1, 2)
}

pub(crate) fn abs_diff(a: &Rational, b: &Rational) -> Rational {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

pub(crate) fn int(v: usize) -> Rational {
    Rational::from_integer(v as i64)
}

pub(crate) fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/2").unwrap(), Rational::new(3, 2));
        assert_eq!(parse_rational(" -6/4 ").unwrap(), Rational::new(-3, 2));
        assert_eq!(parse_rational("0.5").unwrap(), Rational::new(1, 2));
        assert_eq!(parse_rational("-1.25").unwrap(), Rational::new(-5, 4));
        assert_eq!(parse_rational("7").unwrap(), Rational::from_integer(7));
        assert_eq!(parse_rational(".5").unwrap(), Rational::new(1, 2));
        assert_eq!(parse_rational("2.").unwrap(), Rational::from_integer(2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1e5").is_err());
        assert!(parse_rational(".").is_err());
        assert!(parse_rational("--1").is_err());
        assert!(matches!(
            parse_rational("123456789012345678901234"),
            Err(ParseRationalError::Overflow(_))
        ));
    }

    #[test]
    fn display_round_trips() {
        for s in ["3/2", "-1", "0", "-7/4"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(RationalDisplay(&r).to_string(), s);
        }
    }
}
