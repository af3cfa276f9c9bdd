//! Exact parsing of the mixing parameter alpha.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;

/// Parses `"0.1"`, `"1/3"` or `"2"` literally into an exact rational, so
/// `"0.1"` is exactly one tenth.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidAlpha(s.to_string());
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty()
        || !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let r = Rational::new(num, den);
    Ok(if neg { -r } else { r })
}

pub fn check_alpha(alpha: &Rational) -> Result<()> {
    if *alpha < Rational::zero() || *alpha > Rational::one() {
        Err(Error::AlphaOutOfRange(alpha.to_string()))
    } else {
        Ok(())
    }
}

pub fn parse_alpha(s: &str) -> Result<Rational> {
    let a = parse_rational(s)?;
    check_alpha(&a)?;
    Ok(a)
}

/// Decimal rendering when the denominator is a product of 2s and 5s,
/// otherwise `num/den`.
pub fn format_alpha(alpha: &Rational) -> String {
    let mut den = alpha.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let (mut e2, mut e5) = (0usize, 0usize);
    while (&den % &two).is_zero() {
        den /= &two;
        e2 += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        e5 += 1;
    }
    if den != BigInt::one() {
        return format!("{}/{}", alpha.numer(), alpha.denom());
    }
    let places = e2.max(e5);
    if places == 0 {
        return alpha.numer().to_string();
    }
    let scale = num_traits::pow(BigInt::from(10), places) / alpha.denom();
    let scaled = alpha.numer() * &scale;
    let neg = scaled < BigInt::zero();
    let digits = if neg { (-scaled).to_string() } else { scaled.to_string() };
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int_part, frac_part) = digits.split_at(digits.len() - places);
    format!("{}{int_part}.{frac_part}", if neg { "-" } else { "" })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rational};

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_rational("0.1").unwrap(), rational(1, 10));
        assert_eq!(parse_rational("0.75").unwrap(), rational(3, 4));
        assert_eq!(parse_rational(".5").unwrap(), rational(1, 2));
        assert_eq!(parse_rational("1").unwrap(), int(1));
        assert_eq!(parse_rational("2/6").unwrap(), rational(1, 3));
        assert_eq!(parse_rational("-0.25").unwrap(), rational(-1, 4));
    }

    #[test]
    fn rejects_garbage_and_out_of_range() {
        for s in ["", ".", "abc", "1/0", "0.1.2", "1e-3"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
        assert!(matches!(parse_alpha("1.5"), Err(Error::AlphaOutOfRange(_))));
        assert!(matches!(parse_alpha("-0.1"), Err(Error::AlphaOutOfRange(_))));
        assert!(parse_alpha("1").is_ok() && parse_alpha("0").is_ok());
    }

    #[test]
    fn formats_round_trip() {
        for s in ["0", "0.1", "0.25", "1", "1/3", "0.05"] {
            let a = parse_rational(s).unwrap();
            assert_eq!(format_alpha(&a), s);
        }
    }
}
