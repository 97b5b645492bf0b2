//! Exact rationals for α, β and γ.
//!
//! Parameters enter comparisons such as `q <= alpha * u` or the γ-cover
//! predicate; keeping them exact makes those comparisons decidable without
//! rounding. Products are formed in `i128`.

use std::cmp::Ordering;

use num::rational::Ratio;
use num::{ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rational = Ratio<i64>;

/// Parses `"p/q"`, an integer, or a plain decimal such as `"1.01"` exactly.
pub fn parse(text: &str) -> Result<Rational> {
    let s = text.trim();
    let err = || Error::Parse(text.to_string());
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| err())?;
        let den: i64 = den.trim().parse().map_err(|_| err())?;
        if den == 0 {
            return Err(err());
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 17 {
            return Err(err());
        }
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let whole: i64 = if int_digits.is_empty() { 0 } else { int_digits.parse().map_err(|_| err())? };
        let scale = 10i64.checked_pow(frac.len() as u32).ok_or_else(err)?;
        let frac: i64 = frac.parse().map_err(|_| err())?;
        let magnitude = whole.checked_mul(scale).and_then(|v| v.checked_add(frac)).ok_or_else(err)?;
        let num = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(num, scale));
    }
    let num: i64 = s.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(num))
}

pub fn to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders `r` as `"p"` or `"p/q"`; the inverse of [`parse`].
pub fn render(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Compares `a` with `r * b` exactly.
pub fn cmp_scaled(a: i64, r: Rational, b: i64) -> Ordering {
    // r has a positive denominator after normalisation.
    let lhs = a as i128 * *r.denom() as i128;
    let rhs = *r.numer() as i128 * b as i128;
    lhs.cmp(&rhs)
}

/// `a <= r * b`.
pub fn le_scaled(a: i64, r: Rational, b: i64) -> bool {
    cmp_scaled(a, r, b) != Ordering::Greater
}

pub fn floor_i64(r: Rational) -> i64 {
    *r.floor().numer()
}

pub fn ceil_i64(r: Rational) -> i64 {
    *r.ceil().numer()
}

pub fn is_positive(r: Rational) -> bool {
    r > Rational::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_literal_forms() {
        assert_eq!(parse("6/7").unwrap(), Rational::new(6, 7));
        assert_eq!(parse(" 2 ").unwrap(), Rational::from_integer(2));
        assert_eq!(parse("1.01").unwrap(), Rational::new(101, 100));
        assert_eq!(parse("1.5").unwrap(), Rational::new(3, 2));
        assert_eq!(parse(".25").unwrap(), Rational::new(1, 4));
        assert_eq!(parse("-0.5").unwrap(), Rational::new(-1, 2));
        for bad in ["", "1/0", "x", "1.", "1.2.3", "1/x", "1e5"] {
            assert!(parse(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn render_round_trips() {
        for r in [Rational::new(1, 28), Rational::from_integer(4), Rational::new(-3, 2)] {
            assert_eq!(parse(&render(r)).unwrap(), r);
        }
    }

    #[test]
    fn scaled_comparison_is_exact() {
        let alpha = Rational::new(101, 100);
        assert!(le_scaled(101, alpha, 100));
        assert!(!le_scaled(102, alpha, 100));
        assert!(le_scaled(3, Rational::new(3, 2), 2));
        assert_eq!(floor_i64(Rational::new(-1, 2)), -1);
        assert_eq!(ceil_i64(Rational::new(9, 7)), 2);
    }
}
