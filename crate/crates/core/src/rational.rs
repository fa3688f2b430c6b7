//! Exact rational helpers shared by the serialization paths.
//!
//! Rationals cross the CLI boundary as `"p/q"` strings in lowest terms;
//! whole numbers render bare (`1`, not `1/1`). Both forms parse back.

use num::{BigInt, BigRational, One, Signed, Zero};

/// Renders a rational in lowest terms: `"p/q"`, or just `"p"` when the
/// denominator is 1.
pub fn rat_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` (or a bare integer, taken as denominator 1).
pub fn parse_rat(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Decimal rendering with a fixed number of fractional digits, for values
/// that are only meaningful up to a tolerance (eigenvalues, MC estimates).
pub fn decimal_str(x: f64, digits: usize) -> String {
    let s = format!("{x:.digits$}");
    // Avoid the two representations of zero.
    if s.starts_with('-') && s.trim_start_matches(['-', '0', '.']).is_empty() {
        s[1..].to_string()
    } else {
        s
    }
}

/// Rational absolute difference, handy in convergence tests.
pub fn abs_diff(a: &BigRational, b: &BigRational) -> BigRational {
    (a - b).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    #[test]
    fn round_trip() {
        let r = BigRational::from_f64(0.625).unwrap();
        assert_eq!(rat_str(&r), "5/8");
        assert_eq!(parse_rat("5/8"), Some(r));
        assert_eq!(parse_rat("3").unwrap(), BigRational::from_i64(3).unwrap());
        assert_eq!(parse_rat("4/0"), None);
        assert_eq!(parse_rat("x"), None);
    }

    #[test]
    fn whole_numbers_render_bare() {
        assert_eq!(rat_str(&BigRational::one()), "1");
        assert_eq!(rat_str(&BigRational::new((-6).into(), 3.into())), "-2");
        assert_eq!(parse_rat(&rat_str(&BigRational::one())), Some(BigRational::one()));
    }

    #[test]
    fn negative_zero_is_normalized() {
        assert_eq!(decimal_str(-1e-15, 6), "0.000000");
        assert_eq!(decimal_str(-2.0, 3), "-2.000");
    }
}
