//! Text formats. Polynomials are comma-separated coefficient lists in
//! ascending order, constant term first: `"-6,6,-3,1"` is `z^3 - 3z^2 + 6z - 6`.

use std::str::FromStr;

use hawaii_core::sturm::ExtendedRational;
use hawaii_core::{Poly, Rational};

use crate::error::{usage, CliResult};

/// `"n"` or `"n/d"`, optional sign, surrounding whitespace ignored.
pub fn parse_rational(text: &str) -> CliResult<Rational> {
    let t = text.trim();
    let ok_chars = !t.is_empty()
        && t.chars().all(|c| c.is_ascii_digit() || c == '-' || c == '+' || c == '/');
    if !ok_chars {
        return usage(format!("malformed rational {text:?}"));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let num = parse_integer(num, text)?;
    let den = match den {
        None => 1.into(),
        Some(d) => parse_integer(d, text)?,
    };
    if den == 0.into() {
        return usage(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(num, den))
}

fn parse_integer(s: &str, whole: &str) -> CliResult<hawaii_core::algebra::BigInt> {
    hawaii_core::algebra::BigInt::from_str(s).or_else(|_| usage(format!("malformed rational {whole:?}")))
}

/// A rational, or `inf` / `-inf` (also `+inf`).
pub fn parse_extended(text: &str) -> CliResult<ExtendedRational> {
    match text.trim() {
        "inf" | "+inf" => Ok(ExtendedRational::PosInfinity),
        "-inf" => Ok(ExtendedRational::NegInfinity),
        t => parse_rational(t).map(ExtendedRational::Finite),
    }
}

/// Ascending coefficient list; trailing zeros are stripped, so `"0"` and
/// `"0,0"` give the zero polynomial.
pub fn parse_polynomial(text: &str) -> CliResult<Poly> {
    if text.trim().is_empty() {
        return usage("empty coefficient list");
    }
    let coeffs = text.split(',').map(parse_rational).collect::<CliResult<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

pub fn parse_nonzero_polynomial(text: &str) -> CliResult<Poly> {
    let p = parse_polynomial(text)?;
    if p.is_zero() {
        return usage(format!("{text:?} is the zero polynomial"));
    }
    Ok(p)
}

pub fn parse_nonconstant_polynomial(text: &str) -> CliResult<Poly> {
    let p = parse_nonzero_polynomial(text)?;
    if p.is_constant() {
        return usage(format!("{text:?} is constant; degree >= 1 required"));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::CliError;
    use hawaii_core::algebra::{int, ratio};

    #[test]
    fn polynomials() {
        assert_eq!(parse_polynomial("-6,6,-3,1").unwrap(), Poly::from_ints(&[-6, 6, -3, 1]));
        assert_eq!(parse_polynomial("1,0,1").unwrap(), Poly::from_ints(&[1, 0, 1]));
        assert_eq!(parse_polynomial("1/2,-3/4").unwrap(), Poly::new(vec![ratio(1, 2), ratio(-3, 4)]));
        assert_eq!(parse_polynomial(" 1 , 2 ,0").unwrap(), Poly::from_ints(&[1, 2]));
        assert!(parse_polynomial("0,0").unwrap().is_zero());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "1,,2", "1/0", "a", "1.5", "1/2/3", "--1"] {
            assert!(matches!(parse_polynomial(bad), Err(CliError::Usage(_))), "{bad}");
        }
        assert!(matches!(parse_nonzero_polynomial("0"), Err(CliError::Usage(_))));
        assert!(matches!(parse_nonconstant_polynomial("3"), Err(CliError::Usage(_))));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-4/6").unwrap(), ratio(-2, 3));
        assert_eq!(parse_rational("+7").unwrap(), int(7));
        assert_eq!(parse_extended("-inf").unwrap(), ExtendedRational::NegInfinity);
        assert_eq!(parse_extended("3/2").unwrap(), ExtendedRational::Finite(ratio(3, 2)));
    }

    #[test]
    fn coefficient_strings_round_trip() {
        let p = Poly::new(vec![ratio(-1, 3), int(0), ratio(5, 2), int(-7)]);
        assert_eq!(parse_polynomial(&p.to_coeff_string()).unwrap(), p);
    }
}
