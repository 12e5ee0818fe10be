//! Dense univariate polynomials over the rationals.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A polynomial stored as ascending coefficients: `coeffs[k]` multiplies `z^k`.
///
/// The highest stored coefficient is always nonzero; the zero polynomial is
/// the empty sequence and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `z`.
    pub fn z() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `z - root`.
    pub fn linear(root: &Rational) -> Self {
        Poly::new(vec![-root.clone(), Rational::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
    }

    /// Product of `(z - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots.into_iter().fold(Poly::one(), |acc, r| &acc * &Poly::linear(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Sign of the leading coefficient, 0 for the zero polynomial.
    pub fn lead_sign(&self) -> i8 {
        self.lead().map_or(0, sign_of)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign_of(&self.eval(x))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Poly {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Polynomial long division. Returns `(quotient, remainder)` with
    /// `self = divisor * quotient + remainder` and `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_ok_and(|r| r.is_zero())
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Integer-coefficient associate with content 1, obtained by a positive
    /// rational scaling (signs of values are preserved).
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Poly {
            coeffs: ints
                .into_iter()
                .map(|c| Rational::from_integer(c / &content))
                .collect(),
        }
    }

    /// Number of times `(z - x)` divides `self`. The zero polynomial has no
    /// finite order and returns `None`.
    pub fn root_order(&self, x: &Rational) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut order = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.synthetic_div(x);
            if !r.is_zero() {
                return Some(order);
            }
            order += 1;
            cur = q;
        }
    }

    /// Division by `z - x`, returning the quotient and `self(x)`.
    fn synthetic_div(&self, x: &Rational) -> (Poly, Rational) {
        if self.is_zero() {
            return (Poly::zero(), Rational::zero());
        }
        let n = self.coeffs.len();
        let mut quot = vec![Rational::zero(); n - 1];
        let mut acc = Rational::zero();
        for k in (0..n).rev() {
            acc = acc * x + &self.coeffs[k];
            if k > 0 {
                quot[k - 1] = acc.clone();
            }
        }
        (Poly::new(quot), acc)
    }

    /// Strict upper bound on the absolute value of every complex root
    /// (Cauchy's bound `1 + max |a_k / a_n|`).
    pub fn root_bound(&self) -> Rational {
        let Some(lead) = self.lead() else {
            return Rational::one();
        };
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(Rational::zero(), |a, b| if b > a { b } else { a });
        max + Rational::one()
    }

    /// Ascending comma-separated coefficient list, e.g. `-6,6,-3,1`.
    /// The zero polynomial is written `0`.
    pub fn to_coeff_string(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            let _ = write!(out, "{c}");
        }
        out
    }
}

pub(crate) fn sign_of(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self.to_coeff_string())
    }
}

/// Descending human-readable form, e.g. `z^3 - 3*z^2 + 6*z - 6`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn derivative_of_cubic() {
        let p = Poly::from_ints(&[-6, 6, -3, 1]);
        assert_eq!(p.derivative(), Poly::from_ints(&[6, -6, 3]));
    }

    #[test]
    fn evaluate() {
        assert_eq!(Poly::from_ints(&[1, 0, 1]).eval(&q(2, 1)), q(5, 1));
    }

    #[test]
    fn multiply_difference_of_squares() {
        let a = Poly::from_ints(&[-1, 1]);
        let b = Poly::from_ints(&[1, 1]);
        assert_eq!(&a * &b, Poly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn trailing_zeros_stripped() {
        let p = Poly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Poly::from_ints(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn division_by_zero_polynomial() {
        assert_eq!(Poly::one().div_rem(&Poly::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn div_rem_small() {
        let p = Poly::from_ints(&[1, 0, 0, 1]);
        let d = Poly::from_ints(&[1, 1]);
        let (quot, rem) = p.div_rem(&d).unwrap();
        assert_eq!(quot, Poly::from_ints(&[1, -1, 1]));
        assert!(rem.is_zero());
        let (quot, rem) = Poly::from_ints(&[3]).div_rem(&d).unwrap();
        assert!(quot.is_zero());
        assert_eq!(rem, Poly::from_ints(&[3]));
    }

    #[test]
    fn primitive_keeps_sign() {
        let p = Poly::new(vec![q(-1, 2), q(3, 4)]);
        assert_eq!(p.primitive(), Poly::from_ints(&[-2, 3]));
        let p = Poly::from_ints(&[-4, -6]);
        assert_eq!(p.primitive(), Poly::from_ints(&[-2, -3]));
    }

    #[test]
    fn root_order_counts_repeated_factor() {
        let p = Poly::from_ints(&[-6, 6, -3, 1]);
        assert_eq!(p.root_order(&q(0, 1)), Some(0));
        let cube = Poly::from_ints(&[0, 0, 0, 1]);
        assert_eq!(cube.root_order(&q(0, 1)), Some(3));
        let sq = Poly::linear(&q(1, 3)).pow(2);
        assert_eq!(sq.root_order(&q(1, 3)), Some(2));
        assert_eq!(Poly::zero().root_order(&q(0, 1)), None);
    }

    #[test]
    fn display_forms() {
        let p = Poly::from_ints(&[-6, 6, -3, 1]);
        assert_eq!(alloc::format!("{p}"), "z^3 - 3*z^2 + 6*z - 6");
        assert_eq!(p.to_coeff_string(), "-6,6,-3,1");
        let r = Poly::new(vec![q(1, 2), q(-3, 4)]);
        assert_eq!(r.to_coeff_string(), "1/2,-3/4");
        assert_eq!(alloc::format!("{r}"), "-3/4*z + 1/2");
    }

    #[test]
    fn root_bound_is_strict() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        assert!(p.root_bound() > q(3, 2));
    }
}
