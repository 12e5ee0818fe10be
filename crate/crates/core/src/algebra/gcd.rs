//! Euclidean gcd, square-free decomposition and the univariate resultant.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// Monic greatest common divisor.
///
/// Remainders are replaced by their primitive parts after every step, so
/// intermediate coefficients stay integral and small.
pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let mut x = a.primitive();
    let mut y = b.primitive();
    while !y.is_zero() {
        let r = x.rem(&y)?;
        x = y;
        y = r.primitive();
    }
    Ok(x.monic())
}

/// Square-free decomposition `p = c * prod(factor^multiplicity)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFree {
    /// Constant `c`: the leading coefficient of the input.
    pub unit: Rational,
    /// Monic, pairwise coprime, square-free factors with strictly increasing multiplicity.
    pub parts: Vec<(Poly, u32)>,
}

impl SquareFree {
    pub fn reconstruct(&self) -> Poly {
        self.parts
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (f, k)| &acc * &f.pow(*k))
    }

    /// Product of the factors: the monic square-free part of the input.
    pub fn radical(&self) -> Poly {
        self.parts.iter().fold(Poly::one(), |acc, (f, _)| &acc * f)
    }

    pub fn multiplicity_of_factor_containing(&self, pred: impl Fn(&Poly) -> bool) -> Option<u32> {
        self.parts.iter().find(|(f, _)| pred(f)).map(|(_, k)| *k)
    }
}

/// Yun's algorithm over the rationals.
pub fn squarefree_decompose(p: &Poly) -> Result<SquareFree> {
    let unit = p.lead().cloned().ok_or(Error::ZeroPolynomial)?;
    let f = p.monic();
    let mut parts = Vec::new();
    if f.is_constant() {
        return Ok(SquareFree { unit, parts });
    }
    let df = f.derivative();
    let a0 = gcd(&f, &df)?;
    let mut b = f.exact_div(&a0)?;
    let mut c = df.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut k = 1u32;
    while !b.is_constant() {
        let a = gcd(&b, &d)?;
        if !a.is_constant() {
            parts.push((a.clone(), k));
        }
        b = b.exact_div(&a)?;
        c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        k += 1;
    }
    Ok(SquareFree { unit, parts })
}

/// Monic square-free part `p / gcd(p, p')`.
pub fn squarefree_part(p: &Poly) -> Result<Poly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = gcd(p, &p.derivative())?;
    Ok(p.exact_div(&g)?.monic())
}

/// Resultant of `a` and `b` with respect to their actual degrees, following
/// the Sylvester-determinant sign convention. Computed along the Euclidean
/// remainder sequence.
pub fn resultant(a: &Poly, b: &Poly) -> Rational {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Rational::zero();
    };
    if db == 0 {
        return pow(b.lead().unwrap(), da);
    }
    if da == 0 {
        return pow(a.lead().unwrap(), db);
    }
    if da < db {
        let r = resultant(b, a);
        return if (da * db) % 2 == 1 { -r } else { r };
    }
    // res(a, b) = (-1)^(da db) res(b, a) and res(b, a) = lc(b)^(da - deg r) res(b, r)
    let r = a.rem(b).expect("b is nonzero");
    let Some(dr) = r.degree() else {
        return Rational::zero();
    };
    let tail = resultant(b, &r) * pow(b.lead().unwrap(), da - dr);
    if (da * db) % 2 == 1 {
        -tail
    } else {
        tail
    }
}

fn pow(x: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, _| acc * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&ints(&[-1, 0, 1]), &ints(&[-1, 1])).unwrap(), ints(&[-1, 1]));
        assert_eq!(gcd(&ints(&[1, 0, 1]), &ints(&[0, 2])).unwrap(), Poly::one());
        // (z-1)^2 (z+2) and (z-1)(z+3)
        let a = &ints(&[-1, 1]).pow(2) * &ints(&[2, 1]);
        let b = &ints(&[-1, 1]) * &ints(&[3, 1]);
        assert_eq!(gcd(&a, &b).unwrap(), ints(&[-1, 1]));
    }

    #[test]
    fn gcd_of_zeros_is_an_error() {
        assert_eq!(gcd(&Poly::zero(), &Poly::zero()), Err(Error::GcdOfZeros));
        assert_eq!(gcd(&ints(&[2, 4]), &Poly::zero()).unwrap(), ints(&[1, 2]).monic());
    }

    #[test]
    fn squarefree_examples() {
        let p = &ints(&[-1, 1]).pow(2) * &ints(&[2, 1]);
        let sf = squarefree_decompose(&p).unwrap();
        assert_eq!(sf.parts, alloc::vec![(ints(&[2, 1]), 1), (ints(&[-1, 1]), 2)]);

        let sf = squarefree_decompose(&ints(&[0, 0, 0, 1])).unwrap();
        assert_eq!(sf.parts, alloc::vec![(ints(&[0, 1]), 3)]);

        let sf = squarefree_decompose(&ints(&[1, 0, 1])).unwrap();
        assert_eq!(sf.parts, alloc::vec![(ints(&[1, 0, 1]), 1)]);

        assert_eq!(squarefree_decompose(&Poly::zero()), Err(Error::ZeroPolynomial));
        let c = squarefree_decompose(&ints(&[5])).unwrap();
        assert!(c.parts.is_empty());
    }

    #[test]
    fn squarefree_keeps_unit() {
        let p = &ints(&[-1, 1]).pow(3).scale(&Rational::from_integer((-3).into())) * &ints(&[1, 0, 1]);
        let sf = squarefree_decompose(&p).unwrap();
        assert_eq!(sf.reconstruct(), p);
    }

    #[test]
    fn resultant_matches_root_product() {
        // Res(z^2 - 1, z - 2) = prod over roots of first of (r - 2) = (1-2)(-1-2) = 3
        assert_eq!(resultant(&ints(&[-1, 0, 1]), &ints(&[-2, 1])), Rational::from_integer(3.into()));
        // Res(z - 2, z^2 - 1) = (2^2 - 1) = 3
        assert_eq!(resultant(&ints(&[-2, 1]), &ints(&[-1, 0, 1])), Rational::from_integer(3.into()));
        // common root
        assert!(resultant(&ints(&[-1, 0, 1]), &ints(&[-1, 1])).is_zero());
        // Res(z^2 + 1, 2z) = 2^2 * (i * -i) = 4
        assert_eq!(resultant(&ints(&[1, 0, 1]), &ints(&[0, 2])), Rational::from_integer(4.into()));
    }
}
