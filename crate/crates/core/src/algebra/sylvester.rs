//! Discriminant of the pencil `v + sigma*u` as a polynomial in `sigma`.
//!
//! Entries of the Sylvester matrix are polynomials of degree at most one in
//! `sigma`; the determinant is taken by fraction-free (Bareiss) elimination in
//! the ring of `sigma`-polynomials, where every division is exact.

use alloc::vec::Vec;

use num_traits::Zero;

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// Determinant of a square matrix with polynomial entries.
pub fn bareiss_determinant(mut m: Vec<Vec<Poly>>) -> Result<Poly> {
    let n = m.len();
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(Poly::zero());
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Sylvester matrix of two polynomials in `z` whose coefficients are
/// `sigma`-polynomials, given in ascending order and with formal degrees
/// `a.len() - 1` and `b.len() - 1`.
fn sylvester(a: &[Poly], b: &[Poly]) -> Vec<Vec<Poly>> {
    let da = a.len() - 1;
    let db = b.len() - 1;
    let n = da + db;
    let mut rows = Vec::with_capacity(n);
    for shift in 0..db {
        let mut row = alloc::vec![Poly::zero(); n];
        for (j, c) in a.iter().rev().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..da {
        let mut row = alloc::vec![Poly::zero(); n];
        for (j, c) in b.iter().rev().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Discriminant, up to a nonzero rational constant, of `K_sigma = v + sigma*u`
/// in `z`, where `deg v < deg u`.
///
/// The formal Sylvester resultant `Res_z(K, dK/dz)` carries the leading
/// coefficient `sigma * lead(u)` of `K`; that factor is divided out so the
/// result vanishes exactly where `K_sigma` of full degree has a repeated root.
pub fn pencil_discriminant(u: &Poly, v: &Poly) -> Result<Poly> {
    let n = u.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    // K_k(sigma) = v_k + sigma * u_k for k = 0..=n
    let k_coeffs: Vec<Poly> = (0..=n)
        .map(|k| Poly::new(alloc::vec![v.coeff(k), u.coeff(k)]))
        .collect();
    let dk_coeffs: Vec<Poly> = (1..=n)
        .map(|k| k_coeffs[k].scale(&Rational::from_integer(k.into())))
        .collect();
    let res = bareiss_determinant(sylvester(&k_coeffs, &dk_coeffs))?;
    let lead = Poly::new(alloc::vec![Rational::zero(), u.lead().unwrap().clone()]);
    if res.is_zero() {
        return Ok(res);
    }
    res.exact_div(&lead)
}

/// `D(sigma)`: discriminant in `z` of `p_sigma = p' + sigma*p`, up to a
/// nonzero constant.
pub fn discriminant_in_sigma(p: &Poly) -> Result<Poly> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => pencil_discriminant(p, &p.derivative()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::resultant;

    fn ints(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn is_constant_multiple(a: &Poly, b: &Poly) -> bool {
        let (Some(la), Some(lb)) = (a.lead(), b.lead()) else {
            return a.is_zero() && b.is_zero();
        };
        a.scale(&lb.clone()) == b.scale(&la.clone())
    }

    #[test]
    fn bareiss_integer_matrix() {
        let m = alloc::vec![
            alloc::vec![ints(&[2]), ints(&[0]), ints(&[1])],
            alloc::vec![ints(&[0]), ints(&[0]), ints(&[3])],
            alloc::vec![ints(&[1]), ints(&[4]), ints(&[0])],
        ];
        // 2*(0*0 - 3*4) - 0 + 1*(0*4 - 0*1) = -24
        assert_eq!(bareiss_determinant(m).unwrap(), ints(&[-24]));
    }

    #[test]
    fn quadratic_with_nonreal_roots() {
        // p_sigma = sigma z^2 + 2z + sigma; b^2 - 4ac = 4 - 4 sigma^2
        let d = discriminant_in_sigma(&ints(&[1, 0, 1])).unwrap();
        assert!(is_constant_multiple(&d, &ints(&[4, 0, -4])));
    }

    #[test]
    fn quadratic_with_real_roots() {
        // p_sigma = sigma z^2 + 2z - sigma; b^2 - 4ac = 4 + 4 sigma^2
        let d = discriminant_in_sigma(&ints(&[-1, 0, 1])).unwrap();
        assert!(is_constant_multiple(&d, &ints(&[4, 0, 4])));
    }

    #[test]
    fn linear_has_constant_discriminant() {
        let d = discriminant_in_sigma(&ints(&[0, 1])).unwrap();
        assert_eq!(d.degree(), Some(0));
        assert_eq!(discriminant_in_sigma(&ints(&[3])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn agrees_with_euclidean_resultant_at_rational_sigma() {
        let p = ints(&[-6, 6, -3, 1]);
        let d = discriminant_in_sigma(&p).unwrap();
        for s in [-3i64, -1, 1, 2, 5] {
            let sigma = Rational::from_integer(s.into());
            let ps = &p.derivative() + &p.scale(&sigma);
            let res = resultant(&ps, &ps.derivative());
            assert_eq!(res, d.eval(&sigma) * &sigma * p.lead().unwrap());
        }
    }
}
