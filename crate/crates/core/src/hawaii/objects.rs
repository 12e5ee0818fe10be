//! `p_sigma`, `F[p]`, `Q[p]` and the zero counts built on them.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{gcd, squarefree_decompose, Poly, Rational};
use crate::cauchy::RatFunc;
use crate::error::{Error, Result};
use crate::sturm::{distinct_real_root_count, real_root_count};

/// Laguerre derivative `p' + sigma * p`.
pub fn laguerre_derivative(p: &Poly, sigma: &Rational) -> Poly {
    &p.derivative() + &p.scale(sigma)
}

/// The unique `p` with `p' + sigma * p = q`, for `sigma != 0`.
pub fn invert_laguerre(q: &Poly, sigma: &Rational) -> Result<Poly> {
    if sigma.is_zero() {
        return Err(Error::NotUniquelyInvertible);
    }
    let n = q.degree().ok_or(Error::ZeroPolynomial)?;
    let mut a = alloc::vec![Rational::zero(); n + 1];
    a[n] = q.coeff(n) / sigma;
    for k in (0..n).rev() {
        let next = &a[k + 1] * Rational::from_integer((k + 1).into());
        a[k] = (q.coeff(k) - next) / sigma;
    }
    Ok(Poly::new(a))
}

fn require_nonconstant(p: &Poly) -> Result<usize> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(n) => Ok(n),
    }
}

/// `F[p] = p p'' - (p')^2`, the numerator of `Q[p] = (p'/p)'`.
pub fn f_numerator(p: &Poly) -> Result<Poly> {
    require_nonconstant(p)?;
    Ok(f_unchecked(p))
}

pub(crate) fn f_unchecked(p: &Poly) -> Poly {
    let d1 = p.derivative();
    &(p * &d1.derivative()) - &(&d1 * &d1)
}

/// `Q[p] = F[p] / p^2` in lowest terms.
pub fn q_reduced(p: &Poly) -> Result<RatFunc> {
    let f = f_numerator(p)?;
    RatFunc::new(&f, &(p * p))
}

/// Number of non-real zeros of `p` counted with multiplicity; always even.
pub fn count_nonreal(p: &Poly) -> Result<usize> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(n - real_root_count(p)?)
}

/// Real zeros of `Q[p]` counted with multiplicity: the real roots of the
/// reduced numerator. Roots of `p` are poles, never zeros.
pub fn count_real_zeros_q(p: &Poly) -> Result<usize> {
    if require_nonconstant(p)? == 1 {
        // F = -(p')^2 is a nonzero constant
        return Ok(0);
    }
    real_root_count(q_reduced(p)?.numerator())
}

/// Order of `x` as a zero of `Q[p]`, for `p(x) != 0`.
pub fn q_zero_order(p: &Poly, x: &Rational) -> Result<usize> {
    require_nonconstant(p)?;
    if p.eval(x).is_zero() {
        return Err(Error::HypothesisViolated("p(lambda) = 0"));
    }
    Ok(f_unchecked(p).root_order(x).expect("F[p] is nonzero"))
}

/// Counts entering the inequality `Z_R(Q[p]) <= Z_C(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HawaiiReport {
    pub degree: usize,
    pub real_zero_count_with_mult: usize,
    pub nonreal_count_2m: usize,
    pub f: Poly,
    pub q: RatFunc,
    pub z_r_q: usize,
    pub hawaii_holds: bool,
}

pub fn check_hawaii(p: &Poly) -> Result<HawaiiReport> {
    let degree = require_nonconstant(p)?;
    let real = real_root_count(p)?;
    let nonreal = degree - real;
    let z_r_q = count_real_zeros_q(p)?;
    Ok(HawaiiReport {
        degree,
        real_zero_count_with_mult: real,
        nonreal_count_2m: nonreal,
        f: f_unchecked(p),
        q: q_reduced(p)?,
        z_r_q,
        hawaii_holds: z_r_q <= nonreal,
    })
}

/// Whether `Q[p_sigma](x) < 0` at every real `x` with `p_sigma(x) != 0`.
///
/// `F = F[p_sigma]` has a negative leading coefficient, so the condition
/// holds exactly when every real root of `F` has even multiplicity, every
/// real root of `F` is a root of `p_sigma`, and `F` is negative at one
/// rational point that is a root of neither.
pub fn check_global_negativity(p_sigma: &Poly) -> Result<bool> {
    require_nonconstant(p_sigma)?;
    let f = f_unchecked(p_sigma);
    let sf = squarefree_decompose(&f)?;
    for (factor, k) in &sf.parts {
        if k % 2 == 1 && distinct_real_root_count(factor)? > 0 {
            return Ok(false);
        }
    }
    let shared = gcd(&f, p_sigma)?;
    let shared_real = if shared.is_constant() { 0 } else { distinct_real_root_count(&shared)? };
    if distinct_real_root_count(&f)? != shared_real {
        return Ok(false);
    }
    let mut k = 0i64;
    let sample = loop {
        let x = Rational::from_integer(k.into());
        if !f.eval(&x).is_zero() && !p_sigma.eval(&x).is_zero() {
            break x;
        }
        k = if k > 0 { -k } else { 1 - k };
    };
    Ok(f.sign_at(&sample) < 0)
}

/// Whether `Q[p](x) > 0` for some real `x` off the poles: the reduced
/// numerator has a real root of odd multiplicity (it is negative at both
/// infinities).
pub fn q_positive_somewhere(p: &Poly) -> Result<bool> {
    if require_nonconstant(p)? == 1 {
        return Ok(false);
    }
    let num = q_reduced(p)?.numerator().clone();
    let sf = squarefree_decompose(&num)?;
    for (factor, k) in &sf.parts {
        if k % 2 == 1 && distinct_real_root_count(factor)? > 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Distinct real roots of `a` that are also roots of `b`.
pub(crate) fn shared_real_roots(a: &Poly, b: &Poly) -> Result<usize> {
    let g = gcd(a, b)?;
    if g.is_constant() {
        Ok(0)
    } else {
        distinct_real_root_count(&g)
    }
}

/// Real roots (with multiplicity) of `F[p]` that are rational, as exact points.
pub(crate) fn rational_real_roots(p: &Poly) -> Result<Vec<Rational>> {
    Ok(crate::sturm::isolate_real_roots(p)?
        .into_iter()
        .filter_map(|r| r.exact_value().cloned())
        .collect())
}
