//! Real rational functions and their Cauchy indices.
//!
//! The index at an odd-order real pole is `+1` when the function jumps from
//! `-inf` to `+inf` left to right and `-1` for the opposite jump; even-order
//! poles contribute `0`. Interval and line indices sum these, and the
//! projective index adds the contribution of the point at infinity.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg};

use num_traits::Zero;

use crate::algebra::{gcd, squarefree_part, Poly, Rational};
use crate::error::{Error, Result};
use crate::sturm::{
    isolate_real_roots, separate_from, ExtendedRational, IsolatedRoot, RootCounter, RootLocation,
    SturmChain,
};

/// Value of a Cauchy index.
pub type IndexValue = i64;

/// A real rational function in lowest terms with a denominator of positive
/// leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: &Poly, den: &Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(RatFunc { num: Poly::zero(), den: Poly::one() });
        }
        let g = gcd(num, den)?;
        let mut num = num.exact_div(&g)?;
        let mut den = den.exact_div(&g)?;
        if den.lead_sign() < 0 {
            num = -num;
            den = -den;
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: &Poly) -> Self {
        RatFunc { num: p.clone(), den: Poly::one() }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at a non-pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// `-1 / self`; fails for the zero function.
    pub fn neg_recip(&self) -> Result<RatFunc> {
        RatFunc::new(&-&self.den, &self.num)
    }

    /// Real poles, isolated, with their orders.
    pub fn poles(&self) -> Result<Vec<IsolatedRoot>> {
        isolate_real_roots(&self.den)
    }
}

pub fn make_ratfunc(n: &Poly, d: &Poly) -> Result<RatFunc> {
    RatFunc::new(n, d)
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[{:?} / {:?}]", self.num, self.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(&num, &(&self.den * &rhs.den)).expect("nonzero denominator")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

/// Which algorithm computes the index over the whole line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexMethod {
    /// Sign variations `V(-inf) - V(+inf)` on the Sturm chain of
    /// `(denominator, numerator)`.
    Euclidean,
    /// Sum of indices over isolated real poles.
    PerPole,
}

/// Numerator-side data shared across pole evaluations of one function.
struct PoleContext<'a> {
    r: &'a RatFunc,
    den_radical: Poly,
    num_counter: Option<RootCounter>,
}

impl<'a> PoleContext<'a> {
    fn new(r: &'a RatFunc) -> Result<Self> {
        let den_radical = squarefree_part(&r.den)?;
        let num_counter = if r.num.is_zero() {
            None
        } else {
            Some(RootCounter::new(squarefree_part(&r.num)?)?)
        };
        Ok(PoleContext { r, den_radical, num_counter })
    }

    fn index(&self, pole: &IsolatedRoot) -> Result<IndexValue> {
        let mut pole = pole.clone();
        match &pole.location {
            RootLocation::Exact(w) => {
                let Some(order) = self.r.den.root_order(w).filter(|&k| k > 0) else {
                    return Err(Error::NotAPole);
                };
                if order % 2 == 0 {
                    return Ok(0);
                }
                // den = (z - w)^order * rest, rest(w) != 0
                let rest = self.r.den.exact_div(&Poly::linear(w).pow(order as u32))?;
                Ok((self.r.num.sign_at(w) * rest.sign_at(w)) as IndexValue)
            }
            RootLocation::Interval { lo, hi } => {
                let d = &self.den_radical;
                if lo >= hi
                    || d.eval(lo).is_zero()
                    || d.eval(hi).is_zero()
                    || d.sign_at(lo) == d.sign_at(hi)
                    || RootCounter::new(d.clone())?.count_between(lo, hi) != 1
                {
                    return Err(Error::NotAPole);
                }
                if let Some(counter) = &self.num_counter {
                    separate_from(&mut pole, d, counter);
                }
                if pole.exact_value().is_some() {
                    return self.index(&pole);
                }
                let left = self.r.num.sign_at(pole.lower()) * self.r.den.sign_at(pole.lower());
                let right = self.r.num.sign_at(pole.upper()) * self.r.den.sign_at(pole.upper());
                Ok(((right - left) / 2) as IndexValue)
            }
        }
    }
}

/// Index of `r` at one real pole.
pub fn index_at_pole(r: &RatFunc, pole: &IsolatedRoot) -> Result<IndexValue> {
    PoleContext::new(r)?.index(pole)
}

/// Sum of pole indices over the poles strictly inside `(a, b)`. Finite
/// endpoints must not be poles.
pub fn index_interval(r: &RatFunc, a: &ExtendedRational, b: &ExtendedRational) -> Result<IndexValue> {
    if a >= b {
        return Err(Error::EmptyInterval);
    }
    for end in [a, b] {
        if let ExtendedRational::Finite(x) = end {
            if r.den.eval(x).is_zero() {
                return Err(Error::EndpointAtPole);
            }
        }
    }
    let ctx = PoleContext::new(r)?;
    let mut total = 0;
    for mut pole in r.poles()? {
        let above_a = match a {
            ExtendedRational::Finite(x) => pole.compare(&ctx.den_radical, x) == Ordering::Greater,
            _ => true,
        };
        let below_b = match b {
            ExtendedRational::Finite(x) => pole.compare(&ctx.den_radical, x) == Ordering::Less,
            _ => true,
        };
        if above_a && below_b {
            total += ctx.index(&pole)?;
        }
    }
    Ok(total)
}

/// Index over the whole real line.
pub fn index_line(r: &RatFunc, method: IndexMethod) -> Result<IndexValue> {
    match method {
        IndexMethod::Euclidean => {
            if r.num.is_zero() {
                return Ok(0);
            }
            let chain = SturmChain::new(&r.den, &r.num)?;
            let lo = chain.variations_at(&ExtendedRational::NegInfinity) as IndexValue;
            let hi = chain.variations_at(&ExtendedRational::PosInfinity) as IndexValue;
            Ok(lo - hi)
        }
        IndexMethod::PerPole => {
            index_interval(r, &ExtendedRational::NegInfinity, &ExtendedRational::PosInfinity)
        }
    }
}

/// Contribution of the point at infinity, read off leading coefficients and
/// the parity of `deg num - deg den`.
pub fn index_at_infinity(r: &RatFunc) -> IndexValue {
    let (Some(dn), Some(dd)) = (r.num.degree(), r.den.degree()) else {
        return 0;
    };
    if dn <= dd || (dn - dd) % 2 == 0 {
        return 0;
    }
    // odd excess degree: sign at -inf is opposite to sign at +inf
    let at_pos_inf = r.num.lead_sign() * r.den.lead_sign();
    -(at_pos_inf as IndexValue)
}

/// Index on the projective line: line index plus the index at infinity.
pub fn index_projective(r: &RatFunc) -> Result<IndexValue> {
    Ok(index_line(r, IndexMethod::Euclidean)? + index_at_infinity(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    fn ints(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(&ints(n), &ints(d)).unwrap()
    }

    fn both(r: &RatFunc) -> IndexValue {
        let e = index_line(r, IndexMethod::Euclidean).unwrap();
        let p = index_line(r, IndexMethod::PerPole).unwrap();
        assert_eq!(e, p, "methods disagree on {r:?}");
        e
    }

    #[test]
    fn construction_reduces() {
        let r = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(r.numerator(), &ints(&[1, 1]));
        assert_eq!(r.denominator(), &ints(&[1]));

        let den = ints(&[1, 0, 1]).pow(2);
        let r = RatFunc::new(&ints(&[2, 0, -2]), &den).unwrap();
        assert_eq!(r.numerator(), &ints(&[2, 0, -2]));
        assert_eq!(r.denominator(), &den);

        let r = rf(&[1], &[0, -1]);
        assert_eq!(r.numerator(), &ints(&[-1]));
        assert_eq!(r.denominator(), &ints(&[0, 1]));

        assert_eq!(RatFunc::new(&ints(&[1]), &Poly::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn pole_indices_at_zero() {
        let zero = IsolatedRoot::exact(int(0), 1);
        assert_eq!(index_at_pole(&rf(&[1], &[0, 1]), &zero).unwrap(), 1);
        assert_eq!(index_at_pole(&rf(&[1], &[0, 0, 1]), &zero).unwrap(), 0);
        assert_eq!(index_at_pole(&rf(&[-1], &[0, 1]), &zero).unwrap(), -1);
        let one = IsolatedRoot::exact(int(1), 1);
        assert_eq!(index_at_pole(&rf(&[1], &[0, 1]), &one), Err(Error::NotAPole));
    }

    #[test]
    fn pole_index_on_interval_root() {
        // 1/(z^2 - 2) at sqrt(2): den goes - to +, so +1; at -sqrt(2): -1
        let r = rf(&[1], &[-2, 0, 1]);
        let poles = r.poles().unwrap();
        assert_eq!(index_at_pole(&r, &poles[0]).unwrap(), -1);
        assert_eq!(index_at_pole(&r, &poles[1]).unwrap(), 1);
        let bogus = IsolatedRoot {
            location: RootLocation::Interval { lo: int(2), hi: int(3) },
            multiplicity: 1,
        };
        assert_eq!(index_at_pole(&r, &bogus), Err(Error::NotAPole));
    }

    #[test]
    fn numerator_root_close_to_pole() {
        // (z - 7/5) / (z^2 - 2): numerator root 1.4 sits next to the pole 1.41421...
        let r = RatFunc::new(&Poly::linear(&ratio(7, 5)), &ints(&[-2, 0, 1])).unwrap();
        let poles = r.poles().unwrap();
        // near sqrt(2) the numerator is positive, den goes - to +
        assert_eq!(index_at_pole(&r, &poles[1]).unwrap(), 1);
        // near -sqrt(2) the numerator is negative, den goes + to -
        assert_eq!(index_at_pole(&r, &poles[0]).unwrap(), 1);
        assert_eq!(both(&r), 2);
    }

    #[test]
    fn interval_examples() {
        let p = ints(&[-1, 0, 1]);
        let r = RatFunc::new(&p.derivative(), &p).unwrap();
        let a = ExtendedRational::Finite(int(0));
        let b = ExtendedRational::Finite(int(2));
        assert_eq!(index_interval(&r, &a, &b).unwrap(), 1);
        assert_eq!(
            index_interval(&rf(&[1], &[1, 0, 1]), &ExtendedRational::NegInfinity, &ExtendedRational::PosInfinity)
                .unwrap(),
            0
        );
        let one = ExtendedRational::Finite(int(1));
        assert_eq!(index_interval(&rf(&[1], &[0, 1]), &one, &b).unwrap(), 0);
        assert_eq!(index_interval(&r, &b, &a), Err(Error::EmptyInterval));
        assert_eq!(index_interval(&r, &a, &one), Err(Error::EndpointAtPole));
    }

    #[test]
    fn line_examples() {
        let p = ints(&[-1, 0, 1]);
        assert_eq!(both(&RatFunc::new(&p.derivative(), &p).unwrap()), 2);
        let p = ints(&[1, 0, 1]);
        assert_eq!(both(&RatFunc::new(&p.derivative(), &p).unwrap()), 0);
        // H'/H for p = z^3 - 3z^2 + 5z - 5, p_1 = z^3 - z: F[p] / (p * p_1)
        let p = ints(&[-5, 5, -3, 1]);
        let p1 = ints(&[0, -1, 0, 1]);
        let f = &(&p * &p.derivative().derivative()) - &p.derivative().pow(2);
        assert_eq!(both(&RatFunc::new(&f, &(&p * &p1)).unwrap()), 2);
        assert_eq!(both(&RatFunc::new(&Poly::zero(), &p).unwrap()), 0);
    }

    #[test]
    fn infinity_examples() {
        assert_eq!(index_at_infinity(&RatFunc::from_poly(&ints(&[0, 1]))), -1);
        assert_eq!(index_at_infinity(&RatFunc::from_poly(&ints(&[0, -1]))), 1);
        assert_eq!(index_at_infinity(&RatFunc::from_poly(&ints(&[0, 0, 1]))), 0);
        assert_eq!(index_at_infinity(&rf(&[1, 1], &[1, 0, 1])), 0);
        assert_eq!(index_at_infinity(&rf(&[0, 0, 3], &[1, 1])), -1);
    }

    #[test]
    fn projective_examples() {
        let z = RatFunc::from_poly(&ints(&[0, 1]));
        assert_eq!(index_projective(&z).unwrap(), -1);
        let minus_inv = z.neg_recip().unwrap();
        assert_eq!(minus_inv, rf(&[-1], &[0, 1]));
        assert_eq!(index_projective(&minus_inv).unwrap(), -1);
    }
}
