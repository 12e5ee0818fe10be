//! Sturm chains, sign variations, real-root counting and isolation.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{ratio, squarefree_decompose, squarefree_part, Poly, Rational};
use crate::error::{Error, Result};

/// A point of the extended real line with a rational finite part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedRational {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl From<Rational> for ExtendedRational {
    fn from(x: Rational) -> Self {
        ExtendedRational::Finite(x)
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::NegInfinity => f.write_str("-inf"),
            ExtendedRational::Finite(x) => write!(f, "{x}"),
            ExtendedRational::PosInfinity => f.write_str("+inf"),
        }
    }
}

/// Sign of `p` at an extended point. At infinity the sign is read from the
/// leading coefficient and the parity of the degree.
pub fn sign_at(p: &Poly, x: &ExtendedRational) -> i8 {
    match x {
        ExtendedRational::Finite(v) => p.sign_at(v),
        ExtendedRational::PosInfinity => p.lead_sign(),
        ExtendedRational::NegInfinity => match p.degree() {
            None => 0,
            Some(d) if d % 2 == 0 => p.lead_sign(),
            Some(_) => -p.lead_sign(),
        },
    }
}

/// Number of sign changes in a sequence, zeros skipped.
pub fn count_sign_changes(signs: impl IntoIterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.into_iter().filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Generalized Sturm chain `f, g, -rem(f, g), ...` with every remainder
/// rescaled to its primitive part (positive factors only).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<Poly>,
}

impl SturmChain {
    pub fn new(f: &Poly, g: &Poly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut polys = alloc::vec![f.primitive()];
        if !g.is_zero() {
            polys.push(g.primitive());
            loop {
                let n = polys.len();
                let r = polys[n - 2].rem(&polys[n - 1])?;
                if r.is_zero() {
                    break;
                }
                polys.push((-r).primitive());
            }
        }
        Ok(SturmChain { polys })
    }

    /// Classical chain `p, p', ...`.
    pub fn of(p: &Poly) -> Result<Self> {
        SturmChain::new(p, &p.derivative())
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn variations_at(&self, x: &ExtendedRational) -> usize {
        count_sign_changes(self.polys.iter().map(|p| sign_at(p, x)))
    }

    pub fn variations_at_rational(&self, x: &Rational) -> usize {
        count_sign_changes(self.polys.iter().map(|p| p.sign_at(x)))
    }
}

pub fn sturm_chain(f: &Poly, g: &Poly) -> Result<SturmChain> {
    SturmChain::new(f, g)
}

pub fn variations_at(chain: &SturmChain, x: &ExtendedRational) -> usize {
    chain.variations_at(x)
}

/// Distinct-root counter for a square-free polynomial, with its chain cached.
#[derive(Clone, Debug)]
pub(crate) struct RootCounter {
    pub(crate) poly: Poly,
    chain: SturmChain,
}

impl RootCounter {
    /// `poly` must be square-free and nonzero.
    pub(crate) fn new(poly: Poly) -> Result<Self> {
        let chain = SturmChain::of(&poly)?;
        Ok(RootCounter { poly, chain })
    }

    /// Distinct roots in the open interval `(a, b)`, `a < b`.
    pub(crate) fn count(&self, a: &ExtendedRational, b: &ExtendedRational) -> usize {
        // V(a) - V(b) counts roots in (a, b]
        let n = self.chain.variations_at(a) - self.chain.variations_at(b);
        match b {
            ExtendedRational::Finite(x) if self.poly.eval(x).is_zero() => n - 1,
            _ => n,
        }
    }

    pub(crate) fn count_between(&self, lo: &Rational, hi: &Rational) -> usize {
        self.count(&lo.clone().into(), &hi.clone().into())
    }
}

/// Number of real roots of `p` in the open interval `(a, b)`, either distinct
/// or counted with multiplicity.
pub fn count_real_roots(
    p: &Poly,
    a: &ExtendedRational,
    b: &ExtendedRational,
    with_multiplicity: bool,
) -> Result<usize> {
    if a >= b {
        return Err(Error::EmptyInterval);
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if with_multiplicity {
        let sf = squarefree_decompose(p)?;
        let mut total = 0;
        for (f, k) in &sf.parts {
            total += *k as usize * RootCounter::new(f.clone())?.count(a, b);
        }
        Ok(total)
    } else {
        Ok(RootCounter::new(squarefree_part(p)?)?.count(a, b))
    }
}

/// Real roots over the whole line, with multiplicity.
pub fn real_root_count(p: &Poly) -> Result<usize> {
    count_real_roots(p, &ExtendedRational::NegInfinity, &ExtendedRational::PosInfinity, true)
}

/// Distinct real roots over the whole line.
pub fn distinct_real_root_count(p: &Poly) -> Result<usize> {
    count_real_roots(p, &ExtendedRational::NegInfinity, &ExtendedRational::PosInfinity, false)
}

/// Where an isolated real root lives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RootLocation {
    Exact(Rational),
    /// Open interval `(lo, hi)` holding exactly one distinct root; the
    /// endpoints are never roots.
    Interval { lo: Rational, hi: Rational },
}

impl fmt::Display for RootLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootLocation::Exact(x) => write!(f, "{x}"),
            RootLocation::Interval { lo, hi } => write!(f, "({lo}, {hi})"),
        }
    }
}

/// A real root together with its multiplicity in the polynomial that was
/// isolated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsolatedRoot {
    pub location: RootLocation,
    pub multiplicity: u32,
}

impl IsolatedRoot {
    pub fn exact(x: Rational, multiplicity: u32) -> Self {
        IsolatedRoot { location: RootLocation::Exact(x), multiplicity }
    }

    pub fn exact_value(&self) -> Option<&Rational> {
        match &self.location {
            RootLocation::Exact(x) => Some(x),
            RootLocation::Interval { .. } => None,
        }
    }

    pub fn lower(&self) -> &Rational {
        match &self.location {
            RootLocation::Exact(x) => x,
            RootLocation::Interval { lo, .. } => lo,
        }
    }

    pub fn upper(&self) -> &Rational {
        match &self.location {
            RootLocation::Exact(x) => x,
            RootLocation::Interval { hi, .. } => hi,
        }
    }

    /// Width of the isolating region (zero for exact roots).
    pub fn width(&self) -> Rational {
        self.upper() - self.lower()
    }

    /// One bisection step. `f` must be nonzero at both endpoints with a sign
    /// change across the root, which holds for the square-free part of the
    /// isolated polynomial.
    pub fn bisect(&mut self, f: &Poly) {
        let RootLocation::Interval { lo, hi } = &self.location else {
            return;
        };
        let mid = (lo + hi) / Rational::from_integer(2.into());
        let sm = f.sign_at(&mid);
        if sm == 0 {
            self.location = RootLocation::Exact(mid);
            return;
        }
        let slo = f.sign_at(lo);
        self.location = if sm == slo {
            RootLocation::Interval { lo: mid, hi: hi.clone() }
        } else {
            RootLocation::Interval { lo: lo.clone(), hi: mid }
        };
    }

    /// Bisect until the region is narrower than `width` (or exact).
    pub fn refine(&mut self, f: &Poly, width: &Rational) {
        while !self.width().is_zero() && &self.width() >= width {
            self.bisect(f);
        }
    }

    /// Position of the root relative to `x`. Refines as needed; `f` as in
    /// [`IsolatedRoot::bisect`].
    pub fn compare(&mut self, f: &Poly, x: &Rational) -> Ordering {
        loop {
            match &self.location {
                RootLocation::Exact(v) => return v.cmp(x),
                RootLocation::Interval { lo, hi } => {
                    if x <= lo {
                        return Ordering::Greater;
                    }
                    if x >= hi {
                        return Ordering::Less;
                    }
                    if f.eval(x).is_zero() {
                        self.location = RootLocation::Exact(x.clone());
                        return Ordering::Equal;
                    }
                    // root lies on the side where the sign changes
                    return if f.sign_at(x) == f.sign_at(lo) {
                        self.location = RootLocation::Interval { lo: x.clone(), hi: hi.clone() };
                        Ordering::Greater
                    } else {
                        self.location = RootLocation::Interval { lo: lo.clone(), hi: x.clone() };
                        Ordering::Less
                    };
                }
            }
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        match &self.location {
            RootLocation::Exact(v) => v == x,
            RootLocation::Interval { lo, hi } => lo < x && x < hi,
        }
    }
}

impl fmt::Display for IsolatedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mult {})", self.location, self.multiplicity)
    }
}

/// A point strictly inside `(lo, hi)` at which `f` does not vanish.
fn split_point(f: &Poly, lo: &Rational, hi: &Rational) -> Rational {
    let span = hi - lo;
    let quarter = &span * ratio(1, 4);
    let x = simplest_between(&(lo + &quarter), &(hi - &quarter));
    if !f.eval(&x).is_zero() {
        return x;
    }
    // fractions 1/2, 1/3, 2/3, 1/4, 3/4, ... ; f has finitely many roots
    let mut den = 2i64;
    loop {
        for num in 1..den {
            if num_integer::gcd(num, den) != 1 {
                continue;
            }
            let x = lo + &span * ratio(num, den);
            if !f.eval(&x).is_zero() {
                return x;
            }
        }
        den += 1;
    }
}

/// The rational with the smallest denominator (then smallest absolute
/// numerator) in the open interval `(a, b)`.
pub fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    assert!(a < b, "empty interval");
    let zero = Rational::zero();
    if a < &zero && &zero < b {
        zero
    } else if b <= &zero {
        -simplest_above(&-b, Some(&-a))
    } else {
        simplest_above(a, Some(b))
    }
}

/// Simplest rational in `(lo, hi)` for `lo >= 0`; `None` is `+inf`.
fn simplest_above(lo: &Rational, hi: Option<&Rational>) -> Rational {
    let next = lo.floor() + Rational::one();
    if hi.map_or(true, |h| &next < h) {
        return next;
    }
    // (lo, hi) lies inside [f, f + 1]: continue with the fractional parts
    let f = next - Rational::one();
    let hi = hi.expect("bounded here");
    let y_lo = (hi - &f).recip();
    let y_hi = (lo != &f).then(|| (lo - &f).recip());
    f + simplest_above(&y_lo, y_hi.as_ref()).recip()
}

/// Isolate the real roots of a square-free `f` into disjoint open intervals
/// with non-root endpoints, or exact rational points.
fn isolate_squarefree(counter: &RootCounter) -> Vec<RootLocation> {
    let f = &counter.poly;
    let bound = f.root_bound().ceil();
    let mut out = Vec::new();
    let total = counter.count(&ExtendedRational::NegInfinity, &ExtendedRational::PosInfinity);
    let mut stack = alloc::vec![(-bound.clone(), bound, total)];
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push(RootLocation::Interval { lo, hi }),
            _ => {
                let mid = split_point(f, &lo, &hi);
                let left = counter.count_between(&lo, &mid);
                stack.push((mid.clone(), hi, n - left));
                stack.push((lo, mid, left));
            }
        }
    }
    // Rational roots a/q of the primitive integer f have q | lead(f), so
    // lead(f)*root is an integer; shrink each interval below 1/lead and test
    // the single candidate.
    let prim = f.primitive();
    let lead = prim.lead().expect("nonzero").abs();
    let unit = lead.recip();
    for loc in &mut out {
        let mut root = IsolatedRoot { location: loc.clone(), multiplicity: 1 };
        root.refine(&prim, &unit);
        if let RootLocation::Interval { lo, hi } = &root.location {
            let cand = Rational::from_integer((lo * &lead).floor().to_integer() + 1) / &lead;
            if &cand < hi && prim.eval(&cand).is_zero() {
                root.location = RootLocation::Exact(cand);
            }
        }
        *loc = root.location;
    }
    out
}

/// Isolate every distinct real root of `p`, with multiplicities. Rational
/// roots come back as exact points, irrational ones as open intervals.
pub fn isolate_real_roots(p: &Poly) -> Result<Vec<IsolatedRoot>> {
    let sf = squarefree_decompose(p)?;
    if sf.parts.is_empty() {
        return Ok(Vec::new());
    }
    let radical = sf.radical();
    let counter = RootCounter::new(radical)?;
    let mut roots: Vec<IsolatedRoot> = isolate_squarefree(&counter)
        .into_iter()
        .map(|location| {
            let multiplicity = sf
                .multiplicity_of_factor_containing(|f| match &location {
                    RootLocation::Exact(x) => f.eval(x).is_zero(),
                    RootLocation::Interval { lo, hi } => f.sign_at(lo) != f.sign_at(hi),
                })
                .expect("every root belongs to one square-free factor");
            IsolatedRoot { location, multiplicity }
        })
        .collect();
    roots.sort_by(|a, b| a.lower().cmp(b.lower()));
    Ok(roots)
}

/// Refine an isolating interval of a root of `f` until `other` has no root in
/// its closure. Exact roots are returned unchanged.
pub(crate) fn separate_from(root: &mut IsolatedRoot, f: &Poly, other: &RootCounter) {
    loop {
        let RootLocation::Interval { lo, hi } = &root.location else {
            return;
        };
        if !other.poly.eval(lo).is_zero()
            && !other.poly.eval(hi).is_zero()
            && other.count_between(lo, hi) == 0
        {
            return;
        }
        root.bisect(f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn ints(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    const NEG: ExtendedRational = ExtendedRational::NegInfinity;
    const POS: ExtendedRational = ExtendedRational::PosInfinity;

    fn signs(chain: &SturmChain, x: &ExtendedRational) -> Vec<i8> {
        chain.polys().iter().map(|p| sign_at(p, x)).collect()
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&ratio(1, 3), &ratio(1, 2)), ratio(2, 5));
        assert_eq!(simplest_between(&ratio(-7, 2), &ratio(-3, 2)), int(-2));
        assert_eq!(simplest_between(&ratio(-1, 2), &ratio(1, 2)), int(0));
        assert_eq!(simplest_between(&int(0), &ratio(1, 100)), ratio(1, 101));
        assert_eq!(simplest_between(&ratio(3, 1), &ratio(31, 10)), ratio(34, 11));
        assert_eq!(simplest_between(&ratio(-3, 10), &int(0)), ratio(-1, 4));
    }

    #[test]
    fn chain_for_real_quadratic() {
        let c = sturm_chain(&ints(&[-1, 0, 1]), &ints(&[0, 2])).unwrap();
        assert_eq!(c.polys().len(), 3);
        assert_eq!(c.polys()[2].degree(), Some(0));
        assert_eq!(c.polys()[2].lead_sign(), 1);
        assert_eq!(signs(&c, &NEG), alloc::vec![1, -1, 1]);
        assert_eq!(variations_at(&c, &NEG), 2);
        assert_eq!(signs(&c, &POS), alloc::vec![1, 1, 1]);
        assert_eq!(variations_at(&c, &POS), 0);
    }

    #[test]
    fn chain_for_nonreal_quadratic() {
        let c = sturm_chain(&ints(&[1, 0, 1]), &ints(&[0, 2])).unwrap();
        assert_eq!(c.polys()[2].lead_sign(), -1);
        assert_eq!(c.variations_at(&NEG), c.variations_at(&POS));
    }

    #[test]
    fn chain_terminates_at_constant() {
        let c = sturm_chain(&ints(&[-1, 1]), &ints(&[1])).unwrap();
        assert_eq!(c.polys(), &[ints(&[-1, 1]), ints(&[1])]);
        assert_eq!(sturm_chain(&Poly::zero(), &ints(&[1])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn all_positive_has_no_variations() {
        let c = SturmChain::of(&ints(&[1, 0, 1])).unwrap();
        assert_eq!(c.variations_at(&ExtendedRational::Finite(int(0))), 1);
        assert_eq!(count_sign_changes([1, 1, 1]), 0);
        assert_eq!(count_sign_changes([1, 0, -1, 0, 1]), 2);
    }

    #[test]
    fn counts_over_line() {
        assert_eq!(real_root_count(&ints(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(real_root_count(&ints(&[-1, 0, 1])).unwrap(), 2);
        assert_eq!(real_root_count(&ints(&[-6, 6, -3, 1])).unwrap(), 1);
        let sq = ints(&[-1, 1]).pow(2);
        assert_eq!(real_root_count(&sq).unwrap(), 2);
        assert_eq!(distinct_real_root_count(&sq).unwrap(), 1);
    }

    #[test]
    fn open_interval_excludes_endpoints() {
        let p = ints(&[-1, 0, 1]);
        let a = ExtendedRational::Finite(int(-1));
        let b = ExtendedRational::Finite(int(1));
        assert_eq!(count_real_roots(&p, &a, &b, false).unwrap(), 0);
        let b2 = ExtendedRational::Finite(int(2));
        assert_eq!(count_real_roots(&p, &a, &b2, false).unwrap(), 1);
        assert_eq!(count_real_roots(&p, &b, &a, false), Err(Error::EmptyInterval));
    }

    #[test]
    fn isolate_rational_roots_exactly() {
        let roots = isolate_real_roots(&ints(&[-1, 0, 1])).unwrap();
        assert_eq!(roots, alloc::vec![IsolatedRoot::exact(int(-1), 1), IsolatedRoot::exact(int(1), 1)]);
        let roots = isolate_real_roots(&ints(&[-1, 1]).pow(2)).unwrap();
        assert_eq!(roots, alloc::vec![IsolatedRoot::exact(int(1), 2)]);
        // 3z - 1 has the non-dyadic root 1/3
        let roots = isolate_real_roots(&ints(&[-1, 3])).unwrap();
        assert_eq!(roots, alloc::vec![IsolatedRoot::exact(ratio(1, 3), 1)]);
    }

    #[test]
    fn isolate_irrational_roots() {
        let p = ints(&[-2, 0, 1]);
        let mut roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.exact_value().is_none() && r.multiplicity == 1));
        assert!(roots[0].upper() <= roots[1].lower());
        for r in &mut roots {
            assert_ne!(p.sign_at(r.lower()), p.sign_at(r.upper()));
            r.refine(&p, &ratio(1, 1000));
            assert!(r.width() < ratio(1, 1000));
        }
        let pos = &roots[1];
        assert!(pos.lower() * pos.lower() < int(2) && pos.upper() * pos.upper() > int(2));
        assert!(pos.lower() > &int(1) && pos.upper() < &int(2));
    }

    #[test]
    fn compare_against_points() {
        let p = ints(&[-2, 0, 1]);
        let mut roots = isolate_real_roots(&p).unwrap();
        let r = &mut roots[1];
        assert_eq!(r.compare(&p, &int(1)), Ordering::Greater);
        assert_eq!(r.compare(&p, &ratio(3, 2)), Ordering::Less);
        assert_eq!(r.compare(&p, &ratio(7, 5)), Ordering::Greater);
    }

    #[test]
    fn isolate_zero_polynomial_fails() {
        assert_eq!(isolate_real_roots(&Poly::zero()), Err(Error::ZeroPolynomial));
        assert!(isolate_real_roots(&ints(&[4])).unwrap().is_empty());
    }
}
