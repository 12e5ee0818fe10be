//! Real-root bookkeeping of `p` against `p_sigma`, and the index identity
//! for `H = p_sigma / p`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use super::objects::{count_nonreal, f_unchecked, laguerre_derivative};
use super::outcome::{Checks, Outcome};
use crate::algebra::{gcd, Poly, Rational};
use crate::cauchy::{index_at_infinity, index_line, IndexMethod, IndexValue, RatFunc};
use crate::error::{Error, Result};
use crate::sturm::{isolate_real_roots, IsolatedRoot, RootCounter, RootLocation};

/// Real roots of `p` split by multiplicity, real roots of `p_sigma` that are
/// not roots of `p` split the same way, and both non-real counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootProfile {
    /// Simple real roots of `p` (`d_1` of them).
    pub simple_real_of_p: Vec<IsolatedRoot>,
    /// Multiple real roots of `p` with their multiplicities (`d_2`).
    pub multiple_real_of_p: Vec<IsolatedRoot>,
    /// Simple real roots of `p_sigma` not shared with `p` (`l_1`).
    pub new_simple_of_p_sigma: Vec<IsolatedRoot>,
    /// Multiple real roots of `p_sigma` not shared with `p` (`l_2`).
    pub new_multiple_of_p_sigma: Vec<IsolatedRoot>,
    pub nonreal_2m: usize,
    pub nonreal_2m_sigma: usize,
}

impl RootProfile {
    /// `sum (r_i - 1)` over the multiple new roots of `p_sigma`.
    pub fn excess_multiplicity(&self) -> usize {
        self.new_multiple_of_p_sigma.iter().map(|r| r.multiplicity as usize - 1).sum()
    }

    /// `l_1 + l_2 - d_1 - d_2`.
    pub fn pole_balance(&self) -> IndexValue {
        (self.new_simple_of_p_sigma.len() + self.new_multiple_of_p_sigma.len()) as IndexValue
            - (self.simple_real_of_p.len() + self.multiple_real_of_p.len()) as IndexValue
    }

    /// Degree of `p_sigma` reassembled from the profile:
    /// `sum (n_j - 1) + l_1 + sum r_i + 2m_sigma`.
    pub fn p_sigma_degree(&self) -> usize {
        self.multiple_real_of_p.iter().map(|r| r.multiplicity as usize - 1).sum::<usize>()
            + self.new_simple_of_p_sigma.len()
            + self.new_multiple_of_p_sigma.iter().map(|r| r.multiplicity as usize).sum::<usize>()
            + self.nonreal_2m_sigma
    }

    /// Degree of `p` reassembled from the profile: `d_1 + sum n_j + 2m`.
    pub fn p_degree(&self) -> usize {
        self.simple_real_of_p.len()
            + self.multiple_real_of_p.iter().map(|r| r.multiplicity as usize).sum::<usize>()
            + self.nonreal_2m
    }
}

pub fn root_profile(p: &Poly, sigma: &Rational) -> Result<RootProfile> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let ps = laguerre_derivative(p, sigma);
    let (simple, multiple): (Vec<_>, Vec<_>) =
        isolate_real_roots(p)?.into_iter().partition(|r| r.multiplicity == 1);
    let shared = gcd(p, &ps)?;
    let shared_counter = (!shared.is_constant()).then(|| RootCounter::new(crate::algebra::squarefree_part(&shared)?)).transpose()?;
    let is_shared = |r: &IsolatedRoot| match (&r.location, &shared_counter) {
        (_, None) => false,
        (RootLocation::Exact(x), Some(c)) => c.poly.eval(x).is_zero(),
        (RootLocation::Interval { lo, hi }, Some(c)) => c.count_between(lo, hi) > 0,
    };
    let fresh: Vec<IsolatedRoot> = if ps.is_constant() {
        Vec::new()
    } else {
        isolate_real_roots(&ps)?.into_iter().filter(|r| !is_shared(r)).collect()
    };
    let (new_simple, new_multiple): (Vec<_>, Vec<_>) = fresh.into_iter().partition(|r| r.multiplicity == 1);
    Ok(RootProfile {
        simple_real_of_p: simple,
        multiple_real_of_p: multiple,
        new_simple_of_p_sigma: new_simple,
        new_multiple_of_p_sigma: new_multiple,
        nonreal_2m: count_nonreal(p)?,
        nonreal_2m_sigma: if ps.is_constant() { 0 } else { count_nonreal(&ps)? },
    })
}

/// Both sides of the index identity for `H = p_sigma / p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexIdentityReport {
    pub sigma: Rational,
    pub profile: RootProfile,
    /// `Ind_R(H'/H)` by sign variations.
    pub index_euclidean: IndexValue,
    /// `Ind_R(H'/H)` by summing pole indices.
    pub index_per_pole: IndexValue,
    /// `2m - 2m_sigma - sum (r_i - 1)`, minus one more when `sigma = 0`.
    pub expected: IndexValue,
    /// `Ind_R(-H/H')`.
    pub index_neg_inverse: IndexValue,
    /// `Ind_inf(-H/H')`: `0` for `sigma != 0`, `-1` for `sigma = 0`.
    pub index_neg_inverse_at_infinity: IndexValue,
    pub outcome: Outcome,
}

/// Compare `Ind_R(H'/H)` computed by both index algorithms with the value
/// assembled from the root profile. Also checks that `-H/H'` carries the
/// uncorrected value `2m - 2m_sigma - sum (r_i - 1)` on the real line.
pub fn index_identity_check(p: &Poly, sigma: &Rational) -> Result<IndexIdentityReport> {
    let profile = root_profile(p, sigma)?;
    let ps = laguerre_derivative(p, sigma);
    // H'/H = (p p_sigma' - p' p_sigma) / (p p_sigma) = F[p] / (p p_sigma)
    let f = f_unchecked(p);
    let log_deriv = RatFunc::new(&f, &(p * &ps))?;
    let index_euclidean = index_line(&log_deriv, IndexMethod::Euclidean)?;
    let index_per_pole = index_line(&log_deriv, IndexMethod::PerPole)?;
    let base = profile.nonreal_2m as IndexValue
        - profile.nonreal_2m_sigma as IndexValue
        - profile.excess_multiplicity() as IndexValue;
    let expected = if sigma.is_zero() { base - 1 } else { base };
    let neg_inverse = log_deriv.neg_recip()?;
    let index_neg_inverse = index_line(&neg_inverse, IndexMethod::Euclidean)?;
    let at_inf = index_at_infinity(&neg_inverse);

    let mut checks = Checks::default();
    checks.require(index_euclidean == index_per_pole, || {
        format!("index methods disagree: {index_euclidean} vs {index_per_pole}")
    });
    checks.require(index_euclidean == expected, || {
        format!("Ind_R(H'/H) = {index_euclidean}, expected {expected}")
    });
    checks.require(index_euclidean == profile.pole_balance(), || {
        format!("Ind_R(H'/H) = {index_euclidean}, but l1 + l2 - d1 - d2 = {}", profile.pole_balance())
    });
    checks.require(index_neg_inverse == base, || {
        format!("Ind_R(-H/H') = {index_neg_inverse}, expected {base}")
    });
    let expected_at_inf = if sigma.is_zero() { -1 } else { 0 };
    checks.require(at_inf == expected_at_inf, || {
        format!("Ind_inf(-H/H') = {at_inf}, expected {expected_at_inf}")
    });
    let deg_p = p.degree().unwrap_or(0);
    let deg_ps = ps.degree().unwrap_or(0);
    checks.require(profile.p_degree() == deg_p && profile.p_sigma_degree() == deg_ps, || {
        format!(
            "degree bookkeeping: p {} vs {deg_p}, p_sigma {} vs {deg_ps}",
            profile.p_degree(),
            profile.p_sigma_degree()
        )
    });
    Ok(IndexIdentityReport {
        sigma: sigma.clone(),
        profile,
        index_euclidean,
        index_per_pole,
        expected,
        index_neg_inverse,
        index_neg_inverse_at_infinity: at_inf,
        outcome: checks.outcome(),
    })
}
