//! Instance-level checks of the relations between `Q[p]`, `Q[p_sigma]` and
//! the real roots of `p_sigma`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::objects::{
    check_global_negativity, count_nonreal, count_real_zeros_q, f_unchecked, laguerre_derivative,
    q_positive_somewhere, q_reduced, rational_real_roots, shared_real_roots,
};
use super::outcome::{Checks, Outcome};
use super::sigma::sigma_scan;
use crate::algebra::{squarefree_decompose, Poly, Rational};
use crate::error::{Error, Result};
use crate::sturm::distinct_real_root_count;

/// Coefficientwise checks of three polynomial identities relating `F[p]`,
/// `F[p']` and `F[p_sigma]` (`F'` is the derivative of `F`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    /// `p' F[p'] = p'' F'[p] - p''' F[p]`
    pub derivative_identity: bool,
    /// `F[p_sigma] = F[p'] + sigma F'[p] + sigma^2 F[p]`
    pub expansion_identity: bool,
    /// `p' F[p_sigma] = p_sigma' F'[p] + (sigma p_sigma' - p_sigma'') F[p]`
    pub mixed_identity: bool,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.derivative_identity && self.expansion_identity && self.mixed_identity
    }
}

pub fn check_identities(p: &Poly, sigma: &Rational) -> IdentityReport {
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let d3 = d2.derivative();
    let f = f_unchecked(p);
    let df = f.derivative();
    let f_d1 = f_unchecked(&d1);
    let ps = laguerre_derivative(p, sigma);
    let ps1 = ps.derivative();
    let ps2 = ps1.derivative();
    let f_ps = f_unchecked(&ps);

    let derivative_identity = &d1 * &f_d1 == &(&d2 * &df) - &(&d3 * &f);
    let expansion_identity =
        f_ps == &(&f_d1 + &df.scale(sigma)) + &f.scale(&(sigma * sigma));
    let mixed_identity =
        &d1 * &f_ps == &(&ps1 * &df) + &(&(&ps1.scale(sigma) - &ps2) * &f);
    IdentityReport { derivative_identity, expansion_identity, mixed_identity }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityReport {
    pub sigma: Rational,
    pub premise_met: bool,
    pub z_r_q: usize,
    pub nonreal_2m: usize,
    pub nonreal_2m_sigma: usize,
    pub outcome: Outcome,
}

/// When `Q[p_sigma] < 0` wherever defined: `Z_R(Q[p]) = 2m - 2m_sigma`, and
/// every multiple real zero of `Q[p]` sits at a root of `p_sigma` of
/// multiplicity greater than two.
pub fn verify_craven_equality(p: &Poly, sigma: &Rational) -> Result<EqualityReport> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let ps = laguerre_derivative(p, sigma);
    let nonreal_2m = count_nonreal(p)?;
    let z_r_q = count_real_zeros_q(p)?;
    let premise_met = !ps.is_constant() && check_global_negativity(&ps)?;
    let mut report = EqualityReport {
        sigma: sigma.clone(),
        premise_met,
        z_r_q,
        nonreal_2m,
        nonreal_2m_sigma: if ps.is_zero() { 0 } else { count_nonreal(&ps)? },
        outcome: Outcome::Verified,
    };
    if !premise_met {
        report.outcome = Outcome::PremiseNotMet("Q[p_sigma] is not negative everywhere on its domain".into());
        return Ok(report);
    }
    let mut checks = Checks::default();
    let rhs = nonreal_2m as i64 - report.nonreal_2m_sigma as i64;
    checks.require(z_r_q as i64 == rhs, || {
        format!("Z_R(Q[p]) = {z_r_q} but 2m - 2m_sigma = {nonreal_2m} - {}", report.nonreal_2m_sigma)
    });
    // multiple real zeros of Q[p] must lie at roots of p_sigma of multiplicity > 2
    let high = squarefree_decompose(&ps)?
        .parts
        .into_iter()
        .filter(|(_, k)| *k > 2)
        .fold(Poly::one(), |acc, (f, _)| &acc * &f);
    let num = q_reduced(p)?.numerator().clone();
    if !num.is_constant() {
        for (factor, k) in squarefree_decompose(&num)?.parts {
            if k < 2 {
                continue;
            }
            let real = distinct_real_root_count(&factor)?;
            let at_high = shared_real_roots(&factor, &high)?;
            checks.require(real == at_high, || {
                format!("{} real zero(s) of Q[p] of multiplicity {k} lie off the roots of p_sigma of multiplicity > 2", real - at_high)
            });
        }
    }
    report.outcome = checks.outcome();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftReport {
    pub sigma: Rational,
    pub lambda: Rational,
    /// Order of `lambda` as a zero of `Q[p]`.
    pub order_q_p: usize,
    /// Order of `lambda` as a zero of `Q[p_sigma]`.
    pub order_q_p_sigma: usize,
    pub forward_applies: bool,
    pub converse_applies: bool,
    pub identities: IdentityReport,
    pub outcome: Outcome,
}

/// A zero of order `r >= 1` of `Q[p_sigma]` that is also a zero of `Q[p]` has
/// order exactly `r + 1` there; conversely a zero of order `r >= 2` of `Q[p]`
/// is a zero of order `r - 1` of `Q[p_sigma]`. Requires `p`, `p'`, `p_sigma`
/// nonzero at `lambda`.
pub fn verify_multiplicity_lift(p: &Poly, sigma: &Rational, lambda: &Rational) -> Result<LiftReport> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let ps = laguerre_derivative(p, sigma);
    let identities = check_identities(p, sigma);
    let hypotheses = !p.eval(lambda).is_zero()
        && !p.derivative().eval(lambda).is_zero()
        && !ps.eval(lambda).is_zero();
    let order = |f: Poly| f.root_order(lambda).unwrap_or(0);
    let order_q_p = order(f_unchecked(p));
    let order_q_p_sigma = order(f_unchecked(&ps));
    let mut report = LiftReport {
        sigma: sigma.clone(),
        lambda: lambda.clone(),
        order_q_p,
        order_q_p_sigma,
        forward_applies: false,
        converse_applies: false,
        identities,
        outcome: Outcome::Verified,
    };
    let mut checks = Checks::default();
    checks.require(report.identities.all_hold(), || format!("{:?}", report.identities));
    if !hypotheses {
        report.outcome = match checks.outcome() {
            Outcome::Verified => Outcome::PremiseNotMet("hypotheses not met: p, p' and p_sigma must be nonzero at lambda".into()),
            v => v,
        };
        return Ok(report);
    }
    report.forward_applies = order_q_p_sigma >= 1 && order_q_p >= 1;
    if report.forward_applies {
        checks.require(order_q_p == order_q_p_sigma + 1, || {
            format!("forward lift: order in Q[p] is {order_q_p}, expected {}", order_q_p_sigma + 1)
        });
    }
    report.converse_applies = order_q_p >= 2;
    if report.converse_applies {
        checks.require(order_q_p_sigma == order_q_p - 1, || {
            format!("converse: order in Q[p_sigma] is {order_q_p_sigma}, expected {}", order_q_p - 1)
        });
    }
    report.outcome = checks.outcome();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub lambda: Rational,
    /// Order of `lambda` as a zero of `Q[p]` (`r`).
    pub order_q_p: usize,
    /// `-p'(lambda)/p(lambda)`: the only `sigma` with `p_sigma(lambda) = 0`.
    pub sigma: Rational,
    /// Order of `lambda` as a root of `p_sigma`.
    pub order_p_sigma: usize,
    /// `p'(lambda) = 0`, so `sigma = 0` and `p_sigma = p'`.
    pub derivative_branch: bool,
    pub degree_bound_holds: bool,
    /// For square-free `p`: distinct real roots of `F[p]` against `Z_C(p)`.
    pub real_point_bound: Option<(usize, usize)>,
    pub outcome: Outcome,
}

/// `lambda` with `p(lambda) != 0` is a zero of `Q[p]` of order `r >= 1`
/// exactly when it is a root of order `r + 1` of `p_sigma` for
/// `sigma = -p'(lambda)/p(lambda)`. Also checks the degree bound on `F[p]` and,
/// for square-free `p`, that `F[p]` has at most `Z_C(p)` distinct real roots.
pub fn verify_sigma_correspondence(p: &Poly, lambda: &Rational) -> Result<CorrespondenceReport> {
    let n = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    let p_at = p.eval(lambda);
    if p_at.is_zero() {
        return Err(Error::HypothesisViolated("p(lambda) = 0"));
    }
    let d1 = p.derivative();
    let f = f_unchecked(p);
    let order_q_p = f.root_order(lambda).expect("F[p] is nonzero");
    let sigma = -d1.eval(lambda) / &p_at;
    let ps = laguerre_derivative(p, &sigma);
    let order_p_sigma = ps.root_order(lambda).unwrap_or(0);
    let derivative_branch = sigma.is_zero();

    let mut checks = Checks::default();
    if order_q_p >= 1 {
        if derivative_branch {
            // p^(j)(lambda) = 0 for j = 1..=r+1 and p^(r+2)(lambda) != 0
            let vanish = (1..=order_q_p + 1).all(|j| p.nth_derivative(j).eval(lambda).is_zero());
            let next = !p.nth_derivative(order_q_p + 2).eval(lambda).is_zero();
            checks.require(vanish && next, || {
                format!("p' vanishes at lambda but derivative orders do not match r = {order_q_p}")
            });
        }
        checks.require(order_p_sigma == order_q_p + 1, || {
            format!("forward: lambda has order {order_p_sigma} in p_sigma, expected {}", order_q_p + 1)
        });
    }
    if order_p_sigma >= 2 {
        checks.require(order_q_p == order_p_sigma - 1, || {
            format!("backward: lambda has order {order_q_p} in Q[p], expected {}", order_p_sigma - 1)
        });
    }
    let degree_bound_holds = f.degree().is_some_and(|d| d <= 2 * n - 2);
    checks.require(degree_bound_holds, || "deg F[p] exceeds 2 deg p - 2".into());
    let square_free = squarefree_decompose(p)?.parts.iter().all(|(_, k)| *k == 1);
    let real_point_bound = if square_free && !f.is_constant() {
        let found = distinct_real_root_count(&f)?;
        let bound = count_nonreal(p)?;
        checks.require(found <= bound, || {
            format!("F[p] has {found} distinct real roots, more than Z_C(p) = {bound}")
        });
        Some((found, bound))
    } else if square_free {
        Some((0, count_nonreal(p)?))
    } else {
        None
    };
    Ok(CorrespondenceReport {
        lambda: lambda.clone(),
        order_q_p,
        sigma,
        order_p_sigma,
        derivative_branch,
        degree_bound_holds,
        real_point_bound,
        outcome: checks.outcome(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichReport {
    pub sigma: Rational,
    pub nonreal_2m: usize,
    pub nonreal_2m_sigma: usize,
    pub z_r_q: usize,
    pub z_r_q_sigma: usize,
    /// `2m - 2m_sigma <= Z_R(Q[p])`
    pub lower_holds: bool,
    /// `Z_R(Q[p]) <= 2m - 2m_sigma + Z_R(Q[p_sigma])`
    pub upper_holds: bool,
    pub outcome: Outcome,
}

impl SandwichReport {
    /// Both bounds hold and `2m_sigma < 2m`.
    pub fn is_witness(&self) -> bool {
        self.lower_holds && self.upper_holds && self.nonreal_2m_sigma < self.nonreal_2m
    }
}

/// Both sides of `2m - 2m_sigma <= Z_R(Q[p]) <= 2m - 2m_sigma + Z_R(Q[p_sigma])`
/// at one `sigma`. The lower side holds for every `sigma`; the upper side is
/// only claimed for some `sigma`, so its failure here is inconclusive.
pub fn verify_sandwich(p: &Poly, sigma: &Rational) -> Result<SandwichReport> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let ps = laguerre_derivative(p, sigma);
    let nonreal_2m = count_nonreal(p)?;
    let z_r_q = count_real_zeros_q(p)?;
    let mut report = SandwichReport {
        sigma: sigma.clone(),
        nonreal_2m,
        nonreal_2m_sigma: 0,
        z_r_q,
        z_r_q_sigma: 0,
        lower_holds: false,
        upper_holds: false,
        outcome: Outcome::Verified,
    };
    if nonreal_2m == 0 {
        report.outcome = Outcome::PremiseNotMet("theorem vacuous: 2m = 0".into());
        return Ok(report);
    }
    if ps.is_constant() {
        report.outcome = Outcome::PremiseNotMet("deg p_sigma < 1".into());
        return Ok(report);
    }
    report.nonreal_2m_sigma = count_nonreal(&ps)?;
    report.z_r_q_sigma = count_real_zeros_q(&ps)?;
    let base = nonreal_2m as i64 - report.nonreal_2m_sigma as i64;
    report.lower_holds = base <= z_r_q as i64;
    report.upper_holds = z_r_q as i64 <= base + report.z_r_q_sigma as i64;
    report.outcome = if !report.lower_holds {
        Outcome::Violation(format!("Z_R(Q[p]) = {z_r_q} < 2m - 2m_sigma = {base}"))
    } else if !report.upper_holds {
        Outcome::Inconclusive(format!(
            "upper bound fails at this sigma: {z_r_q} > {base} + {}",
            report.z_r_q_sigma
        ))
    } else {
        Outcome::Verified
    };
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichSearch {
    pub candidates: Vec<SandwichReport>,
    pub witness: Option<Rational>,
    pub outcome: Outcome,
}

/// Evaluate both bounds at every resolved sample of the sigma scan and look
/// for a `sigma` satisfying both with `2m_sigma < 2m`.
pub fn search_sandwich(p: &Poly) -> Result<SandwichSearch> {
    let nonreal_2m = count_nonreal(p)?;
    if nonreal_2m == 0 {
        return Ok(SandwichSearch {
            candidates: Vec::new(),
            witness: None,
            outcome: Outcome::PremiseNotMet("theorem vacuous: 2m = 0".into()),
        });
    }
    let scan = sigma_scan(p)?;
    let mut candidates = Vec::new();
    for (sigma, _) in scan.resolved() {
        candidates.push(verify_sandwich(p, &sigma)?);
    }
    let witness = candidates.iter().find(|c| c.is_witness()).map(|c| c.sigma.clone());
    let violations: Vec<String> = candidates
        .iter()
        .filter_map(|c| match &c.outcome {
            Outcome::Violation(s) => Some(format!("sigma = {}: {s}", c.sigma)),
            _ => None,
        })
        .collect();
    let outcome = if !violations.is_empty() {
        Outcome::Violation(violations.join("; "))
    } else if witness.is_some() {
        Outcome::Verified
    } else {
        Outcome::Inconclusive("no witness found in sample".into())
    };
    Ok(SandwichSearch { candidates, witness, outcome })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureSample {
    pub sigma: Rational,
    pub nonreal_2m_sigma: usize,
    pub z_r_q_sigma: usize,
    /// `Z_R(Q[p]) = 2m - 2m_sigma + Z_R(Q[p_sigma])`
    pub equality: bool,
    /// `Q[p_sigma](x) > 0` for some real `x`.
    pub q_sigma_positive_somewhere: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub nonreal_2m: usize,
    pub z_r_q: usize,
    pub samples: Vec<ConjectureSample>,
    pub equality_witnesses: Vec<Rational>,
    pub positive_observed: bool,
    pub strict_drop_witness: Option<Rational>,
    pub outcome: Outcome,
}

/// Sampled search for `sigma` with `Z_R(Q[p]) = 2m - 2m_sigma + Z_R(Q[p_sigma])`,
/// and, when some sampled `Q[p_sigma]` is positive somewhere, for such a
/// `sigma` with `2m_sigma < 2m`. A failed search is reported, never treated
/// as a disproof.
pub fn explore_conjecture(p: &Poly) -> Result<ConjectureReport> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let nonreal_2m = count_nonreal(p)?;
    let z_r_q = count_real_zeros_q(p)?;
    let mut report = ConjectureReport {
        nonreal_2m,
        z_r_q,
        samples: Vec::new(),
        equality_witnesses: Vec::new(),
        positive_observed: false,
        strict_drop_witness: None,
        outcome: Outcome::Verified,
    };
    if nonreal_2m == 0 {
        report.outcome = Outcome::PremiseNotMet("vacuous: 2m = 0".into());
        return Ok(report);
    }
    let mut sigmas: Vec<Rational> = sigma_scan(p)?.resolved().into_iter().map(|(s, _)| s).collect();
    let d1 = p.derivative();
    for lambda in rational_real_roots(&f_unchecked(p))? {
        let p_at = p.eval(&lambda);
        let d_at = d1.eval(&lambda);
        if !p_at.is_zero() && !d_at.is_zero() {
            sigmas.push(-d_at / p_at);
        }
    }
    sigmas.sort();
    sigmas.dedup();
    for sigma in sigmas {
        let ps = laguerre_derivative(p, &sigma);
        if ps.is_constant() {
            continue;
        }
        let nonreal_2m_sigma = count_nonreal(&ps)?;
        let z_r_q_sigma = count_real_zeros_q(&ps)?;
        let equality = z_r_q as i64 == nonreal_2m as i64 - nonreal_2m_sigma as i64 + z_r_q_sigma as i64;
        let positive = q_positive_somewhere(&ps)?;
        report.positive_observed |= positive;
        if equality {
            report.equality_witnesses.push(sigma.clone());
            if nonreal_2m_sigma < nonreal_2m && report.strict_drop_witness.is_none() {
                report.strict_drop_witness = Some(sigma.clone());
            }
        }
        report.samples.push(ConjectureSample {
            sigma,
            nonreal_2m_sigma,
            z_r_q_sigma,
            equality,
            q_sigma_positive_somewhere: positive,
        });
    }
    report.outcome = if report.equality_witnesses.is_empty() {
        Outcome::Inconclusive("no witness found in sample".into())
    } else if report.positive_observed && report.strict_drop_witness.is_none() {
        Outcome::Inconclusive("no equality witness with 2m_sigma < 2m found in sample".into())
    } else {
        Outcome::Verified
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    fn ints(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn identities_on_fixed_polynomials() {
        assert!(check_identities(&ints(&[1, 0, 1]), &int(1)).all_hold());
        assert!(check_identities(&ints(&[-6, 6, -3, 1]), &ratio(-2, 3)).all_hold());
        assert!(check_identities(&ints(&[3, 0, 2, -1, 5, 1]), &int(7)).all_hold());
    }

    #[test]
    fn craven_equality_examples() {
        let r = verify_craven_equality(&ints(&[-5, 5, -3, 1]), &int(1)).unwrap();
        assert_eq!(r.outcome, Outcome::Verified);
        assert_eq!((r.z_r_q, r.nonreal_2m, r.nonreal_2m_sigma), (2, 2, 0));

        let r = verify_craven_equality(&ints(&[-6, 6, -3, 1]), &int(1)).unwrap();
        assert_eq!(r.outcome, Outcome::Verified);
        assert_eq!(r.z_r_q, 2);

        let r = verify_craven_equality(&ints(&[-1, 0, 1]), &int(0)).unwrap();
        assert_eq!(r.outcome, Outcome::Verified);
        assert_eq!(r.z_r_q, 0);

        // p_2 of z^2 + 1 has non-real roots and Q[p_2] vanishes on the line
        let r = verify_craven_equality(&ints(&[1, 0, 1]), &int(2)).unwrap();
        assert!(matches!(r.outcome, Outcome::PremiseNotMet(_)));
    }

    #[test]
    fn lift_example() {
        let r = verify_multiplicity_lift(&ints(&[-6, 6, -3, 1]), &int(2), &int(0)).unwrap();
        assert_eq!(r.outcome, Outcome::Verified);
        assert_eq!((r.order_q_p, r.order_q_p_sigma), (2, 1));
        assert!(r.converse_applies);

        let r = verify_multiplicity_lift(&ints(&[-6, 6, -3, 1]), &int(1), &int(0)).unwrap();
        assert!(matches!(r.outcome, Outcome::PremiseNotMet(_)));
    }

    #[test]
    fn correspondence_examples() {
        let r = verify_sigma_correspondence(&ints(&[1, 0, 1]), &int(-1)).unwrap();
        assert_eq!(r.outcome, Outcome::Verified);
        assert_eq!((r.order_q_p, r.sigma.clone(), r.order_p_sigma), (1, int(1), 2));

        let r = verify_sigma_correspondence(&ints(&[-6, 6, -3, 1]), &int(0)).unwrap();
        assert_eq!(r.outcome, Outcome::Verified);
        assert_eq!((r.order_q_p, r.sigma.clone(), r.order_p_sigma), (2, int(1), 3));

        // derivative branch: p = z^4 + 1 at 0, p' = 4z^3 of order 3, Q[p] order 2
        let r = verify_sigma_correspondence(&ints(&[1, 0, 0, 0, 1]), &int(0)).unwrap();
        assert!(r.derivative_branch);
        assert_eq!(r.outcome, Outcome::Verified);
        assert_eq!((r.order_q_p, r.order_p_sigma), (2, 3));

        assert!(matches!(
            verify_sigma_correspondence(&ints(&[-1, 0, 1]), &int(1)),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn sandwich_examples() {
        let r = verify_sandwich(&ints(&[1, 0, 1]), &int(1)).unwrap();
        assert_eq!(r.outcome, Outcome::Verified);
        assert!(r.is_witness());
        let r = verify_sandwich(&ints(&[-5, 5, -3, 1]), &int(1)).unwrap();
        assert_eq!(r.outcome, Outcome::Verified);
        let r = verify_sandwich(&ints(&[1, 0, 1]), &int(2)).unwrap();
        assert_eq!(r.nonreal_2m_sigma, 2);
        assert!(r.lower_holds);
        assert_eq!(r.upper_holds, r.z_r_q <= r.z_r_q_sigma);
        let r = verify_sandwich(&ints(&[-1, 0, 1]), &int(1)).unwrap();
        assert!(matches!(r.outcome, Outcome::PremiseNotMet(_)));

        let s = search_sandwich(&ints(&[1, 0, 1])).unwrap();
        assert_eq!(s.outcome, Outcome::Verified);
    }

    #[test]
    fn conjecture_examples() {
        let r = explore_conjecture(&ints(&[1, 0, 1])).unwrap();
        assert!(r.equality_witnesses.contains(&int(1)));
        assert_eq!(r.outcome, Outcome::Verified);
        let r = explore_conjecture(&ints(&[-6, 6, -3, 1])).unwrap();
        assert!(r.equality_witnesses.contains(&int(1)));
        let r = explore_conjecture(&ints(&[-2, 0, 1])).unwrap();
        assert!(matches!(r.outcome, Outcome::PremiseNotMet(_)));
    }
}
