//! Scan of `sigma -> Z_C(p_sigma)` over the real line.
//!
//! The non-real count of `p_sigma` can only change where `p_sigma` acquires
//! a repeated root (a real root of the discriminant in `sigma`) or where its
//! degree drops (`sigma = 0`). Between consecutive breakpoints the count is
//! constant; it is evaluated exactly at rational samples and at rational
//! breakpoints. Irrational breakpoints are reported, not evaluated.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use super::objects::{count_nonreal, count_real_zeros_q, laguerre_derivative};
use super::outcome::{Checks, Outcome};
use crate::algebra::{
    discriminant_in_sigma, gcd, pencil_discriminant, squarefree_part, Poly, Rational,
};
use crate::error::{Error, Result};
use crate::sturm::{isolate_real_roots, simplest_between, IsolatedRoot, RootLocation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaBreakpoint {
    pub location: RootLocation,
    /// Multiplicity as a root of the discriminant; `0` for the inserted
    /// `sigma = 0` when it is not a discriminant root.
    pub discriminant_multiplicity: u32,
    /// `Z_C(p_sigma)` at the breakpoint, known only for rational breakpoints.
    pub nonreal_count: Option<usize>,
}

impl SigmaBreakpoint {
    fn lower(&self) -> &Rational {
        match &self.location {
            RootLocation::Exact(x) => x,
            RootLocation::Interval { lo, .. } => lo,
        }
    }

    fn upper(&self) -> &Rational {
        match &self.location {
            RootLocation::Exact(x) => x,
            RootLocation::Interval { hi, .. } => hi,
        }
    }
}

/// An open cell between consecutive breakpoints, sampled at its simplest
/// rational and the simplest rational to the right of that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaCell {
    pub samples: [Rational; 2],
    pub nonreal_counts: [usize; 2],
}

impl SigmaCell {
    pub fn nonreal_count(&self) -> usize {
        self.nonreal_counts[0]
    }

    pub fn is_consistent(&self) -> bool {
        self.nonreal_counts[0] == self.nonreal_counts[1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaScan {
    /// Polynomial in `sigma` whose real roots are the breakpoints.
    pub discriminant: Poly,
    /// Set when the discriminant of `p_sigma` vanishes identically and the
    /// pencil `p'/g + sigma p/g`, `g = gcd(p, p')`, was used instead.
    pub reduced_pencil: bool,
    /// Sorted, pairwise disjoint.
    pub breakpoints: Vec<SigmaBreakpoint>,
    /// `breakpoints.len() + 1` cells, left to right.
    pub cells: Vec<SigmaCell>,
    pub min_2m_sigma_star: usize,
    pub witness: Rational,
    /// Irrational breakpoints where `Z_C(p_sigma)` was not evaluated.
    pub unresolved: Vec<RootLocation>,
}

impl SigmaScan {
    /// Every `(sigma, Z_C(p_sigma))` evaluated exactly, left to right.
    pub fn resolved(&self) -> Vec<(Rational, usize)> {
        let mut out = Vec::new();
        for (i, cell) in self.cells.iter().enumerate() {
            for (s, c) in cell.samples.iter().zip(cell.nonreal_counts) {
                out.push((s.clone(), c));
            }
            if let Some(bp) = self.breakpoints.get(i) {
                if let (RootLocation::Exact(x), Some(c)) = (&bp.location, bp.nonreal_count) {
                    out.push((x.clone(), c));
                }
            }
        }
        out
    }

    pub fn cells_consistent(&self) -> bool {
        self.cells.iter().all(SigmaCell::is_consistent)
    }
}

fn nonreal_at(p: &Poly, sigma: &Rational) -> Result<usize> {
    count_nonreal(&laguerre_derivative(p, sigma))
}

pub fn sigma_scan(p: &Poly) -> Result<SigmaScan> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall { required: 2, found: n });
    }
    let p = p.primitive();
    let mut discriminant = discriminant_in_sigma(&p)?;
    let mut reduced_pencil = false;
    if discriminant.is_zero() {
        let g = gcd(&p, &p.derivative())?;
        discriminant = pencil_discriminant(&p.exact_div(&g)?, &p.derivative().exact_div(&g)?)?;
        reduced_pencil = true;
    }
    let zero = Rational::zero();
    let (mut roots, radical) = if discriminant.is_constant() {
        (Vec::new(), Poly::one())
    } else {
        (isolate_real_roots(&discriminant)?, squarefree_part(&discriminant)?)
    };
    // place sigma = 0 among the discriminant roots
    let mut zero_is_root = false;
    for r in &mut roots {
        if r.compare(&radical, &zero) == Ordering::Equal {
            zero_is_root = true;
        }
    }
    if !zero_is_root {
        roots.push(IsolatedRoot { location: RootLocation::Exact(zero.clone()), multiplicity: 0 });
    }
    roots.sort_by(|a, b| a.lower().cmp(b.lower()));
    // open up a gap between neighbours that share an endpoint
    for i in 1..roots.len() {
        while roots[i - 1].upper() >= roots[i].lower() {
            let (left, right) = roots.split_at_mut(i);
            left[i - 1].bisect(&radical);
            right[0].bisect(&radical);
        }
    }

    let mut breakpoints = Vec::with_capacity(roots.len());
    for r in roots {
        let nonreal_count = match &r.location {
            RootLocation::Exact(x) => Some(nonreal_at(&p, x)?),
            RootLocation::Interval { .. } => None,
        };
        breakpoints.push(SigmaBreakpoint {
            location: r.location,
            discriminant_multiplicity: r.multiplicity,
            nonreal_count,
        });
    }

    let mut cells = Vec::with_capacity(breakpoints.len() + 1);
    for i in 0..=breakpoints.len() {
        let left = i.checked_sub(1).map(|j| breakpoints[j].upper());
        let right = breakpoints.get(i).map(SigmaBreakpoint::lower);
        let one = Rational::one();
        let samples = match (left, right) {
            (Some(l), Some(r)) => {
                let a = simplest_between(l, r);
                let b = simplest_between(&a, r);
                [a, b]
            }
            (Some(l), None) => {
                let a = l.floor() + &one;
                let b = &a + &one;
                [a, b]
            }
            (None, Some(r)) => {
                let a = r.ceil() - &one;
                let b = &a - &one;
                [a, b]
            }
            (None, None) => unreachable!("sigma = 0 is always a breakpoint"),
        };
        let nonreal_counts = [nonreal_at(&p, &samples[0])?, nonreal_at(&p, &samples[1])?];
        cells.push(SigmaCell { samples, nonreal_counts });
    }

    let unresolved = breakpoints
        .iter()
        .filter(|b| b.nonreal_count.is_none())
        .map(|b| b.location.clone())
        .collect();
    let mut scan = SigmaScan {
        discriminant,
        reduced_pencil,
        breakpoints,
        cells,
        min_2m_sigma_star: usize::MAX,
        witness: zero,
        unresolved,
    };
    for (s, c) in scan.resolved() {
        if c < scan.min_2m_sigma_star {
            scan.min_2m_sigma_star = c;
            scan.witness = s;
        }
    }
    Ok(scan)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundReport {
    pub z_r_q: usize,
    pub nonreal_2m: usize,
    pub resolved_min: usize,
    pub witness: Rational,
    pub candidates_checked: usize,
    pub unresolved: usize,
    pub outcome: Outcome,
}

/// `Z_R(Q[p]) >= 2m - Z_C(p_sigma)` at every resolved scan candidate, which
/// includes the resolved minimum.
pub fn verify_lower_bound(p: &Poly) -> Result<LowerBoundReport> {
    let scan = sigma_scan(p)?;
    let z_r_q = count_real_zeros_q(p)?;
    let nonreal_2m = count_nonreal(p)?;
    let mut checks = Checks::default();
    checks.require(scan.cells_consistent(), || "Z_C(p_sigma) not constant on a scan cell".into());
    let resolved = scan.resolved();
    for (sigma, c) in &resolved {
        checks.require(z_r_q + c >= nonreal_2m, || {
            format!("sigma = {sigma}: Z_R(Q[p]) = {z_r_q} < 2m - Z_C(p_sigma) = {nonreal_2m} - {c}")
        });
    }
    Ok(LowerBoundReport {
        z_r_q,
        nonreal_2m,
        resolved_min: scan.min_2m_sigma_star,
        witness: scan.witness.clone(),
        candidates_checked: resolved.len(),
        unresolved: scan.unresolved.len(),
        outcome: checks.outcome(),
    })
}
