//! Seeded batches of generated instances run through the property checks.

use hawaii_core::algebra::int;
use hawaii_core::cauchy::{index_line, index_projective, IndexMethod, RatFunc};
use hawaii_core::hawaii::{
    check_hawaii, check_identities, count_nonreal, count_real_zeros_q, index_identity_check, invert_laguerre,
    laguerre_derivative, verify_craven_equality, verify_lower_bound, verify_multiplicity_lift, verify_sandwich,
    Outcome,
};
use hawaii_core::sturm::isolate_real_roots;
use hawaii_core::{Poly, Rational};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::generate::{generate_instance, random_poly, random_rational, random_spec, stream, InstanceSpec};
use crate::report::{poly, rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Indices,
    Identities,
    Theorems,
}

impl Suite {
    fn runs(self, s: Suite) -> bool {
        self == Suite::All || self == s
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub verified: usize,
    pub premise_not_met: usize,
    pub inconclusive: usize,
    pub violation: usize,
}

impl Tally {
    fn add(&mut self, o: &Outcome) {
        match o {
            Outcome::Verified => self.verified += 1,
            Outcome::PremiseNotMet(_) => self.premise_not_met += 1,
            Outcome::Inconclusive(_) => self.inconclusive += 1,
            Outcome::Violation(_) => self.violation += 1,
        }
    }

    fn merge(&mut self, o: &Tally) {
        self.verified += o.verified;
        self.premise_not_met += o.premise_not_met;
        self.inconclusive += o.inconclusive;
        self.violation += o.violation;
    }

    pub fn total(&self) -> usize {
        self.verified + self.premise_not_met + self.inconclusive + self.violation
    }
}

/// A failed check with everything needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzViolation {
    pub instance: u64,
    pub spec: InstanceSpec,
    pub polynomial: String,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<String>,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub degree: usize,
    pub count: u64,
    pub seed: u64,
    pub suite: Suite,
    pub checks: Tally,
    pub violations: Vec<FuzzViolation>,
}

struct Run<'a> {
    index: u64,
    spec: &'a InstanceSpec,
    p: &'a Poly,
    tally: Tally,
    violations: Vec<FuzzViolation>,
}

impl Run<'_> {
    fn record(&mut self, check: &str, sigma: Option<&Rational>, outcome: Outcome) {
        self.tally.add(&outcome);
        if let Outcome::Violation(message) = outcome {
            self.violations.push(FuzzViolation {
                instance: self.index,
                spec: self.spec.clone(),
                polynomial: poly(self.p),
                check: check.into(),
                sigma: sigma.map(rat),
                message,
            });
        }
    }

    fn require(&mut self, check: &str, sigma: Option<&Rational>, ok: bool, message: impl FnOnce() -> String) {
        let o = if ok { Outcome::Verified } else { Outcome::Violation(message()) };
        self.record(check, sigma, o);
    }

    fn record_result(&mut self, check: &str, sigma: Option<&Rational>, r: hawaii_core::Result<Outcome>) {
        let o = r.unwrap_or_else(|e| Outcome::Violation(format!("unexpected error: {e}")));
        self.record(check, sigma, o);
    }
}

const SIGMAS_PER_INSTANCE: usize = 3;
const SIGMA_SCAN_MAX_DEGREE: usize = 8;

fn indices(run: &mut Run<'_>, rng: &mut impl Rng, degree: usize) {
    let (dn, dd) = (rng.gen_range(0..=degree), rng.gen_range(1..=degree.max(1)));
    let num = random_poly(rng, dn, 9);
    let den = random_poly(rng, dd, 9);
    let r = RatFunc::new(&num, &den).expect("nonzero denominator");
    let e = index_line(&r, IndexMethod::Euclidean).unwrap();
    let pp = index_line(&r, IndexMethod::PerPole).unwrap();
    run.require("index-methods", None, e == pp, || {
        format!("{} / {}: euclidean {e}, per-pole {pp}", poly(r.numerator()), poly(r.denominator()))
    });
    let proj = index_projective(&r).unwrap();
    let d = random_rational(rng, 9);
    let shifted = &r + &RatFunc::from_poly(&Poly::constant(d));
    let s = index_projective(&shifted).unwrap();
    run.require("index-shift", None, s == proj, || format!("Ind(d + R) = {s}, Ind(R) = {proj}"));
    if !r.is_zero() {
        let inv = index_projective(&r.neg_recip().unwrap()).unwrap();
        run.require("index-neg-recip", None, inv == proj, || format!("Ind(-1/R) = {inv}, Ind(R) = {proj}"));
    }
    let p = run.p.clone();
    let log = RatFunc::new(&p.derivative(), &p).unwrap();
    let v = index_line(&log, IndexMethod::Euclidean).unwrap();
    let roots = isolate_real_roots(&p).unwrap().len() as i64;
    run.require("index-log-derivative", None, v == roots, || format!("Ind(p'/p) = {v}, distinct real roots {roots}"));
}

fn identities(run: &mut Run<'_>, sigmas: &[Rational]) {
    let p = run.p.clone();
    for s in sigmas {
        let r = check_identities(&p, s);
        run.require("polynomial-identities", Some(s), r.all_hold(), || format!("{r:?}"));
        if *s != int(0) {
            let back = invert_laguerre(&laguerre_derivative(&p, s), s);
            run.require("laguerre-inverse", Some(s), back.as_ref() == Ok(&p), || format!("{back:?}"));
        }
    }
}

fn theorems(run: &mut Run<'_>, rng: &mut impl Rng, sigmas: &[Rational]) {
    let p = run.p.clone();
    let h = check_hawaii(&p).unwrap();
    run.require("hawaii", None, h.hawaii_holds, || format!("Z_R(Q[p]) = {} > 2m = {}", h.z_r_q, h.nonreal_count_2m));
    for s in sigmas {
        let ps = laguerre_derivative(&p, s);
        let (m, ms) = (count_nonreal(&p).unwrap(), count_nonreal(&ps).unwrap());
        run.require("laguerre-nonreal", Some(s), ms <= m, || format!("Z_C(p_sigma) = {ms} > Z_C(p) = {m}"));
        let z = count_real_zeros_q(&p).unwrap();
        run.require("lower-bound-any-sigma", Some(s), z + ms >= m, || {
            format!("Z_R(Q[p]) = {z} < 2m - 2m_sigma = {m} - {ms}")
        });
        run.record_result("t42", Some(s), verify_craven_equality(&p, s).map(|r| r.outcome));
        run.record_result("index-identity", Some(s), index_identity_check(&p, s).map(|r| r.outcome));
        if m > 0 && !ps.is_constant() {
            run.record_result("sandwich", Some(s), verify_sandwich(&p, s).map(|r| r.outcome));
        }
        if *s != int(0) {
            let lambda = random_rational(rng, 4);
            run.record_result("t21", Some(s), verify_multiplicity_lift(&p, s, &lambda).map(|r| r.outcome));
        }
    }
    let deg = p.degree().unwrap_or(0);
    if (2..=SIGMA_SCAN_MAX_DEGREE).contains(&deg) {
        run.record_result("t43", None, verify_lower_bound(&p).map(|r| r.outcome));
    }
}

fn instance(seed: u64, index: u64, degree: usize, suite: Suite) -> (Tally, Vec<FuzzViolation>) {
    let mut rng = stream(seed, index);
    let spec = random_spec(&mut rng, degree, 4);
    let p = generate_instance(&spec).expect("random specs are feasible");
    let sigmas: Vec<Rational> = (0..SIGMAS_PER_INSTANCE).map(|_| random_rational(&mut rng, 6)).collect();
    let mut run = Run { index, spec: &spec, p: &p, tally: Tally::default(), violations: Vec::new() };
    if suite.runs(Suite::Indices) {
        indices(&mut run, &mut rng, degree);
    }
    if suite.runs(Suite::Identities) {
        identities(&mut run, &sigmas);
    }
    if suite.runs(Suite::Theorems) {
        theorems(&mut run, &mut rng, &sigmas);
    }
    (run.tally, run.violations)
}

/// Run `count` instances; results are merged in instance order whatever the
/// thread count.
pub fn fuzz(degree: usize, count: u64, seed: u64, suite: Suite) -> FuzzSummary {
    let results: Vec<_> = (0..count).into_par_iter().map(|i| instance(seed, i, degree, suite)).collect();
    let mut checks = Tally::default();
    let mut violations = Vec::new();
    for (t, v) in results {
        checks.merge(&t);
        violations.extend(v);
    }
    FuzzSummary { degree, count, seed, suite, checks, violations }
}
