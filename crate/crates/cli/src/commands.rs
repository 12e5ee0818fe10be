//! One function per subcommand: compute, then render as a [`Report`] plus
//! human-readable text.

use hawaii_core::cauchy::{index_interval, index_line, index_projective, IndexMethod, RatFunc};
use hawaii_core::hawaii::{
    check_hawaii, explore_conjecture, index_identity_check, invert_laguerre, laguerre_derivative, search_sandwich,
    sigma_scan, verify_craven_equality, verify_lower_bound, verify_multiplicity_lift, verify_sandwich,
    verify_sigma_correspondence, Outcome,
};
use hawaii_core::sturm::{isolate_real_roots, ExtendedRational};
use hawaii_core::{Poly, Rational};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{usage, CliResult};
use crate::report::*;

pub struct Rendered {
    pub report: Report,
    pub text: String,
}

fn rendered(command: &str, input: Value, result: impl Serialize, violations: Vec<String>, text: String) -> Rendered {
    Rendered {
        report: Report {
            command: command.to_owned(),
            input,
            result: serde_json::to_value(result).expect("serializable"),
            violations,
            timing_ms: None,
        },
        text,
    }
}

pub fn analyze(p: &Poly) -> CliResult<Rendered> {
    let r = check_hawaii(p)?;
    let real = isolate_real_roots(p)?;
    let mut violations = Vec::new();
    if !r.hawaii_holds {
        violations.push(format!(
            "Hawaii inequality fails: Z_R(Q[p]) = {} > 2m = {} (implementation bug or counterexample)",
            r.z_r_q, r.nonreal_count_2m
        ));
    }
    let text = format!(
        "p = {p}\ndegree {}, real zeros {} (with multiplicity), non-real zeros 2m = {}\nF[p] = {}\nQ[p] = {}\nZ_R(Q[p]) = {}\nHawaii inequality {}: {} <= {}\n",
        r.degree,
        r.real_zero_count_with_mult,
        r.nonreal_count_2m,
        r.f,
        r.q,
        r.z_r_q,
        if r.hawaii_holds { "holds" } else { "FAILS" },
        r.z_r_q,
        r.nonreal_count_2m,
    );
    Ok(rendered("analyze", json!({ "p": poly(p) }), AnalyzeJson::new(p, &r, &real), violations, text))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexScope<'a> {
    Line,
    Interval(&'a ExtendedRational, &'a ExtendedRational),
    Projective,
}

fn method_name(m: IndexMethod) -> &'static str {
    match m {
        IndexMethod::Euclidean => "euclidean",
        IndexMethod::PerPole => "per-pole",
    }
}

fn ext(x: &ExtendedRational) -> String {
    match x {
        ExtendedRational::NegInfinity => "-inf".into(),
        ExtendedRational::PosInfinity => "inf".into(),
        ExtendedRational::Finite(v) => rat(v),
    }
}

pub fn index(num: &Poly, den: &Poly, scope: IndexScope<'_>, method: IndexMethod) -> CliResult<Rendered> {
    let r = RatFunc::new(num, den)?;
    let mut violations = Vec::new();
    let (scope_name, value, cross_check) = match scope {
        IndexScope::Line => {
            let value = index_line(&r, method)?;
            let other = match method {
                IndexMethod::Euclidean => IndexMethod::PerPole,
                IndexMethod::PerPole => IndexMethod::Euclidean,
            };
            let check = index_line(&r, other)?;
            if check != value {
                violations.push(format!(
                    "index methods disagree: {} gives {value}, {} gives {check}",
                    method_name(method),
                    method_name(other)
                ));
            }
            ("line", value, Some(check))
        }
        IndexScope::Interval(a, b) => ("interval", index_interval(&r, a, b)?, None),
        IndexScope::Projective => ("projective", index_projective(&r)?, None),
    };
    let input = match scope {
        IndexScope::Interval(a, b) => json!({
            "num": poly(num), "den": poly(den), "interval": [ext(a), ext(b)], "method": method_name(method)
        }),
        _ => json!({ "num": poly(num), "den": poly(den), "method": method_name(method) }),
    };
    let result = json!({
        "reduced": RatFuncJson::from(&r),
        "scope": scope_name,
        "value": value,
        "cross_check": cross_check,
    });
    let text = format!("Ind = {value} ({scope_name}) for {r}\n");
    Ok(rendered("index", input, result, violations, text))
}

pub fn laguerre(p: &Poly, sigma: &Rational, invert: bool) -> CliResult<Rendered> {
    let out = if invert { invert_laguerre(p, sigma)? } else { laguerre_derivative(p, sigma) };
    let mut violations = Vec::new();
    if invert && laguerre_derivative(&out, sigma) != *p {
        violations.push("inverse does not map back to the input".into());
    }
    let text = if invert {
        format!("p with p' + {sigma}*p = q:\n{out}\n")
    } else {
        format!("p' + {sigma}*p =\n{out}\n")
    };
    let result = json!({ "polynomial": poly(&out), "display": out.to_string() });
    let input = json!({ "p": poly(p), "sigma": rat(sigma), "invert": invert });
    Ok(rendered("laguerre", input, result, violations, text))
}

pub fn sigma_min(p: &Poly) -> CliResult<Rendered> {
    let s = sigma_scan(p)?;
    let mut violations = Vec::new();
    if !s.cells_consistent() {
        violations.push("Z_C(p_sigma) differs between two samples of one cell".into());
    }
    let mut text = format!("breakpoints (real roots of the discriminant in sigma, and sigma = 0): {}\n", s.breakpoints.len());
    for b in &s.breakpoints {
        let count = b.nonreal_count.map_or("unresolved".into(), |c| c.to_string());
        let loc = LocationJson::from(&b.location);
        let at = loc.exact.unwrap_or_else(|| format!("({}, {})", loc.lo.unwrap(), loc.hi.unwrap()));
        text.push_str(&format!("  sigma = {at}: Z_C(p_sigma) = {count}\n"));
    }
    for c in &s.cells {
        text.push_str(&format!("  cell sample {}: Z_C = {}\n", c.samples[0], c.nonreal_count()));
    }
    text.push_str(&format!("min Z_C(p_sigma) = {} at sigma = {}\n", s.min_2m_sigma_star, s.witness));
    if !s.unresolved.is_empty() {
        text.push_str(&format!("{} irrational breakpoint(s) not evaluated\n", s.unresolved.len()));
    }
    Ok(rendered("sigma-min", json!({ "p": poly(p) }), SigmaScanJson::from(&s), violations, text))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    Hawaii,
    T21,
    T31,
    T42,
    T43,
    Sandwich,
    Identity,
    Conjecture,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::Hawaii => "hawaii",
            Theorem::T21 => "t21",
            Theorem::T31 => "t31",
            Theorem::T42 => "t42",
            Theorem::T43 => "t43",
            Theorem::Sandwich => "sandwich",
            Theorem::Identity => "identity",
            Theorem::Conjecture => "conjecture",
        }
    }
}

fn need<'a>(x: Option<&'a Rational>, flag: &str, theorem: Theorem) -> CliResult<&'a Rational> {
    match x {
        Some(v) => Ok(v),
        None => usage(format!("--theorem {} requires {flag}", theorem.name())),
    }
}

pub fn verify(p: &Poly, theorem: Theorem, sigma: Option<&Rational>, lambda: Option<&Rational>) -> CliResult<Rendered> {
    let (outcome, details, summary): (Outcome, Value, String) = match theorem {
        Theorem::Hawaii => {
            let r = check_hawaii(p)?;
            let real = isolate_real_roots(p)?;
            let o = if r.hawaii_holds {
                Outcome::Verified
            } else {
                Outcome::Violation(format!("Z_R(Q[p]) = {} > 2m = {}", r.z_r_q, r.nonreal_count_2m))
            };
            let s = format!("Z_R(Q[p]) = {} <= 2m = {}", r.z_r_q, r.nonreal_count_2m);
            (o, serde_json::to_value(AnalyzeJson::new(p, &r, &real)).unwrap(), s)
        }
        Theorem::T21 => {
            let s = need(sigma, "--sigma", theorem)?;
            let l = need(lambda, "--lambda", theorem)?;
            let r = verify_multiplicity_lift(p, s, l)?;
            let summary = format!(
                "order of {l} in Q[p] = {}, in Q[p_sigma] = {}",
                r.order_q_p, r.order_q_p_sigma
            );
            (r.outcome.clone(), serde_json::to_value(LiftJson::from(&r)).unwrap(), summary)
        }
        Theorem::T31 => {
            let l = need(lambda, "--lambda", theorem)?;
            let r = verify_sigma_correspondence(p, l)?;
            let summary = format!(
                "sigma = {}: order of {l} in Q[p] = {}, in p_sigma = {}",
                r.sigma, r.order_q_p, r.order_p_sigma
            );
            (r.outcome.clone(), serde_json::to_value(CorrespondenceJson::from(&r)).unwrap(), summary)
        }
        Theorem::T42 => {
            let s = need(sigma, "--sigma", theorem)?;
            let r = verify_craven_equality(p, s)?;
            let summary = format!(
                "equality Z_R(Q[p]) = 2m - 2m_sigma: {} = {} - {}",
                r.z_r_q, r.nonreal_2m, r.nonreal_2m_sigma
            );
            (r.outcome.clone(), serde_json::to_value(EqualityJson::from(&r)).unwrap(), summary)
        }
        Theorem::T43 => {
            let r = verify_lower_bound(p)?;
            let summary = format!(
                "Z_R(Q[p]) = {} >= 2m - min Z_C(p_sigma) = {} - {}",
                r.z_r_q, r.nonreal_2m, r.resolved_min
            );
            (r.outcome.clone(), serde_json::to_value(LowerBoundJson::from(&r)).unwrap(), summary)
        }
        Theorem::Sandwich => match sigma {
            Some(s) => {
                let r = verify_sandwich(p, s)?;
                let base = r.nonreal_2m as i64 - r.nonreal_2m_sigma as i64;
                let summary = format!("{base} <= {} <= {base} + {}", r.z_r_q, r.z_r_q_sigma);
                (r.outcome.clone(), serde_json::to_value(SandwichJson::from(&r)).unwrap(), summary)
            }
            None => {
                let r = search_sandwich(p)?;
                let summary = match &r.witness {
                    Some(w) => format!("witness sigma = {w} among {} sampled", r.candidates.len()),
                    None => format!("no witness among {} sampled sigma", r.candidates.len()),
                };
                (r.outcome.clone(), serde_json::to_value(SandwichSearchJson::from(&r)).unwrap(), summary)
            }
        },
        Theorem::Identity => {
            let s = need(sigma, "--sigma", theorem)?;
            let r = index_identity_check(p, s)?;
            let summary = format!("Ind_R(H'/H) = {}, expected {}", r.index_euclidean, r.expected);
            (r.outcome.clone(), serde_json::to_value(IndexIdentityJson::from(&r)).unwrap(), summary)
        }
        Theorem::Conjecture => {
            let r = explore_conjecture(p)?;
            let summary = format!(
                "{} sampled sigma, {} equality witness(es)",
                r.samples.len(),
                r.equality_witnesses.len()
            );
            (r.outcome.clone(), serde_json::to_value(ConjectureJson::from(&r)).unwrap(), summary)
        }
    };
    let violations = match &outcome {
        Outcome::Violation(d) => vec![format!("{}: {d}", theorem.name())],
        _ => Vec::new(),
    };
    let text = format!("{}: {} ({summary})\n", theorem.name(), outcome);
    let mut input = json!({ "p": poly(p), "theorem": theorem.name() });
    if let Some(s) = sigma {
        input["sigma"] = json!(rat(s));
    }
    if let Some(l) = lambda {
        input["lambda"] = json!(rat(l));
    }
    let result = VerifyJson { theorem: theorem.name().into(), outcome: (&outcome).into(), details };
    Ok(rendered("verify", input, result, violations, text))
}
