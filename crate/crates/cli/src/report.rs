//! Serializable views of the library results. Field names are frozen; see
//! `docs/report-schema.json`.

use hawaii_core::cauchy::RatFunc;
use hawaii_core::hawaii::{
    ConjectureReport, CorrespondenceReport, EqualityReport, HawaiiReport, IdentityReport, IndexIdentityReport,
    LiftReport, LowerBoundReport, Outcome, RootProfile, SandwichReport, SandwichSearch, SigmaScan,
};
use hawaii_core::sturm::{IsolatedRoot, RootLocation};
use hawaii_core::{Poly, Rational};
use serde::Serialize;
use serde_json::Value;

/// Top-level output of every command.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub violations: Vec<String>,
    /// Wall time in milliseconds; `null` under `--no-timing`.
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.violations.is_empty() {
            0
        } else {
            1
        }
    }
}

pub fn rat(x: &Rational) -> String {
    x.to_string()
}

pub fn poly(p: &Poly) -> String {
    p.to_coeff_string()
}

#[derive(Clone, Debug, Serialize)]
pub struct RatFuncJson {
    pub numerator: String,
    pub denominator: String,
}

impl From<&RatFunc> for RatFuncJson {
    fn from(r: &RatFunc) -> Self {
        RatFuncJson { numerator: poly(r.numerator()), denominator: poly(r.denominator()) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LocationJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lo: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hi: Option<String>,
}

impl From<&RootLocation> for LocationJson {
    fn from(l: &RootLocation) -> Self {
        match l {
            RootLocation::Exact(x) => LocationJson { exact: Some(rat(x)), lo: None, hi: None },
            RootLocation::Interval { lo, hi } => LocationJson { exact: None, lo: Some(rat(lo)), hi: Some(rat(hi)) },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootJson {
    #[serde(flatten)]
    pub location: LocationJson,
    pub multiplicity: u32,
}

impl From<&IsolatedRoot> for RootJson {
    fn from(r: &IsolatedRoot) -> Self {
        RootJson { location: (&r.location).into(), multiplicity: r.multiplicity }
    }
}

pub fn roots(rs: &[IsolatedRoot]) -> Vec<RootJson> {
    rs.iter().map(RootJson::from).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct OutcomeJson {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl From<&Outcome> for OutcomeJson {
    fn from(o: &Outcome) -> Self {
        OutcomeJson { status: o.label(), detail: o.detail().map(str::to_owned) }
    }
}

#[allow(non_snake_case)]
#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeJson {
    pub degree: usize,
    pub polynomial: String,
    pub real_zero_count_with_mult: usize,
    pub nonreal_2m: usize,
    pub F: String,
    pub Q: RatFuncJson,
    pub z_r_Q: usize,
    pub hawaii_holds: bool,
    pub real_roots: Vec<RootJson>,
}

impl AnalyzeJson {
    pub fn new(p: &Poly, r: &HawaiiReport, real_roots: &[IsolatedRoot]) -> Self {
        AnalyzeJson {
            degree: r.degree,
            polynomial: p.to_string(),
            real_zero_count_with_mult: r.real_zero_count_with_mult,
            nonreal_2m: r.nonreal_count_2m,
            F: poly(&r.f),
            Q: (&r.q).into(),
            z_r_Q: r.z_r_q,
            hawaii_holds: r.hawaii_holds,
            real_roots: roots(real_roots),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BreakpointJson {
    #[serde(flatten)]
    pub location: LocationJson,
    pub discriminant_multiplicity: u32,
    pub nonreal_count: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellJson {
    pub samples: [String; 2],
    pub nonreal_counts: [usize; 2],
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaScanJson {
    pub discriminant: String,
    pub reduced_pencil: bool,
    pub breakpoints: Vec<BreakpointJson>,
    pub cells: Vec<CellJson>,
    pub min_2m_sigma_star: usize,
    pub witness: String,
    pub unresolved: Vec<LocationJson>,
}

impl From<&SigmaScan> for SigmaScanJson {
    fn from(s: &SigmaScan) -> Self {
        SigmaScanJson {
            discriminant: poly(&s.discriminant),
            reduced_pencil: s.reduced_pencil,
            breakpoints: s
                .breakpoints
                .iter()
                .map(|b| BreakpointJson {
                    location: (&b.location).into(),
                    discriminant_multiplicity: b.discriminant_multiplicity,
                    nonreal_count: b.nonreal_count,
                })
                .collect(),
            cells: s
                .cells
                .iter()
                .map(|c| CellJson { samples: [rat(&c.samples[0]), rat(&c.samples[1])], nonreal_counts: c.nonreal_counts })
                .collect(),
            min_2m_sigma_star: s.min_2m_sigma_star,
            witness: rat(&s.witness),
            unresolved: s.unresolved.iter().map(LocationJson::from).collect(),
        }
    }
}

#[allow(non_snake_case)]
#[derive(Clone, Debug, Serialize)]
pub struct LowerBoundJson {
    pub z_r_Q: usize,
    pub nonreal_2m: usize,
    pub resolved_min_2m_sigma: usize,
    pub witness: String,
    pub candidates_checked: usize,
    pub unresolved: usize,
}

impl From<&LowerBoundReport> for LowerBoundJson {
    fn from(r: &LowerBoundReport) -> Self {
        LowerBoundJson {
            z_r_Q: r.z_r_q,
            nonreal_2m: r.nonreal_2m,
            resolved_min_2m_sigma: r.resolved_min,
            witness: rat(&r.witness),
            candidates_checked: r.candidates_checked,
            unresolved: r.unresolved,
        }
    }
}

#[allow(non_snake_case)]
#[derive(Clone, Debug, Serialize)]
pub struct EqualityJson {
    pub sigma: String,
    pub premise_met: bool,
    pub z_r_Q: usize,
    pub nonreal_2m: usize,
    pub nonreal_2m_sigma: usize,
}

impl From<&EqualityReport> for EqualityJson {
    fn from(r: &EqualityReport) -> Self {
        EqualityJson {
            sigma: rat(&r.sigma),
            premise_met: r.premise_met,
            z_r_Q: r.z_r_q,
            nonreal_2m: r.nonreal_2m,
            nonreal_2m_sigma: r.nonreal_2m_sigma,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentitiesJson {
    pub derivative_identity: bool,
    pub expansion_identity: bool,
    pub mixed_identity: bool,
}

impl From<&IdentityReport> for IdentitiesJson {
    fn from(r: &IdentityReport) -> Self {
        IdentitiesJson {
            derivative_identity: r.derivative_identity,
            expansion_identity: r.expansion_identity,
            mixed_identity: r.mixed_identity,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftJson {
    pub sigma: String,
    pub lambda: String,
    pub order_in_q_p: usize,
    pub order_in_q_p_sigma: usize,
    pub forward_applies: bool,
    pub converse_applies: bool,
    pub identities: IdentitiesJson,
}

impl From<&LiftReport> for LiftJson {
    fn from(r: &LiftReport) -> Self {
        LiftJson {
            sigma: rat(&r.sigma),
            lambda: rat(&r.lambda),
            order_in_q_p: r.order_q_p,
            order_in_q_p_sigma: r.order_q_p_sigma,
            forward_applies: r.forward_applies,
            converse_applies: r.converse_applies,
            identities: (&r.identities).into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorrespondenceJson {
    pub lambda: String,
    pub order_in_q_p: usize,
    pub sigma: String,
    pub order_in_p_sigma: usize,
    pub derivative_branch: bool,
    pub degree_bound_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct_real_roots_of_f: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonreal_2m: Option<usize>,
}

impl From<&CorrespondenceReport> for CorrespondenceJson {
    fn from(r: &CorrespondenceReport) -> Self {
        CorrespondenceJson {
            lambda: rat(&r.lambda),
            order_in_q_p: r.order_q_p,
            sigma: rat(&r.sigma),
            order_in_p_sigma: r.order_p_sigma,
            derivative_branch: r.derivative_branch,
            degree_bound_holds: r.degree_bound_holds,
            distinct_real_roots_of_f: r.real_point_bound.map(|b| b.0),
            nonreal_2m: r.real_point_bound.map(|b| b.1),
        }
    }
}

#[allow(non_snake_case)]
#[derive(Clone, Debug, Serialize)]
pub struct SandwichJson {
    pub sigma: String,
    pub nonreal_2m: usize,
    pub nonreal_2m_sigma: usize,
    pub z_r_Q: usize,
    pub z_r_Q_sigma: usize,
    pub lower_holds: bool,
    pub upper_holds: bool,
    pub outcome: OutcomeJson,
}

impl From<&SandwichReport> for SandwichJson {
    fn from(r: &SandwichReport) -> Self {
        SandwichJson {
            sigma: rat(&r.sigma),
            nonreal_2m: r.nonreal_2m,
            nonreal_2m_sigma: r.nonreal_2m_sigma,
            z_r_Q: r.z_r_q,
            z_r_Q_sigma: r.z_r_q_sigma,
            lower_holds: r.lower_holds,
            upper_holds: r.upper_holds,
            outcome: (&r.outcome).into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SandwichSearchJson {
    pub candidates: Vec<SandwichJson>,
    pub witness: Option<String>,
}

impl From<&SandwichSearch> for SandwichSearchJson {
    fn from(s: &SandwichSearch) -> Self {
        SandwichSearchJson {
            candidates: s.candidates.iter().map(SandwichJson::from).collect(),
            witness: s.witness.as_ref().map(rat),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileJson {
    pub simple_real_of_p: Vec<RootJson>,
    pub multiple_real_of_p: Vec<RootJson>,
    pub new_simple_of_p_sigma: Vec<RootJson>,
    pub new_multiple_of_p_sigma: Vec<RootJson>,
    pub nonreal_2m: usize,
    pub nonreal_2m_sigma: usize,
}

impl From<&RootProfile> for ProfileJson {
    fn from(p: &RootProfile) -> Self {
        ProfileJson {
            simple_real_of_p: roots(&p.simple_real_of_p),
            multiple_real_of_p: roots(&p.multiple_real_of_p),
            new_simple_of_p_sigma: roots(&p.new_simple_of_p_sigma),
            new_multiple_of_p_sigma: roots(&p.new_multiple_of_p_sigma),
            nonreal_2m: p.nonreal_2m,
            nonreal_2m_sigma: p.nonreal_2m_sigma,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IndexIdentityJson {
    pub sigma: String,
    pub profile: ProfileJson,
    pub index_euclidean: i64,
    pub index_per_pole: i64,
    pub expected: i64,
    pub index_neg_inverse: i64,
    pub index_neg_inverse_at_infinity: i64,
}

impl From<&IndexIdentityReport> for IndexIdentityJson {
    fn from(r: &IndexIdentityReport) -> Self {
        IndexIdentityJson {
            sigma: rat(&r.sigma),
            profile: (&r.profile).into(),
            index_euclidean: r.index_euclidean,
            index_per_pole: r.index_per_pole,
            expected: r.expected,
            index_neg_inverse: r.index_neg_inverse,
            index_neg_inverse_at_infinity: r.index_neg_inverse_at_infinity,
        }
    }
}

#[allow(non_snake_case)]
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureSampleJson {
    pub sigma: String,
    pub nonreal_2m_sigma: usize,
    pub z_r_Q_sigma: usize,
    pub equality: bool,
    pub q_sigma_positive_somewhere: bool,
}

#[allow(non_snake_case)]
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureJson {
    pub nonreal_2m: usize,
    pub z_r_Q: usize,
    pub samples: Vec<ConjectureSampleJson>,
    pub equality_witnesses: Vec<String>,
    pub positive_observed: bool,
    pub strict_drop_witness: Option<String>,
}

impl From<&ConjectureReport> for ConjectureJson {
    fn from(r: &ConjectureReport) -> Self {
        ConjectureJson {
            nonreal_2m: r.nonreal_2m,
            z_r_Q: r.z_r_q,
            samples: r
                .samples
                .iter()
                .map(|s| ConjectureSampleJson {
                    sigma: rat(&s.sigma),
                    nonreal_2m_sigma: s.nonreal_2m_sigma,
                    z_r_Q_sigma: s.z_r_q_sigma,
                    equality: s.equality,
                    q_sigma_positive_somewhere: s.q_sigma_positive_somewhere,
                })
                .collect(),
            equality_witnesses: r.equality_witnesses.iter().map(rat).collect(),
            positive_observed: r.positive_observed,
            strict_drop_witness: r.strict_drop_witness.as_ref().map(rat),
        }
    }
}

/// Result of `verify`: the verdict plus the theorem-specific details.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyJson {
    pub theorem: String,
    pub outcome: OutcomeJson,
    pub details: Value,
}
