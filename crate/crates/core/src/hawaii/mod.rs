//! The Hawaii conjecture objects and the statements checked on single
//! instances.

mod objects;
mod outcome;
mod profile;
mod sigma;
mod verify;

pub use objects::{
    check_global_negativity, check_hawaii, count_nonreal, count_real_zeros_q, f_numerator,
    invert_laguerre, laguerre_derivative, q_positive_somewhere, q_reduced, q_zero_order,
    HawaiiReport,
};
pub use outcome::Outcome;
pub use profile::{index_identity_check, root_profile, IndexIdentityReport, RootProfile};
pub use sigma::{sigma_scan, verify_lower_bound, LowerBoundReport, SigmaBreakpoint, SigmaCell, SigmaScan};
pub use verify::{
    check_identities, explore_conjecture, search_sandwich, verify_craven_equality,
    verify_multiplicity_lift, verify_sandwich, verify_sigma_correspondence, ConjectureReport,
    ConjectureSample, CorrespondenceReport, EqualityReport, IdentityReport, LiftReport,
    SandwichReport, SandwichSearch,
};
