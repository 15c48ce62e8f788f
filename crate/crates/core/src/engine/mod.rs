//! The verification pipeline for `x² + 7 = 2ⁿ`.

mod certificate;
mod search;
mod steps;

pub use certificate::{
    full_verify, Certificate, Meta, ReplayReport, Replayer, ResidueClasses, RingRecord,
    SignExclusion, SolutionRecord, Solutions, Status, Sweeps, ThetaRecord, ThetaWitnesses,
    TraceSequenceCheck, Uniqueness, UnitRecord, VerifyConfig, ENGINE_NAME, ENGINE_VERSION,
    LTE_SWEEP_K_MAX, SIGN_EXCLUSION_M_MAX, THETA_RECORD_M_MAX, TRACE_CROSS_CHECK_M_MAX,
    TRACE_PERIOD_M_MAX,
};
pub use search::{
    brute_force_search, even_case, exact_sqrt, isqrt, EvenCaseDerivation, SolutionPair,
};
pub use steps::{
    residue_classes_mod_42, sign_exclusion, theta_power_difference, trace_sequence,
    uniqueness_contradiction, verify_theta_equation, ThetaCheck, UniquenessReport, RESIDUE_MODULUS,
    TRACE_PERIOD_MOD_7,
};
