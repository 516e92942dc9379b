mod bounds;
mod criterion;
mod domain;
mod positivity;
mod prefix;
mod supnorm;

pub use bounds::{
    cosh_closed_form, error_bound_starlike, exp_closed_form, fde_error_bound, log_error_bound, majorant_tail_bound,
    sinh_closed_form, uniform_bound_identical_step, BoundFormula, BoundValue, ErrorBoundReport, Factor,
};
pub(crate) use bounds::factorial_f64;
pub use domain::DiskDomain;
pub use positivity::{
    canonical_majorant, derivative_scale, dominates, is_positive, Counterexample, DominationVerdict, PositivityVerdict,
    Site, SERIES_POSITIVITY_DEPTH,
};
pub use supnorm::{sup_norm_bi, sup_norm_step, sup_norm_uni, NormRequest, SupNormEstimate, SupNormMethod};
pub use criterion::{pas_criterion_check, CriterionEntry, CriterionReport};
pub use prefix::{parity_check, taylor_prefix_check, taylor_prefix_check_approx, Parity, PrefixOutcome};
