//! Cycle spectra, reciprocal sums, consecutive cycle lengths and the bound
//! and theorem checkers built on them.

mod bounds;
mod consecutive;
mod cycles;
mod speed;
mod theorems;

pub use bounds::{bound_lengths2, tower_and_tau, Lengths2Bound, SequenceSpec, TauSelection, BOUND_MARGIN};
pub use consecutive::{consecutive_cycles, paths_all_lengths, ConsecutiveCycles};
pub use cycles::{
    cycle_spectrum, cycle_spectrum_with, l_and_l_odd, log_star, reciprocal_sum, CycleSpectrum, ReciprocalSums,
    SpectrumMode, DEFAULT_SPECTRUM_LIMIT, EXACT_SPECTRUM_CAP,
};
pub use speed::{binomial, ramsey_binomial_check, speed_function_ks, CliqueFreeSpeed, RamseyReport, RamseyWitness};
pub use theorems::{
    check_consecutive_theorems, check_lengths_theorem, check_recip_theorem, check_upper_bound_examples,
    CheckerLimits, ConsecutiveFamily, ConsecutiveReport, IotaSummary, LengthsReport, OddInterval, PipelineHit,
    PipelineRun, RecipReport, UpperBoundEntry, UpperBoundReport, Verdict,
};
