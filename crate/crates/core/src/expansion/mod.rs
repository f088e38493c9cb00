//! Expansion of graphs on independent sets and on small vertex sets, and
//! the peeling construction that extracts expanding subgraphs.

mod check;
mod peel;

pub use check::{
    check_independent_set_expansion, check_independent_set_expansion_exempting,
    check_independent_set_expansion_with, check_set_expansion, check_set_expansion_with, CheckOptions,
    ExpansionCertificate, ExpansionKind, ExpansionOutcome, ExpansionViolation,
};
pub use peel::{
    hereditary_strengthening, hereditary_strengthening_with, peel_to_expander, peel_to_expander_with,
    triangle_free_strengthening, triangle_free_strengthening_with, weakly_expanding_endblock,
    weakly_expanding_endblock_with, EndblockResult, IdentitySpeed, PeelResult, PeelStep, PeelingTrace,
    SpeedFunction, StrengtheningReport,
};
