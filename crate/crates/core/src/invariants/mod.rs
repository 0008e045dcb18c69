//! Polynomial type, sequential polynomial type, the sCM and sgCM deciders
//! and the sampled s.o.p. characterizations.

mod harness;
mod profile;
mod routes;

pub use harness::{equivalence_harness, Clause, ClauseReport, HarnessReport, Outcome, SopSampler};
pub use profile::{FiltrationStep, Profile};
pub use routes::{
    is_sequentially_cm, is_sequentially_gcm, non_cm_locus_dim, polynomial_type, sp_breakdown, sp_definition,
    sp_homological, u_zero_dim, SpBreakdown,
};
