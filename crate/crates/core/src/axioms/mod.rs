//! Which program axioms a choice of natural operations satisfies.

mod coord;
mod extensional;
mod suites;

pub use coord::{coord_commutative, coord_has_some_unit, coord_has_unit, coord_idempotent, coords_of};
pub use extensional::{check_extensional, AxiomId, AxiomReport, AxiomWitness, ExtFragment};
pub use suites::{
    absorption_suite, impossibility_suite, maybe_classification, subdist_obstruction, subdist_unit_failure, MaybeClassification,
    SubDistObstruction,
    SubDistCandidate,
};
