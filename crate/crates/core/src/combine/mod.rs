//! Combining effects: `T∘Maybe` with tests and guarded choice, the
//! trajectory/non-empty-powerset law `H∘Q → Q∘H`, and the failure of `P∘D`.

pub mod hq;
pub mod ite;
pub mod law;
pub mod lift;
pub mod pd;

pub use hq::{full_powerset_counterexample, hq_law_report, hq_select, qh_union, qh_union_report, QhUnionReport, SelectLaw};
pub use ite::{ite_axiom_suite, IteReport};
pub use law::{check_distributive_law, DistLawFragment, DistLawReport};
pub use lift::{if_then_else, interpret_test, lift_constant, lift_nt, SelectionPolicy, Test};
pub use pd::{pd_no_monad_replay, PdReplay};
