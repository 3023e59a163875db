//! The hybrid language: affine assignments and affine flows that run for a
//! fixed duration or until a closed predicate first holds.

pub mod ast;
pub mod emit;
pub mod parse;
pub mod sem;

pub use ast::{AffineTerm, CmpOp, HybAtom, HybPred, HybProg, Trigger};
pub use emit::{emit_csv, emit_json};
pub use parse::parse_hyb;
pub use sem::{compile, hit_time, parse_init, run_hyb, HitResult, HybRun, Mode, NumericConfig, Pred};
