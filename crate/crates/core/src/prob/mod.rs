//! The probabilistic language: atoms, `skip`, `;` and `+_λ` over `D`, and an
//! extension with `0`, tests and `if-then-else` over `D∘Maybe`.

pub mod ast;
pub mod convex;
pub mod parse;
pub mod sem;
pub mod table;

pub use ast::ProbProg;
pub use convex::{convex_semiring_suite, nesting_weights, program_pool, random_table, ConvexFragment};
pub use parse::parse_prob;
pub use sem::{denote, denote_plus, run_prob, run_prob_plus};
pub use table::AtomTable;
