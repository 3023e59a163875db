//! Kleisli representations of small program algebras.
//!
//! The crate is organised bottom-up: [`monad`] holds the effect monads and
//! their law checkers, [`traj`] the continuous trajectories of the hybrid
//! monad, [`nat`] natural operations `Tⁿ → T` (application, naturality checks,
//! enumeration, orbits), [`axioms`] the axiom criteria, [`combine`] the
//! composite monads `T∘Maybe` and `Q∘H`, and [`hyb`] / [`prob`] the two
//! program languages.

pub mod abstraction;
pub mod axioms;
pub mod combine;
mod error;
pub mod expm;
mod lex;
pub mod monad;
pub mod nat;
pub mod prob;
pub mod hyb;
pub mod rat;
pub mod suites;
pub mod report;
pub mod traj;

pub use error::{Error, Result};
pub use monad::dist::{Dist, SubDist};
pub use monad::discrete::DiscreteTraj;
pub use monad::maybe::Maybe;
pub use monad::multiset::{MultiSet, Natural, Rational, Semiring};
pub use monad::{Elem, Enumerable, Monad, Never};
pub use nat::spec::NatTransSpec;
pub use rat::Rat;
pub use report::{SuiteReport, Verdict};
pub use traj::Traj;
