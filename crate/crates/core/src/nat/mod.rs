//! Natural operations `Tⁿ → T` on finite fragments: finite functors, typed
//! operation specs, naturality checks, exhaustive enumeration and orbits.

pub mod check;
pub mod constants;
pub mod coprod;
pub mod enumerate;
pub mod functor;
pub mod orbits;
pub mod spec;

pub use check::{check_naturality, Family, NaturalityReport, Square, TableFamily};
pub use enumerate::{enumerate_natural, Enumeration};
pub use functor::{all_maps, FinFunctor, FinMap, IdF, MonadF, PdF, Power};
pub use orbits::{orbits, Orbit, OrbitDecomposition};
pub use constants::{constants_by_name, ConstantsResult};
pub use coprod::{Coord, CoprodCoords, HybridScheme, Keep, MaybeCode, Shape, Side, C2};
pub use spec::{apply_nt, apply_subdist, NatTransSpec, SpecCarrier};
