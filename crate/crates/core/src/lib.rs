//! Finite posets with cone operators, the poset classes defined through
//! them, operator residuation (`M`, `R`), horizontal sums, a catalog of
//! worked examples and exhaustive small-poset search.

#[rustfmt::skip]
pub mod catalog;
pub mod constructions;
pub mod dot;
pub mod error;
pub mod format;
pub mod iso;
pub mod poset;
pub mod properties;
pub mod report;
pub mod residuation;
pub mod search;
pub mod set;

pub use error::{PosetError, Result};
pub use poset::{FinitePoset, UnaryMap};
pub use properties::{Law, Outcome, Property};
pub use report::{PropertyReport, Witness};
pub use residuation::{AxiomReport, Construction, OperatorPair};
pub use set::ElementSet;
