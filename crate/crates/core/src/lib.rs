//! Crystal structures on set-valued shifted tableaux.
//!
//! The crate covers shifted tableau families and their enumeration, the
//! word and queer crystals on words, the crystal operators on set-valued
//! decomposition tableaux together with their square-root variants, a
//! crystal graph builder and axiom checker, and a truncated polynomial
//! engine for characters and K-theoretic Schur functions.

pub mod error;
pub mod graph;
pub mod tableau;
pub mod sqrt;
pub mod sv;
pub mod symfunc;
pub mod word;

pub use error::{CrystalError, PolyError, TableauError};
pub use tableau::{FamilyId, SetTableau, Square, StrictPartition};
