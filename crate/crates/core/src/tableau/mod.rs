//! Shapes, entries, tableau containers and the tableau families.

mod container;
mod entry;
mod enumerate;
mod family;
mod hook;
mod json;
mod partition;

pub use container::SetTableau;
pub use entry::Entry;
pub use enumerate::{enumerate_family, for_each_member};
pub use family::{distributions, is_member, FamilyId};
pub use hook::{is_decomposition_tableau, is_hook_word, max_hook_subword_len, DecompositionMode};
pub use partition::{shifted_diagram, Square, StrictPartition};
