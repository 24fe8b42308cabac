//! Words, the signature rule, abstract crystals and their tensor products.

mod crystal;
mod reading;
mod signature;
mod tensor;

pub use crystal::{composite_queer_op, sigma, Crystal, Direction, Label, Mode, Weight};
pub use reading::{dectab_op, revrow, DecTabCrystal, Letter};
pub use signature::{word_op, word_queer_op, Word};
pub use tensor::{Standard, Tensor, WordCrystal};

pub(crate) use signature::{bracket, queer_target};
