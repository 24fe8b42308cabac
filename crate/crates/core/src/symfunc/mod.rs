//! Truncated polynomials, characters and the tableau generating functions
//! `P`, `Q`, `G`, `GP`, `GQ`, `Σ`, with expansion and cancellation checks.

mod bases;
mod expand;
mod poly;

pub use bases::{basis_poly, character, grothendieck, BasisKind};
pub use expand::{
    check_ikeda, g_expand, gp_combination, gp_expand, partitions, product_expand, q_cancellation_check, Expansion,
    IkedaOutcome, QCancellation,
};
pub use poly::{Exponent, TruncPoly};
