//! Maps between permutations and rectangulations, their fibers, and the
//! flip graph on strong classes.

mod backward;
mod flip;
mod forward;
mod poset;
mod posets;

pub use backward::{backward_strong, backward_weak, strong_available, weak_available};
pub use flip::{flips, quotient_cover_graph, FlipError, FlipGraph, FlipKind, MAX_FLIP_N};
pub(crate) use forward::{build, Attachment};
pub use forward::{diagonal_layout, gamma_s, gamma_w, gamma_w_innermost, insertion_steps, InsertionStep};
pub use poset::{LinearExtensions, Poset, PosetError, PosetKind};
