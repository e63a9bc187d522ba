//! Rectangulations, their bijections with permutation classes, history
//! quadrant walks, and the associated enumeration.

pub mod biject;
pub mod enumerate;
pub mod perm;
pub mod rect;
mod relation;
pub mod verify;
pub mod walks;

pub use relation::Relation;
