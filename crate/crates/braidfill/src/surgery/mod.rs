//! Surgered braid closures and the twist moves on them.

mod link;
mod rational;
pub(crate) mod template;

pub use link::{axis_augmented_braid, Component, LedgerEntry, SurgeredLink, AXIS};
pub use rational::ExtendedRational;
pub use template::TwistMatch;
