//! Braid words, permutations, normal forms and conjugacy.

pub mod conjugacy;
pub mod garside;
pub mod perm;
pub mod word;

pub use conjugacy::{conjugacy_search, ConjugacyCertificate, SearchBudget};
pub use garside::{left_normal_form, words_equal, CanonicalFactor, NormalForm};
pub use perm::Permutation;
pub use word::{delta_braid, full_twist, half_twist_range, positive_permutation_braid, BraidWord};
