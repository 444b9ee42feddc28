//! Braid-group tools for studying which four-strand braids can serve as the
//! interchange of a 2-fold monoidal structure built from a braiding.
//!
//! Conventions used throughout:
//!
//! * strands and generators are 1-based; `σ_i` crosses positions `i` and `i + 1`,
//! * the positive generator `σ_i` is the strand at position `i` crossing
//!   over the strand at position `i + 1`,
//! * words are read left to right, which is top to bottom in diagrams,
//! * strands are named by their initial positions.
//!
//! The modules build on one another: [`word`] and [`perm`] need no normal
//! form; [`garside`] decides the word problem; [`cabling`] produces the
//! derived six-strand braids; [`interchange`] holds the decision procedures
//! and the classification; [`links`] certifies non-conjugacy through braid
//! closures; [`search`] runs bounded exhaustive experiments.

pub mod cabling;
pub mod error;
pub mod garside;
pub mod interchange;
pub mod links;
pub mod perm;
pub mod search;
pub mod word;

pub use cabling::{cable, derive_l, derive_lp, derive_r, derive_rp, CableWidths, DerivedBraids};
pub use error::{BraidError, Result};
pub use garside::{
    canonical_key, equals, is_trivial, normal_form, CanonicalKey, NormalForm, SimpleElement,
};
pub use interchange::{
    classify, equivalence_class, family, hexagon_check, hexagon_report, inner_outer_profile,
    is_candidate, is_interchanging, obstruction_screens, ClassificationResult, EquivalenceClass,
    InnerOuterProfile, InterchangeReport, RefusalReason, Sign,
};
pub use links::{
    braiding_obstruction, closure_summary, conjugacy_certificate, obstruction_report,
    ConjugacyVerdict, LinkSummary,
};
pub use perm::Permutation;
pub use search::{coset_property_sample, run_search, SearchConfig, SearchReport};
pub use word::{BraidWord, StrandSet};
