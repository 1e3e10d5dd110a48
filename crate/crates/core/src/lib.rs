//! Minimal presentations of numerical semigroups through Kunz nilsemigroups.
//!
//! The crate has two independent routes to the minimal presentation
//! cardinality `η(S)` of a numerical semigroup:
//!
//! * [`semigroup`] scans factorization graphs of candidate Betti elements
//!   directly, and
//! * [`kunz`] counts outer Betti elements and non-nil trades of the Kunz
//!   nilsemigroup of `S`, which only depends on the Apéry set.
//!
//! On top of those sit the parametric [`families`], the bounded
//! Kunz-coordinate [`survey`], and the command line front end in [`cli`].

pub mod bounds;
pub mod cli;
pub mod families;
pub mod kunz;
pub mod semigroup;
pub mod survey;

mod graph;


pub use kunz::{KunzError, KunzNilsemigroup, KunzPoset, NilPresentationSummary, OuterBettiElement};
pub use families::{FamilyError, FamilyMember, FamilyName, FamilySpec};
pub use semigroup::{
    AperySet, Factorization, MinimalPresentation, NumericalSemigroup, SemigroupError, Trade,
};

pub use survey::{EtaProfile, KunzVector, SurveyConfig};
