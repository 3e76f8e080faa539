//! Errors shared across the crate.
//!
//! Parsing has its own error type with positions, [`crate::document::ParseError`];
//! everything else reports through [`Error`].

use thiserror::Error;

/// Everything that can go wrong while building or transforming groups and
/// case forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A token failed the lexical rules for atoms and group names.
    #[error("invalid token {token:?}: {reason}")]
    InvalidToken { token: String, reason: &'static str },

    /// A dependency group with no disjunctions, or whose disjunctions have
    /// no disjuncts.
    #[error("dependency group {name:?} is empty")]
    EmptyGroup { name: String },

    /// The disjunctions of a group do not all have the same width.
    #[error("dependency group {name:?} is ragged: disjunction {index} has width {found}, expected {expected}")]
    RaggedGroup {
        name: String,
        index: usize,
        found: usize,
        expected: usize,
    },

    /// A case form with no cases, or with nothing in scope.
    #[error("case form has no cases")]
    EmptyCaseForm,

    /// A case row, or a requested projection, does not line up with the
    /// scope it has to cover.
    #[error("scope mismatch: expected disjunctions {expected:?}, found {found:?}")]
    ScopeMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },

    /// Case forms that are supposed to live on disjoint disjunctions share
    /// some.
    #[error("scopes overlap on disjunctions {shared:?}")]
    OverlappingScopes { shared: Vec<usize> },

    /// A case row mentions an alternative variable the form defines no atom
    /// for.
    #[error("unknown alternative a_{representative}^{disjunction}")]
    UnknownAlternative {
        disjunction: usize,
        representative: usize,
    },

    /// A group with more disjunctions than the search is willing to take:
    /// the bipartition search is exponential in their number.
    #[error("group {name:?} has {disjunctions} disjunctions, above the limit of {limit}")]
    GroupTooLarge {
        name: String,
        disjunctions: usize,
        limit: usize,
    },

    /// A split did not preserve the solutions of the group it came from.
    #[error("modularization of {name:?} does not preserve its solutions")]
    VerificationFailed { name: String },
}
