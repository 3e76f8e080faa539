//! Splitting groups of dependent disjunctions into independent subgroups.
//!
//! *Dependent disjunctions* disjoin in lockstep: all disjunctions of a
//! named group must take their `j`-th disjunct together.  That makes a
//! group one big n-way choice no matter how many disjunctions it ties
//! together — and keeps solvers from exploiting structure, because the
//! coupling is often only apparent.  In
//!
//! ```text
//! group d
//!   phi phi phi' phi'
//!   psi psi' psi psi'
//! end
//! ```
//!
//! every combination of a `phi`-alternative and a `psi`-alternative occurs
//! among the four positions, so the two disjunctions do not constrain each
//! other at all: the group says no more than two independent groups of
//! width two.  This crate finds such factorisations at compile time.
//!
//! [`modularize_group`] splits a group into subgroups none of which can be
//! split further.  It works on the group's [encoding](encode) as an
//! alternative–case form, where independence of a bipartition of the
//! disjunctions reduces to one multiplication: a form is the free
//! combination of its two [confinements](confine) exactly when their
//! cardinalities multiply back to its own.  A brute-force [oracle] that
//! enumerates solutions directly is included as the measuring stick, and
//! [`Document`] reads and writes the `group ... end` format shown above —
//! the `modularize` binary wraps the whole pipeline.
//!
//! ```
//! use depdisj::{modularize_group, DependencyGroup};
//!
//! let group = DependencyGroup::new(
//!     "d".parse()?,
//!     vec!["phi phi phi' phi'".parse()?, "psi psi' psi psi'".parse()?],
//! )?;
//! let result = modularize_group(&group)?;
//!
//! let shapes: Vec<_> = result
//!     .groups
//!     .iter()
//!     .map(|g| (g.name().as_str().to_owned(), g.width()))
//!     .collect();
//! assert_eq!(shapes, [("d.1".to_owned(), 2), ("d.2".to_owned(), 2)]);
//! # Ok::<(), depdisj::Error>(())
//! ```

pub mod atom;
pub mod batch;
pub mod case;
pub mod document;
pub mod encode;
pub mod error;
pub mod group;
pub mod modularize;
pub mod oracle;
pub mod stats;

pub use crate::atom::{Atom, GroupName};
pub use crate::batch::{modularize_document, GroupResult, ModularizedDocument};
pub use crate::case::{AltVar, CaseForm, CaseRow, Scope};
pub use crate::document::{Document, ParseError, ParseErrorKind};
pub use crate::encode::{encode, AltCaseForm};
pub use crate::error::Error;
pub use crate::group::{DependencyGroup, Disjunction};
pub use crate::modularize::{
    bipartitions, confine, free_combine, independent_split, modularize_case, modularize_group,
    modularize_group_bounded, Modularization, SearchTrace, DEFAULT_MAX_GROUP_SIZE,
};
pub use crate::stats::{GroupStats, PartStats};

#[cfg(doctest)]
mod book;
