//! Dependency groups.
//!
//! A *dependency group* is a named family of equally wide disjunctions that
//! disjoin in lockstep: choosing the `j`-th disjunct of one disjunction
//! chooses the `j`-th disjunct of every other disjunction in the group.
//! The group
//!
//! ```text
//! group d
//!   phi phi phi'
//!   psi psi' psi'
//! end
//! ```
//!
//! therefore admits three joint choices — (phi, psi), (phi, psi') and
//! (phi', psi') — not nine.

use std::str::FromStr;

use crate::atom::{Atom, GroupName};
use crate::error::Error;

/// An ordered list of disjuncts.
///
/// Order matters: the position of a disjunct decides which disjuncts of the
/// other disjunctions in its group it is chosen together with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disjunction(pub Vec<Atom>);

impl Disjunction {
    /// The number of disjuncts.
    pub fn width(&self) -> usize {
        self.0.len()
    }

    /// The disjuncts in order.
    pub fn disjuncts(&self) -> &[Atom] {
        &self.0
    }
}

impl FromStr for Disjunction {
    type Err = Error;

    /// Parses whitespace-separated disjuncts, e.g. `"phi phi phi'"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        s.split_whitespace()
            .map(Atom::new)
            .collect::<Result<Vec<_>, _>>()
            .map(Disjunction)
    }
}

/// A named group of dependent disjunctions, all of the same width.
///
/// Besides its name and disjunctions, a group records for every disjunction
/// the index it occupied in the group it was split from (its *origin*).
/// Groups built with [`DependencyGroup::new`] get the identity `1..=m`;
/// groups produced by [`modularize_group`](crate::modularize::modularize_group)
/// keep pointing at the disjunctions of the input, which is how the
/// [oracle](crate::oracle) lines their solutions up again.  Origins are
/// bookkeeping: equality ignores them.
#[derive(Clone, Debug, Eq)]
pub struct DependencyGroup {
    name: GroupName,
    disjunctions: Vec<Disjunction>,
    origins: Vec<usize>,
}

impl DependencyGroup {
    /// Builds a group, checking that there is at least one disjunction,
    /// that every disjunction has at least one disjunct, and that all
    /// widths agree.
    pub fn new(name: GroupName, disjunctions: Vec<Disjunction>) -> Result<Self, Error> {
        let origins = (1..=disjunctions.len()).collect();
        Self::with_origins(name, disjunctions, origins)
    }

    pub(crate) fn with_origins(
        name: GroupName,
        disjunctions: Vec<Disjunction>,
        origins: Vec<usize>,
    ) -> Result<Self, Error> {
        debug_assert_eq!(origins.len(), disjunctions.len());
        if disjunctions.is_empty() {
            return Err(Error::EmptyGroup {
                name: name.to_string(),
            });
        }
        let expected = disjunctions[0].width();
        for (i, d) in disjunctions.iter().enumerate() {
            if d.width() != expected {
                return Err(Error::RaggedGroup {
                    name: name.to_string(),
                    index: i + 1,
                    found: d.width(),
                    expected,
                });
            }
        }
        if expected == 0 {
            return Err(Error::EmptyGroup {
                name: name.to_string(),
            });
        }
        Ok(DependencyGroup {
            name,
            disjunctions,
            origins,
        })
    }

    /// The group's name.
    pub fn name(&self) -> &GroupName {
        &self.name
    }

    /// The number of disjunctions, usually called `m`.
    pub fn disjunction_count(&self) -> usize {
        self.disjunctions.len()
    }

    /// The shared width of the disjunctions, usually called `n`.
    pub fn width(&self) -> usize {
        self.disjunctions[0].width()
    }

    /// The disjunctions in order.
    pub fn disjunctions(&self) -> &[Disjunction] {
        &self.disjunctions
    }

    /// For each disjunction, the index it occupied in the group this one
    /// was split from; the identity for a group built directly.
    pub fn origins(&self) -> &[usize] {
        &self.origins
    }

    /// Rewrites each origin through the origins of the parent group, so
    /// that chains of splits keep pointing at the original input.
    pub(crate) fn map_origins(mut self, parent: &[usize]) -> Self {
        for o in &mut self.origins {
            *o = parent[*o - 1];
        }
        self
    }
}

impl PartialEq for DependencyGroup {
    /// Origins are derivation bookkeeping and take no part in equality.
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.disjunctions == other.disjunctions
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(s: &str) -> GroupName {
        s.parse().unwrap()
    }

    #[test]
    fn builds_with_identity_origins() {
        let g = DependencyGroup::new(
            name("d"),
            vec![
                "phi phi phi'".parse().unwrap(),
                "psi psi' psi'".parse().unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(g.disjunction_count(), 2);
        assert_eq!(g.width(), 3);
        assert_eq!(g.origins(), &[1, 2]);
    }

    #[test]
    fn rejects_groups_without_disjunctions() {
        assert_eq!(
            DependencyGroup::new(name("d"), vec![]),
            Err(Error::EmptyGroup { name: "d".into() })
        );
    }

    #[test]
    fn rejects_disjunctions_without_disjuncts() {
        let empty: Disjunction = "".parse().unwrap();
        assert_eq!(
            DependencyGroup::new(name("d"), vec![empty]),
            Err(Error::EmptyGroup { name: "d".into() })
        );
    }

    #[test]
    fn reports_the_first_ragged_disjunction() {
        let err = DependencyGroup::new(
            name("d"),
            vec![
                "a b".parse().unwrap(),
                "c d".parse().unwrap(),
                "e".parse().unwrap(),
            ],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::RaggedGroup {
                name: "d".into(),
                index: 3,
                found: 1,
                expected: 2,
            }
        );
    }

    #[test]
    fn equality_ignores_origins() {
        let disjunctions = vec!["a b".parse().unwrap(), "c d".parse().unwrap()];
        let fresh = DependencyGroup::new(name("d"), disjunctions.clone()).unwrap();
        let derived = DependencyGroup::with_origins(name("d"), disjunctions, vec![4, 7]).unwrap();
        assert_eq!(fresh, derived);
        assert_ne!(fresh.origins(), derived.origins());
    }

    #[test]
    fn origins_compose_through_the_parent() {
        let g = DependencyGroup::with_origins(
            name("d.1"),
            vec!["a b".parse().unwrap(), "c d".parse().unwrap()],
            vec![1, 3],
        )
        .unwrap();
        // The parent itself carried disjunctions 2, 5 and 9 of its input.
        let g = g.map_origins(&[2, 5, 9]);
        assert_eq!(g.origins(), &[2, 9]);
    }
}
