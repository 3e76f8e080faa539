//! Whole-document processing: the engine behind the command line.

use crate::document::Document;
use crate::error::Error;
use crate::group::DependencyGroup;
use crate::modularize::{modularize_group_bounded, Modularization};
use crate::oracle;
use crate::stats::GroupStats;

/// The outcome of modularizing every group of a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularizedDocument {
    /// One entry per input group, in input order.
    pub results: Vec<GroupResult>,
}

/// One input group together with what it became.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupResult {
    pub input: DependencyGroup,
    pub output: Modularization,
}

/// Modularizes every group of `doc`, refusing groups with more than
/// `max_size` disjunctions.
pub fn modularize_document(doc: &Document, max_size: usize) -> Result<ModularizedDocument, Error> {
    let results = doc
        .groups
        .iter()
        .map(|group| {
            Ok(GroupResult {
                input: group.clone(),
                output: modularize_group_bounded(group, max_size)?,
            })
        })
        .collect::<Result<_, Error>>()?;
    Ok(ModularizedDocument { results })
}

impl ModularizedDocument {
    /// The output document: every group replaced by its subgroups, in input
    /// order.
    pub fn document(&self) -> Document {
        Document {
            groups: self
                .results
                .iter()
                .flat_map(|r| r.output.groups.iter().cloned())
                .collect(),
        }
    }

    /// The reports for every group, in input order.
    pub fn stats(&self) -> Vec<GroupStats> {
        self.results
            .iter()
            .map(|r| GroupStats::new(&r.input, &r.output))
            .collect()
    }

    /// Checks, group by group, that the subgroups admit exactly the
    /// solutions of the input — by brute-force enumeration on both sides,
    /// independent of the search that produced the split.
    pub fn verify(&self) -> Result<(), Error> {
        for r in &self.results {
            let before = oracle::solutions(&r.input);
            let after = oracle::combined_solutions(&r.output.groups)?;
            if before != after {
                return Err(Error::VerificationFailed {
                    name: r.input.name().to_string(),
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(text: &str) -> Document {
        Document::parse(text).unwrap()
    }

    #[test]
    fn replaces_each_group_by_its_parts_in_order() {
        let result = modularize_document(
            &doc("group d\n  phi phi'\nend\ngroup e\n  a a' a''\n  b b' b''\nend\n"),
            24,
        )
        .unwrap();
        let names: Vec<String> = result
            .document()
            .groups
            .iter()
            .map(|g| g.name().to_string())
            .collect();
        // d is a single disjunction; e has three cases, a prime count.
        assert_eq!(names, ["d", "e"]);
        assert_eq!(result.stats().len(), 2);
    }

    #[test]
    fn splits_are_interleaved_where_their_input_was() {
        let result = modularize_document(
            &doc("group d\n  p p q q\n  x y x y\nend\ngroup e\n  a\nend\n"),
            24,
        )
        .unwrap();
        let names: Vec<String> = result
            .document()
            .groups
            .iter()
            .map(|g| g.name().to_string())
            .collect();
        assert_eq!(names, ["d.1", "d.2", "e"]);
    }

    #[test]
    fn propagates_the_size_bound() {
        let err = modularize_document(&doc("group d\n  a b\n  c d\n  e f\nend\n"), 2);
        assert_eq!(
            err,
            Err(Error::GroupTooLarge {
                name: "d".into(),
                disjunctions: 3,
                limit: 2,
            })
        );
    }

    #[test]
    fn verifies_its_own_splits() {
        let result = modularize_document(
            &doc("group d\n  p p q q\n  x y x y\nend\ngroup e\n  a a b\n  s t t\nend\n"),
            24,
        )
        .unwrap();
        assert_eq!(result.verify(), Ok(()));
    }
}
