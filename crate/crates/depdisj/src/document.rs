//! The document format: parsing and printing groups.
//!
//! A document is a sequence of named groups:
//!
//! ```text
//! # disjunctions are written one per line
//! group d
//!   phi phi phi'
//!   psi psi' psi'
//! end
//! ```
//!
//! `#` starts a comment running to the end of the line; blank lines are
//! skipped.  Inside a `group ... end` block every line is one disjunction:
//! its disjuncts separated by spaces, indented by any amount of whitespace.
//! A line consisting of the single word `end` always closes the group, so a
//! one-disjunct disjunction whose atom is literally `end` cannot be
//! written; no other token is reserved.  Group names must be unique within
//! a document.

use std::fmt;

use itertools::Itertools;

use crate::atom::GroupName;
use crate::group::{DependencyGroup, Disjunction};

/// A parsed document: dependency groups in input order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub groups: Vec<DependencyGroup>,
}

/// Where and why parsing failed.  Lines and columns count from one;
/// columns count characters, not bytes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    /// Something other than a group header between groups.
    #[error("expected `group <name>`")]
    ExpectedGroup,

    /// A `group` header with no name, or with trailing tokens.
    #[error("`group` takes exactly one name")]
    MalformedHeader,

    /// A second group with a name already used.
    #[error("duplicate group name {name:?}")]
    DuplicateGroup { name: String },

    /// An `end` with no group open.
    #[error("`end` outside a group")]
    StrayEnd,

    /// A flush-left line inside a group that is not `end`.
    #[error("expected an indented disjunction or `end`")]
    ExpectedDisjunction,

    /// The input stopped inside a group.
    #[error("group {name:?} is not closed by `end`")]
    UnterminatedGroup { name: String },

    /// A group closed without a single disjunction.
    #[error("group {name:?} has no disjunctions")]
    EmptyGroup { name: String },

    /// A disjunction whose width differs from the lines above it.
    #[error("group {name:?}: disjunction has width {found}, expected {expected}")]
    RaggedDisjunction {
        name: String,
        found: usize,
        expected: usize,
    },
}

impl ParseErrorKind {
    /// True for inputs that are syntactically fine but describe a
    /// degenerate group — empty or ragged.  The command line reports these
    /// with a different exit code than syntax errors.
    pub fn is_degenerate_group(&self) -> bool {
        matches!(
            self,
            ParseErrorKind::EmptyGroup { .. } | ParseErrorKind::RaggedDisjunction { .. }
        )
    }
}

/// Whitespace-separated tokens of a line, with their byte offsets.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

struct OpenGroup {
    name: GroupName,
    header_line: usize,
    disjunctions: Vec<Disjunction>,
}

impl Document {
    /// Parses a document, stopping at the first problem.
    pub fn parse(input: &str) -> Result<Document, ParseError> {
        let mut groups: Vec<DependencyGroup> = Vec::new();
        let mut open: Option<OpenGroup> = None;
        for (idx, raw) in input.lines().enumerate() {
            let line = idx + 1;
            let text = match raw.find('#') {
                Some(cut) => &raw[..cut],
                None => raw,
            };
            let words = tokens(text);
            let Some(&(first_offset, first)) = words.first() else {
                continue;
            };
            // Columns count characters up to the token's byte offset.
            let column = |offset: usize| text[..offset].chars().count() + 1;
            let fail = |column: usize, kind: ParseErrorKind| ParseError { line, column, kind };

            if open.is_some() && words.len() == 1 && first == "end" {
                let done = open.take().expect("a group is open");
                if done.disjunctions.is_empty() {
                    return Err(fail(
                        column(first_offset),
                        ParseErrorKind::EmptyGroup {
                            name: done.name.to_string(),
                        },
                    ));
                }
                groups.push(
                    DependencyGroup::new(done.name, done.disjunctions)
                        .expect("widths were checked line by line"),
                );
                continue;
            }
            match open.as_mut() {
                Some(group) => {
                    if first_offset == 0 {
                        return Err(fail(1, ParseErrorKind::ExpectedDisjunction));
                    }
                    if let Some(head) = group.disjunctions.first() {
                        if words.len() != head.width() {
                            return Err(fail(
                                column(first_offset),
                                ParseErrorKind::RaggedDisjunction {
                                    name: group.name.to_string(),
                                    found: words.len(),
                                    expected: head.width(),
                                },
                            ));
                        }
                    }
                    let atoms = words
                        .iter()
                        .map(|(_, token)| {
                            token
                                .parse()
                                .expect("tokens carry no whitespace and no '#', so they are atoms")
                        })
                        .collect();
                    group.disjunctions.push(Disjunction(atoms));
                }
                None => {
                    if first == "end" {
                        return Err(fail(column(first_offset), ParseErrorKind::StrayEnd));
                    }
                    if first != "group" {
                        return Err(fail(column(first_offset), ParseErrorKind::ExpectedGroup));
                    }
                    if words.len() != 2 {
                        return Err(fail(column(first_offset), ParseErrorKind::MalformedHeader));
                    }
                    let (name_offset, name) = words[1];
                    let name: GroupName = name.parse().expect("tokens are valid group names");
                    if groups.iter().any(|g| g.name() == &name) {
                        return Err(fail(
                            column(name_offset),
                            ParseErrorKind::DuplicateGroup {
                                name: name.to_string(),
                            },
                        ));
                    }
                    open = Some(OpenGroup {
                        name,
                        header_line: line,
                        disjunctions: Vec::new(),
                    });
                }
            }
        }
        if let Some(group) = open {
            return Err(ParseError {
                line: group.header_line,
                column: 1,
                kind: ParseErrorKind::UnterminatedGroup {
                    name: group.name.to_string(),
                },
            });
        }
        Ok(Document { groups })
    }
}

impl fmt::Display for Document {
    /// Prints the document in the format [`Document::parse`] reads:
    /// two-space indent, one blank line between groups.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, group) in self.groups.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            writeln!(f, "group {}", group.name())?;
            for d in group.disjunctions() {
                writeln!(f, "  {}", d.disjuncts().iter().format(" "))?;
            }
            writeln!(f, "end")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind_at(input: &str) -> (usize, usize, ParseErrorKind) {
        let err = Document::parse(input).unwrap_err();
        (err.line, err.column, err.kind)
    }

    #[test]
    fn parses_groups_comments_and_blank_lines() {
        let doc = Document::parse(
            "# two coupled disjunctions\n\
             group d\n\
             \n\
             \t phi phi'   # trailing note\n\
             \t psi psi'\n\
             end\n\
             \n\
             group e\n\
             \x20 a\n\
             end\n",
        )
        .unwrap();
        assert_eq!(doc.groups.len(), 2);
        assert_eq!(doc.groups[0].name().as_str(), "d");
        assert_eq!(doc.groups[0].width(), 2);
        assert_eq!(doc.groups[1].width(), 1);
    }

    #[test]
    fn an_indented_end_still_closes_the_group() {
        let doc = Document::parse("group d\n  a b\n   end\n").unwrap();
        assert_eq!(doc.groups[0].width(), 2);
    }

    #[test]
    fn prints_what_it_parses() {
        let text = "group d\n  phi phi phi'\n  psi psi' psi'\nend\n\ngroup e\n  a b\nend\n";
        let doc = Document::parse(text).unwrap();
        assert_eq!(doc.to_string(), text);
        assert_eq!(Document::parse(&doc.to_string()).unwrap(), doc);
    }

    #[test]
    fn reports_stray_text_between_groups() {
        assert_eq!(
            kind_at("  phi psi\n"),
            (1, 3, ParseErrorKind::ExpectedGroup)
        );
    }

    #[test]
    fn reports_malformed_headers() {
        assert_eq!(kind_at("group\n"), (1, 1, ParseErrorKind::MalformedHeader));
        assert_eq!(
            kind_at("group d extra\n"),
            (1, 1, ParseErrorKind::MalformedHeader)
        );
    }

    #[test]
    fn reports_duplicate_names() {
        let input = "group d\n  a\nend\ngroup d\n  b\nend\n";
        assert_eq!(
            kind_at(input),
            (4, 7, ParseErrorKind::DuplicateGroup { name: "d".into() })
        );
    }

    #[test]
    fn reports_stray_end() {
        assert_eq!(kind_at("end\n"), (1, 1, ParseErrorKind::StrayEnd));
    }

    #[test]
    fn reports_flush_left_lines_inside_groups() {
        assert_eq!(
            kind_at("group d\nphi psi\nend\n"),
            (2, 1, ParseErrorKind::ExpectedDisjunction)
        );
    }

    #[test]
    fn reports_unterminated_groups_at_their_header() {
        assert_eq!(
            kind_at("group d\n  a b\n"),
            (1, 1, ParseErrorKind::UnterminatedGroup { name: "d".into() })
        );
    }

    #[test]
    fn reports_empty_groups_at_their_end() {
        assert_eq!(
            kind_at("group d\nend\n"),
            (2, 1, ParseErrorKind::EmptyGroup { name: "d".into() })
        );
    }

    #[test]
    fn reports_ragged_disjunctions_where_they_start() {
        let input = "group d\n  a b\n   c d e\nend\n";
        assert_eq!(
            kind_at(input),
            (
                3,
                4,
                ParseErrorKind::RaggedDisjunction {
                    name: "d".into(),
                    found: 3,
                    expected: 2,
                }
            )
        );
    }

    #[test]
    fn classifies_degenerate_groups() {
        assert!(ParseErrorKind::EmptyGroup { name: "d".into() }.is_degenerate_group());
        assert!(ParseErrorKind::RaggedDisjunction {
            name: "d".into(),
            found: 1,
            expected: 2
        }
        .is_degenerate_group());
        assert!(!ParseErrorKind::StrayEnd.is_degenerate_group());
    }

    #[test]
    fn columns_count_characters_not_bytes() {
        // Indented with U+3000, a three-byte whitespace character; the
        // stray `end` sits at character 2, byte 4.
        assert_eq!(kind_at("\u{3000}end\n"), (1, 2, ParseErrorKind::StrayEnd));
    }
}
