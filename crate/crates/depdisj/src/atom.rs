//! Atoms and group names.
//!
//! A disjunct is an *atom*: an opaque token.  The optimiser compares atoms
//! for equality and never looks inside, so anything — feature structures,
//! formulas, plain words — can stand behind one.  Group names follow the
//! same lexical rules, so every valid atom is also a valid name.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

fn check(token: &str) -> Result<(), Error> {
    let reason = if token.is_empty() {
        "must not be empty"
    } else if token.chars().any(char::is_whitespace) {
        "must not contain whitespace"
    } else if token.contains('#') {
        "must not contain '#'"
    } else {
        return Ok(());
    };
    Err(Error::InvalidToken {
        token: token.to_owned(),
        reason,
    })
}

/// An opaque disjunct.  Two atoms are interchangeable exactly when their
/// tokens are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(String);

impl Atom {
    /// Wraps a token, rejecting ones that are empty or contain whitespace
    /// or `#` — the characters the document format reserves.
    pub fn new(token: impl Into<String>) -> Result<Self, Error> {
        let token = token.into();
        check(&token)?;
        Ok(Atom(token))
    }

    /// The token itself.
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Atom::new(s)
    }
}

/// The name of a dependency group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupName(String);

impl GroupName {
    /// Wraps a name; the lexical rules are those of [`Atom::new`].
    pub fn new(name: impl Into<String>) -> Result<Self, Error> {
        let name = name.into();
        check(&name)?;
        Ok(GroupName(name))
    }

    /// The name itself.
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The name of the `k`-th subgroup split off this group, counting from
    /// one: splitting `d` yields `d.1`, `d.2`, and so on.
    pub fn part(&self, k: usize) -> GroupName {
        GroupName(format!("{}.{}", self.0, k))
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for GroupName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        GroupName::new(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_ordinary_tokens() {
        for token in ["phi", "phi'", "x_1", "ψ", "a.b", "end", "group"] {
            assert_eq!(Atom::new(token).unwrap().as_str(), token);
            assert_eq!(GroupName::new(token).unwrap().as_str(), token);
        }
    }

    #[test]
    fn rejects_reserved_characters() {
        for token in ["", "a b", "a\tb", "a\nb", "#", "a#b", " "] {
            assert!(matches!(Atom::new(token), Err(Error::InvalidToken { .. })));
        }
    }

    #[test]
    fn subgroup_names_count_from_one() {
        let d: GroupName = "d".parse().unwrap();
        assert_eq!(d.part(1).as_str(), "d.1");
        assert_eq!(d.part(2).as_str(), "d.2");
        // Splitting a subgroup again just appends another index.
        assert_eq!(d.part(2).part(1).as_str(), "d.2.1");
    }
}
