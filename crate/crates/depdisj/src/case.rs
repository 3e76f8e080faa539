//! Case forms: sets of joint choices over alternative variables.
//!
//! [Encoding](crate::encode) a dependency group replaces each distinct
//! disjunct by an *alternative variable* and the positional synchronisation
//! by an explicit set of *cases*: rows that pick one variable per
//! disjunction.  All reasoning about independence happens on this view; the
//! atoms themselves are only consulted again when
//! [decoding](crate::encode::AltCaseForm::decode).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;

/// The set of disjunction indices a case form talks about.
pub type Scope = BTreeSet<usize>;

/// An alternative variable: "disjunction `disjunction` takes the disjunct
/// whose first occurrence is at position `representative`".  Both indices
/// count from one.
///
/// The derived order — by disjunction, then by representative — is the
/// order everything in a canonical case form is kept in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AltVar {
    pub disjunction: usize,
    pub representative: usize,
}

impl AltVar {
    pub fn new(disjunction: usize, representative: usize) -> Self {
        AltVar {
            disjunction,
            representative,
        }
    }
}

impl fmt::Display for AltVar {
    /// Prints as `a_j^i` for representative `j` of disjunction `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a_{}^{}", self.representative, self.disjunction)
    }
}

/// One case: a choice of one alternative variable per disjunction in scope,
/// sorted by disjunction.
pub type CaseRow = Vec<AltVar>;

/// A duplicate-free, canonically ordered set of cases over a scope.
///
/// Canonical means: every row is sorted by disjunction and mentions exactly
/// the disjunctions of the scope; the rows are pairwise distinct and sorted
/// lexicographically by their representatives.  [`CaseForm::canonicalize`]
/// is the only way to build one, so holding a `CaseForm` is holding the
/// invariant, and equality of forms is equality of case sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseForm {
    scope: Scope,
    rows: Vec<CaseRow>,
}

impl CaseForm {
    /// Brings raw rows into canonical shape over `scope`: sorts each row,
    /// checks it covers the scope exactly, drops duplicate rows, and sorts
    /// what is left.
    ///
    /// Fails with [`Error::EmptyCaseForm`] when `scope` or `rows` is empty,
    /// and with [`Error::ScopeMismatch`] when some row mentions a
    /// disjunction twice, skips one, or strays outside the scope.
    pub fn canonicalize(scope: Scope, rows: Vec<CaseRow>) -> Result<Self, Error> {
        if scope.is_empty() || rows.is_empty() {
            return Err(Error::EmptyCaseForm);
        }
        let expected: Vec<usize> = scope.iter().copied().collect();
        let mut canonical = Vec::with_capacity(rows.len());
        for mut row in rows {
            row.sort();
            let found: Vec<usize> = row.iter().map(|v| v.disjunction).collect();
            if found != expected {
                return Err(Error::ScopeMismatch { expected, found });
            }
            canonical.push(row);
        }
        // All rows agree on the disjunction at each position, so this is
        // exactly the lexicographic order of their representatives.
        canonical.sort();
        canonical.dedup();
        Ok(CaseForm {
            scope,
            rows: canonical,
        })
    }

    /// The disjunctions this form talks about.
    pub fn scope(&self) -> &Scope {
        &self.scope
    }

    /// The cases, in canonical order.
    pub fn rows(&self) -> &[CaseRow] {
        &self.rows
    }

    /// The number of cases, written `|c|`.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// Never true — a case form has at least one case.
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(d: usize, r: usize) -> AltVar {
        AltVar::new(d, r)
    }

    #[test]
    fn sorts_rows_and_their_variables() {
        let form = CaseForm::canonicalize(
            Scope::from([1, 2]),
            vec![
                vec![v(2, 2), v(1, 3)],
                vec![v(1, 1), v(2, 1)],
                vec![v(1, 3), v(2, 1)],
            ],
        )
        .unwrap();
        assert_eq!(
            form.rows(),
            &[
                vec![v(1, 1), v(2, 1)],
                vec![v(1, 3), v(2, 1)],
                vec![v(1, 3), v(2, 2)],
            ]
        );
    }

    #[test]
    fn drops_duplicate_rows() {
        let form = CaseForm::canonicalize(
            Scope::from([1]),
            vec![vec![v(1, 2)], vec![v(1, 1)], vec![v(1, 2)]],
        )
        .unwrap();
        assert_eq!(form.len(), 2);
    }

    #[test]
    fn any_row_order_gives_the_same_form() {
        use itertools::Itertools;

        // The six joint choices of the three-disjunction running example,
        // in canonical order; all 720 arrival orders must canonicalize to
        // the identical form.
        let rows = vec![
            vec![v(1, 1), v(2, 1), v(3, 1)],
            vec![v(1, 1), v(2, 1), v(3, 3)],
            vec![v(1, 1), v(2, 2), v(3, 1)],
            vec![v(1, 1), v(2, 2), v(3, 3)],
            vec![v(1, 5), v(2, 1), v(3, 3)],
            vec![v(1, 5), v(2, 2), v(3, 3)],
        ];
        let scope = Scope::from([1, 2, 3]);
        let reference = CaseForm::canonicalize(scope.clone(), rows.clone()).unwrap();
        assert_eq!(reference.rows(), rows.as_slice());
        for permuted in rows.into_iter().permutations(6) {
            let form = CaseForm::canonicalize(scope.clone(), permuted).unwrap();
            assert_eq!(form, reference);
        }
    }

    #[test]
    fn canonicalizing_twice_changes_nothing() {
        let scope = Scope::from([3, 7]);
        let rows = vec![vec![v(7, 1), v(3, 2)], vec![v(3, 1), v(7, 4)]];
        let once = CaseForm::canonicalize(scope.clone(), rows).unwrap();
        let twice = CaseForm::canonicalize(scope, once.rows().to_vec()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn rejects_empty_forms() {
        assert_eq!(
            CaseForm::canonicalize(Scope::new(), vec![vec![v(1, 1)]]),
            Err(Error::EmptyCaseForm)
        );
        assert_eq!(
            CaseForm::canonicalize(Scope::from([1]), vec![]),
            Err(Error::EmptyCaseForm)
        );
    }

    #[test]
    fn rejects_rows_that_miss_or_repeat_disjunctions() {
        let scope = Scope::from([1, 2]);
        // Disjunction 2 missing.
        assert!(matches!(
            CaseForm::canonicalize(scope.clone(), vec![vec![v(1, 1), v(1, 2)]]),
            Err(Error::ScopeMismatch { .. })
        ));
        // Disjunction 3 out of scope.
        assert!(matches!(
            CaseForm::canonicalize(scope, vec![vec![v(1, 1), v(3, 1)]]),
            Err(Error::ScopeMismatch { .. })
        ));
    }

    #[test]
    fn variables_print_like_indexed_alternatives() {
        assert_eq!(v(2, 5).to_string(), "a_5^2");
    }
}
