//! Brute-force reference semantics.
//!
//! Everything here enumerates solutions directly from the definitions, with
//! no cleverness, so the results can be trusted when judging the optimiser:
//! splitting a group must not change what it means.  The enumeration is
//! exponential in the number of groups combined — that is the price of
//! being obviously correct, and the reason the fast path exists.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::atom::Atom;
use crate::case::{CaseForm, CaseRow, Scope};
use crate::error::Error;
use crate::group::DependencyGroup;
use crate::modularize::{check_partition, confine};

/// One joint choice: the atom each disjunction ends up with, keyed by the
/// disjunction's origin index.
pub type Solution = BTreeMap<usize, Atom>;

/// Every distinct solution of `group`: one per position, with positions
/// that pick the same atoms everywhere collapsed.
pub fn solutions(group: &DependencyGroup) -> BTreeSet<Solution> {
    (0..group.width())
        .map(|j| {
            group
                .origins()
                .iter()
                .zip(group.disjunctions())
                .map(|(&origin, d)| (origin, d.disjuncts()[j].clone()))
                .collect()
        })
        .collect()
}

/// The joint solutions of a family of groups over pairwise disjoint
/// origins: every way of choosing one solution from each group and merging
/// them.  An empty family has exactly the empty solution.
///
/// Fails with [`Error::OverlappingScopes`] when two groups claim the same
/// origin — their solutions would not be independent choices.
pub fn combined_solutions(groups: &[DependencyGroup]) -> Result<BTreeSet<Solution>, Error> {
    let mut seen = BTreeSet::new();
    let shared: Vec<usize> = groups
        .iter()
        .flat_map(|g| g.origins())
        .filter(|&&o| !seen.insert(o))
        .copied()
        .collect();
    if !shared.is_empty() {
        return Err(Error::OverlappingScopes { shared });
    }
    if groups.is_empty() {
        return Ok(BTreeSet::from([Solution::new()]));
    }
    Ok(groups
        .iter()
        .map(|g| solutions(g).into_iter().collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(|choice| choice.into_iter().flatten().collect())
        .collect())
}

/// Decides independence of a case form across a bipartition by actually
/// materialising the free combination: confine to both sides, recombine
/// every pair of cases, and compare the resulting case set with the form's
/// own.
///
/// This is the semantic ground truth that the fast cardinality check in
/// [`independent_split`](crate::modularize::independent_split) is measured
/// against.  `left` and `right` must partition the form's scope.
pub fn independent_by_free_combination(
    form: &CaseForm,
    left: &Scope,
    right: &Scope,
) -> Result<bool, Error> {
    check_partition(form, left, right)?;
    let l = confine(form, left)?;
    let r = confine(form, right)?;
    let mut combined: BTreeSet<CaseRow> = BTreeSet::new();
    for a in l.rows() {
        for b in r.rows() {
            let mut row: CaseRow = a.iter().chain(b).copied().collect();
            row.sort();
            combined.insert(row);
        }
    }
    let own: BTreeSet<CaseRow> = form.rows().iter().cloned().collect();
    Ok(combined == own)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encode::encode;
    use crate::modularize::modularize_group;

    fn grp(name: &str, disjunctions: &[&str]) -> DependencyGroup {
        DependencyGroup::new(
            name.parse().unwrap(),
            disjunctions.iter().map(|d| d.parse().unwrap()).collect(),
        )
        .unwrap()
    }

    fn atoms(s: &str) -> Vec<Atom> {
        s.split_whitespace().map(|a| a.parse().unwrap()).collect()
    }

    #[test]
    fn enumerates_one_solution_per_distinct_position() {
        let group = grp("d", &["phi phi phi'", "psi psi psi'"]);
        let sols = solutions(&group);
        // Positions 1 and 2 coincide.
        assert_eq!(sols.len(), 2);
        let expected: BTreeSet<Solution> = [[(1, "phi"), (2, "psi")], [(1, "phi'"), (2, "psi'")]]
            .into_iter()
            .map(|pairs| {
                pairs
                    .into_iter()
                    .map(|(i, a)| (i, a.parse().unwrap()))
                    .collect()
            })
            .collect();
        assert_eq!(sols, expected);
    }

    #[test]
    fn combines_solutions_over_disjoint_origins() {
        let split =
            modularize_group(&grp("d", &["phi phi phi' phi'", "psi psi' psi psi'"])).unwrap();
        let combined = combined_solutions(&split.groups).unwrap();
        assert_eq!(combined.len(), 4);
        let phis: BTreeSet<&Atom> = combined.iter().map(|s| &s[&1]).collect();
        assert_eq!(phis, atoms("phi phi'").iter().collect());
    }

    #[test]
    fn rejects_overlapping_origins() {
        let g = grp("d", &["a b"]);
        assert_eq!(
            combined_solutions(&[g.clone(), g]),
            Err(Error::OverlappingScopes { shared: vec![1] })
        );
    }

    #[test]
    fn no_groups_admit_exactly_the_empty_solution() {
        assert_eq!(
            combined_solutions(&[]).unwrap(),
            BTreeSet::from([Solution::new()])
        );
    }

    #[test]
    fn materialised_check_agrees_on_known_splits() {
        let form = encode(&grp(
            "d",
            &[
                "phi phi phi phi phi' phi'",
                "psi psi' psi psi' psi psi'",
                "chi chi chi' chi' chi' chi'",
            ],
        ));
        let yes = independent_by_free_combination(form.cases(), &[1, 3].into(), &[2].into());
        let no = independent_by_free_combination(form.cases(), &[1].into(), &[2, 3].into());
        assert!(yes.unwrap());
        assert!(!no.unwrap());
    }
}
