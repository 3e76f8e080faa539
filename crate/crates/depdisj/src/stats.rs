//! Per-group reports about what the search did.

use std::fmt;

use itertools::Itertools;

use crate::atom::GroupName;
use crate::group::DependencyGroup;
use crate::modularize::{is_prime, Modularization, SearchTrace};

/// How one group fared: its shape, the parts it became, and the search
/// effort.  [`Display`](fmt::Display) renders the report the command line
/// prints under `--stats`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupStats {
    /// Name of the input group.
    pub name: GroupName,
    /// Its number of disjunctions.
    pub disjunctions: usize,
    /// Distinct cases of the encoded group — also the width the group has
    /// once duplicate positions are collapsed, and the product of the
    /// parts' cases.
    pub cases: usize,
    /// One entry per output group.
    pub parts: Vec<PartStats>,
    /// What the search cost.
    pub trace: SearchTrace,
}

/// One output group: its name, the input disjunctions it carries, and its
/// number of cases (which is also its width).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartStats {
    pub name: GroupName,
    pub origins: Vec<usize>,
    pub cases: usize,
}

impl GroupStats {
    /// Gathers the report for `group` and what it modularized into.
    pub fn new(group: &DependencyGroup, result: &Modularization) -> GroupStats {
        GroupStats {
            name: group.name().clone(),
            disjunctions: group.disjunction_count(),
            cases: result.groups.iter().map(DependencyGroup::width).product(),
            parts: result
                .groups
                .iter()
                .map(|g| PartStats {
                    name: g.name().clone(),
                    origins: g.origins().to_vec(),
                    cases: g.width(),
                })
                .collect(),
            trace: result.trace,
        }
    }
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        ""
    } else {
        "s"
    }
}

impl fmt::Display for GroupStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} disjunction{}, {} case{} -> ",
            self.name,
            self.disjunctions,
            plural(self.disjunctions),
            self.cases,
            plural(self.cases),
        )?;
        if self.parts.len() == 1 {
            let note = if self.disjunctions == 1 {
                "single disjunction"
            } else if is_prime(self.cases) {
                "prime"
            } else {
                "no independent split"
            };
            write!(f, "kept whole ({note})")?;
        } else if self.cases == 1 {
            write!(f, "{} subgroups (deterministic)", self.parts.len())?;
        } else {
            write!(
                f,
                "{} subgroups ({} = {})",
                self.parts.len(),
                self.cases,
                self.parts.iter().map(|p| p.cases).format(" x "),
            )?;
        }
        write!(
            f,
            "; tested {} bipartition{}, {} confinement{}",
            self.trace.candidates,
            plural(self.trace.candidates),
            self.trace.confinements,
            plural(self.trace.confinements),
        )?;
        if self.parts.len() > 1 {
            for part in &self.parts {
                write!(
                    f,
                    "\n    {} = {{{}}}, {} case{}",
                    part.name,
                    part.origins.iter().format(" "),
                    part.cases,
                    plural(part.cases),
                )?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modularize::modularize_group;

    fn report(disjunctions: &[&str]) -> String {
        let group = DependencyGroup::new(
            "d".parse().unwrap(),
            disjunctions.iter().map(|d| d.parse().unwrap()).collect(),
        )
        .unwrap();
        let result = modularize_group(&group).unwrap();
        GroupStats::new(&group, &result).to_string()
    }

    #[test]
    fn reports_splits_with_their_factorisation() {
        assert_eq!(
            report(&[
                "phi phi phi phi phi' phi'",
                "psi psi' psi psi' psi psi'",
                "chi chi chi' chi' chi' chi'",
            ]),
            "d: 3 disjunctions, 6 cases -> 2 subgroups (6 = 2 x 3); \
             tested 3 bipartitions, 6 confinements\n    \
             d.1 = {2}, 2 cases\n    \
             d.2 = {1 3}, 3 cases"
        );
    }

    #[test]
    fn reports_prime_groups_kept_whole() {
        assert_eq!(
            report(&["phi phi phi'", "psi psi' psi'"]),
            "d: 2 disjunctions, 3 cases -> kept whole (prime); \
             tested 0 bipartitions, 0 confinements"
        );
    }

    #[test]
    fn reports_searches_that_found_nothing() {
        assert_eq!(
            report(&["a a c a a c", "x x y x z z"]),
            "d: 2 disjunctions, 4 cases -> kept whole (no independent split); \
             tested 1 bipartition, 2 confinements"
        );
    }

    #[test]
    fn reports_single_disjunctions() {
        assert_eq!(
            report(&["a b c d"]),
            "d: 1 disjunction, 4 cases -> kept whole (single disjunction); \
             tested 0 bipartitions, 0 confinements"
        );
    }

    #[test]
    fn reports_deterministic_groups() {
        assert_eq!(
            report(&["a a", "x x"]),
            "d: 2 disjunctions, 1 case -> 2 subgroups (deterministic); \
             tested 0 bipartitions, 0 confinements\n    \
             d.1 = {1}, 1 case\n    \
             d.2 = {2}, 1 case"
        );
    }
}
