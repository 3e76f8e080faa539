//! Encoding groups as alternative–case forms, and decoding them back.
//!
//! The encoding makes a group's synchronisation explicit and compact.  Each
//! disjunction contributes one [`AltVar`] per *distinct* disjunct — equal
//! disjuncts of one disjunction collapse into a single variable, whose
//! representative is the first position the disjunct occurs at.  Each
//! position of the group contributes one case: the row of variables its
//! disjuncts collapsed into.  Duplicate rows collapse too, so the case form
//! can be strictly smaller than the group is wide.

use std::collections::{BTreeMap, HashMap};

use crate::atom::{Atom, GroupName};
use crate::case::{AltVar, CaseForm, CaseRow};
use crate::error::Error;
use crate::group::{DependencyGroup, Disjunction};

/// A dependency group with the synchronisation made explicit: compact
/// alternatives per disjunction, plus the case form coupling them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltCaseForm {
    alternatives: BTreeMap<AltVar, Atom>,
    cases: CaseForm,
}

impl AltCaseForm {
    /// Which atom each alternative variable stands for.
    pub fn alternatives(&self) -> &BTreeMap<AltVar, Atom> {
        &self.alternatives
    }

    /// The cases coupling the variables.
    pub fn cases(&self) -> &CaseForm {
        &self.cases
    }

    /// Decodes a case form — the whole of [`cases`](Self::cases) or any
    /// part of it — back into a dependency group named `name`: one
    /// disjunction per disjunction in scope, one position per case.
    ///
    /// Positions come out in a *stable* order (see [`emission_order`]): the
    /// decoded group re-encodes to the very case form it was decoded from,
    /// up to renaming of variables, so modularizing it again changes
    /// nothing.  Each output disjunction records the scope index it decodes
    /// as its origin.
    ///
    /// Fails with [`Error::UnknownAlternative`] if `cases` mentions a
    /// variable this form has no atom for.
    pub fn decode(&self, name: GroupName, cases: &CaseForm) -> Result<DependencyGroup, Error> {
        for var in cases.rows().iter().flatten() {
            if !self.alternatives.contains_key(var) {
                return Err(Error::UnknownAlternative {
                    disjunction: var.disjunction,
                    representative: var.representative,
                });
            }
        }
        let order = emission_order(cases.rows());
        let mut columns: Vec<Vec<Atom>> =
            vec![Vec::with_capacity(order.len()); cases.scope().len()];
        for &r in &order {
            for (k, var) in cases.rows()[r].iter().enumerate() {
                columns[k].push(self.alternatives[var].clone());
            }
        }
        let disjunctions = columns.into_iter().map(Disjunction).collect();
        let origins = cases.scope().iter().copied().collect();
        DependencyGroup::with_origins(name, disjunctions, origins)
    }
}

/// Encodes `group`: one variable per distinct disjunct of each disjunction,
/// one case per position, duplicates collapsed.
///
/// The scope of the resulting case form is `1..=m`; disjunctions are
/// addressed by their position in `group`, not by their origins.
pub fn encode(group: &DependencyGroup) -> AltCaseForm {
    let mut alternatives = BTreeMap::new();
    // For each disjunction, the variable standing for each of its atoms.
    let var_of: Vec<HashMap<&Atom, AltVar>> = group
        .disjunctions()
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let mut seen: HashMap<&Atom, AltVar> = HashMap::new();
            for (j, atom) in d.disjuncts().iter().enumerate() {
                seen.entry(atom).or_insert_with(|| {
                    let var = AltVar::new(i + 1, j + 1);
                    alternatives.insert(var, atom.clone());
                    var
                });
            }
            seen
        })
        .collect();
    let rows: Vec<CaseRow> = (0..group.width())
        .map(|j| {
            group
                .disjunctions()
                .iter()
                .enumerate()
                .map(|(i, d)| var_of[i][&d.disjuncts()[j]])
                .collect()
        })
        .collect();
    let scope = (1..=group.disjunction_count()).collect();
    let cases = CaseForm::canonicalize(scope, rows)
        .expect("a well-formed group always encodes to a canonical case form");
    AltCaseForm {
        alternatives,
        cases,
    }
}

/// The order in which decoded cases become positions.
///
/// Rows are emitted greedily: always the smallest remaining row, comparing
/// variables by the fresh label their atom gets in the decoded group — its
/// rank of first emission within its disjunction.  Labels of not yet
/// emitted atoms are unknown; a labelled atom precedes an unlabelled one
/// (whose label is necessarily larger), two unlabelled atoms tie, and a
/// full tie falls back to the input order.
///
/// The sequence this produces is sorted under its own labelling.  That is
/// what makes decoding stable: re-encoding the decoded group assigns
/// representatives by first position, which reproduces exactly these
/// labels, so the re-encoded rows are already in canonical order and a
/// second decode walks them the same way.
fn emission_order(rows: &[CaseRow]) -> Vec<usize> {
    use std::cmp::Ordering;

    let mut labels: HashMap<AltVar, usize> = HashMap::new();
    let mut emitted: HashMap<usize, usize> = HashMap::new();
    let mut remaining: Vec<usize> = (0..rows.len()).collect();
    let mut order = Vec::with_capacity(rows.len());
    while !remaining.is_empty() {
        let mut best = 0;
        for cand in 1..remaining.len() {
            let mut verdict = Ordering::Equal;
            for (a, b) in rows[remaining[cand]].iter().zip(&rows[remaining[best]]) {
                if a == b {
                    continue;
                }
                verdict = match (labels.get(a), labels.get(b)) {
                    (Some(x), Some(y)) => x.cmp(y),
                    (Some(_), None) => Ordering::Less,
                    (None, Some(_)) => Ordering::Greater,
                    (None, None) => continue,
                };
                break;
            }
            if verdict == Ordering::Less {
                best = cand;
            }
        }
        let row = remaining.remove(best);
        for var in &rows[row] {
            labels.entry(*var).or_insert_with(|| {
                let next = emitted.entry(var.disjunction).or_insert(0);
                *next += 1;
                *next
            });
        }
        order.push(row);
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modularize::{modularize_case, modularize_group};

    fn grp(name: &str, disjunctions: &[&str]) -> DependencyGroup {
        DependencyGroup::new(
            name.parse().unwrap(),
            disjunctions.iter().map(|d| d.parse().unwrap()).collect(),
        )
        .unwrap()
    }

    fn v(d: usize, r: usize) -> AltVar {
        AltVar::new(d, r)
    }

    #[test]
    fn encodes_with_first_occurrence_representatives() {
        let form = encode(&grp("d", &["phi phi phi'", "psi psi' psi'"]));
        let vars: Vec<(AltVar, &str)> = form
            .alternatives()
            .iter()
            .map(|(var, atom)| (*var, atom.as_str()))
            .collect();
        assert_eq!(
            vars,
            vec![
                (v(1, 1), "phi"),
                (v(1, 3), "phi'"),
                (v(2, 1), "psi"),
                (v(2, 2), "psi'"),
            ]
        );
        // The repeated phi contributes one variable, so the third case
        // pairs the variable at representative 3 with psi'.
        assert_eq!(
            form.cases().rows(),
            &[
                vec![v(1, 1), v(2, 1)],
                vec![v(1, 1), v(2, 2)],
                vec![v(1, 3), v(2, 2)],
            ]
        );
    }

    #[test]
    fn collapses_duplicate_positions() {
        let form = encode(&grp("d", &["a a c a a c", "x x y x z z"]));
        // Positions 1, 2 and 4 all encode as (a_1^1, a_1^2).
        assert_eq!(
            form.cases().rows(),
            &[
                vec![v(1, 1), v(2, 1)],
                vec![v(1, 1), v(2, 5)],
                vec![v(1, 3), v(2, 3)],
                vec![v(1, 3), v(2, 5)],
            ]
        );
    }

    #[test]
    fn decode_emits_positions_in_stable_order() {
        let form = encode(&grp("d", &["a a c a a c", "x x y x z z"]));
        let decoded = form.decode("d".parse().unwrap(), form.cases()).unwrap();
        // Emitting rows in plain canonical order would put the (c, y) case
        // before (c, z), but z got its label first — re-encoding such a
        // group would reorder its cases.  The stable order swaps the two.
        let cols: Vec<String> = decoded
            .disjunctions()
            .iter()
            .map(|d| {
                d.disjuncts()
                    .iter()
                    .map(Atom::as_str)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        assert_eq!(cols, ["a a c c", "x z z y"]);
        assert_eq!(decoded.origins(), &[1, 2]);
    }

    #[test]
    fn decoding_then_encoding_is_a_renaming() {
        let form = encode(&grp("d", &["a a c a a c", "x x y x z z"]));
        let decoded = form.decode("d".parse().unwrap(), form.cases()).unwrap();
        let again = encode(&decoded);
        // Same case structure; variables renamed to first positions of the
        // decoded group.
        assert_eq!(again.cases().len(), form.cases().len());
        let (parts, _) = modularize_case(again.cases());
        assert_eq!(parts.len(), 1, "the form must stay unsplittable");
        let twice = again.decode("d".parse().unwrap(), again.cases()).unwrap();
        assert_eq!(twice, decoded);
    }

    #[test]
    fn decoded_groups_modularize_to_themselves() {
        let form = encode(&grp("d", &["a a c a a c", "x x y x z z"]));
        let decoded = form.decode("d".parse().unwrap(), form.cases()).unwrap();
        let result = modularize_group(&decoded).unwrap();
        assert_eq!(result.groups, vec![decoded]);
    }

    #[test]
    fn decode_rejects_foreign_variables() {
        let form = encode(&grp("d", &["a b", "x y"]));
        let foreign = CaseForm::canonicalize([1].into(), vec![vec![v(1, 7)]]).unwrap();
        assert_eq!(
            form.decode("d".parse().unwrap(), &foreign),
            Err(Error::UnknownAlternative {
                disjunction: 1,
                representative: 7,
            })
        );
    }

    #[test]
    fn deterministic_groups_encode_to_a_single_case() {
        let form = encode(&grp("d", &["a a", "x x"]));
        assert_eq!(form.cases().len(), 1);
        let decoded = form.decode("d".parse().unwrap(), form.cases()).unwrap();
        assert_eq!(decoded.width(), 1);
    }
}
