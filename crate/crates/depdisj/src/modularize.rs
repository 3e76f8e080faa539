//! The independence search: factoring case forms and splitting groups.
//!
//! The key fact the search runs on: for disjoint scopes, the free
//! combination of two case forms has exactly `|left| * |right|` cases, and
//! conversely a form whose confinements to the two sides of a bipartition
//! multiply back to its own cardinality *is* their free combination.  So a
//! single multiplication decides independence — no case sets need to be
//! compared, and a form with a prime number of cases can be returned whole
//! without looking at even one bipartition.

use itertools::Itertools;

use crate::case::{CaseForm, Scope};
use crate::encode::encode;
use crate::error::Error;
use crate::group::DependencyGroup;

/// Default bound on the number of disjunctions [`modularize_group`]
/// accepts.  The bipartition search visits up to `2^(m-1) - 1` candidates
/// per level, so `m` is the quantity that needs a guard.
pub const DEFAULT_MAX_GROUP_SIZE: usize = 24;

/// Projects `form` onto the disjunctions in `keep`: every case restricted
/// to `keep`, duplicates dropped.
///
/// Fails with [`Error::ScopeMismatch`] when `keep` is not a subset of the
/// form's scope, and with [`Error::EmptyCaseForm`] when it is empty.
pub fn confine(form: &CaseForm, keep: &Scope) -> Result<CaseForm, Error> {
    if !keep.is_subset(form.scope()) {
        return Err(Error::ScopeMismatch {
            expected: form.scope().iter().copied().collect(),
            found: keep.iter().copied().collect(),
        });
    }
    let rows = form
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .filter(|var| keep.contains(&var.disjunction))
                .copied()
                .collect()
        })
        .collect();
    CaseForm::canonicalize(keep.clone(), rows)
}

/// The free combination of two case forms over disjoint scopes: every way
/// of extending a case of `lhs` by a case of `rhs`.
///
/// Its cardinality is always exactly `|lhs| * |rhs|`.  Fails with
/// [`Error::OverlappingScopes`] when the scopes share a disjunction.
pub fn free_combine(lhs: &CaseForm, rhs: &CaseForm) -> Result<CaseForm, Error> {
    let shared: Vec<usize> = lhs.scope().intersection(rhs.scope()).copied().collect();
    if !shared.is_empty() {
        return Err(Error::OverlappingScopes { shared });
    }
    let scope: Scope = lhs.scope().union(rhs.scope()).copied().collect();
    let rows = lhs
        .rows()
        .iter()
        .cartesian_product(rhs.rows())
        .map(|(a, b)| a.iter().chain(b).copied().collect())
        .collect();
    CaseForm::canonicalize(scope, rows)
}

pub(crate) fn check_partition(form: &CaseForm, left: &Scope, right: &Scope) -> Result<(), Error> {
    let shared: Vec<usize> = left.intersection(right).copied().collect();
    if !shared.is_empty() {
        return Err(Error::OverlappingScopes { shared });
    }
    let union: Scope = left.union(right).copied().collect();
    if union != *form.scope() {
        return Err(Error::ScopeMismatch {
            expected: form.scope().iter().copied().collect(),
            found: union.into_iter().collect(),
        });
    }
    Ok(())
}

/// Tests one bipartition of the form's scope: confines `form` to both
/// sides and accepts when the cardinalities multiply back to `|form|`.
/// By the fact above, this arithmetic check succeeds if and only if `form`
/// is the free combination of the two confinements, which are then
/// returned.
///
/// `left` and `right` must partition the scope.
pub fn independent_split(
    form: &CaseForm,
    left: &Scope,
    right: &Scope,
) -> Result<Option<(CaseForm, CaseForm)>, Error> {
    check_partition(form, left, right)?;
    let l = confine(form, left)?;
    let r = confine(form, right)?;
    Ok((l.len() * r.len() == form.len()).then_some((l, r)))
}

/// All unordered bipartitions of `scope`, in search order: the side holding
/// the smallest index grows from a singleton upward, lexicographically
/// within each size.  A scope of `m` indices yields `2^(m-1) - 1`
/// bipartitions; scopes with fewer than two indices yield none.
pub fn bipartitions(scope: &Scope) -> impl Iterator<Item = (Scope, Scope)> {
    let mut indices = scope.iter().copied();
    let first = indices.next();
    let rest: Vec<usize> = indices.collect();
    let scope = scope.clone();
    (0..rest.len()).flat_map(move |extra| {
        let scope = scope.clone();
        let first = first.expect("a scope with bipartitions is nonempty");
        rest.clone()
            .into_iter()
            .combinations(extra)
            .map(move |tail| {
                let left: Scope = std::iter::once(first).chain(tail).collect();
                let right: Scope = scope.difference(&left).copied().collect();
                (left, right)
            })
    })
}

/// Counters for how much work a search did.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchTrace {
    /// Bipartitions whose confinements were compared.
    pub candidates: usize,
    /// Confinements computed while testing them.
    pub confinements: usize,
}

/// Recursively factors `form` into independent parts.
///
/// Bipartitions are tried in [`bipartitions`] order and the first one that
/// splits is taken, recursing on both sides; a form no bipartition splits
/// is returned whole.  Three shortcuts skip the search: a single
/// disjunction has nothing to split; a single case splits into singletons
/// outright; and a prime number of cases cannot be a product of smaller
/// cardinalities at all.
///
/// The parts come back sorted by scope size, then by smallest scope index.
/// Their free combination is the input form, and no part can be split any
/// further.
pub fn modularize_case(form: &CaseForm) -> (Vec<CaseForm>, SearchTrace) {
    let mut trace = SearchTrace::default();
    let mut parts = Vec::new();
    split_into(form, &mut parts, &mut trace);
    parts.sort_by_key(|part| (part.scope().len(), part.scope().first().copied()));
    (parts, trace)
}

fn split_into(form: &CaseForm, parts: &mut Vec<CaseForm>, trace: &mut SearchTrace) {
    if form.scope().len() == 1 {
        parts.push(form.clone());
        return;
    }
    if form.len() == 1 {
        // A single case constrains nothing across disjunctions.
        for var in &form.rows()[0] {
            let singleton =
                CaseForm::canonicalize(Scope::from([var.disjunction]), vec![vec![*var]])
                    .expect("a one-variable row is already canonical");
            parts.push(singleton);
        }
        return;
    }
    if is_prime(form.len()) {
        parts.push(form.clone());
        return;
    }
    for (left, right) in bipartitions(form.scope()) {
        trace.candidates += 1;
        trace.confinements += 2;
        let split = independent_split(form, &left, &right)
            .expect("bipartitions of the form's own scope partition it");
        if let Some((l, r)) = split {
            split_into(&l, parts, trace);
            split_into(&r, parts, trace);
            return;
        }
    }
    parts.push(form.clone());
}

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A modularized dependency group: the subgroups, plus the search trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modularization {
    /// Independent subgroups that are jointly equivalent to the input,
    /// smallest scope first.  A group that did not split is the sole entry
    /// and keeps its name; the parts of a split group `d` are named `d.1`,
    /// `d.2`, and so on.
    pub groups: Vec<DependencyGroup>,
    /// What the search cost.
    pub trace: SearchTrace,
}

/// Modularizes `group` under the default size bound,
/// [`DEFAULT_MAX_GROUP_SIZE`].
pub fn modularize_group(group: &DependencyGroup) -> Result<Modularization, Error> {
    modularize_group_bounded(group, DEFAULT_MAX_GROUP_SIZE)
}

/// Modularizes `group`: encodes it, factors the case form, and decodes each
/// part.
///
/// The subgroups jointly admit exactly the solutions of `group` (the
/// [oracle](crate::oracle) can confirm this), and each records which input
/// disjunctions it carries in its
/// [`origins`](DependencyGroup::origins) — chains of splits keep pointing
/// at the outermost input.  Groups with more than `max_size` disjunctions
/// are refused with [`Error::GroupTooLarge`] before any work is done.
pub fn modularize_group_bounded(
    group: &DependencyGroup,
    max_size: usize,
) -> Result<Modularization, Error> {
    let m = group.disjunction_count();
    if m > max_size {
        return Err(Error::GroupTooLarge {
            name: group.name().to_string(),
            disjunctions: m,
            limit: max_size,
        });
    }
    let form = encode(group);
    let (parts, trace) = modularize_case(form.cases());
    let keep_name = parts.len() == 1;
    let mut groups = Vec::with_capacity(parts.len());
    for (k, part) in parts.iter().enumerate() {
        let name = if keep_name {
            group.name().clone()
        } else {
            group.name().part(k + 1)
        };
        let decoded = form
            .decode(name, part)
            .expect("parts mention only the form's own alternatives");
        groups.push(decoded.map_origins(group.origins()));
    }
    Ok(Modularization { groups, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::case::AltVar;

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

    /// Three disjunctions over six positions; disjunction 2 varies freely
    /// against the coupled pair 1/3.
    fn entangled() -> DependencyGroup {
        grp(
            "d",
            &[
                "phi phi phi phi phi' phi'",
                "psi psi' psi psi' psi psi'",
                "chi chi chi' chi' chi' chi'",
            ],
        )
    }

    #[test]
    fn confines_to_subscopes() {
        let form = encode(&entangled());
        assert_eq!(form.cases().len(), 6);
        // Counted by hand from the six cases: projecting onto {1, 2} glues
        // nothing, {3} and {2} collapse to their alternatives, {1, 3} keeps
        // three of the four combinations.
        let count = |keep: &[usize]| {
            confine(form.cases(), &keep.iter().copied().collect())
                .unwrap()
                .len()
        };
        assert_eq!(count(&[1, 2]), 4);
        assert_eq!(count(&[3]), 2);
        assert_eq!(count(&[2]), 2);
        assert_eq!(count(&[1, 3]), 3);
    }

    #[test]
    fn confine_checks_its_scope() {
        let form = encode(&grp("d", &["a b", "x y"]));
        assert!(matches!(
            confine(form.cases(), &[1, 5].into()),
            Err(Error::ScopeMismatch { .. })
        ));
        assert_eq!(
            confine(form.cases(), &Scope::new()),
            Err(Error::EmptyCaseForm)
        );
    }

    #[test]
    fn free_combination_multiplies_cardinalities() {
        let form = encode(&entangled());
        let pair = confine(form.cases(), &[1, 3].into()).unwrap();
        let free = confine(form.cases(), &[2].into()).unwrap();
        let combined = free_combine(&pair, &free).unwrap();
        assert_eq!(combined.len(), pair.len() * free.len());
        assert_eq!(combined, *form.cases());
    }

    #[test]
    fn free_combination_requires_disjoint_scopes() {
        let form = encode(&grp("d", &["a b", "x y"]));
        assert_eq!(
            free_combine(form.cases(), form.cases()),
            Err(Error::OverlappingScopes { shared: vec![1, 2] })
        );
    }

    #[test]
    fn cardinality_decides_the_split() {
        let form = encode(&entangled());
        // 4 * 2 = 8 cases, but the form has 6: dependent.
        assert_eq!(
            independent_split(form.cases(), &[1, 2].into(), &[3].into()).unwrap(),
            None
        );
        // 3 * 2 = 6: independent, and the parts are the confinements.
        let (l, r) = independent_split(form.cases(), &[1, 3].into(), &[2].into())
            .unwrap()
            .unwrap();
        assert_eq!(
            l.rows(),
            &[
                vec![v(1, 1), v(3, 1)],
                vec![v(1, 1), v(3, 3)],
                vec![v(1, 5), v(3, 3)],
            ]
        );
        assert_eq!(r.rows(), &[vec![v(2, 1)], vec![v(2, 2)]]);
    }

    #[test]
    fn independent_split_requires_a_partition() {
        let form = encode(&entangled());
        assert!(matches!(
            independent_split(form.cases(), &[1].into(), &[2].into()),
            Err(Error::ScopeMismatch { .. })
        ));
        assert!(matches!(
            independent_split(form.cases(), &[1, 2].into(), &[2, 3].into()),
            Err(Error::OverlappingScopes { .. })
        ));
    }

    #[test]
    fn bipartitions_grow_the_side_of_the_smallest_index() {
        let listed: Vec<(Vec<usize>, Vec<usize>)> = bipartitions(&[1, 2, 3].into())
            .map(|(l, r)| (l.into_iter().collect(), r.into_iter().collect()))
            .collect();
        assert_eq!(
            listed,
            vec![
                (vec![1], vec![2, 3]),
                (vec![1, 2], vec![3]),
                (vec![1, 3], vec![2]),
            ]
        );
    }

    #[test]
    fn bipartition_counts_are_exponential() {
        for m in 1..=6 {
            let scope: Scope = (1..=m).collect();
            let expected = (1usize << (m - 1)) - 1;
            assert_eq!(bipartitions(&scope).count(), expected);
        }
    }

    #[test]
    fn recognises_primes() {
        let primes = [2, 3, 5, 7, 11, 13, 97];
        let composites = [0, 1, 4, 6, 9, 15, 91, 100];
        assert!(primes.into_iter().all(is_prime));
        assert!(!composites.into_iter().any(is_prime));
    }

    #[test]
    fn factors_the_entangled_form() {
        let form = encode(&entangled());
        let (parts, trace) = modularize_case(form.cases());
        let scopes: Vec<Vec<usize>> = parts
            .iter()
            .map(|p| p.scope().iter().copied().collect())
            .collect();
        // Smallest scope first.
        assert_eq!(scopes, vec![vec![2], vec![1, 3]]);
        // {1}|{2,3} fails (2 * 4), {1,2}|{3} fails (4 * 2), {1,3}|{2}
        // succeeds; both parts then stop without further search — one is a
        // singleton, the other has a prime number of cases.
        assert_eq!(
            trace,
            SearchTrace {
                candidates: 3,
                confinements: 6,
            }
        );
    }

    #[test]
    fn prime_cardinality_skips_the_search_entirely() {
        let form = encode(&grp("d", &["phi phi phi'", "psi psi' psi'"]));
        assert_eq!(form.cases().len(), 3);
        let (parts, trace) = modularize_case(form.cases());
        assert_eq!(parts.len(), 1);
        assert_eq!(trace, SearchTrace::default());
    }

    #[test]
    fn a_single_case_splits_into_singletons() {
        let form = encode(&grp("d", &["a a", "x x", "u u"]));
        let (parts, trace) = modularize_case(form.cases());
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| p.len() == 1 && p.scope().len() == 1));
        assert_eq!(trace, SearchTrace::default());
    }

    #[test]
    fn recombining_the_parts_restores_the_form() {
        let form = encode(&grp(
            "d",
            &["a a b b a a b b", "x y x y x y x y", "s s t t u u v v"],
        ));
        let (parts, _) = modularize_case(form.cases());
        let recombined = parts.iter().skip(1).fold(parts[0].clone(), |acc, part| {
            free_combine(&acc, part).unwrap()
        });
        assert_eq!(recombined, *form.cases());
    }

    #[test]
    fn splits_groups_and_names_the_parts() {
        let result = modularize_group(&entangled()).unwrap();
        let names: Vec<String> = result.groups.iter().map(|g| g.name().to_string()).collect();
        assert_eq!(names, ["d.1", "d.2"]);
        assert_eq!(result.groups[0].origins(), &[2]);
        assert_eq!(result.groups[1].origins(), &[1, 3]);
    }

    #[test]
    fn unsplit_groups_keep_their_name() {
        let group = grp("d", &["phi phi phi'", "psi psi' psi'"]);
        let result = modularize_group(&group).unwrap();
        assert_eq!(result.groups, vec![group]);
    }

    #[test]
    fn refuses_oversized_groups() {
        let group = entangled();
        assert_eq!(
            modularize_group_bounded(&group, 2),
            Err(Error::GroupTooLarge {
                name: "d".into(),
                disjunctions: 3,
                limit: 2,
            })
        );
    }
}
