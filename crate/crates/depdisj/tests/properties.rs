//! Randomised invariants of the encoding, the search, and the document
//! format.

use proptest::prelude::*;

use depdisj::{
    bipartitions, encode, free_combine, independent_split, modularize_case, modularize_group,
    oracle, Atom, CaseForm, DependencyGroup, Disjunction, Document, Scope,
};

fn group_with(name: String, columns: Vec<Vec<usize>>) -> DependencyGroup {
    let disjunctions = columns
        .into_iter()
        .enumerate()
        .map(|(i, column)| {
            Disjunction(
                column
                    .into_iter()
                    .map(|k| Atom::new(format!("d{i}a{k}")).unwrap())
                    .collect(),
            )
        })
        .collect();
    DependencyGroup::new(name.parse().unwrap(), disjunctions).unwrap()
}

/// Up to four disjunctions of width up to eight, three atoms each.
fn arb_group() -> impl Strategy<Value = DependencyGroup> {
    (1usize..=4, 1usize..=8).prop_flat_map(|(m, n)| {
        proptest::collection::vec(proptest::collection::vec(0usize..3, n), m)
            .prop_map(|columns| group_with("g".to_owned(), columns))
    })
}

fn arb_form() -> impl Strategy<Value = CaseForm> {
    arb_group().prop_map(|g| encode(&g).cases().clone())
}

/// Every partition reachable by repeatedly taking *any* passing
/// bipartition — not just the first in search order — until no side splits
/// any further.
fn all_outcomes(form: &CaseForm) -> std::collections::BTreeSet<Vec<Vec<usize>>> {
    let whole: Vec<Vec<usize>> = vec![form.scope().iter().copied().collect()];
    if form.scope().len() == 1 {
        return [whole].into();
    }
    let mut outcomes = std::collections::BTreeSet::new();
    for (left, right) in bipartitions(form.scope()) {
        if let Some((l, r)) = independent_split(form, &left, &right).unwrap() {
            let rights = all_outcomes(&r);
            for lo in all_outcomes(&l) {
                for ro in &rights {
                    let mut merged: Vec<Vec<usize>> =
                        lo.iter().cloned().chain(ro.iter().cloned()).collect();
                    merged.sort();
                    outcomes.insert(merged);
                }
            }
        }
    }
    if outcomes.is_empty() {
        outcomes.insert(whole);
    }
    outcomes
}

proptest! {
    #[test]
    fn canonical_forms_ignore_row_and_variable_order(
        (form, shuffled) in arb_form().prop_flat_map(|form| {
            let rows = form.rows().to_vec();
            (Just(form), Just(rows).prop_shuffle())
        })
    ) {
        let reversed = shuffled
            .into_iter()
            .map(|mut row| { row.reverse(); row })
            .collect();
        let rebuilt = CaseForm::canonicalize(form.scope().clone(), reversed).unwrap();
        prop_assert_eq!(rebuilt, form);
    }

    #[test]
    fn encoding_is_compact_with_first_occurrence_representatives(g in arb_group()) {
        let form = encode(&g);
        let scope: Vec<usize> = form.cases().scope().iter().copied().collect();
        prop_assert_eq!(scope, (1..=g.disjunction_count()).collect::<Vec<_>>());
        prop_assert!(form.cases().len() <= g.width());
        for (var, atom) in form.alternatives() {
            let disjuncts = g.disjunctions()[var.disjunction - 1].disjuncts();
            let first = disjuncts.iter().position(|a| a == atom).unwrap();
            prop_assert_eq!(var.representative, first + 1);
        }
    }

    #[test]
    fn decoding_the_whole_form_preserves_solutions(g in arb_group()) {
        let form = encode(&g);
        let decoded = form.decode(g.name().clone(), form.cases()).unwrap();
        prop_assert_eq!(oracle::solutions(&decoded), oracle::solutions(&g));
    }

    #[test]
    fn confinement_projects_and_composes(
        (g, keep_bits, sub_bits) in arb_group().prop_flat_map(|g| {
            let m = g.disjunction_count();
            (
                Just(g),
                proptest::collection::vec(any::<bool>(), m),
                proptest::collection::vec(any::<bool>(), m),
            )
        })
    ) {
        let form = encode(&g);
        let full: Scope = form.cases().scope().clone();
        prop_assert_eq!(&depdisj::confine(form.cases(), &full).unwrap(), form.cases());

        let outer: Scope = full.iter().zip(&keep_bits).filter(|(_, &b)| b).map(|(&i, _)| i).collect();
        prop_assume!(!outer.is_empty());
        let confined = depdisj::confine(form.cases(), &outer).unwrap();
        prop_assert!(confined.len() <= form.cases().len());

        let inner: Scope = outer.iter().zip(&sub_bits).filter(|(_, &b)| b).map(|(&i, _)| i).collect();
        prop_assume!(!inner.is_empty());
        prop_assert_eq!(
            depdisj::confine(&confined, &inner).unwrap(),
            depdisj::confine(form.cases(), &inner).unwrap()
        );
    }

    #[test]
    fn parts_partition_factor_and_recombine(form in arb_form()) {
        let (parts, _) = modularize_case(&form);

        let mut covered = Scope::new();
        for part in &parts {
            for &i in part.scope() {
                prop_assert!(covered.insert(i), "disjunction {} in two parts", i);
            }
        }
        prop_assert_eq!(&covered, form.scope());

        let product: usize = parts.iter().map(CaseForm::len).product();
        prop_assert_eq!(product, form.len());

        let keys: Vec<(usize, usize)> = parts
            .iter()
            .map(|p| (p.scope().len(), *p.scope().first().unwrap()))
            .collect();
        prop_assert!(keys.windows(2).all(|w| w[0] <= w[1]), "parts out of order: {keys:?}");

        let recombined = parts[1..]
            .iter()
            .fold(parts[0].clone(), |acc, part| free_combine(&acc, part).unwrap());
        prop_assert_eq!(recombined, form);
    }

    #[test]
    fn parts_are_fixed_points_of_the_search(form in arb_form()) {
        let (parts, _) = modularize_case(&form);
        for part in &parts {
            let (again, _) = modularize_case(part);
            prop_assert_eq!(again.as_slice(), std::slice::from_ref(part));
        }
    }

    #[test]
    fn every_search_order_reaches_the_same_finest_split(form in arb_form()) {
        let outcomes = all_outcomes(&form);
        prop_assert_eq!(outcomes.len(), 1, "order-dependent outcomes: {:?}", outcomes);
        let finest = outcomes.into_iter().next().unwrap();

        // The search may stop early on a prime case count; that only ever
        // keeps finest blocks together, never cuts across one.
        let (parts, _) = modularize_case(&form);
        for block in &finest {
            let homes: Vec<&CaseForm> = parts
                .iter()
                .filter(|p| block.iter().any(|i| p.scope().contains(i)))
                .collect();
            prop_assert_eq!(homes.len(), 1, "block {:?} straddles parts", block);
            prop_assert!(block.iter().all(|i| homes[0].scope().contains(i)));
        }

        // Only a single-alternative disjunction can make the early stop
        // coarser: it splits off degenerately, as one case times the rest.
        let degenerate = form
            .scope()
            .iter()
            .any(|&i| depdisj::confine(&form, &Scope::from([i])).unwrap().len() == 1);
        if !degenerate {
            let mut scopes: Vec<Vec<usize>> = parts
                .iter()
                .map(|p| p.scope().iter().copied().collect())
                .collect();
            scopes.sort();
            prop_assert_eq!(scopes, finest);
        }
    }

    #[test]
    fn subgroups_carry_names_and_origins(g in arb_group()) {
        let result = modularize_group(&g).unwrap();
        if result.groups.len() == 1 {
            prop_assert_eq!(result.groups[0].name(), g.name());
        } else {
            for (k, sub) in result.groups.iter().enumerate() {
                prop_assert_eq!(sub.name().as_str(), format!("g.{}", k + 1));
            }
        }
        let mut origins: Vec<usize> = result
            .groups
            .iter()
            .flat_map(|sub| sub.origins().iter().copied())
            .collect();
        origins.sort();
        prop_assert_eq!(origins, (1..=g.disjunction_count()).collect::<Vec<_>>());
        prop_assert_eq!(
            oracle::combined_solutions(&result.groups).unwrap(),
            oracle::solutions(&g)
        );
    }

    #[test]
    fn bipartitions_enumerate_every_unordered_pair_once(
        scope in proptest::collection::btree_set(1usize..30, 1..=6)
    ) {
        let listed: Vec<(Scope, Scope)> = bipartitions(&scope).collect();
        prop_assert_eq!(listed.len(), (1usize << (scope.len() - 1)) - 1);
        let min = *scope.first().unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for (left, right) in &listed {
            prop_assert!(left.contains(&min));
            prop_assert!(left.is_disjoint(right));
            let union: Scope = left.union(right).copied().collect();
            prop_assert_eq!(&union, &scope);
            prop_assert!(seen.insert(left.clone()), "repeated {left:?}");
        }
        let keys: Vec<(usize, Vec<usize>)> = listed
            .iter()
            .map(|(l, _)| (l.len(), l.iter().copied().collect()))
            .collect();
        prop_assert!(keys.windows(2).all(|w| w[0] < w[1]), "out of search order");
    }

    #[test]
    fn documents_survive_printing_and_reparsing(
        columns_per_group in proptest::collection::vec(
            (1usize..=3, 1usize..=5).prop_flat_map(|(m, n)| {
                proptest::collection::vec(proptest::collection::vec(0usize..3, n), m)
            }),
            1..=3
        )
    ) {
        let doc = Document {
            groups: columns_per_group
                .into_iter()
                .enumerate()
                .map(|(k, columns)| group_with(format!("g{k}"), columns))
                .collect(),
        };
        let reparsed = Document::parse(&doc.to_string()).unwrap();
        prop_assert_eq!(reparsed, doc);
    }
}
