//! End-to-end checks of the guaranteed behaviours, one test per guarantee.
//! Each prints a PASS line naming what it established.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use depdisj::{
    bipartitions, encode, independent_split, modularize_group, oracle, Atom, DependencyGroup,
    Disjunction, SearchTrace,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn grp(name: &str, disjunctions: &[&str]) -> DependencyGroup {
    DependencyGroup::new(
        name.parse().unwrap(),
        disjunctions.iter().map(|d| d.parse().unwrap()).collect(),
    )
    .unwrap()
}

/// A group of up to `max_disjunctions` disjunctions and width up to
/// `max_width`, each disjunction drawing from its own three-atom alphabet.
fn random_group(
    rng: &mut ChaCha8Rng,
    max_disjunctions: usize,
    max_width: usize,
) -> DependencyGroup {
    let m = rng.random_range(1..=max_disjunctions);
    let n = rng.random_range(1..=max_width);
    let disjunctions = (0..m)
        .map(|i| {
            Disjunction(
                (0..n)
                    .map(|_| {
                        let k = rng.random_range(0..3usize);
                        Atom::new(format!("d{i}a{k}")).unwrap()
                    })
                    .collect(),
            )
        })
        .collect();
    DependencyGroup::new("g".parse().unwrap(), disjunctions).unwrap()
}

#[test]
fn splits_a_pair_of_independent_disjunctions() {
    let group = grp("d", &["phi phi phi' phi'", "psi psi' psi psi'"]);
    let result = modularize_group(&group).unwrap();
    assert_eq!(
        result.groups,
        vec![grp("d.1", &["phi phi'"]), grp("d.2", &["psi psi'"])]
    );
    assert_eq!(result.groups[0].origins(), &[1]);
    assert_eq!(result.groups[1].origins(), &[2]);
    println!(
        "PASS: a two-disjunction group admitting all four combinations \
         splits into two independent width-two groups"
    );
}

#[test]
fn splits_the_six_position_group_into_widths_two_and_three() {
    let group = grp(
        "d",
        &[
            "phi phi phi phi phi' phi'",
            "psi psi' psi psi' psi psi'",
            "chi chi chi' chi' chi' chi'",
        ],
    );
    let result = modularize_group(&group).unwrap();
    assert_eq!(
        result.groups,
        vec![
            grp("d.1", &["psi psi'"]),
            grp("d.2", &["phi phi phi'", "chi chi' chi'"]),
        ]
    );
    assert_eq!(result.groups[0].origins(), &[2]);
    assert_eq!(result.groups[1].origins(), &[1, 3]);
    println!(
        "PASS: the six-position group splits into the free middle \
         disjunction and the coupled outer pair, widths 2 and 3"
    );
}

#[test]
fn splits_the_lexical_entry_into_morphology_and_valence() {
    let group = grp(
        "lieben",
        &[
            "lieben lieben liebt liebt",
            "bse bse fin fin",
            "comp elist comp elist",
            "elist comp elist comp",
        ],
    );
    let result = modularize_group(&group).unwrap();
    assert_eq!(
        result.groups,
        vec![
            grp("lieben.1", &["lieben liebt", "bse fin"]),
            grp("lieben.2", &["comp elist", "elist comp"]),
        ]
    );
    assert_eq!(result.groups[0].origins(), &[1, 2]);
    assert_eq!(result.groups[1].origins(), &[3, 4]);
    println!(
        "PASS: the four-feature lexical entry splits into its morphology \
         pair and its valence pair"
    );
}

#[test]
fn cardinality_test_agrees_with_materialised_free_combination() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0004);
    let mut checked = 0usize;
    let mut independent = 0usize;
    for _ in 0..1000 {
        let group = random_group(&mut rng, 5, 20);
        let form = encode(&group);
        for (left, right) in bipartitions(form.cases().scope()) {
            let fast = independent_split(form.cases(), &left, &right)
                .unwrap()
                .is_some();
            let slow =
                oracle::independent_by_free_combination(form.cases(), &left, &right).unwrap();
            assert_eq!(
                fast,
                slow,
                "cardinality test and materialised check disagree on \
                 {left:?} | {right:?} of {:?}",
                form.cases()
            );
            checked += 1;
            independent += usize::from(fast);
        }
    }
    assert!(checked >= 1000, "only {checked} bipartitions exercised");
    assert!(
        independent > 0 && independent < checked,
        "the corpus must exercise both outcomes, got {independent}/{checked}"
    );
    println!(
        "PASS: the cardinality test matched the materialised free \
         combination on all {checked} bipartitions of 1000 random forms \
         ({independent} independent)"
    );
}

#[test]
fn modularization_preserves_solutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0005);
    for round in 0..1000 {
        let group = random_group(&mut rng, 4, 6);
        let result = modularize_group(&group).unwrap();
        let before = oracle::solutions(&group);
        let after = oracle::combined_solutions(&result.groups).unwrap();
        assert_eq!(
            before, after,
            "solutions changed in round {round} for {group:?}"
        );
    }
    println!("PASS: 1000 random groups kept their exact solution sets through modularization");
}

#[test]
fn modularizing_a_result_changes_nothing() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0006);
    for round in 0..1000 {
        let group = random_group(&mut rng, 4, 6);
        let result = modularize_group(&group).unwrap();
        for sub in &result.groups {
            let again = modularize_group(sub).unwrap();
            assert_eq!(
                again.groups,
                vec![sub.clone()],
                "subgroup of round {round} was not a fixed point: {sub:?}"
            );
            assert_eq!(again.groups[0].origins(), sub.origins());
        }
    }
    println!("PASS: every subgroup of 1000 random splits modularizes to itself, name and all");
}

#[test]
fn prime_case_counts_skip_the_search() {
    fn is_prime(n: usize) -> bool {
        n >= 2
            && (2..n)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0007);
    let mut sampled = 0usize;
    while sampled < 200 {
        let group = random_group(&mut rng, 4, 12);
        if group.disjunction_count() < 2 {
            continue;
        }
        let form = encode(&group);
        if !is_prime(form.cases().len()) {
            continue;
        }
        let result = modularize_group(&group).unwrap();
        assert_eq!(
            result.trace,
            SearchTrace::default(),
            "searched a prime form: {:?}",
            form.cases()
        );
        assert_eq!(result.groups.len(), 1);
        sampled += 1;
    }
    println!(
        "PASS: 200 multi-disjunction groups with a prime number of cases \
         were kept whole without a single confinement"
    );
}

#[test]
fn command_line_processes_documents_end_to_end() {
    fn golden(name: &str) -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name)
    }
    fn bin() -> Command {
        Command::new(env!("CARGO_BIN_EXE_modularize"))
    }

    for (input, expected) in [
        ("pair.txt", "pair.out.txt"),
        ("worked.txt", "worked.out.txt"),
        ("lexicon.txt", "lexicon.out.txt"),
        ("prime.txt", "prime.out.txt"),
    ] {
        let out = bin().arg(golden(input)).arg("--verify").output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{input} failed: {out:?}");
        assert_eq!(
            String::from_utf8(out.stdout).unwrap(),
            fs::read_to_string(golden(expected)).unwrap(),
            "unexpected output for {input}"
        );
    }
    for (input, extra_args, code) in [
        ("syntax-error.txt", &[][..], 1),
        ("ragged.txt", &[], 2),
        ("empty-group.txt", &[], 2),
        ("worked.txt", &["--max-group-size", "2"][..], 3),
    ] {
        let out = bin().arg(golden(input)).args(extra_args).output().unwrap();
        assert_eq!(out.status.code(), Some(code), "{input} exit code");
        assert!(
            !out.stderr.is_empty(),
            "{input} should explain its failure on stderr"
        );
        assert!(out.stdout.is_empty(), "{input} should not produce output");
    }
    println!(
        "PASS: the command line reproduces the expected documents byte for \
         byte, verifies them, and distinguishes failures by exit code"
    );
}
