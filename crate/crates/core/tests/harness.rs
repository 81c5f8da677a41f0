use std::collections::BTreeSet;

use samesize::catalog::Catalog;
use samesize::verify::{registered_ids, run_verification, Caps, Status, Summary};

fn select(ids: &[&str]) -> BTreeSet<String> {
    ids.iter().map(|s| s.to_string()).collect()
}

#[test]
fn published_a5_set() {
    let catalog = Catalog::builtin().unwrap();
    let report = run_verification(&catalog, Some(&select(&["U(A5)"])), Caps::default()).unwrap();
    assert_eq!(report.results.len(), 1);
    let r = &report.results[0];
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.computed, serde_json::json!([1, 15, 20, 24]));
}

#[test]
fn collision_count_flags_the_published_list() {
    let catalog = Catalog::builtin().unwrap();
    let sel = select(&["lemma-2.3-collisions"]);
    let report = run_verification(&catalog, Some(&sel), Caps::default()).unwrap();
    let r = report.result("lemma-2.3-collisions").unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.computed["count"], 32);
    assert_eq!(r.computed["published_count"], 31);
}

#[test]
fn reports_are_deterministic_apart_from_the_timestamp() {
    let catalog = Catalog::builtin().unwrap();
    let sel = select(&[
        "U(A6)",
        "U(PSL(2,7))",
        "order-identity/PSL(2,8)",
        "infeasible:{1,2p,8p,16p}",
        "cross-validation/A6=PSL(2,9)",
        "k4-residue/J2",
    ]);
    let run = || {
        let mut r = run_verification(&catalog, Some(&sel), Caps::default()).unwrap();
        r.timestamp.clear();
        r.to_json()
    };
    assert_eq!(run(), run());
}

#[test]
fn summary_matches_the_results() {
    let catalog = Catalog::builtin().unwrap();
    let sel = select(&["U(A5)", "k4-residue/J2", "rank-not-4/PSL(2,8)"]);
    let report = run_verification(&catalog, Some(&sel), Caps::default()).unwrap();
    assert_eq!(report.summary, Summary::tally(&report.results));
    assert_eq!(report.summary.total, 3);
    assert_eq!(report.summary.not_checked, 1);
    assert!(report.all_passed());
}

#[test]
fn groups_over_the_cap_are_not_checked() {
    let catalog = Catalog::builtin().unwrap();
    let caps = Caps {
        enumeration: 1000,
        ..Caps::default()
    };
    let report = run_verification(&catalog, Some(&select(&["U(U3(3))"])), caps).unwrap();
    let r = &report.results[0];
    assert_eq!(r.status, Status::NotChecked);
    assert!(
        r.notes
            .iter()
            .any(|n| n.contains("exceeds enumeration cap")),
        "{:?}",
        r.notes
    );
}

#[test]
fn unknown_ids_are_rejected_before_running() {
    let catalog = Catalog::builtin().unwrap();
    let err = run_verification(
        &catalog,
        Some(&select(&["U(A5)", "no-such-check"])),
        Caps::default(),
    )
    .unwrap_err();
    assert!(err.to_string().contains("no-such-check"));
}

#[test]
fn check_ids_are_unique() {
    let catalog = Catalog::builtin().unwrap();
    let ids = registered_ids(&catalog);
    let unique: BTreeSet<&String> = ids.iter().collect();
    assert_eq!(unique.len(), ids.len());
}
