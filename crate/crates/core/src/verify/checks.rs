//! The registered checks, in report order.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use super::{CheckResult, Context, FailureKind, Outcome, Provenance, Status};
use crate::catalog::{Catalog, CatalogFilter};
use crate::constructors::{classical_order, GroupFamily};
use crate::invariants::{centralizer_count, InvariantProfile};
use crate::uset::arith::{classify_k, gcd, is_prime_power, prime_factors, OrderFactorization};
use crate::uset::collision::{enumerate_collision_assignments, standard_slots, Collision};
use crate::uset::feasibility::{feasibility_check, ReasonCode};
use crate::uset::pattern::{
    instantiate_pattern, match_pattern, primes_up_to, symmetry_classes, PrimeAssignment,
    USetPattern,
};
use crate::uset::solve_psl2_order;

type Run = Box<dyn Fn(&Context) -> Outcome + Send + Sync>;

pub(crate) struct CheckDef {
    pub id: String,
    pub claim: String,
    pub provenance: Provenance,
    /// Groups whose elements the check needs.
    pub groups: Vec<String>,
    /// Report `not_checked` when any profile in `groups` is unavailable.
    /// Checks that handle missing profiles themselves set this to false.
    pub gated: bool,
    run: Run,
}

impl CheckDef {
    fn new(
        id: impl Into<String>,
        claim: impl Into<String>,
        provenance: Provenance,
        groups: &[&str],
        run: impl Fn(&Context) -> Outcome + Send + Sync + 'static,
    ) -> Self {
        Self {
            id: id.into(),
            claim: claim.into(),
            provenance,
            groups: groups.iter().map(|g| g.to_string()).collect(),
            gated: true,
            run: Box::new(run),
        }
    }

    fn ungated(mut self) -> Self {
        self.gated = false;
        self
    }

    pub(crate) fn execute(&self, ctx: &Context) -> CheckResult {
        let outcome = if self.gated {
            match self.groups.iter().find_map(|g| ctx.profile(g).err()) {
                Some(why) => Outcome::NotChecked(why),
                None => (self.run)(ctx),
            }
        } else {
            (self.run)(ctx)
        };
        let mut result = CheckResult {
            check_id: self.id.clone(),
            claim: self.claim.clone(),
            status: Status::NotChecked,
            computed: Value::Null,
            expected: Value::Null,
            provenance: self.provenance,
            failure_kind: None,
            notes: Vec::new(),
        };
        match outcome {
            Outcome::Compared {
                computed,
                expected,
                notes,
            } => {
                result.status = if computed == expected {
                    Status::Pass
                } else {
                    Status::Fail
                };
                if result.status == Status::Fail {
                    result.failure_kind = Some(match self.provenance {
                        Provenance::Paper => FailureKind::PaperMismatch,
                        Provenance::Derived => FailureKind::InternalInconsistency,
                    });
                }
                result.computed = computed;
                result.expected = expected;
                result.notes = notes;
            }
            Outcome::NotChecked(note) => result.notes.push(note),
        }
        result
    }
}

fn compared(computed: Value, expected: Value) -> Outcome {
    Outcome::Compared {
        computed,
        expected,
        notes: Vec::new(),
    }
}

fn with_notes(computed: Value, expected: Value, notes: Vec<String>) -> Outcome {
    Outcome::Compared {
        computed,
        expected,
        notes,
    }
}

/// Published U-sets of the simple k3-groups and of PSL(2,11).
const PUBLISHED_USETS: &[(&str, &[u64])] = &[
    ("A5", &[1, 15, 20, 24]),
    ("A6", &[1, 45, 80, 90, 144]),
    ("PSL(2,7)", &[1, 21, 42, 48, 56]),
    ("PSL(2,8)", &[1, 63, 216, 224]),
    ("PSL(2,17)", &[1, 153, 288, 918, 1088]),
    ("PSL(3,3)", &[1, 104, 117, 624, 936, 1728, 2106]),
    ("U3(3)", &[1, 56, 189, 378, 672, 1512, 1728]),
    (
        "U4(2)",
        &[
            1, 45, 80, 240, 270, 480, 540, 720, 1440, 3240, 5184, 5760, 6480,
        ],
    ),
    ("PSL(2,11)", &[1, 55, 120, 220, 264]),
];

/// The simple k3-groups, up to isomorphism.
const K3_GROUPS: &[&str] = &[
    "A5",
    "A6",
    "PSL(2,7)",
    "PSL(2,8)",
    "PSL(2,17)",
    "PSL(3,3)",
    "U3(3)",
    "U4(2)",
];

/// The PSL(2,q) that are k3-groups.
const K3_PSL2: &[u64] = &[4, 5, 7, 8, 9, 17];

/// Group, pattern, realizing primes, provenance of the pattern.
type PatternRow = (
    &'static str,
    &'static str,
    &'static [(char, u64)],
    Provenance,
);

/// Published symbolic forms of the U-sets of the k3 PSL(2,q), with the
/// prime values that realize them.
const PSL2_PATTERNS: &[PatternRow] = &[
    (
        "PSL(2,7)",
        "1,rq,2rq,16r,8q",
        &[('q', 7), ('r', 3)],
        Provenance::Derived,
    ),
    (
        "PSL(2,8)",
        "1,r^2q,8r^3,32q",
        &[('q', 7), ('r', 3)],
        Provenance::Derived,
    ),
    (
        "PSL(2,9)",
        "1,r^2q,16q,2r^2q,16r^2",
        &[('q', 5), ('r', 3)],
        Provenance::Paper,
    ),
    (
        "PSL(2,17)",
        "1,r^2q,32r^2,2r^3q,2^6q",
        &[('q', 17), ('r', 3)],
        Provenance::Derived,
    ),
];

/// Sets that no simple group can have as its U-set, with the condition each
/// violates. Instantiated over odd primes up to `ELIMINATION_BOUND`.
const ELIMINATED: &[(&str, ReasonCode)] = &[
    ("1,r^2,4r^2,16r", ReasonCode::Burnside),
    ("1,p^2,4p^2,8p^2", ReasonCode::Burnside),
    ("1,r^2,4r^2,8pr", ReasonCode::Burnside),
    ("1,2p,8p,16p", ReasonCode::OddSum),
    ("1,2q,8pq,8q,16p", ReasonCode::OddSum),
    ("1,2p,8p,16p,8p^2", ReasonCode::OddSum),
];
const ELIMINATION_BOUND: u64 = 50;

/// The collision cases as published, as (n3, n4, n5). The enumeration also
/// finds (2q, 2r, rq), which the list omits.
const PUBLISHED_COLLISIONS: &[(&str, &str, &str)] = &[
    ("2q", "2r", "2r"),
    ("2q", "2r", "2q"),
    ("2q", "4r", "4r"),
    ("2q", "4r", "2q"),
    ("2q", "4r", "rq"),
    ("2q", "8r", "2q"),
    ("2q", "8r", "rq"),
    ("2q", "16r", "2q"),
    ("2q", "16r", "rq"),
    ("4q", "2r", "2r"),
    ("4q", "2r", "4q"),
    ("4q", "2r", "rq"),
    ("4q", "4r", "4r"),
    ("4q", "4r", "4q"),
    ("4q", "4r", "rq"),
    ("4q", "8r", "4q"),
    ("4q", "8r", "rq"),
    ("4q", "16r", "4q"),
    ("4q", "16r", "rq"),
    ("8q", "2r", "2r"),
    ("8q", "2r", "rq"),
    ("8q", "4r", "4r"),
    ("8q", "4r", "rq"),
    ("8q", "8r", "rq"),
    ("8q", "16r", "rq"),
    ("16q", "2r", "2r"),
    ("16q", "2r", "rq"),
    ("16q", "4r", "4r"),
    ("16q", "4r", "rq"),
    ("16q", "8r", "rq"),
    ("16q", "16r", "rq"),
];

/// Constructible k4-groups other than PSL(2,q).
const K4_NON_PSL2: &[&str] = &["A7", "A8", "A9", "A10", "M11", "PSL(3,4)", "PSL(3,5)"];

/// Members of the published k4 list with no generators in the catalog.
const K4_RESIDUE: &[&str] = &[
    "J2", "L3(7)", "L3(8)", "L3(17)", "L4(3)", "O5(4)", "O5(9)", "O5(5)", "O5(7)", "O7(2)",
    "O8+(2)", "G2(3)", "U3(4)", "U3(9)", "U3(5)", "U3(7)", "U4(3)", "U5(2)", "Sz(8)", "Sz(32)",
    "3D4(2)", "F4(2)'",
];

const PSL2_11_USET: &[u64] = &[1, 55, 120, 220, 264];
const PSL2_11_PATTERN: &str = "1,rq,8pq,4qr,8pr";

fn uset_json(s: &BTreeSet<u64>) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

fn profile_json(p: &InvariantProfile) -> Value {
    serde_json::to_value(p).expect("profile serializes")
}

fn assignments_json(a: &[PrimeAssignment]) -> Value {
    json!(a.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn pattern(s: &str) -> USetPattern {
    s.parse().expect("built-in patterns parse")
}

/// Number of prime factors counted with multiplicity.
fn big_omega(n: u64) -> u32 {
    OrderFactorization::of(n).0.values().sum()
}

fn psl2_order(l: u64) -> u64 {
    classical_order(GroupFamily::Psl { n: 2, q: l }).expect("valid PSL(2,l)")
}

/// Every check, in report order.
pub(crate) fn registry(catalog: &Catalog) -> Vec<CheckDef> {
    let mut checks = Vec::new();
    published_usets(&mut checks);
    per_group_identities(&mut checks, catalog);
    ranks(&mut checks);
    prime_counts(&mut checks);
    symbolic(&mut checks);
    screening(&mut checks);
    endgame(&mut checks, catalog);
    cross_validation(&mut checks);
    checks
}

/// Ids of every check registered for `catalog`, in report order.
pub fn registered_ids(catalog: &Catalog) -> Vec<String> {
    registry(catalog).into_iter().map(|c| c.id).collect()
}

fn published_usets(checks: &mut Vec<CheckDef>) {
    for &(name, values) in PUBLISHED_USETS {
        let expected: BTreeSet<u64> = values.iter().copied().collect();
        let owned = name.to_string();
        checks.push(CheckDef::new(
            format!("U({name})"),
            format!("U({name}) = {values:?}"),
            Provenance::Paper,
            &[name],
            move |ctx| {
                let p = ctx.profile(&owned).unwrap();
                compared(uset_json(&p.u), uset_json(&expected))
            },
        ));
    }

    for &(name, pat, assignment, provenance) in PSL2_PATTERNS {
        let owned = name.to_string();
        checks.push(CheckDef::new(
            format!("U({name})-pattern"),
            format!("U({name}) has the form {{{pat}}}"),
            provenance,
            &[name],
            move |ctx| {
                let p = ctx.profile(&owned).unwrap();
                let pat = pattern(pat);
                let a = PrimeAssignment::from_pairs(assignment).unwrap();
                let inst = instantiate_pattern(&pat, &a).unwrap();
                let found = match_pattern(&pat, &p.u, 100);
                compared(
                    json!({ "U": uset_json(&p.u), "matches": assignments_json(&found) }),
                    json!({ "U": uset_json(&inst.value_set()), "matches": [a.to_string()] }),
                )
            },
        ));
    }

    // Two distinct sizes share a u-value, so the U-set sums to less than |G|.
    for (name, family) in [
        ("U3(3)", GroupFamily::Psu { n: 3, q: 3 }),
        ("U4(2)", GroupFamily::Psu { n: 4, q: 2 }),
    ] {
        let published: &[u64] = PUBLISHED_USETS.iter().find(|(n, _)| *n == name).unwrap().1;
        let order = classical_order(family).unwrap();
        let set_sum: u64 = published.iter().sum();
        let owned = name.to_string();
        checks.push(CheckDef::new(
            format!("u-collapse({name})"),
            format!(
                "the u-values of {name} sum to |G| = {order} while its U-set sums to {set_sum}"
            ),
            Provenance::Derived,
            &[name],
            move |ctx| {
                let p = ctx.profile(&owned).unwrap();
                let multiset = p.u_multiset();
                let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
                for &u in &multiset {
                    *counts.entry(u).or_default() += 1;
                }
                let repeated: Vec<u64> = counts
                    .into_iter()
                    .filter(|&(_, c)| c > 1)
                    .map(|(u, _)| u)
                    .collect();
                compared(
                    json!({
                        "sum_u_multiset": multiset.iter().sum::<u64>(),
                        "sum_U": p.u.iter().sum::<u64>(),
                        "repeated": repeated,
                    }),
                    json!({
                        "sum_u_multiset": order,
                        "sum_U": set_sum,
                        "repeated": [order - set_sum],
                    }),
                )
            },
        ));
    }
}

/// Identities every catalog group must satisfy.
fn per_group_identities(checks: &mut Vec<CheckDef>, catalog: &Catalog) {
    for entry in catalog.list(&CatalogFilter::default()) {
        let name = entry.name().to_string();
        let order = entry.expected_order();
        let n = name.clone();
        checks.push(CheckDef::new(
            format!("order-identity/{name}"),
            format!("the u-values of {name} sum to |G|"),
            Provenance::Derived,
            &[&name],
            move |ctx| {
                let p = ctx.profile(&n).unwrap();
                compared(json!(p.u_map.values().sum::<u64>()), json!(order))
            },
        ));
        let n = name.clone();
        checks.push(CheckDef::new(
            format!("divisibility/{name}"),
            format!("every class size n of {name} divides u(n)"),
            Provenance::Derived,
            &[&name],
            move |ctx| {
                let p = ctx.profile(&n).unwrap();
                let bad: Vec<u64> = p
                    .u_map
                    .iter()
                    .filter(|(n, u)| *u % *n != 0)
                    .map(|(n, _)| *n)
                    .collect();
                compared(json!(bad), json!([]))
            },
        ));
        let n = name.clone();
        checks.push(CheckDef::new(
            format!("burnside/{name}"),
            format!("{name} is simple, so none of its class sizes above 1 is a prime power"),
            Provenance::Derived,
            &[&name],
            move |ctx| {
                let p = ctx.profile(&n).unwrap();
                let bad: Vec<u64> = p.v.iter().copied().filter(|&n| is_prime_power(n)).collect();
                compared(json!(bad), json!([]))
            },
        ));
        let n = name.clone();
        checks.push(CheckDef::new(
            format!("trivial-center/{name}"),
            format!("{name} has exactly one element in a class of size 1"),
            Provenance::Derived,
            &[&name],
            move |ctx| {
                let p = ctx.profile(&n).unwrap();
                compared(json!(p.center_order()), json!(1))
            },
        ));
        let n = name.clone();
        checks.push(CheckDef::new(
            format!("pi-union/{name}"),
            format!("the primes dividing |{name}| are those dividing its class sizes"),
            Provenance::Derived,
            &[&name],
            move |ctx| {
                let p = ctx.profile(&n).unwrap();
                compared(
                    json!(p.primes_of_class_sizes()),
                    json!(prime_factors(order)),
                )
            },
        ));
        let n = name.clone();
        checks.push(CheckDef::new(
            format!("feasible/{name}"),
            format!("the u-values of {name} pass the necessary conditions for simplicity"),
            Provenance::Derived,
            &[&name],
            move |ctx| {
                let p = ctx.profile(&n).unwrap();
                let verdict = feasibility_check(&p.u_multiset()).unwrap();
                compared(json!(verdict), json!({ "verdict": "possible" }))
            },
        ));
    }
}

fn ranks(checks: &mut Vec<CheckDef>) {
    for l in [7u64, 9, 11, 13, 17] {
        let name = format!("PSL(2,{l})");
        let n = name.clone();
        checks.push(CheckDef::new(
            format!("rank-4/{name}"),
            format!("{name} has conjugate type rank 4"),
            Provenance::Paper,
            &[&name],
            move |ctx| compared(json!(ctx.profile(&n).unwrap().rank), json!(4)),
        ));
    }
    checks.push(CheckDef::new(
        "rank-not-4/PSL(2,8)",
        "PSL(2,8) does not have conjugate type rank 4 (8 is even)",
        Provenance::Paper,
        &["PSL(2,8)"],
        |ctx| {
            let rank = ctx.profile("PSL(2,8)").unwrap().rank;
            with_notes(
                json!(rank == 4),
                json!(false),
                vec![format!("rank = {rank}")],
            )
        },
    ));
}

fn prime_counts(checks: &mut Vec<CheckDef>) {
    let mut names: Vec<String> = K3_GROUPS.iter().map(|s| s.to_string()).collect();
    for q in K3_PSL2 {
        let n = format!("PSL(2,{q})");
        if !names.contains(&n) {
            names.push(n);
        }
    }
    for name in names {
        let n = name.clone();
        checks.push(
            CheckDef::new(
                format!("k3/{name}"),
                format!("exactly three primes divide |{name}|"),
                Provenance::Paper,
                &[&name],
                move |ctx| {
                    let order = ctx.group(&n).unwrap().order();
                    let (k, f) = classify_k(order);
                    with_notes(json!(k), json!(3), vec![format!("|G| = {f}")])
                },
            )
            .ungated(),
        );
    }
    checks.push(
        CheckDef::new(
            "k3-catalog",
            "the catalog's k3-groups are the eight k3-groups plus PSL(2,4), PSL(2,5), PSL(2,9)",
            Provenance::Derived,
            &[],
            |ctx| {
                let filter = CatalogFilter {
                    prime_count: Some(3),
                    max_order: None,
                };
                let found: Vec<&str> = ctx.catalog.list(&filter).iter().map(|e| e.name()).collect();
                // Isomorphic copies in the catalog: PSL(2,4) ≅ PSL(2,5) ≅ A5
                // and PSL(2,9) ≅ A6.
                let mut expected: Vec<&str> = K3_GROUPS.to_vec();
                expected.extend(["PSL(2,4)", "PSL(2,5)", "PSL(2,9)"]);
                let expected: BTreeSet<&str> = expected.into_iter().collect();
                let found_set: BTreeSet<&str> = found.iter().copied().collect();
                compared(json!(found_set), json!(expected))
            },
        )
        .ungated(),
    );
    checks.push(
        CheckDef::new(
            "k4/PSL(2,11)",
            "PSL(2,11) is a k4-group",
            Provenance::Paper,
            &["PSL(2,11)"],
            |ctx| {
                let (k, f) = classify_k(ctx.group("PSL(2,11)").unwrap().order());
                with_notes(json!(k), json!(4), vec![format!("|G| = {f}")])
            },
        )
        .ungated(),
    );
}

fn symbolic(checks: &mut Vec<CheckDef>) {
    checks.push(CheckDef::new(
        "lemma-2.3-collisions",
        "every size assignment for {1,rq,16q,4qr,16r} in which two u-values share a class size \
         leads to a contradiction",
        Provenance::Derived,
        &[],
        |_| {
            let collisions = enumerate_collision_assignments(&standard_slots());
            let key = |c: &Collision| -> (String, String, String) {
                (
                    c.sizes[1].to_string(),
                    c.sizes[2].to_string(),
                    c.sizes[3].to_string(),
                )
            };
            let enumerated: BTreeSet<(String, String, String)> =
                collisions.iter().map(key).collect();
            let published: BTreeSet<(String, String, String)> = PUBLISHED_COLLISIONS
                .iter()
                .map(|&(a, b, c)| {
                    let t = |s: &str| s.parse::<crate::uset::Term>().unwrap().to_string();
                    (t(a), t(b), t(c))
                })
                .collect();
            let fmt = |s: &(String, String, String)| format!("n3={} n4={} n5={}", s.0, s.1, s.2);
            let extra: Vec<String> = enumerated.difference(&published).map(fmt).collect();
            let missing: Vec<String> = published.difference(&enumerated).map(fmt).collect();
            let contradicted = collisions.iter().filter(|c| c.is_contradicted()).count();
            let notes = collisions
                .iter()
                .map(|c| {
                    let clash = &c.clashes[0];
                    format!(
                        "{}: {}, {}",
                        fmt(&key(c)),
                        clash.equation,
                        match &clash.resolution {
                            crate::uset::collision::Resolution::Contradiction(why) => why.as_str(),
                            _ => "no contradiction",
                        }
                    )
                })
                .chain([format!(
                    "the published case list has {} entries",
                    PUBLISHED_COLLISIONS.len()
                )])
                .collect();
            with_notes(
                json!({
                    "count": collisions.len(),
                    "contradicted": contradicted,
                    "published_count": PUBLISHED_COLLISIONS.len(),
                    "not_in_published_list": extra,
                    "published_not_enumerated": missing,
                }),
                json!({
                    "count": 32,
                    "contradicted": 32,
                    "published_count": 31,
                    "not_in_published_list": ["n3=2q n4=2r n5=qr"],
                    "published_not_enumerated": [],
                }),
                notes,
            )
        },
    ));

    let odd_primes: Vec<u64> = primes_up_to(ELIMINATION_BOUND)
        .into_iter()
        .filter(|&p| p > 2)
        .collect();
    for &(pat_str, reason) in ELIMINATED {
        let odd_primes = odd_primes.clone();
        checks.push(CheckDef::new(
            format!("infeasible:{{{pat_str}}}"),
            format!("{{{pat_str}}} is not the U-set of a simple group ({reason})"),
            Provenance::Paper,
            &[],
            move |_| {
                let pat = pattern(pat_str);
                let symbols = pat.symbols();
                let mut seen: BTreeSet<Vec<ReasonCode>> = BTreeSet::new();
                let mut count = 0usize;
                let mut values = vec![odd_primes[0]; symbols.len()];
                for_each_tuple(&odd_primes, &mut values, 0, &mut |vals| {
                    let pairs: Vec<(char, u64)> =
                        symbols.iter().copied().zip(vals.iter().copied()).collect();
                    let a = PrimeAssignment::from_pairs(&pairs).unwrap();
                    let inst = instantiate_pattern(&pat, &a).unwrap();
                    seen.insert(feasibility_check(&inst.values).unwrap().reason_codes());
                    count += 1;
                });
                with_notes(
                    json!(seen),
                    json!([[reason]]),
                    vec![format!(
                        "{count} assignments of odd primes ≤ {ELIMINATION_BOUND} to {:?}",
                        symbols
                    )],
                )
            },
        ));
    }

    checks.push(CheckDef::new(
        "no-match:{1,rq,16q,4qr,16r}",
        "no k3 PSL(2,q) has a U-set of the form {1,rq,16q,4qr,16r}",
        Provenance::Paper,
        &["PSL(2,7)", "PSL(2,8)", "PSL(2,9)", "PSL(2,17)"],
        |ctx| {
            no_match(
                ctx,
                "1,rq,16q,4qr,16r",
                &["PSL(2,7)", "PSL(2,8)", "PSL(2,9)", "PSL(2,17)"],
            )
        },
    ));
    checks.push(CheckDef::new(
        "no-match:{1,rq,4rq,8rq,8r^2}",
        "no simple k3-group has a U-set of the form {1,rq,4rq,8rq,8r^2}",
        Provenance::Paper,
        K3_GROUPS,
        |ctx| no_match(ctx, "1,rq,4rq,8rq,8r^2", K3_GROUPS),
    ));
    checks.push(CheckDef::new(
        "no-semiprime:{A6,PSL(2,17)}",
        "no value in U(A6) or U(PSL(2,17)) is a product of two primes",
        Provenance::Paper,
        &["A6", "PSL(2,17)"],
        |ctx| {
            let mut computed = BTreeMap::new();
            for name in ["A6", "PSL(2,17)"] {
                let p = ctx.profile(name).unwrap();
                let bad: Vec<u64> = p.u.iter().copied().filter(|&u| big_omega(u) == 2).collect();
                computed.insert(name, bad);
            }
            compared(json!(computed), json!({ "A6": [], "PSL(2,17)": [] }))
        },
    ));
}

fn for_each_tuple(primes: &[u64], values: &mut Vec<u64>, i: usize, f: &mut impl FnMut(&[u64])) {
    if i == values.len() {
        f(values);
        return;
    }
    for &p in primes {
        values[i] = p;
        for_each_tuple(primes, values, i + 1, f);
    }
}

fn no_match(ctx: &Context, pat_str: &str, groups: &[&str]) -> Outcome {
    let pat = pattern(pat_str);
    let mut computed = BTreeMap::new();
    let mut expected = BTreeMap::new();
    for &name in groups {
        let p = ctx.profile(name).unwrap();
        computed.insert(name, assignments_json(&match_pattern(&pat, &p.u, 100)));
        expected.insert(name, json!([]));
    }
    with_notes(
        json!(computed),
        json!(expected),
        vec!["all assignments of primes ≤ 100, symbols may coincide".into()],
    )
}

fn screening(checks: &mut Vec<CheckDef>) {
    for l in [11u64, 13] {
        let name = format!("PSL(2,{l})");
        let n = name.clone();
        checks.push(CheckDef::new(
            format!("u-size-5/{name}"),
            format!("|U({name})| = 5"),
            Provenance::Paper,
            &[&name],
            move |ctx| compared(json!(ctx.profile(&n).unwrap().u.len()), json!(5)),
        ));
        let n = name.clone();
        checks.push(
            CheckDef::new(
                format!("order-shape/{name}"),
                format!(
                    "q(q²−1)/gcd(2,q−1) for q = {l} has the form 2^a·3^b·s^c·t^d with s, t > 3 \
                     distinct primes"
                ),
                Provenance::Paper,
                &[&name],
                move |ctx| {
                    let order = ctx.group(&n).unwrap().order();
                    let raw = l * (l * l - 1);
                    let primes = prime_factors(raw);
                    let big: Vec<u64> = primes.iter().copied().filter(|&p| p > 3).collect();
                    let shape =
                        primes.iter().all(|&p| p <= 3 || big.contains(&p)) && big.len() == 2;
                    with_notes(
                        json!({ "order_matches": raw / gcd(2, l - 1) == order, "shape": shape }),
                        json!({ "order_matches": true, "shape": true }),
                        vec![format!("q(q²−1) = {}", OrderFactorization::of(raw))],
                    )
                },
            )
            .ungated(),
        );
    }
    for &name in K4_NON_PSL2 {
        checks.push(CheckDef::new(
            format!("u-size-not-5/{name}"),
            format!("{name} is a k4-group with |U| ≠ 5"),
            Provenance::Paper,
            &[name],
            move |ctx| {
                let p = ctx.profile(name).unwrap();
                let (k, _) = classify_k(p.order);
                with_notes(
                    json!({ "k": k, "u_size_is_5": p.u.len() == 5 }),
                    json!({ "k": 4, "u_size_is_5": false }),
                    vec![format!("|U| = {}", p.u.len())],
                )
            },
        ));
    }
    checks.push(
        CheckDef::new(
            "u-size-5-screening",
            "at least three constructible k4-groups other than PSL(2,q) are screened, and none \
             has |U| = 5",
            Provenance::Paper,
            K4_NON_PSL2,
            |ctx| {
                let mut screened = Vec::new();
                let mut notes = Vec::new();
                let mut all_not_5 = true;
                for &name in K4_NON_PSL2 {
                    match ctx.profile(name) {
                        Ok(p) => {
                            all_not_5 &= p.u.len() != 5;
                            screened.push(name);
                        }
                        Err(why) => notes.push(format!("not screened: {why}")),
                    }
                }
                notes.insert(0, format!("screened: {}", screened.join(", ")));
                with_notes(
                    json!({ "at_least_three": screened.len() >= 3, "none_has_5": all_not_5 }),
                    json!({ "at_least_three": true, "none_has_5": true }),
                    notes,
                )
            },
        )
        .ungated(),
    );
    for &name in K4_RESIDUE {
        checks.push(
            CheckDef::new(
                format!("k4-residue/{name}"),
                format!("|U({name})| ≠ 5"),
                Provenance::Paper,
                &[],
                move |_| {
                    Outcome::NotChecked(match GroupFamily::parse(name) {
                        Ok(f @ GroupFamily::Psl { .. }) => format!(
                            "{name} is not registered: it can be built on demand, but its order \
                             {} is beyond the harness budget",
                            f.order().unwrap()
                        ),
                        _ => format!("{name} is not in the catalog (no generators shipped)"),
                    })
                },
            )
            .ungated(),
        );
    }
}

fn endgame(checks: &mut Vec<CheckDef>, catalog: &Catalog) {
    for l in [7u64, 11, 13, 17, 19, 23] {
        let name = format!("PSL(2,{l})");
        let n = name.clone();
        let special = (l * l - 1) / gcd(2, l - 1);
        checks.push(CheckDef::new(
            format!("special-class/{name}"),
            format!("|{name}| = l(l²−1)/gcd(2,l−1) and {name} has a class of size {special}"),
            Provenance::Derived,
            &[&name],
            move |ctx| {
                let p = ctx.profile(&n).unwrap();
                compared(
                    json!({ "order": p.order, "has_class": p.v.contains(&special) }),
                    json!({ "order": psl2_order(l), "has_class": true }),
                )
            },
        ));
    }

    checks.push(CheckDef::new(
        "centralizer-count/PSL(2,11)",
        "|Cent(PSL(2,11))| does not depend on the number of worker threads",
        Provenance::Derived,
        &["PSL(2,11)"],
        |ctx| {
            let g = ctx.group("PSL(2,11)").unwrap();
            if g.order() > ctx.caps.centralizer {
                return Outcome::NotChecked(format!(
                    "order {} exceeds centralizer cap {}",
                    g.order(),
                    ctx.caps.centralizer
                ));
            }
            let parallel = centralizer_count(g, ctx.caps.centralizer).unwrap();
            let single = rayon::ThreadPoolBuilder::new()
                .num_threads(1)
                .build()
                .expect("thread pool")
                .install(|| centralizer_count(g, ctx.caps.centralizer).unwrap());
            compared(json!(single), json!(parallel))
        },
    ));

    checks.push(CheckDef::new(
        "solve-psl2-660",
        "|G| = Σ u(n) for U(G) = U(PSL(2,11)) is 660, and l(l²−1)/2 = 660 gives l = 11",
        Provenance::Paper,
        &["PSL(2,11)"],
        |ctx| {
            let order: u64 = ctx.profile("PSL(2,11)").unwrap().u_map.values().sum();
            compared(
                json!({ "order": order, "l": solve_psl2_order(order) }),
                json!({ "order": 660, "l": 11 }),
            )
        },
    ));

    checks.push(
        CheckDef::new(
            "characterization-PSL(2,11)",
            "PSL(2,11) is the only catalog group with U = {1,55,120,220,264}",
            Provenance::Paper,
            &[],
            |ctx| {
                let target: BTreeSet<u64> = PSL2_11_USET.iter().copied().collect();
                let mut hits = Vec::new();
                let mut missing = Vec::new();
                for name in ctx.catalog.names() {
                    match ctx.profile(&name) {
                        Ok(p) if p.u == target => hits.push(name),
                        Ok(_) => {}
                        Err(why) => missing.push(why),
                    }
                }
                if !missing.is_empty() {
                    return Outcome::NotChecked(format!(
                        "catalog not fully profiled: {}",
                        missing.join("; ")
                    ));
                }
                with_notes(
                    json!(hits),
                    json!(["PSL(2,11)"]),
                    vec![format!(
                        "{} catalog groups compared",
                        ctx.catalog.names().len()
                    )],
                )
            },
        )
        .ungated(),
    );
    if let Some(c) = checks.last_mut() {
        c.groups = catalog.names();
    }

    checks.push(CheckDef::new(
        "pattern-match-PSL(2,11)",
        "{1,rq,8pq,4qr,8pr} matches U(PSL(2,11)) only at (p,q,r) = (3,5,11), up to the \
         pattern's q↔r symmetry",
        Provenance::Paper,
        &["PSL(2,11)"],
        |ctx| {
            let pat = pattern(PSL2_11_PATTERN);
            let found = match_pattern(&pat, &ctx.profile("PSL(2,11)").unwrap().u, 100);
            let classes = symmetry_classes(&pat, &found);
            let reps: Vec<String> = classes.iter().map(|c| c[0].to_string()).collect();
            with_notes(
                json!({ "assignments": assignments_json(&found), "classes": reps }),
                json!({
                    "assignments": ["p=3 q=5 r=11", "p=3 q=11 r=5"],
                    "classes": ["p=3 q=5 r=11"],
                }),
                vec![
                    "the pattern is invariant under q↔r, so (3,11,5) matches as well".into(),
                    "primes ≤ 100".into(),
                ],
            )
        },
    ));
}

fn cross_validation(checks: &mut Vec<CheckDef>) {
    for (base, others) in [
        ("A5", vec!["PSL(2,4)", "PSL(2,5)"]),
        ("A6", vec!["PSL(2,9)"]),
    ] {
        let mut groups = vec![base];
        groups.extend(others.iter().copied());
        let id = format!("cross-validation/{}", groups.join("="));
        let claim = format!("{} have identical invariant profiles", groups.join(", "));
        let others_owned: Vec<String> = others.iter().map(|s| s.to_string()).collect();
        checks.push(CheckDef::new(
            id,
            claim,
            Provenance::Derived,
            &groups,
            move |ctx| {
                let b = profile_json(ctx.profile(base).unwrap());
                let computed: Vec<Value> = others_owned
                    .iter()
                    .map(|o| profile_json(ctx.profile(o).unwrap()))
                    .collect();
                compared(json!(computed), json!(vec![b; others_owned.len()]))
            },
        ));
    }
}
