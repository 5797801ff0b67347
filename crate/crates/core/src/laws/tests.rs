use super::*;
use crate::magnitude::Magnitude;

fn mags(texts: &[&str]) -> Vec<Magnitude> {
    texts.iter().map(|t| t.parse().unwrap()).collect()
}

fn dom(s: u32, texts: &[&str]) -> Domain {
    Domain::new(s, mags(texts)).unwrap()
}

fn n(s: u32, d: i64, p: &str) -> MultisignNumber {
    MultisignNumber::make(s, d, p.parse().unwrap()).unwrap()
}

fn cfg() -> CheckConfig {
    CheckConfig::default()
}

#[test]
fn signed_associativity_holds() {
    for (s, grid) in [
        (3, &["0", "1", "2", "3"][..]),
        (1, &["0", "1"][..]),
        (4, &["0", "1/2", "1"][..]),
    ] {
        let r = check_signed_associativity_add(&dom(s, grid), &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "s={s}");
        assert!(r.counterexamples.is_empty());
        assert!(r.checked > 0);
    }
    let r = check_identity_associativity_add(&dom(4, &["0", "1", "2"]), &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    // triples containing ^0 0: n^3 - (n-1)^3 with n = 9
    assert_eq!(r.checked, 729 - 512);
}

#[test]
fn signed_filter_counts_triples() {
    // s = 3, grid {0, 1}: labels 0..=3, one element per label.
    // ordered label triples with <= 2 distinct labels: 4 + 4*3*3 = 40
    let r = check_signed_associativity_add(&dom(3, &["0", "1"]), &cfg()).unwrap();
    assert_eq!(r.checked, 40);
}

#[test]
fn full_associativity_examples() {
    let r = check_full_associativity(Op::Mul, &dom(5, &["0", "1", "1/2", "2"]), &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);

    let r = check_full_associativity(Op::Add, &dom(3, &["0", "1"]), &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Fails);
    let witness = Counterexample::new(
        vec![n(3, 1, "1"), n(3, 2, "1"), n(3, 3, "1")],
        n(3, 3, "1"),
        n(3, 1, "1"),
    );
    assert_eq!(r.counterexamples[0], witness);
    // every ordered triple of three distinct nonzero signs fails here
    assert_eq!(r.failures, 6);

    let r = check_full_associativity(Op::Add, &dom(2, &["0", "1", "2"]), &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
}

#[test]
fn full_assoc_add_counterexamples_use_three_signs() {
    for s in 3..=5 {
        let r =
            check_full_associativity(Op::Add, &dom(s, &["0", "1/2", "1", "2"]), &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Fails);
        for c in &r.counterexamples {
            let labels: BTreeSet<u32> = c.operands.iter().map(|x| x.sign().index()).collect();
            assert_eq!(labels.len(), 3);
            assert!(!labels.contains(&0));
            // reproducible through the core operations
            let (x, y, z) = (&c.operands[0], &c.operands[1], &c.operands[2]);
            assert_eq!(x.add(y).unwrap().add(z).unwrap(), c.left);
            assert_eq!(x.add(&y.add(z).unwrap()).unwrap(), c.right);
        }
    }
}

#[test]
fn commutativity_examples() {
    for op in [Op::Add, Op::Mul] {
        let r = check_commutativity(op, &dom(4, &["0", "1", "3"]), &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.checked, 81);
    }
    let r = check_commutativity(Op::Add, &dom(1, &["0"]), &cfg()).unwrap();
    assert_eq!((r.verdict, r.checked), (Verdict::Holds, 1));
}

#[test]
fn distributivity_examples() {
    let r = check_distributivity(&dom(3, &["0", "1", "2"]), &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    assert_eq!(r.checked, 343);
    let r = check_distributivity(&dom(2, &["0", "1/2", "1", "2"]), &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
}

#[test]
fn distributivity_agrees_with_signed_rationals() {
    let d = dom(2, &["0", "1/2", "1", "2"]);
    let elems = d.elements();
    for x in &elems {
        for y in &elems {
            for z in &elems {
                let lhs = to_signed(&x.mul(&y.add(z).unwrap()).unwrap()).unwrap();
                let (px, py, pz) = (
                    to_signed(x).unwrap(),
                    to_signed(y).unwrap(),
                    to_signed(z).unwrap(),
                );
                let rhs = &(&px * &py) + &(&px * &pz);
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn inverse_structure_examples() {
    let r = check_inverse_structure(&dom(3, &["0", "1", "2"]), &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    assert_eq!(r.checked, 7);
    let r = check_inverse_structure(&dom(4, &["0", "1", "1/2", "2"]), &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    let r = check_inverse_structure(&dom(1, &["0", "1", "3"]), &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
}

#[test]
fn isomorphism_examples() {
    let r = check_isomorphism_s2(&dom(2, &["0", "1", "1/2", "3"]), &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    // 49 pairs + 7 universe round trips + 8 signed round trips
    assert_eq!(r.checked, 49 + 7 + 8);
    assert!(matches!(
        check_isomorphism_s2(&dom(3, &["0", "1"]), &cfg()),
        Err(LawError::WrongSignCount { .. })
    ));
}

#[test]
fn budget_is_enforced() {
    let tight = CheckConfig {
        budget: 100,
        ..cfg()
    };
    let d = dom(3, &["0", "1", "2"]);
    assert_eq!(
        check_distributivity(&d, &tight),
        Err(LawError::DomainTooLarge {
            law: LawId::Distributivity,
            required: 343,
            budget: 100
        })
    );
    // pair laws fit where triple laws do not
    assert!(check_commutativity(Op::Add, &d, &tight).is_ok());
}

#[test]
fn counterexample_cap() {
    let d = dom(5, &["0", "1", "2"]);
    let capped = CheckConfig {
        counterexample_cap: 3,
        ..cfg()
    };
    let r = check_full_associativity(Op::Add, &d, &capped).unwrap();
    assert_eq!(r.counterexamples.len(), 3);
    assert!(r.failures > 3);
    let full = check_full_associativity(
        Op::Add,
        &d,
        &CheckConfig {
            counterexample_cap: usize::MAX,
            ..cfg()
        },
    )
    .unwrap();
    assert_eq!(full.failures, full.counterexamples.len() as u64);
    assert_eq!(&full.counterexamples[..3], &r.counterexamples[..]);
    let mut sorted = full.counterexamples.clone();
    sorted.sort_by(|a, b| a.operands.cmp(&b.operands));
    assert_eq!(sorted, full.counterexamples);
}

#[test]
fn sequential_and_parallel_reports_match() {
    let d = dom(4, &["0", "1/2", "1", "2"]);
    let seq = CheckConfig {
        execution: Execution::Sequential,
        counterexample_cap: usize::MAX,
        ..cfg()
    };
    let par = CheckConfig {
        execution: Execution::Parallel,
        ..seq
    };
    for law in default_laws(&d) {
        assert_eq!(check_law(law, &d, &seq), check_law(law, &d, &par), "{law}");
    }
}

#[test]
fn suite_follows_expected_table() {
    let d = dom(3, &["0", "1", "2"]);
    let laws = default_laws(&d);
    assert!(!laws.contains(&LawId::Isomorphism));
    for report in run_law_suite(&d, &laws, &cfg()) {
        let report = report.unwrap();
        assert_eq!(
            report.verdict,
            expected_verdict(report.law, &d),
            "{}",
            report.law
        );
    }
    assert!(run_law_suite(&d, &[], &cfg()).is_empty());

    let d2 = dom(2, &["0", "1", "2"]);
    assert!(default_laws(&d2).contains(&LawId::Isomorphism));
    let one_slot = TupleDomain::new(vec![2], mags(&["0", "1"])).unwrap();
    assert!(!default_laws(&one_slot).contains(&LawId::Isomorphism));
    let reports = run_law_suite(&d2, &[LawId::FullAssocAdd], &cfg());
    assert_eq!(reports[0].as_ref().unwrap().verdict, Verdict::Holds);

    // grid without a nonzero magnitude cannot witness non-associativity
    let trivial = dom(4, &["0"]);
    assert_eq!(
        expected_verdict(LawId::FullAssocAdd, &trivial),
        Verdict::Holds
    );
}

#[test]
fn suite_collects_errors_without_aborting() {
    let d = dom(3, &["0", "1"]);
    let out = run_law_suite(&d, &[LawId::Isomorphism, LawId::CommAdd], &cfg());
    assert!(out[0].is_err());
    assert_eq!(out[1].as_ref().unwrap().verdict, Verdict::Holds);
}

#[test]
fn tuple_suite() {
    let d = TupleDomain::new(vec![2, 3], mags(&["0", "1"])).unwrap();
    for law in default_laws(&d) {
        let r = check_law(law, &d, &cfg()).unwrap();
        assert_eq!(r.verdict, expected_verdict(law, &d), "{law}");
    }
    assert!(check_law(LawId::Isomorphism, &d, &cfg()).is_err());
}

#[test]
fn law_names_round_trip() {
    for law in LawId::ALL {
        assert_eq!(law.name().parse::<LawId>().unwrap(), law);
    }
    assert!("assoc".parse::<LawId>().is_err());
}

#[test]
fn record_serialization() {
    let r = check_full_associativity(
        Op::Add,
        &dom(3, &["0", "1"]),
        &CheckConfig {
            counterexample_cap: 1,
            ..cfg()
        },
    )
    .unwrap();
    let json = serde_json::to_string(&r.to_record(Some(Verdict::Fails))).unwrap();
    assert_eq!(
        json,
        r#"{"law":"full-assoc-add","verdict":"fails","expected":"fails","shape":[3],"magnitudes":2,"universe":4,"checked":64,"failures":6,"counterexamples":[{"operands":["^1 1","^2 1","^3 1"],"left":"^3 1","right":"^1 1"}]}"#
    );
}
