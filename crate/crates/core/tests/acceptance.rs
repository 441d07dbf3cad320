//! Acceptance suite: one test per acceptance criterion, each printing a
//! single pass/fail line (visible with `--nocapture`).

mod common;

use std::io::Write;
use std::process::Command;
use std::time::Instant;

use num::{BigInt, BigRational, Zero};
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use hp2_weights::hp2::{weights_from_params, Hp2ActionParams};
use hp2_weights::localization::pontryagin_report;
use hp2_weights::verifier::{classify, search, ClassifyOutcome};

fn verdict(n: u32, name: &str, pass: bool) {
    println!(
        "criterion {n} ({name}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} ({name}) failed");
}

fn int(v: i64) -> BigRational {
    BigRational::from(BigInt::from(v))
}

#[test]
fn criterion_1_pontryagin_numbers_of_hp2() {
    let params = Hp2ActionParams::new(0, 2, 6).unwrap();
    let data = weights_from_params(&params);
    pontryagin_report(&data).unwrap(); // warm up
    let start = Instant::now();
    let report = pontryagin_report(&data).unwrap();
    let elapsed = start.elapsed();
    let pass = report.unit_sum.is_zero()
        && report.p1_sum.is_zero()
        && report.p1_squared == int(4)
        && report.p2 == int(7)
        && report.signature_candidate == int(1)
        && elapsed.as_micros() < 1000;
    verdict(1, "Pontryagin numbers of HP^2", pass);
}

#[test]
fn criterion_2_family_round_trip() {
    let start = Instant::now();
    let mut checked = 0u32;
    let mut pass = true;
    for parity in 0..2u64 {
        for d1 in (parity..=22).step_by(2) {
            for d2 in ((d1 + 2)..=23).step_by(2) {
                for d3 in ((d2 + 2)..=24).step_by(2) {
                    let params = Hp2ActionParams::new(d1, d2, d3).unwrap();
                    // Non-primitive triples encode non-faithful actions;
                    // their data normalizes to the reduced triple.
                    let expected = params.reduced();
                    let data = weights_from_params(&params);
                    match classify(&data) {
                        Ok(ClassifyOutcome::Match(m)) => {
                            if m.params != expected {
                                eprintln!(
                                    "round trip mismatch: {:?} -> {:?}, expected {:?}",
                                    params.doubled(),
                                    m.params.doubled(),
                                    expected.doubled()
                                );
                                pass = false;
                            }
                        }
                        other => {
                            eprintln!("classify failed for {:?}: {other:?}", params.doubled());
                            pass = false;
                        }
                    }
                    checked += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    pass = pass && checked > 400 && elapsed.as_secs_f64() < 1.0;
    verdict(2, "family round-trip, d3 <= 24", pass);
}

#[test]
fn criterion_3_theorem_at_desk_scale() {
    let summary = search(12).expect("search(12) must complete");
    let mut pass = summary.generated_set_equal
        && summary.case_counts[1] == 0
        && summary.case3_b2_check
        && !summary.admissible_configs.is_empty();
    for (cfg, _match_result) in &summary.admissible_configs {
        let report = pontryagin_report(cfg).unwrap();
        if report.p1_squared != int(4) || report.p2 != int(7) {
            eprintln!("wrong Pontryagin numbers for {cfg:?}");
            pass = false;
        }
    }
    verdict(3, "exhaustive verification at bound 12", pass);
}

#[test]
fn criterion_4_known_inhabitants() {
    let s3 = search(3).unwrap();
    let small = weights_from_params(&Hp2ActionParams::new(0, 2, 4).unwrap());
    let in3 = s3.admissible_configs.iter().any(|(cfg, _)| *cfg == small);
    let s4 = search(4).unwrap();
    let semi = weights_from_params(&Hp2ActionParams::new(1, 3, 5).unwrap());
    let in4 = s4.admissible_configs.iter().any(|(cfg, _)| *cfg == semi);
    verdict(4, "known inhabitants at bounds 3 and 4", in3 && in4);
}

fn run_property<S>(
    strategy: S,
    check: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> bool
where
    S: Strategy,
{
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, check).is_ok()
}

#[test]
fn criterion_5_property_suites() {
    let pass = run_property(common::linearity_input(), common::check_linearity)
        && run_property(common::homogeneity_input(), common::check_homogeneity)
        && run_property(common::canonical_input(), common::check_canonical)
        && run_property(common::arb_data(), common::check_normalize)
        && run_property(common::pairing_input(), common::check_pairing_roundtrip);
    verdict(5, "randomized property suites, 1000 cases each", pass);
}

fn run_cli_check(contents: &str) -> i32 {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(contents.as_bytes()).unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_hp2w"))
        .arg("check")
        .arg(file.path())
        .output()
        .unwrap();
    status.status.code().unwrap()
}

#[test]
fn criterion_6_negative_controls() {
    let all_plus = r#"{"dimension": 8, "points": [
        {"weights": [4, 2, 1, 1], "sign": 1},
        {"weights": [4, 2, 3, 3], "sign": 1},
        {"weights": [1, 1, 3, 3], "sign": 1}]}"#;
    let single_point = r#"{"dimension": 8, "points": [
        {"weights": [1, 1, 1, 1], "sign": 1}]}"#;
    let zero_weight = r#"{"dimension": 8, "points": [
        {"weights": [4, 0, 1, 1], "sign": 1},
        {"weights": [4, 2, 3, 3], "sign": 1},
        {"weights": [1, 1, 3, 3], "sign": -1}]}"#;
    let pass = run_cli_check(all_plus) == 1
        && run_cli_check(single_point) == 1
        && run_cli_check(zero_weight) == 2;
    verdict(6, "negative controls through the CLI", pass);
}
