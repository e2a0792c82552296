//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//! Exits nonzero when any criterion fails.

use std::time::Instant;

use thresh_core::selftest;

fn main() {
    let criteria: [fn() -> selftest::CriterionOutcome; 11] = [
        selftest::criterion_1,
        selftest::criterion_2,
        selftest::criterion_3,
        selftest::criterion_4,
        selftest::criterion_5,
        selftest::criterion_6,
        selftest::criterion_7,
        selftest::criterion_8,
        selftest::criterion_9,
        selftest::criterion_10,
        selftest::criterion_11,
    ];
    let mut failed = 0;
    for run in criteria {
        let started = Instant::now();
        let outcome = run();
        println!(
            "{} ({:.1} s)",
            outcome.line(),
            started.elapsed().as_secs_f64()
        );
        if !outcome.passed {
            failed += 1;
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
