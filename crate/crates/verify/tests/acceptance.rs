//! Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

fn main() -> ExitCode {
    let mut failed = 0;
    let criteria = zsl_verify::criteria();
    println!("\nacceptance: {} criteria", criteria.len());
    for c in &criteria {
        let start = Instant::now();
        let v = (c.check)();
        let tag = if v.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {} ... {tag}  {} [{:.2?}]\n    {}",
            c.id,
            c.title,
            start.elapsed(),
            v.detail
        );
        if !v.passed {
            failed += 1;
        }
    }
    println!(
        "\nacceptance result: {} passed; {failed} failed\n",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
