//! Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
//! any criterion fails.

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

fn main() -> ExitCode {
    let mut out = std::io::stdout();
    let mut failed = 0;
    for run in [
        bkschubert_suite::criterion_1,
        bkschubert_suite::criterion_2,
        bkschubert_suite::criterion_3,
        bkschubert_suite::criterion_4,
        bkschubert_suite::criterion_5,
        bkschubert_suite::criterion_6,
        bkschubert_suite::criterion_7,
        bkschubert_suite::criterion_8,
        bkschubert_suite::criterion_9,
    ] {
        let start = Instant::now();
        let c = run();
        if !c.passed() {
            failed += 1;
        }
        let _ = writeln!(out, "{} ({:.1} s)", c.line(), start.elapsed().as_secs_f64());
        let _ = out.flush();
    }
    let _ = writeln!(out, "{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
