//! Runs the ten acceptance criteria and prints one line per criterion.
//! Exits non-zero if any criterion fails or cannot be computed.

use std::process::ExitCode;
use std::thread;
use std::time::Instant;

use airystable::verify::{criterion_name, run_criterion};
use airystable::CheckRow;

fn main() -> ExitCode {
    let start = Instant::now();
    let results: Vec<(u8, airystable::Result<Vec<CheckRow>>, f64)> = thread::scope(|scope| {
        let handles: Vec<_> = (1..=10u8)
            .map(|n| {
                scope.spawn(move || {
                    let t0 = Instant::now();
                    let rows = run_criterion(n);
                    (n, rows, t0.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion panicked"))
            .collect()
    });

    let mut failed = 0;
    for (n, rows, secs) in &results {
        match rows {
            Ok(rows) => {
                let bad: Vec<&CheckRow> = rows.iter().filter(|r| !r.pass).collect();
                let verdict = if bad.is_empty() { "PASS" } else { "FAIL" };
                println!(
                    "criterion {n:>2} {verdict} ({} checks, {secs:.1}s) {}",
                    rows.len(),
                    criterion_name(*n)
                );
                for r in &bad {
                    println!(
                        "    {} target={:e} actual={:e} tolerance={:e}",
                        r.check_id, r.target, r.actual, r.tolerance
                    );
                }
                if !bad.is_empty() {
                    failed += 1;
                }
            }
            Err(e) => {
                println!(
                    "criterion {n:>2} FAIL ({secs:.1}s) {}: {e}",
                    criterion_name(*n)
                );
                failed += 1;
            }
        }
    }
    let total = start.elapsed().as_secs_f64();
    println!(
        "acceptance: {} of 10 criteria passed in {total:.1}s",
        10 - failed
    );
    if failed == 0 && total <= 600.0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
