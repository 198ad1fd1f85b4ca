//! Runs every acceptance criterion at full size and prints one line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cacti_core::verify::{criterion, criterion_title, Scale};

/// Wall-clock limits per criterion.
const LIMITS: [u64; 13] = [60, 30, 300, 300, 120, 120, 600, 120, 60, 60, 60, 600, 600];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in 1..=13 {
        let start = Instant::now();
        let outcome = criterion(c, Scale::Full);
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(LIMITS[c - 1]);
        let (ok, detail) = match &outcome {
            Ok(checks) => {
                let bad: Vec<_> = checks.iter().filter(|k| !k.pass).collect();
                let detail = match bad.first() {
                    Some(k) => format!(
                        "{} failing, first: {} ({} vs {})",
                        bad.len(),
                        k.name,
                        k.lhs,
                        k.rhs
                    ),
                    None => format!("{} checks", checks.len()),
                };
                (bad.is_empty() && !checks.is_empty(), detail)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = elapsed <= limit;
        let pass = ok && in_time;
        if !pass {
            failed += 1;
        }
        let timing = if in_time {
            format!("{:.1}s", elapsed.as_secs_f64())
        } else {
            format!(
                "{:.1}s over the {}s limit",
                elapsed.as_secs_f64(),
                limit.as_secs()
            )
        };
        println!(
            "{} criterion {c:>2}: {} [{detail}; {timing}]",
            if pass { "PASS" } else { "FAIL" },
            criterion_title(c)
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
