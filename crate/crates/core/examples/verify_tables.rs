//! Runs every catalog check and prints a summary line per entry.

use symbreak::catalog::verify::{verify_exceptions, verify_sweep, Effort};
use symbreak::catalog::Sweep;

fn main() {
    let mut reports = Vec::new();
    for sweep in [Sweep::Doubled, Sweep::Twisted, Sweep::Mixed, Sweep::AlternatingTwist] {
        reports.extend(verify_sweep(sweep, Effort::Quick));
    }
    reports.extend(verify_exceptions(Effort::Full));
    for r in &reports {
        println!("{:<13} {:<18} {} checks", r.overall().to_string(), r.id, r.checks.len());
    }
}
