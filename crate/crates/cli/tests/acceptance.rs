//! Acceptance suite: one line per criterion, then a hard failure if any
//! criterion did not hold. Run with `--nocapture` to see the lines.

use sedenion_cli::verify::{run_criterion, DEFAULT_SEED};

const CRITERIA: [&str; 12] = [
    "table fidelity",
    "triple counts",
    "zero-divisor completeness",
    "GoTo listings",
    "box-kites",
    "production rules",
    "recombinant DNA",
    "Seinfeld census",
    "flowmorph suite",
    "Pathion",
    "numeric properties",
    "lanyard census",
];

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for (i, name) in CRITERIA.iter().enumerate() {
        let n = i as u8 + 1;
        let checks = run_criterion(n, DEFAULT_SEED);
        assert!(!checks.is_empty(), "criterion {n} has no checks");
        let ok = checks.iter().all(|c| c.passed);
        let ids: Vec<&str> = checks.iter().map(|c| c.id).collect();
        println!(
            "{} {n:>2} {name} [{}]",
            if ok { "PASS" } else { "FAIL" },
            ids.join(", ")
        );
        for c in &checks {
            for d in &c.details {
                println!("        {d}");
            }
            for f in &c.failures {
                println!("        ! {f}");
            }
        }
        if !ok {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
