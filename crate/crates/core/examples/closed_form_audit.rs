//! Runs the closed-form cross-checks and prints mismatching rows per claim.

use std::collections::BTreeMap;

use irrlab::verify::{check_claims, Status};

fn main() -> irrlab::Result<()> {
    irrlab::init_thread_pool_from_env()?;
    let records = check_claims(6)?;
    let mut by_claim: BTreeMap<&str, (usize, Vec<String>)> = BTreeMap::new();
    for r in &records {
        let entry = by_claim.entry(r.claim.as_str()).or_default();
        entry.0 += 1;
        if r.status == Status::Mismatch {
            entry.1.push(r.csv_line());
        }
    }
    for (claim, (total, mismatches)) in by_claim {
        println!("{claim}: {total} checked, {} mismatched", mismatches.len());
        for line in mismatches.iter().take(3) {
            println!("    {line}");
        }
    }
    Ok(())
}
