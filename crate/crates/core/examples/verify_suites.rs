//! Runs every verification suite in the manifest and prints a verdict line
//! per suite.

use wedgewalk::cli::{run_suite, suites};

fn main() -> wedgewalk::Result<()> {
    for spec in suites() {
        let v = run_suite(&spec.name, None)?;
        let failed = v.checks.iter().filter(|c| !c.ok).count();
        println!(
            "{:<16} {:?} ({} checks, {failed} not holding, ledger {:?})",
            v.suite,
            v.status,
            v.checks.len(),
            v.ledger
        );
    }
    Ok(())
}
