//! Compares every explicit generating function with exact counts and prints
//! where they disagree.

use wedgewalk::closedform::{dp_comparisons, interpretation_comparators, solution_identities};
use wedgewalk::exact::rat;

fn main() -> wedgewalk::Result<()> {
    let mut all = dp_comparisons(60)?;
    all.extend(solution_identities(&rat(1, 2), 20)?);
    all.extend(interpretation_comparators(12)?);
    for r in all {
        match r.first_mismatch {
            None => println!("{:<32} agrees with {} through t^{}", r.name, r.reference, r.order),
            Some(n) => {
                println!("{:<32} differs from {} at t^{n}", r.name, r.reference);
                for d in r.diffs.iter().take(3) {
                    println!("    t^{}: {} vs {}", d.n, d.closed, d.reference);
                }
            }
        }
    }
    Ok(())
}
