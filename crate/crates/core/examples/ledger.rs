//! Prints the discrepancy ledger with freshly computed evidence.

use wedgewalk::ledger;

fn main() -> wedgewalk::Result<()> {
    print!("{}", ledger::list());
    for e in ledger::ENTRIES {
        println!();
        print!("{}", ledger::explain(e.id)?);
    }
    Ok(())
}
