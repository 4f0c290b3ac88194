//! Counts walks in every family and prints the first terms, plus timing for
//! a long symmetric and asymmetric run.
//!
//! ```text
//! cargo run --example count_walks -- 400
//! ```

use std::time::Instant;

use wedgewalk::enumerate::{count_walks, ModelKind, WedgeModel};

fn main() -> wedgewalk::Result<()> {
    let n_long: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200);

    for kind in ModelKind::ALL {
        let model = WedgeModel::new(kind, 1)?;
        let t = count_walks(model, 10)?;
        let head: Vec<String> = t.counts.iter().map(|c| c.to_string()).collect();
        println!("{:<16} {}", kind.name(), head.join(", "));
    }

    for model in [
        WedgeModel::symmetric(1),
        WedgeModel::asymmetric(1),
        WedgeModel::halfplane(),
    ] {
        let start = Instant::now();
        let t = count_walks(model, n_long)?;
        let last = t.get(n_long).to_string();
        println!(
            "{model}: c_{n_long} has {} digits ({:.2?})",
            last.len(),
            start.elapsed()
        );
    }
    Ok(())
}
