//! Expands explicit generating functions and prints their first
//! coefficients.
//!
//! ```text
//! cargo run --example series -- sym_g1 asym_k1 theta_sym:1/2
//! ```

use wedgewalk::closedform::{gf_series, GfKind};

fn main() -> wedgewalk::Result<()> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["dyck", "sym_g1", "asym_k1", "bargraph:2", "theta_sym:1/2"]
            .map(String::from)
            .to_vec();
    }
    for name in names {
        let kind: GfKind = name.parse()?;
        let s = gf_series(&kind, 12)?;
        println!("{kind:<16} {s}");
    }
    Ok(())
}
