//! Computes the asymptotic constants and prints each next to its printed
//! value.
//!
//! ```text
//! cargo run --release --example asymptotic_constants -- 40
//! ```

use wedgewalk::asymptotics::{
    accuracy_table, constant_a0, constant_b0, constant_halfplane, constant_theta, constants_a1a2, A1A2Method,
    B0_SAMPLES,
};

fn main() -> wedgewalk::Result<()> {
    let digits: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(30);

    println!("{}", constant_a0(digits)?);
    for r in constants_a1a2(A1A2Method::Analytic, digits, 0)? {
        println!("{r}");
    }
    for r in constants_a1a2(A1A2Method::Fit, digits, 200)? {
        println!("{r}");
    }
    println!("{}", constant_theta(digits)?);
    for r in constant_b0(&B0_SAMPLES, digits)? {
        println!("{r}");
    }
    for r in constant_halfplane(400, digits)? {
        println!("{r}");
    }
    for row in accuracy_table()?.rows {
        println!(
            "n={:<2} exact {:<22} relative error {:.5} (bound {})",
            row.n, row.exact, row.rel_error, row.bound
        );
    }
    Ok(())
}
