//! Substitutes enumerated series into the functional equations and prints
//! the residual checks for several slopes.

use wedgewalk::cli::funceq_points;
use wedgewalk::kernel::{functional_eq_checks, residual_functional_eq, KernelSystem};

fn main() -> wedgewalk::Result<()> {
    for p in 1..=3 {
        for sys in [KernelSystem::symmetric(p), KernelSystem::asymmetric(p)] {
            for (a, b) in funceq_points() {
                let ok = functional_eq_checks(&sys, &a, &b, 30)?.iter().all(|c| c.holds());
                println!(
                    "{} p={p} a={a} b={b}: residual vanishes through t^30: {ok}",
                    sys.wedge
                );
            }
        }
    }
    let (a, b) = &funceq_points()[1];
    println!(
        "residual, p=2: {}",
        residual_functional_eq(&KernelSystem::symmetric(2), a, b, 8)?
    );
    Ok(())
}
