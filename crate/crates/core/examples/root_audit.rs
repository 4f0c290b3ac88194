//! Finds every zero of the Q- and P-family polynomials by two methods and
//! lists those inside |t| < 1/2.

use wedgewalk::asymptotics::root_audit;

fn main() -> wedgewalk::Result<()> {
    let audit = root_audit(20, 40)?;
    println!(
        "k in {:?}: max residual {}, strategies agree: {}",
        audit.k_range,
        audit.max_residual.to_sci_string(3),
        audit.strategies_agree
    );
    for f in &audit.families {
        println!(
            "{} k={:<3} degree {:<3} min |t| = {}",
            f.family,
            f.k,
            f.degree,
            f.min_modulus
                .as_ref()
                .map_or("none".into(), |m| m.with_digits(8).to_string())
        );
    }
    for r in &audit.in_disk {
        println!(
            "inside the disk: {} k={} t = {} (other branch: {})",
            r.family,
            r.k,
            r.root.re.with_digits(20),
            r.other_branch
        );
    }
    println!("audit passed: {}", audit.passed());
    Ok(())
}
