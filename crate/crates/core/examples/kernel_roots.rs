//! Expands the kernel roots at a rational point and checks the iterated
//! compositions against their closed forms.

use wedgewalk::exact::rat;
use wedgewalk::kernel::{
    beta_iterate, gamma_iterate, group_law_check, qbar_q_check, root, KernelSystem, RootKind,
};

fn main() -> wedgewalk::Result<()> {
    let a = rat(1, 2);
    let order = 10;
    for sys in [KernelSystem::symmetric(1), KernelSystem::asymmetric(1)] {
        for which in [RootKind::BetaMinus, RootKind::BetaPlus] {
            let r = root(&sys, which, &a, order)?;
            println!("{} {which}({a}) = {}", sys.wedge, r.expansion);
        }
    }
    for n in 1..=6 {
        let c = beta_iterate(n, &a, 30)?.check("beta_n", &a, 30)?;
        println!("beta_{n}: composed = closed through t^30: {}", c.holds());
    }
    for n in 1..=4 {
        let c = gamma_iterate(n, &a, 30)?.check("gamma_n", &a, 30)?;
        println!("gamma_{n}: composed = closed through t^30: {}", c.holds());
    }
    for c in group_law_check(1, &a, 30)? {
        println!("{} [{}]: {}", c.identity, c.parameters, c.holds());
    }
    println!("Qbar Q = t^3: {}", qbar_q_check(&a, 39)?.holds());
    Ok(())
}
