// Twisted `Sp(2n)`, local factoriality, and `PSp(2n)` with the order equation.

use moduli_brauer::brauer::{br_twisted_sc, min_descending_power, sp_local_factoriality, BrauerReport};
use moduli_brauer::cli::parse_group;
use moduli_brauer::rootdata::{DynkinType, Family};

pub fn run_example() -> moduli_brauer::Result<()> {
    for n in 3..=8 {
        let t = DynkinType::new(Family::C, n)?;
        println!(
            "Sp({}), d=1: Br = {}, power {}, locally factorial: {}",
            2 * n,
            br_twisted_sc(t, &[1])?,
            min_descending_power(t, &[1])?,
            sp_local_factoriality(n)?
        );
    }
    for d in 0..2 {
        let r = BrauerReport::compute(&parse_group(&format!("PSp(6) d={d} genus=3"))?)?;
        let cc = &r.cross_check;
        println!(
            "PSp(6), d={d}: stack {}, m = {:?}, |Λ²Γ|/m·|Br tw| = {:?}, |coker|·|Br stack| = {:?}",
            r.stack_brauer.group.as_ref().unwrap(),
            cc.m,
            cc.lhs,
            cc.rhs
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> moduli_brauer::Result<()> {
    run_example()
}
