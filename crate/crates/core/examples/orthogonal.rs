// `SO(n)`, `PSO(2n)` and `Omega(4n)`: stack and moduli Brauer groups at genus 3.

use moduli_brauer::brauer::BrauerReport;
use moduli_brauer::cli::parse_group;

fn show(s: &str) -> moduli_brauer::Result<()> {
    let r = BrauerReport::compute(&parse_group(&format!("{s} genus=3"))?)?;
    println!(
        "{s:<14} stack {:<22} moduli {}",
        r.stack_brauer.group.as_ref().unwrap().label(),
        r.moduli_brauer.group.as_ref().unwrap()
    );
    Ok(())
}

pub fn run_example() -> moduli_brauer::Result<()> {
    for n in [9, 10, 12] {
        for d in 0..2 {
            show(&format!("SO({n}) d={d}"))?;
        }
    }
    for d in 0..4 {
        show(&format!("PSO(10) d={d}"))?;
        show(&format!("PSO(12) d={d}"))?;
    }
    for d in 0..2 {
        show(&format!("Omega(12) d={d}"))?;
        show(&format!("Omega(16) d={d}"))?;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> moduli_brauer::Result<()> {
    run_example()
}
