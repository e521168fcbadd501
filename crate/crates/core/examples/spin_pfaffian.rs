// Twisted `Spin(n)`: Brauer group and the smallest Pfaffian power that descends.

use moduli_brauer::brauer::BrauerReport;
use moduli_brauer::cli::parse_group;

pub fn run_example() -> moduli_brauer::Result<()> {
    for n in 7..=14 {
        let classes = if n % 2 == 1 { 2 } else { 4 };
        for d in 0..classes {
            let spec = parse_group(&format!("Spin({n}) d={d} genus=3"))?;
            let r = BrauerReport::compute(&spec)?;
            println!(
                "Spin({n:>2}) δ={:<6} Br = {:<8} power {}",
                format!("{:?}", spec.delta()),
                r.moduli_brauer.group.as_ref().unwrap(),
                r.descent_power.unwrap()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> moduli_brauer::Result<()> {
    run_example()
}
