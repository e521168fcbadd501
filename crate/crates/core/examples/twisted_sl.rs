// Brauer groups of twisted `SL(n)` moduli: `Z/gcd(n, d)`.

use moduli_brauer::brauer::br_twisted_sc;
use moduli_brauer::rootdata::{DynkinType, Family};

pub fn run_example() -> moduli_brauer::Result<()> {
    for n in 2..=8usize {
        let t = DynkinType::new(Family::A, n - 1)?;
        let row: Vec<String> =
            (0..n as i64).map(|d| br_twisted_sc(t, &[d]).map(|g| g.order().to_string())).collect::<Result<_, _>>()?;
        println!("SL({n}): |Br| for d = 0..{} -> {}", n - 1, row.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> moduli_brauer::Result<()> {
    run_example()
}
