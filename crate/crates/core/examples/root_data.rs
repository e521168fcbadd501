// Cartan matrices, coroot Gram matrices, centers and linking forms.

use moduli_brauer::rootdata::{center, DynkinType};

pub fn run_example() -> moduli_brauer::Result<()> {
    for name in ["A3", "B3", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"] {
        let t: DynkinType = name.parse()?;
        let z = center(t);
        println!("{t}: det Cartan = {:>2}, Z = {}", t.cartan_matrix().map(|x| x as f64).determinant().round(), z.group);
        for (i, row) in z.form.values().iter().enumerate() {
            let row: Vec<String> = row.iter().map(|q| q.to_string()).collect();
            println!("    b̄(e{i}, -) = [{}]", row.join(", "));
        }
    }
    let c2: DynkinType = "C2".parse()?;
    println!("Cartan(C2) = {}", c2.cartan_matrix());
    println!("Gram(C2) = {}", c2.coroot_gram());
    Ok(())
}

#[allow(dead_code)]
fn main() -> moduli_brauer::Result<()> {
    run_example()
}
