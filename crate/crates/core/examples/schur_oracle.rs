// `Λ²A` against the 2-cocycle Schur multiplier for small groups.

use moduli_brauer::finab::{exterior_square, schur_multiplier_oracle, FinAbGroup};

pub fn run_example() -> moduli_brauer::Result<()> {
    for orders in [vec![2, 2], vec![2, 4], vec![2, 2, 2], vec![4, 4], vec![2, 2, 4], vec![3, 3]] {
        let a = FinAbGroup::abstract_sum(orders);
        let fast = exterior_square(&a);
        let slow = schur_multiplier_oracle(&a)?;
        println!("{a:<16} Λ² = {fast:<12} H²(A, C*) = {slow:<12} agree: {}", fast.is_isomorphic(&slow));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> moduli_brauer::Result<()> {
    run_example()
}
