// Smith normal form and the finite abelian group toolkit.

use moduli_brauer::finab::{dual, exterior_square, quotient, smith_normal_form, subgroup, FinAbGroup, IntMatrix};

pub fn run_example() -> moduli_brauer::Result<()> {
    let m = IntMatrix::from_row_slice(3, 3, &[2, 4, 4, -6, 6, 12, 10, -4, -16]);
    let s = smith_normal_form(&m);
    println!("M = {m}");
    println!("diag(S) = {:?}, U·M·V == S: {}", s.diagonal(), &s.u * &m * &s.v == s.s);

    let g = FinAbGroup::from_relations(&m)?;
    println!("Z^3 / M = {g} (order {})", g.order());

    let a = FinAbGroup::abstract_sum([2, 4, 12]);
    let x = a.generator(2);
    let (h, _) = subgroup(&a, &[a.scale(3, &x)])?;
    let (q, _) = quotient(&a, &[a.scale(3, &x)])?;
    println!("A = {a}, <3x> = {h}, A/<3x> = {q}");
    println!("dual(A) = {}, Λ²A = {}", dual(&a), exterior_square(&a));
    println!("exponent {}, element order of x = {}", a.exponent(), a.element_order(&x));
    Ok(())
}

#[allow(dead_code)]
fn main() -> moduli_brauer::Result<()> {
    run_example()
}
