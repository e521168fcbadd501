// Products and non-classical quotients, where only graded pieces may be known.

use moduli_brauer::brauer::{psi_g, BrauerReport};
use moduli_brauer::cli::{parse_group, render};

pub fn run_example() -> moduli_brauer::Result<()> {
    for s in [
        "type=A1xA1 pi1=gens:(1,1) delta=(1,1) genus=3",
        "type=A3 pi1=mu(2) delta=(2) genus=3",
        "type=A5 pi1=gens:(2) delta=(0) genus=3",
        "type=A1xC3 pi1=trivial genus=3",
        "E7ad d=1 genus=3",
    ] {
        let spec = parse_group(s)?;
        let r = BrauerReport::compute(&spec)?;
        println!("{}", render(&spec));
        println!("    Ψ(G) = {}, coker ev = {}", psi_g(&spec)?.group, r.coker_ev);
        println!("    stack: {:?}, order {}", r.stack_brauer.split, r.stack_brauer.order);
        println!("    moduli: {:?}, order {}", r.moduli_brauer.split, r.moduli_brauer.order);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> moduli_brauer::Result<()> {
    run_example()
}
