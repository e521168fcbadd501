// Regenerates the classical-group tables and reports any mismatch.

use moduli_brauer::cli::table_section7;

pub fn run_example() -> moduli_brauer::Result<()> {
    let table = table_section7()?;
    println!("{}", table.to_markdown());
    if let Some(bad) = table.mismatches().next() {
        return Err(moduli_brauer::Error::Invalid(format!("{}: expected {}, got {}", bad.case, bad.expected, bad.got)));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> moduli_brauer::Result<()> {
    run_example()
}
