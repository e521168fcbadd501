// The front end as a library: one JSON report and one markdown report.

use moduli_brauer::cli::{run, CliRequest, Format, RunMode};

pub fn run_example() -> moduli_brauer::Result<()> {
    let out = run(&CliRequest::new("SO(10) d=0 genus=3"))?;
    println!("{}\nexit code {}", out.document, out.exit_code);

    let mut req = CliRequest::new("Sp(6) twisted d=1");
    req.genus = Some(3);
    req.format = Format::Md;
    req.mode = RunMode::Moduli;
    println!("{}", run(&req)?.document);
    Ok(())
}

#[allow(dead_code)]
fn main() -> moduli_brauer::Result<()> {
    run_example()
}
