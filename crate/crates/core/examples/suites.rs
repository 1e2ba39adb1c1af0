//! Running a verification suite from code and listing its claims.

use regulib::report::{run_suite, Suite, SuiteParams};

fn main() -> regulib::Result<()> {
    let report = run_suite(Suite::Lemma27, &SuiteParams::default())?;
    for item in &report.items {
        for c in &item.claims {
            println!("{:<14} {:<28} {} {}", item.id, c.name, c.actual, if c.pass { "ok" } else { "FAIL" });
        }
    }
    println!("pass: {}", report.pass);
    Ok(())
}
