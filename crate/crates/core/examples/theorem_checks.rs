//! Runs the structural implications against a few designs and prints each
//! check that applies. Designs must be supersimple.

use conway_core::catalog;
use conway_core::groupoid::verify_theorems;

fn main() -> conway_core::Result<()> {
    for name in ["pg23", "boolean:3", "symplectic:2", "quadratic:2:0"] {
        let h = catalog::design(name)?;
        let r = verify_theorems(&h, 0)?;
        println!("{name}: outcome {:?}, passed {}", r.facts.triangle_outcome, r.passed());
        for c in r.checks.iter().filter(|c| c.hypothesis) {
            println!("    {:<40} {:?}", c.name, c.status);
        }
    }
    Ok(())
}
