//! Groupoids of pliable functions rather than designs, with the primitivity
//! bound checked on each.

use conway_core::pliable::{from_group, from_spec, primitivity_check, GroupTable, PliableFunction};

fn show(name: &str, f: &PliableFunction) -> conway_core::Result<()> {
    let c = primitivity_check(f)?;
    println!(
        "{name:<10} n={:<3} mu={:<3} |L|={:<10} group={:<5} primitive={:?} status={:?}",
        c.n, c.mu, c.groupoid.groupoid_size, c.is_group, c.primitive, c.status
    );
    Ok(())
}

fn main() -> conway_core::Result<()> {
    for spec in ["paley6", "affine:2", "affine:3", "cyclic:5", "cyclic:7"] {
        show(spec, &from_spec(spec)?)?;
    }
    show("klein", &from_group(&GroupTable::elementary_abelian(2))?)?;
    show("c2^3", &from_group(&GroupTable::elementary_abelian(3))?)?;
    Ok(())
}
