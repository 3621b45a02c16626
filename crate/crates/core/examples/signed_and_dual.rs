//! Two variants of the plane game: the signed game, a double cover whose
//! negation is central, and the dual game played on point-line flags.

use conway_core::m13::{dual_groupoid, signed_groupoid};

fn main() -> conway_core::Result<()> {
    let signed = signed_groupoid(0)?;
    println!("signed hole stabilizer: {}", signed.groupoid.hole_stabilizer_order);
    println!("negation central:       {}", signed.negation_central);
    println!("quotient order:         {}", signed.quotient_order);

    let dual = dual_groupoid(0)?;
    println!("dual hole: point {} on line {}", dual.hole.point, dual.hole.line);
    println!("dual hole stabilizer:   {}", dual.groupoid.hole_stabilizer_order);
    let sizes: Vec<usize> = dual.orbits.iter().map(Vec::len).collect();
    println!("orbits on non-hole symbols: {sizes:?}");
    println!("restriction to points faithful: {}", dual.point_restriction_faithful);
    Ok(())
}
