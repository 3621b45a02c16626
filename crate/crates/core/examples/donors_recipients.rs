//! Sweeps all ordered 6-tuples of plane points: donors are the tuples holding
//! the hole, universal recipients the tuples that contain a line.

use conway_core::designs::families;
use conway_core::groupoid::build_groupoid;
use conway_core::m13::verify_donors_and_recipients;

fn main() -> conway_core::Result<()> {
    let plane = families::pg23();
    let g = build_groupoid(&plane, 0)?;
    let r = verify_donors_and_recipients(&g, &plane);
    println!("tuples swept:             {}", r.tuples);
    println!("hole-stabilizer orbits:   {}", r.orbits.len());
    println!("donors match the hole:    {}", r.donors_match_hole);
    println!("universal recipients:     {}", r.universal_recipients);
    println!("tuples containing a line: {}", r.tuples_containing_a_line);
    println!("holds:                    {}", r.holds);
    Ok(())
}
