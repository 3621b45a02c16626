//! The 13-point game on PG(2,3): the hole stabilizer is M12 acting on the
//! other twelve points, and a short closed walk already lands in it.

use conway_core::designs::families;
use conway_core::groupoid::build_groupoid;

fn main() -> conway_core::Result<()> {
    let plane = families::pg23();
    let g = build_groupoid(&plane, 0)?;
    let report = g.classify()?;
    println!("hole stabilizer order: {}", report.hole_stabilizer_order);
    println!("groupoid size:         {}", report.groupoid_size);
    println!("transitivity degree:   {}", report.transitivity_degree);
    println!("sharply transitive:    {}", report.sharply_transitive);
    println!("is a group:            {}", report.is_group);

    let walk = [0, 11, 1, 0];
    let p = g.system().sequence(&walk)?;
    println!("walk {walk:?} gives {p}, in the stabilizer: {}", g.hole_stabilizer().contains(&p)?);

    // Every point is reached by a tree path; its return walk closes the loop.
    for a in [4, 9] {
        println!("tree path to {a}: {:?}", g.tree_path(a));
    }
    Ok(())
}
