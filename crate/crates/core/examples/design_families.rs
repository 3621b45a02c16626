//! Builds every catalog design and prints its groupoid in one line each.

use conway_core::catalog;
use conway_core::groupoid::build_groupoid;

fn main() -> conway_core::Result<()> {
    for entry in catalog::list() {
        let h = catalog::design(&entry.name)?;
        let p = h.profile();
        let r = build_groupoid(&h, 0)?.classify()?;
        println!(
            "{:<14} n={:<3} blocks={:<4} lambda={:<8} |pi|={:<24} {:?}{}",
            entry.name,
            h.n(),
            h.blocks().len(),
            p.lambda.map_or("-".to_string(), |l| l.to_string()),
            r.hole_stabilizer_order,
            r.classification,
            if r.is_group { "  (group)" } else { "" },
        );
    }
    Ok(())
}
