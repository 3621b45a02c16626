//! The ternary code of PG(2,3), its coset structure, and the chain down to
//! the perfect ternary Golay code.

use conway_core::codes::{golay_chain, CosetTable, Field, LinearCode};
use conway_core::designs::families;

fn main() -> conway_core::Result<()> {
    let code = LinearCode::from_design(&families::pg23(), Field::F3)?;
    let weights = code.weight_profile()?;
    println!("[{}, {}] ternary plane code, min distance {:?}", code.length(), code.dimension(), weights.min_distance);
    println!("weight-4 words: {}", weights.count(4));
    println!("dual weights:   {:?}", code.dual().weight_profile()?.nonzero_weights());

    let table = CosetTable::new(&code)?;
    println!("covering radius {}, coset classes {:?}", table.covering_radius(), table.class_sizes());
    println!("completely regular: {}", table.regularity().completely_regular);

    let chain = golay_chain(0)?;
    println!("extended {:?}", chain.extended);
    println!("punctured {:?}", chain.punctured);
    println!("sphere packing {} = {}: perfect {}", chain.sphere_packing.0, chain.sphere_packing.1, chain.perfect);
    Ok(())
}
