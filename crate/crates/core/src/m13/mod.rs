//! Machinery specific to the projective plane of order 3: universal donors and
//! recipients, and the signed and dualized games.

mod dual;
mod signed;
mod tuples;

pub use dual::{dual_groupoid, dual_hypergraph, DualGameReport, DualMoves, Flag};
pub use signed::{
    minus, negation, negation_off, plus, signed_groupoid, SignedGameReport, SignedMoves,
    SignedPermutation,
};
pub use tuples::{
    all_tuples, donor_image_set, hole_stabilizer_orbit, is_universal_donor, orbit_representatives,
    verify_donors_and_recipients, DonorRecipientReport, OrbitSummary, SixTuple, KEY_SPACE,
    TUPLE_COUNT,
};
