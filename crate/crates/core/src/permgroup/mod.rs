//! Finite permutation groups: permutations, stabilizer chains, orbits and blocks.

mod blocks;
mod bsgs;
mod perm;

pub use blocks::{factorial, BlockSystem};
pub use bsgs::PermutationGroup;
pub use perm::{Parity, Permutation};

/// Exact group order.
pub type BigOrder = num_bigint::BigUint;

/// Serializes a [`BigOrder`] as a decimal string, so consumers never round it.
pub mod order_string {
    use super::BigOrder;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigOrder, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }
}
