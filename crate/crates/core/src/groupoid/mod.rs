//! Moves, hole stabilizers and Conway groupoids.
//!
//! A walk of the hole from `∞` back to `∞` permutes the other points; these
//! permutations form the hole stabilizer `π∞`, and all walks starting at `∞`
//! form the Conway groupoid `L∞`.

mod build;
mod classify;
mod moves;
mod theorems;

pub use build::{build_groupoid, ConwayGroupoid, Groupoid};
pub use classify::{
    classify_group, elementary_moves, falling_factorial, is_three_transposition, BlockSummary,
    Classification, GroupoidReport, ParityClass, ParityProfile,
};
pub use moves::{elementary_move, move_sequence, DesignMoves, MoveSystem};
pub use theorems::{
    is_boolean_like, verify_base_independence, verify_theorems, BaseIndependence, CheckStatus,
    ImplicationCheck, TheoremFacts, TheoremReport, TriangleOutcome,
};
