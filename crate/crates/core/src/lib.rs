//! Conway groupoids and their relatives.
//!
//! The crate builds 4-hypergraphs and triple systems, plays the moving-counter
//! game on them, and computes hole stabilizers, Conway groupoids and the
//! linear codes spanned by incidence matrices. Every group is represented
//! exactly through a base and strong generating set.
//!
//! Permutations compose left to right: `p.then(&q)` applies `p` first.

pub mod error;
pub mod budget;
pub mod catalog;
pub mod cli;
pub mod codes;
pub mod designs;
pub mod groupoid;
pub mod m13;
pub mod oracle;
pub mod permgroup;
pub mod pliable;
pub mod report;
pub mod service;
pub mod session;
pub mod verify;

pub use error::{Error, Result};
