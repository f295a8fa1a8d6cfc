//! Signed permutations under context directed reversals and swaps.

pub mod analysis;
pub mod error;
pub mod games;
pub mod graph;
pub mod ops;
pub mod perm;

pub use error::{Error, Result};
pub use games::{GameState, Player, Rule};
pub use graph::{build_overlap_graph, OrientedGraph};
pub use ops::{CdrMove, CdsMove, Move, SortTrace};
pub use perm::{Pointer, SignedPermutation};
