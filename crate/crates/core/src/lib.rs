//! Exact chord rings, module-valued crystals, augmented Weyl groups and
//! Golden Pair tilings.

pub mod chordring;
pub mod crystal;
pub mod pentagon;
pub mod bridge;
pub mod coxeter;
pub mod tiling;
pub mod alcove;
pub mod render;
pub mod io;
