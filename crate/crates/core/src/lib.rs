//! Exact engine for Galois-refined Alperin weight counts on small permutation groups.

pub mod blocks;
pub mod gf;
pub mod group;
pub mod harness;
pub mod modrep;
pub mod psub;
pub mod rng;
