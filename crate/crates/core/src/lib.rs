//! Chip-firing games and the order theory of their configuration and move
//! posets.

pub mod builder;
pub mod emit;
pub mod firing;
pub mod line;
pub mod notation;
pub mod order;
pub mod sample;
