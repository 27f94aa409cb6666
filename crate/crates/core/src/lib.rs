//! Tropical birational Weyl group actions, τ-functions and q-Painlevé
//! dynamics with exact arithmetic.

pub mod algebra;
pub mod birational;
pub mod cli;
pub mod characters;
pub mod lattice;
pub mod painleve;
pub mod tau;
pub mod verify;
pub mod word;

pub use word::{Generator, WeylWord};
