//! Discrete Morse theory on the order complex of the proper part of the
//! partition lattice.
//!
//! [`setpart`] and [`complex`] build the lattice and its nerve, [`perm`]
//! handles permutation groups and orbit complexes, [`morse`] holds matchings,
//! their validation, gluing and the Morse flow, [`construction`] builds the
//! equivariant matching with `(n−1)!` critical top cells level by level, and
//! [`homology`] computes integral homology by Smith normal form.

pub mod cli;
pub mod complex;
pub mod construction;
pub mod error;
pub mod homology;
pub mod matrix;
pub mod morse;
pub mod perm;
pub mod setpart;
pub mod verify;
