//! Research kernel for forbidden 0-1 matrix problems.
//!
//! The crate provides the combinatorial objects of the field — small 0-1
//! patterns, large 0-1 host matrices in dense-bitset and sparse-coordinate
//! form — together with the operations research code keeps reaching for:
//!
//! * ordered-submatrix containment (`P ≺ A`) with witness extraction and
//!   exhaustive occurrence enumeration,
//! * the lexicographic block construction `A_t` of dense matrices avoiding
//!   the acyclic pattern `X_t`, with exhaustive/sampled checkers for every
//!   structural property the construction relies on,
//! * exact extremal numbers `Ex(P, n)` at desk scale (branch and bound,
//!   exhaustive, randomized greedy lower bounds),
//! * pattern classification (lightness, permutation, acyclicity, class-s
//!   degeneracy) and single-1 line-removal reduction chains certifying
//!   polylogarithmic upper bounds.
//!
//! Everything here is pure computation over owned data: no IO, no global
//! state, no threads. The crate is `no_std`-compatible (requires `alloc`).
//! File formats, JSON reports and the command-line front end live in the
//! companion `exmat` crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod analysis;
pub mod construction;
pub mod containment;
pub mod extremal;
pub mod matrix;
pub mod pattern;
pub mod verify;

mod sampling;

pub use matrix::{BitMatrix, SparseMatrix};
pub use pattern::{Pattern, Transform};
