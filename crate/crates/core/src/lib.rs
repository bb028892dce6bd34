//! Constant `Z_p`-towers of graph coverings, computed exactly.
//!
//! Given a finite directed multigraph `X` and a prime `p`, the constant
//! voltage assignment sends every edge to the same unit of `Z_p`. Reducing
//! modulo `p^n` gives derived graphs `X_n` whose connected components form
//! a `Z_p`-tower, and whose spanning-tree counts `κ_n` satisfy
//! `ord_p(κ_n) = μ p^n + λ n + ν` for large `n`.
//!
//! This crate is `no_std` (it needs `alloc`). Everything is exact integer
//! arithmetic; there is no floating point anywhere.
//!
//! * [`graph`]: the directed multigraph model, degree predicates and the
//!   cycle-weight lattice that decides whether a tower exists.
//! * [`tower`]: derived graphs modulo `p^n`, component counting, `n₀`.
//! * [`linalg`]: big-integer determinants, Kirchhoff counts, Smith normal
//!   form and polynomial-matrix determinants.
//! * [`iwasawa`]: the characteristic polynomial, Weierstrass preparation and
//!   the growth-law verifier.
//! * [`generators`]: cycles, bouquets, volcanoes and their recognizers.
//!
//! # Features
//! - `parallel` (implies `std`): evaluates independent determinants on a rayon pool. Results
//!   are merged in a fixed order, so output does not depend on scheduling.
#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod arith;
mod error;
pub mod generators;
pub mod graph;
pub mod iwasawa;
pub mod linalg;
pub mod tower;

pub use crate::error::{Error, NoTowerReason, Result};
pub use crate::graph::{CycleWeightProfile, DegreeProfile, DirectedMultigraph};
pub use crate::iwasawa::{IwasawaInvariants, LevelRecord, TowerReport};
pub use crate::linalg::{BigIntMatrix, IntPolynomial};
pub use crate::tower::{ConstantVoltage, DerivedGraph, Prime};
