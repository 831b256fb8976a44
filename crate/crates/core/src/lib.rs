//! Exact-arithmetic toolkit for the derived representation type of Schur
//! and infinitesimal Schur algebras.
//!
//! The crate classifies which Schur algebras `S(n, d)` and infinitesimal
//! Schur algebras `S(n, d)_r` are derived tame, and constructs and verifies
//! the complete lists of indecomposable objects in the bounded derived
//! categories of the three algebras that occur for derived-tame blocks:
//! the ground field, `A_2`, and `F_3`.
//!
//! The main entry points, one per subsystem:
//!
//! * [`schur`]: the decision procedure on `(p, n, d[, r])`, symmetric-group
//!   block computation through p-cores, and the wildness-witness complexes.
//! * [`catalog`]: all block algebras as quivers with relations.
//! * [`a2`]: the eight families of indecomposable complexes over `A_2`,
//!   with enumeration by cohomology vector.
//! * [`f3`] and [`semichain`]: the bunch-of-semi-chains combinatorics for
//!   `F_3` (words, strings, bands), string/band representations, and the
//!   projective-complex constructor.
//! * [`complex`] and [`homotopy`]: bounded complexes of projectives,
//!   cohomology, truncations, minimal resolutions, and the
//!   indecomposability/isomorphism oracle used to verify every list.
//!
//! Everything runs over the rationals or a prime field; there is no
//! floating point. See the `examples/` directory for one runnable program
//! per capability, and the `derived-schur` binary for the JSON command-line
//! interface.

pub mod a2;
pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod complex;
pub mod f3;
pub mod homotopy;
pub mod json;
pub mod mat;
pub mod module;
pub mod partitions;
pub mod proj;
pub mod quiver;
pub mod scalar;
pub mod schur;
pub mod semichain;

use rand::SeedableRng;

/// The deterministic RNG used by every sampling fallback in the crate.
pub fn seeded_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
