//! Exact combinatorics engine for rook theory on skew Ferrers boards and the
//! structures it governs: labeled plane k-ary trees, colored rook placements,
//! truncated affine hyperplane arrangements, the bipartite graphs attached to
//! Linial boards, and the exponential-generating-function identities tying
//! them together.
//!
//! Everything is computed with arbitrary-precision integers and rationals;
//! no floating point is used anywhere.  Expensive enumerations and dynamic
//! programs are guarded by explicit caps ([`Limits`]) and report cap
//! violations as recoverable [`error::Error::ResourceLimit`] errors rather
//! than running away.
//!
//! Module map:
//! * [`poly`] — dense univariate polynomials over exact scalars, falling
//!   factorials, Lagrange interpolation.
//! * [`partitions`] — set partitions and the partition-lattice Möbius
//!   function.
//! * [`multipoly`] — sparse multivariate integer polynomials and weak
//!   compositions (statistics vectors).
//! * [`boards`] — skew Ferrers boards, rook numbers, factorial rook
//!   polynomials, and their partition-lattice expansion.
//! * [`trees`] — labeled plane k-ary trees, ascent/descent statistics, tree
//!   classes, and counting.
//! * [`bijection`] — colored rook placements, the block decomposition of
//!   flat placements, the placements-to-trees bijection, and Gessel
//!   polynomials.
//! * [`arrangements`] — characteristic polynomials of truncated affine
//!   arrangements by closed form and by finite-field counting, region
//!   counts, and bounded-region sequences.
//! * [`graphs`] — the bipartite graphs of Linial boards, chromatic
//!   polynomials, and maximum-matching counts.
//! * [`series`] — truncated power series over the rationals and the
//!   generating-function identity checks.
//! * [`verify`] — the aggregated invariant suites surfaced by the CLI.

pub mod arrangements;
pub mod bijection;
pub mod boards;
pub mod error;
pub mod graphs;
pub mod multipoly;
pub mod partitions;
pub mod poly;
pub mod series;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use poly::Poly;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Integer polynomial: the default scalar instantiation for rook vectors,
/// factorial polynomials, characteristic polynomials, and chromatic
/// polynomials.
pub type IntPoly = Poly<BigInt>;

/// Rational polynomial: used for exact interpolation before integrality is
/// established.
pub type RatPoly = Poly<BigRational>;

/// Caps on enumeration sizes and dynamic-programming state counts.
///
/// The defaults are deliberately generous for desk-scale inputs; both knobs
/// are surfaced on the command line (`--max-enum`, `--max-states`).
/// Operations exceeding a cap fail with [`error::Error::ResourceLimit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of dynamic-programming states (the rook DP uses
    /// `2^rows` states, so the default admits boards of up to 20 rows).
    pub max_states: u64,
    /// Maximum number of objects an enumeration may visit.
    pub max_enum: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_states: 1 << 20,
            max_enum: 10_000_000,
        }
    }
}
