//! Exact chromatic-symmetric-function computations for natural unit interval
//! orders, driven by a trace calculus on strand diagrams.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: the
//! coefficient ring is arbitrary-precision rationals.
//!
//! * [`partition`] and [`symfun`]: partitions and symmetric functions in the
//!   power-sum, complete homogeneous and elementary bases.
//! * [`orders`]: shapes inside the staircase, the orders `P(λ)`, pattern
//!   avoidance and the shape-to-diagram construction.
//! * [`diagrams`]: strand diagrams, their colorings, the trace, the `∂_k`
//!   operator, the h-positivity reduction and the generalized search.
//! * [`oracle`]: brute-force reference computations.
#![no_std]

extern crate alloc;

pub mod diagrams;
mod error;
pub mod identities;
pub mod oracle;
pub mod orders;
pub mod partition;
pub mod symfun;

pub use error::{Error, Result};
pub use partition::Partition;
pub use symfun::{Basis, Positivity, SymFun};

/// Largest number of colorings any brute-force enumeration may visit.
pub const COLORING_GUARD: u64 = 10_000_000;

/// Largest `n` accepted by [`oracle::ch_gamma`].
pub const PERMUTATION_GUARD: usize = 10;

/// Largest `n` accepted by [`orders::enumerate_shapes`].
pub const SHAPE_GUARD: usize = 12;

/// Largest total pattern size accepted by [`orders::find_pattern`].
pub const PATTERN_GUARD: usize = 12;

/// Largest `m^n` accepted by [`oracle::proper_coloring_count`].
pub const PROPER_COLORING_GUARD: u64 = 100_000_000;

/// Largest number of diagrams [`diagrams::generate_diagrams`] may produce.
pub const SEARCH_GUARD: u64 = 10_000_000;
