//! Exact-arithmetic engines for the family of power ideals generated by
//! the k^n forms (x_0 + xi^{g_1} x_1 + ... + xi^{g_n} x_n)^{(k-1)d}, with
//! xi a primitive k-th root of unity, and for the dual schemes of fat
//! points supported on the roots-of-unity points of projective n-space.
//!
//! The crate computes Hilbert functions, Hilbert series, minimal-generator
//! counts and Betti numbers by several independent routes — a proved k = 2
//! sum, a conjectured general-k sum, closed-form series, Macaulay duality
//! through the fat-point side — and ships brute-force linear-algebra
//! oracles (exact ranks over Q and over the cyclotomic field Q(xi)) to
//! cross-check every formula.
//!
//! Batch computations are data-parallel through rayon; building with
//! `--no-default-features` drops the rayon dependency and runs the same
//! code sequentially.

pub mod error;
pub mod exec;
pub mod fatpoints;
pub mod grading;
pub mod hilbert;
pub mod numerics;
pub mod oracle;
pub mod sparsepoly;

pub use error::{Error, Result};
pub use exec::ExecMode;
pub use grading::{Multicycle, Params};
pub use hilbert::{HilbertFunction, HilbertSeries, Method};
pub use oracle::OracleConfig;
pub use sparsepoly::SparseIntPoly;
