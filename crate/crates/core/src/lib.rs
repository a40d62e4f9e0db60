//! Independence ideals of multi-way contingency tables.
//!
//! The crate is organised bottom-up:
//!
//! - [`table`]: exact-rational tables, margins, complete and Δ-independence,
//!   the independent-plus-zero-margin decomposition and complex detection.
//! - [`linalg`]: exact Gaussian elimination (rank, kernels) over ℚ.
//! - [`poly`]: sparse multivariate polynomials, term orders, Buchberger's
//!   algorithm and the derived ideal operations.
//! - [`ideals`]: the rings R, S_Δ and the parameter rings, plus generator
//!   factories for I_Δ, L_𝒥, K_Δ, J_Δ, Q_Δ and the σ/τ/η maps.
//! - [`complex`]: simplicial complexes, vertex covers and the enumeration of
//!   minimal-prime candidates.
//! - [`verify`]: named, reproducible checks of the computational claims.
//! - [`cli`]: the command-line front end used by the `margalg` binary.

pub mod cli;
pub mod complex;
pub mod ideals;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod table;
pub mod verify;

pub use complex::{ComponentDescriptor, FaceSet, SimplicialComplex};
pub use poly::{Budget, GroebnerBasis, Monomial, PolyError, Polynomial, Ring, TermOrder};
pub use rational::Q;
pub use table::{MarginSelector, Shape, Slot, Table, TableError};
