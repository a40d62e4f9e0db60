//! Sparse multivariate polynomials over ℚ and Gröbner-basis machinery.

mod groebner;
mod ideal;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use groebner::{buchberger, GroebnerBasis};
pub use ideal::{eliminate, ideal_member, intersect, product, radical_member, saturate};
pub use monomial::Monomial;
pub use parse::ParseError;
pub use polynomial::Polynomial;
pub use ring::{Ring, TermOrder, VarId};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("step budget of {limit} exhausted after {steps} steps ({basis_len} basis elements, {pending_pairs} pairs pending)")]
    BudgetExceeded { limit: u64, steps: u64, basis_len: usize, pending_pairs: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Cap on reduction steps for a single Gröbner computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: u64,
}

impl Budget {
    pub const DEFAULT_STEPS: u64 = 1_000_000;

    pub fn new(max_steps: u64) -> Self {
        Budget { max_steps }
    }

    pub fn unlimited() -> Self {
        Budget { max_steps: u64::MAX }
    }

    /// The default, overridden by `MARGALG_BUDGET` when it parses as an integer.
    pub fn from_env() -> Self {
        std::env::var("MARGALG_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Budget::new)
            .unwrap_or_default()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_STEPS)
    }
}
