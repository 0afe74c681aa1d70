//! Certified upper bounds on the number of irreducible factors of univariate
//! integer polynomials and bivariate rational polynomials.
//!
//! Every bound is packaged as a [`Certificate`](certificates::Certificate)
//! holding the witnesses needed to re-check it, and every certificate can be
//! cross-checked against the brute-force factorizer in [`oracle`].

pub mod acceptance;
pub mod bipoly;
pub mod bivariate;
pub mod certificates;
pub mod error;
pub mod expr;
pub mod newton;
pub mod numeric;
pub mod oracle;
pub mod upoly;

pub use bipoly::{BiPoly, RatPoly, RhoHeight};
pub use certificates::{BoundKind, Certificate, TheoremId, Witnesses};
pub use error::{Error, Result};
pub use numeric::{Factorization, Integer};
pub use upoly::{IntPoly, TaylorCoeffs};

/// Seed used by every randomized routine unless overridden.
pub const DEFAULT_SEED: u64 = 0x1DC0_5EED;

/// Effort limits shared by the integer factorizer and the polynomial oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    /// Seed for the rho iteration constants and probabilistic primality bases.
    pub seed: u64,
    /// Rho iterations allowed per composite cofactor.
    pub rho_iterations: u64,
    /// Largest squarefree degree the polynomial oracle will attempt.
    pub oracle_degree_cap: usize,
    /// Interpolation candidates the polynomial oracle may examine per call.
    pub oracle_budget: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: DEFAULT_SEED,
            rho_iterations: 10_000_000,
            oracle_degree_cap: 16,
            oracle_budget: 50_000_000,
        }
    }
}

impl Config {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}
