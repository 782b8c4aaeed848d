//! The concrete monads and categories every pipeline drives.

mod monads;
mod semiring;

pub use monads::{
    distribution_monad, distribution_monoidal, identity_comonoidal, identity_monad,
    identity_monoidal, linear_comonoidal, linear_monad, linear_monoidal, pointing_comonoidal,
    pointing_monad, pointing_monoidal, powerset_monad, powerset_monad_bad_mu, powerset_monoidal,
};
pub use semiring::FiniteSemiring;
