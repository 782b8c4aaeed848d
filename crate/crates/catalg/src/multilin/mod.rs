//! Multilinearity for a monoidal monad.

mod monoidal_monad;

pub use monoidal_monad::{check_monoidal_monad, MonoidalMonad};
