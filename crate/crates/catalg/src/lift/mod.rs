//! Lifting structure to algebra categories.

mod comonoidal;

pub use comonoidal::{check_comonoidal_monad, comonoidal_lift, ComonoidalMonad};
