//! A finite-scale engine for monads on categories with several monoidal
//! structures.
//!
//! Everything here computes over explicit finite sets. The main pipelines:
//!
//! - [`finset`]: finite sets, total maps, and the colimit toolkit
//!   (products, coproducts, coequalizers, pushouts, map enumeration).
//! - [`moncat`]: monoidal, duoidal, and n-monoidal structure data together
//!   with exhaustive structural-axiom checkers, generic over a category
//!   instance ([`cat::Category`]).
//! - [`monad`]: monads, Eilenberg-Moore algebras, the free/forgetful
//!   adjunction, split forks, and creation of coequalizers in the algebra
//!   category.
//! - [`multilin`]: multilinear maps for a monoidal monad, Linton pairs and
//!   their coequalizers, universal multimaps, and the induced (colax)
//!   monoidal structure on algebras.
//! - [`lift`]: lifting duoidal and higher monoidal structure to algebra
//!   categories (bimonoidal, double monoidal, double comonoidal, and
//!   (p,q)-monoidal monads at n <= 3).
//! - [`builtins`]: the concrete monads every test drives: identity,
//!   pointing/copointing, finite-semiring distribution monads (powerset as
//!   the Boolean case), and linear monads, plus the smash product.
//! - [`species`]: truncated set species, the Cauchy and Hadamard products,
//!   the linear-order bimonoid, and the duoidal category of B-species.
//!
//! All values are immutable after construction and all operations are pure,
//! so sweeps parallelize freely; see [`ctx::Exec`] for the runtime switch
//! between sequential and rayon-backed execution.

pub mod builtins;
pub mod cat;
pub mod ctx;
pub mod error;
pub mod finset;
pub mod lift;
pub mod moncat;
pub mod monad;
pub mod multilin;
pub mod par;
pub mod report;
pub mod species;

pub use ctx::{Ctx, Exec};
pub use error::{CatError, Result};
pub use report::{CheckItem, CheckReport};
