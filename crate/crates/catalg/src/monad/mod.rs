//! Monads on finite sets, Eilenberg-Moore algebras, the free/forgetful
//! adjunction, split forks, and creation of coequalizers in the algebra
//! category.

mod algebra;
mod comonad;
mod create;
mod data;
mod fork;

pub use algebra::{
    algebra_law_witness, algebra_maps, algebra_maps_from_free, bar, enumerate_algebras,
    free_algebra, is_algebra, unbar, AlgebraMap, AlgebraObj,
};
pub use comonad::{
    check_comonad, enumerate_coalgebras, is_coalgebra, lift_monad_to_coalgebras, CoMonadData,
    CoalgebraObj, MixedDistributiveLaw,
};
pub use create::{
    create_coequalizer, induce_structure, quotient_free_by_congruence, CreatedCoequalizer,
};
pub use data::{check_monad, probe_depth, ElemFn, MapElemFn, MonadData, ObjFn};
pub use fork::check_split_fork;

#[cfg(test)]
mod tests;
