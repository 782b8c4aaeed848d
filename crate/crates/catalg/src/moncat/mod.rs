//! Monoidal, duoidal, and n-monoidal structure data with their
//! structural-axiom checkers, generic over a [`crate::cat::Category`].

mod algdata;
mod checks;
mod duoidal;
mod finset_structures;
mod graded;
mod structures;
mod sweep;

pub use algdata::{
    check_bimonoid_in, check_comonoid_in, check_double_comonoid_in, check_double_monoid_in,
    check_monoid_in, ComonoidIn, FiniteMonoid, MonoidIn,
};
pub use checks::{
    check_functor, check_iterate_coherence, check_monoidal, check_monoidal_functor, is_strong,
};
pub use duoidal::{
    check_3monoidal, check_duoidal, duoidal_from_braiding, duoidal_over_cartesian,
    duoidal_under_cocartesian, extend_with_cartesian, prepend_with_cocartesian, CartesianData,
    CocartesianData, DuoidalStructure, NMonoidalStructure, Obj4ToMor,
};
pub use finset_structures::{
    braided_cartesian_duoidal, cartesian_data, cartesian_structure, cocartesian_data,
    cocartesian_structure,
};
pub use graded::{graded_sets_duoidal, GradedCat, GradedMor, GradedObj};
pub use structures::{
    Direction, FunctorData, MonoidalFunctorStructure, MonoidalStructure, MorFn2, Obj2ToMor,
    Obj3ToMor, ObjFn2, ObjToMor,
};
pub use sweep::{hom_sample, item_from_sweep, sweep_indices, sweep_objects};

#[cfg(test)]
mod tests;
