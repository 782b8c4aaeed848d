//! Finite sets, total maps, and the (co)limit toolkit on which every other
//! module computes.

mod colimits;
mod element;
mod enumerate;
mod map;
mod set;

pub use colimits::{
    coequalizer, copairing, coproduct, pairing, product, pushout, quotient_by_pairs,
};
pub use element::{parse_element, Element};
pub use enumerate::{all_maps, enumerate_maps, map_count, MapEnumerator};
pub use map::FinMap;
pub use set::FinSet;

#[cfg(test)]
mod tests;
