//! Exhaustive enumeration of total maps, the workhorse behind every
//! universal-property oracle.

use super::map::FinMap;
use super::set::FinSet;
use crate::ctx::Ctx;
use crate::error::Result;

/// Number of total maps `A -> B` as a u128 (so refusals can name the count).
pub fn map_count(a: &FinSet, b: &FinSet) -> u128 {
    let base = b.len() as u128;
    let mut n: u128 = 1;
    for _ in 0..a.len() {
        n = n.saturating_mul(base);
    }
    n
}

/// Iterator over all total maps `A -> B` in canonical order (odometer over
/// codomain indices, most significant digit first in domain order).
#[derive(Debug)]
pub struct MapEnumerator {
    dom: FinSet,
    cod: FinSet,
    state: Option<Vec<u32>>,
}

impl Iterator for MapEnumerator {
    type Item = FinMap;

    fn next(&mut self) -> Option<FinMap> {
        let state = self.state.as_mut()?;
        let map = FinMap::from_indices(&self.dom, &self.cod, state.clone()).unwrap();
        // Advance the odometer; rightmost position varies fastest.
        let base = self.cod.len() as u32;
        let mut done = true;
        for slot in state.iter_mut().rev() {
            *slot += 1;
            if *slot < base {
                done = false;
                break;
            }
            *slot = 0;
        }
        if done {
            self.state = None;
        }
        Some(map)
    }
}

/// Enumerates all `|B|^|A|` maps exactly once, refusing when the count
/// exceeds the budget.
pub fn enumerate_maps(a: &FinSet, b: &FinSet, ctx: &Ctx) -> Result<MapEnumerator> {
    let count = map_count(a, b);
    ctx.admit(count)?;
    let state = if count == 0 {
        None
    } else {
        Some(vec![0u32; a.len()])
    };
    Ok(MapEnumerator {
        dom: a.clone(),
        cod: b.clone(),
        state,
    })
}

/// Collects the enumeration into a vector.
pub fn all_maps(a: &FinSet, b: &FinSet, ctx: &Ctx) -> Result<Vec<FinMap>> {
    Ok(enumerate_maps(a, b, ctx)?.collect())
}
