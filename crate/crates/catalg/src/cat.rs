//! A small category interface.
//!
//! The axiom checkers in [`crate::moncat`] are written once against this
//! trait and instantiated on finite sets, G-graded sets, truncated species,
//! and Eilenberg-Moore algebra categories.

use crate::ctx::Ctx;
use crate::error::{CatError, Result};
use crate::finset::{all_maps, FinMap, FinSet};
use std::fmt::Debug;

pub trait Category: Clone + Send + Sync + 'static {
    type Obj: Clone + PartialEq + Debug + Send + Sync;
    type Mor: Clone + PartialEq + Debug + Send + Sync;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `f` then `g` (i.e. `g . f`).
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn is_invertible(&self, f: &Self::Mor) -> bool;
    fn invert(&self, f: &Self::Mor) -> Result<Self::Mor>;
    /// Enumerates the hom-set under the budget; used by naturality oracles.
    fn hom(&self, x: &Self::Obj, y: &Self::Obj, ctx: &Ctx) -> Result<Vec<Self::Mor>>;
    fn obj_label(&self, x: &Self::Obj) -> String;
    fn mor_label(&self, f: &Self::Mor) -> String;

    /// Composes a chain of morphisms left to right.
    fn compose_all(&self, chain: &[&Self::Mor]) -> Result<Self::Mor> {
        let (first, rest) = chain
            .split_first()
            .ok_or_else(|| CatError::structural("empty composition chain"))?;
        let mut acc = (*first).clone();
        for f in rest {
            acc = self.compose(&acc, f)?;
        }
        Ok(acc)
    }
}

/// The ambient category of finite sets and total maps.
#[derive(Debug, Clone, Default)]
pub struct FinSetCat;

impl Category for FinSetCat {
    type Obj = FinSet;
    type Mor = FinMap;

    fn dom(&self, f: &FinMap) -> FinSet {
        f.dom().clone()
    }

    fn cod(&self, f: &FinMap) -> FinSet {
        f.cod().clone()
    }

    fn identity(&self, x: &FinSet) -> FinMap {
        FinMap::identity(x)
    }

    fn compose(&self, f: &FinMap, g: &FinMap) -> Result<FinMap> {
        f.then(g)
    }

    fn is_invertible(&self, f: &FinMap) -> bool {
        f.is_bijective()
    }

    fn invert(&self, f: &FinMap) -> Result<FinMap> {
        f.inverse()
    }

    fn hom(&self, x: &FinSet, y: &FinSet, ctx: &Ctx) -> Result<Vec<FinMap>> {
        all_maps(x, y, ctx)
    }

    fn obj_label(&self, x: &FinSet) -> String {
        x.to_canonical_string()
    }

    fn mor_label(&self, f: &FinMap) -> String {
        f.to_string()
    }
}
