//! Total maps between finite sets.

use super::element::Element;
use super::set::FinSet;
use crate::error::{CatError, Result};
use std::fmt;
use std::sync::Arc;

/// A total map `dom -> cod`, stored as codomain indices per domain index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinMap {
    dom: FinSet,
    cod: FinSet,
    tab: Arc<Vec<u32>>,
}

impl FinMap {
    /// Builds a map from an element-level function. Fails when an image
    /// falls outside `cod`.
    pub fn from_fn(dom: &FinSet, cod: &FinSet, f: impl Fn(&Element) -> Element) -> Result<FinMap> {
        let mut tab = Vec::with_capacity(dom.len());
        for e in dom.iter() {
            let img = f(e);
            let idx = cod.index_of(&img).map_err(|_| {
                CatError::structural(format!("image {img} of {e} is not in the codomain"))
            })?;
            tab.push(idx as u32);
        }
        Ok(FinMap {
            dom: dom.clone(),
            cod: cod.clone(),
            tab: Arc::new(tab),
        })
    }

    /// Like [`FinMap::from_fn`] but the function may fail.
    pub fn try_from_fn(
        dom: &FinSet,
        cod: &FinSet,
        f: impl Fn(&Element) -> Result<Element>,
    ) -> Result<FinMap> {
        let mut tab = Vec::with_capacity(dom.len());
        for e in dom.iter() {
            let img = f(e)?;
            let idx = cod.index_of(&img)?;
            tab.push(idx as u32);
        }
        Ok(FinMap {
            dom: dom.clone(),
            cod: cod.clone(),
            tab: Arc::new(tab),
        })
    }

    /// Builds a map from explicit codomain indices (one per domain element,
    /// in domain order).
    pub fn from_indices(dom: &FinSet, cod: &FinSet, tab: Vec<u32>) -> Result<FinMap> {
        if tab.len() != dom.len() {
            return Err(CatError::structural("index table length != |dom|"));
        }
        if tab.iter().any(|&i| i as usize >= cod.len()) {
            return Err(CatError::structural("index table out of codomain range"));
        }
        Ok(FinMap {
            dom: dom.clone(),
            cod: cod.clone(),
            tab: Arc::new(tab),
        })
    }

    pub fn identity(x: &FinSet) -> FinMap {
        FinMap {
            dom: x.clone(),
            cod: x.clone(),
            tab: Arc::new((0..x.len() as u32).collect()),
        }
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn indices(&self) -> &[u32] {
        &self.tab
    }

    /// Applies the map. Panics when `e` is not in the domain; use
    /// [`FinMap::try_apply`] at trust boundaries.
    pub fn apply(&self, e: &Element) -> &Element {
        self.try_apply(e).expect("element not in map domain")
    }

    pub fn try_apply(&self, e: &Element) -> Result<&Element> {
        let i = self.dom.index_of(e)?;
        Ok(self.cod.get(self.tab[i] as usize))
    }

    pub fn apply_index(&self, i: usize) -> usize {
        self.tab[i] as usize
    }

    /// `self` then `g` (that is, `g . self`).
    pub fn then(&self, g: &FinMap) -> Result<FinMap> {
        if self.cod != g.dom {
            return Err(CatError::structural(format!(
                "composition mismatch: cod {} vs dom {}",
                self.cod, g.dom
            )));
        }
        let tab = self.tab.iter().map(|&i| g.tab[i as usize]).collect();
        Ok(FinMap {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            tab: Arc::new(tab),
        })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod.len()];
        for &i in self.tab.iter() {
            hit[i as usize] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.cod.len()];
        for &i in self.tab.iter() {
            if hit[i as usize] {
                return false;
            }
            hit[i as usize] = true;
        }
        true
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.len() == self.cod.len() && self.is_injective()
    }

    pub fn inverse(&self) -> Result<FinMap> {
        if !self.is_bijective() {
            return Err(CatError::structural(format!("map is not a bijection: {self}")));
        }
        let mut tab = vec![0u32; self.cod.len()];
        for (i, &j) in self.tab.iter().enumerate() {
            tab[j as usize] = i as u32;
        }
        Ok(FinMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            tab: Arc::new(tab),
        })
    }

    /// All domain elements mapping onto `target`.
    pub fn preimage(&self, target: &Element) -> Vec<&Element> {
        match self.cod.index_of(target) {
            Ok(t) => self
                .tab
                .iter()
                .enumerate()
                .filter(|(_, &j)| j as usize == t)
                .map(|(i, _)| self.dom.get(i))
                .collect(),
            Err(_) => Vec::new(),
        }
    }

    /// Restricts the codomain to `sub` (which must contain the image).
    pub fn corestrict(&self, sub: &FinSet) -> Result<FinMap> {
        FinMap::from_fn(&self.dom, sub, |e| self.apply(e).clone())
    }
}

impl fmt::Display for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.dom.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}↦{}", self.cod.get(self.tab[i] as usize))?;
        }
        write!(f, "]")
    }
}
