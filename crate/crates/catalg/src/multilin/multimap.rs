//! Multilinear maps for a monoidal monad: a map out of a tensor of algebra
//! carriers whose square against the iterated structure map commutes.

use super::monoidal_monad::MonoidalMonad;
use crate::error::{CatError, Result};
use crate::finset::{FinMap, FinSet};
use crate::monad::AlgebraObj;

/// A candidate multilinear map between algebras: the underlying map goes
/// out of the left-nested tensor of the domain carriers.
#[derive(Clone, Debug)]
pub struct MultiMap {
    pub domain: Vec<AlgebraObj>,
    pub codomain: AlgebraObj,
    pub map: FinMap,
}

impl MultiMap {
    pub fn new(domain: Vec<AlgebraObj>, codomain: AlgebraObj, map: FinMap) -> Self {
        MultiMap {
            domain,
            codomain,
            map,
        }
    }

    pub fn arity(&self) -> usize {
        self.domain.len()
    }
}

fn carriers(domain: &[AlgebraObj]) -> Vec<FinSet> {
    domain.iter().map(|a| a.carrier.clone()).collect()
}

/// Exact pointwise evaluation of the multilinearity square; returns a
/// witness (an input and the two unequal outputs) when it fails. Nullary
/// maps are always multilinear; unary multilinearity is exactly the algebra
/// morphism condition.
pub fn multilinear_witness(m: &MonoidalMonad, f: &MultiMap) -> Result<Option<String>> {
    let t = &m.monad;
    let tensor = &m.tensor;
    let carr = carriers(&f.domain);
    let dom_tensor = tensor.tensor_all(&carr)?;
    if f.map.dom() != &dom_tensor {
        return Err(CatError::structural(format!(
            "multimap domain {} does not match the tensor of the carriers {}",
            f.map.dom(),
            dom_tensor
        )));
    }
    if f.map.cod() != &f.codomain.carrier {
        return Err(CatError::structural(
            "multimap codomain does not match the target carrier",
        ));
    }
    if f.domain.is_empty() {
        // automatic by phi0 = eta at the unit
        return Ok(None);
    }

    let t_carriers: Vec<FinSet> = f
        .domain
        .iter()
        .map(|a| t.t_obj(&a.carrier))
        .collect::<Result<Vec<_>>>()?;
    let t_dom = tensor.tensor_all(&t_carriers)?;
    let phi_iter = m.phi_iterated(&carr)?;
    let structures: Vec<FinMap> = f.domain.iter().map(|a| a.structure.clone()).collect();
    let structure_tensor = tensor.tensor_mor_all(&structures)?;

    for e in t_dom.iter() {
        // through phi, T f, and the target structure
        let via_phi = phi_iter.try_apply(e)?.clone();
        let via_tf = t.apply_map(&f.map, &via_phi)?;
        let lhs = f.codomain.structure.try_apply(&via_tf)?.clone();
        // through the domain structures and f
        let via_structs = structure_tensor.try_apply(e)?;
        let rhs = f.map.try_apply(via_structs)?.clone();
        if lhs != rhs {
            return Ok(Some(format!(
                "input {e}: via structure map {lhs}, via domain structures {rhs}"
            )));
        }
    }
    Ok(None)
}

pub fn is_multilinear(m: &MonoidalMonad, f: &MultiMap) -> Result<bool> {
    Ok(multilinear_witness(m, f)?.is_none())
}

/// The two one-sided bilinearity diagrams: `f` is bilinear iff freezing
/// either argument along the unit yields the algebra-action square.
/// Exactly arity 2.
pub fn kock_bilinear(m: &MonoidalMonad, f: &MultiMap) -> Result<bool> {
    if f.arity() != 2 {
        return Err(CatError::structural("the one-sided bilinearity criterion is binary"));
    }
    let t = &m.monad;
    let tensor = &m.tensor;
    let a = &f.domain[0];
    let b = &f.domain[1];
    let c = &f.codomain;
    let ta = t.t_obj(&a.carrier)?;
    let tb = t.t_obj(&b.carrier)?;
    let phi = m.phi_at(&a.carrier, &b.carrier)?;

    // left diagram on T A (x) B
    let left_dom = tensor.tensor_obj(&ta, &b.carrier)?;
    for e in left_dom.iter() {
        let s = e.fst()?;
        let y = e.snd()?;
        let lifted = phi.try_apply(&crate::finset::Element::pair(
            s.clone(),
            t.apply_eta(y)?,
        ))?;
        let via_tf = t.apply_map(&f.map, lifted)?;
        let lhs = c.structure.try_apply(&via_tf)?.clone();
        let rhs = f
            .map
            .try_apply(&crate::finset::Element::pair(
                a.structure.try_apply(s)?.clone(),
                y.clone(),
            ))?
            .clone();
        if lhs != rhs {
            return Ok(false);
        }
    }

    // right diagram on A (x) T B
    let right_dom = tensor.tensor_obj(&a.carrier, &tb)?;
    for e in right_dom.iter() {
        let x = e.fst()?;
        let s = e.snd()?;
        let lifted = phi.try_apply(&crate::finset::Element::pair(
            t.apply_eta(x)?,
            s.clone(),
        ))?;
        let via_tf = t.apply_map(&f.map, lifted)?;
        let lhs = c.structure.try_apply(&via_tf)?.clone();
        let rhs = f
            .map
            .try_apply(&crate::finset::Element::pair(
                x.clone(),
                b.structure.try_apply(s)?.clone(),
            ))?
            .clone();
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
