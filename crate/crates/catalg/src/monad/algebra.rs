//! Eilenberg-Moore algebras, algebra morphisms, the free/forgetful
//! adjunction, and algebra enumeration.

use super::data::MonadData;
use crate::ctx::Ctx;
use crate::error::{CatError, Result};
use crate::finset::{all_maps, map_count, FinMap, FinSet};
use std::fmt;

/// An algebra `(V, v: T V -> V)`. `free_on` records the generating object
/// when the algebra was built as a free algebra; `name` is display-only.
/// Equality ignores both and compares carrier plus structure map.
#[derive(Clone)]
pub struct AlgebraObj {
    pub carrier: FinSet,
    pub structure: FinMap,
    pub free_on: Option<FinSet>,
    pub name: String,
}

impl AlgebraObj {
    pub fn new(carrier: FinSet, structure: FinMap, name: impl Into<String>) -> Self {
        AlgebraObj {
            carrier,
            structure,
            free_on: None,
            name: name.into(),
        }
    }

    /// Cache key: the identity of an algebra is its carrier and structure.
    pub fn key(&self) -> (FinSet, FinMap) {
        (self.carrier.clone(), self.structure.clone())
    }
}

impl PartialEq for AlgebraObj {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.structure == other.structure
    }
}

impl Eq for AlgebraObj {}

impl fmt::Debug for AlgebraObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraObj({}, |carrier|={})", self.name, self.carrier.len())
    }
}

/// Exact check of the algebra laws: unitality on the carrier and
/// associativity on `T^2 V`.
pub fn is_algebra(t: &MonadData, v: &AlgebraObj) -> Result<bool> {
    Ok(algebra_law_witness(t, v)?.is_none())
}

/// As [`is_algebra`] but returns the first violated equation.
pub fn algebra_law_witness(t: &MonadData, v: &AlgebraObj) -> Result<Option<String>> {
    let tv = t.t_obj(&v.carrier)?;
    if v.structure.dom() != &tv || v.structure.cod() != &v.carrier {
        return Ok(Some(format!(
            "structure map has wrong shape for {}",
            v.name
        )));
    }
    let unit = t.eta_at(&v.carrier)?.then(&v.structure)?;
    if unit != FinMap::identity(&v.carrier) {
        return Ok(Some(format!("unitality fails for {}", v.name)));
    }
    let lhs = t.mu_at(&v.carrier)?.then(&v.structure)?;
    let rhs = t.t_map(&v.structure)?.then(&v.structure)?;
    if lhs != rhs {
        return Ok(Some(format!("associativity fails for {}", v.name)));
    }
    Ok(None)
}

/// A morphism of algebras.
#[derive(Clone)]
pub struct AlgebraMap {
    pub src: AlgebraObj,
    pub dst: AlgebraObj,
    pub map: FinMap,
}

impl PartialEq for AlgebraMap {
    fn eq(&self, other: &Self) -> bool {
        self.src == other.src && self.dst == other.dst && self.map == other.map
    }
}

impl Eq for AlgebraMap {}

impl fmt::Debug for AlgebraMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraMap({} -> {}: {})", self.src.name, self.dst.name, self.map)
    }
}

impl AlgebraMap {
    pub fn new(src: AlgebraObj, dst: AlgebraObj, map: FinMap) -> Self {
        AlgebraMap { src, dst, map }
    }

    /// Does the underlying map commute with the structure maps?
    pub fn is_homomorphism(&self, t: &MonadData) -> Result<bool> {
        let lhs = t.t_map(&self.map)?.then(&self.dst.structure)?;
        let rhs = self.src.structure.then(&self.map)?;
        Ok(lhs == rhs)
    }

    pub fn then(&self, other: &AlgebraMap) -> Result<AlgebraMap> {
        if self.dst != other.src {
            return Err(CatError::structural("algebra map composition mismatch"));
        }
        Ok(AlgebraMap {
            src: self.src.clone(),
            dst: other.dst.clone(),
            map: self.map.then(&other.map)?,
        })
    }

    pub fn identity(v: &AlgebraObj) -> AlgebraMap {
        AlgebraMap {
            src: v.clone(),
            dst: v.clone(),
            map: FinMap::identity(&v.carrier),
        }
    }
}

/// The free algebra `(T X, mu_X)`.
pub fn free_algebra(t: &MonadData, x: &FinSet) -> Result<AlgebraObj> {
    Ok(AlgebraObj {
        carrier: t.t_obj(x)?,
        structure: t.mu_at(x)?,
        free_on: Some(x.clone()),
        name: format!("free({})", x.to_canonical_string()),
    })
}

/// Adjoint transpose: for `f: X -> U(W)` the algebra map
/// `bar f = w . T f: F X -> W`.
pub fn bar(t: &MonadData, f: &FinMap, w: &AlgebraObj) -> Result<AlgebraMap> {
    if f.cod() != &w.carrier {
        return Err(CatError::structural(
            "bar: the codomain of the map must be the target carrier",
        ));
    }
    let src = free_algebra(t, f.dom())?;
    let map = t.t_map(f)?.then(&w.structure)?;
    Ok(AlgebraMap::new(src, w.clone(), map))
}

/// Inverse transpose: restrict an algebra map out of a free algebra along
/// the unit.
pub fn unbar(t: &MonadData, g: &AlgebraMap) -> Result<FinMap> {
    let x = g.src.free_on.as_ref().ok_or_else(|| {
        CatError::structural("unbar requires an algebra map out of a free algebra")
    })?;
    t.eta_at(x)?.then(&g.map)
}

/// All algebra structures on the given carrier. The unit law pins the
/// values on the image of `eta`, so only the remaining coordinates are
/// enumerated; associativity is then checked exactly.
pub fn enumerate_algebras(t: &MonadData, carrier: &FinSet, ctx: &Ctx) -> Result<Vec<AlgebraObj>> {
    let tv = t.t_obj(carrier)?;
    let eta = t.eta_at(carrier)?;
    let n = carrier.len();
    // forced positions: index in TV -> index in V
    let mut forced: Vec<Option<u32>> = vec![None; tv.len()];
    for (i, &j) in eta.indices().iter().enumerate() {
        forced[j as usize] = Some(i as u32);
    }
    let free_positions: Vec<usize> = (0..tv.len()).filter(|&i| forced[i].is_none()).collect();
    let count = (n as u128).saturating_pow(free_positions.len() as u32);
    ctx.admit(count)?;
    if n == 0 {
        // Only the empty carrier with empty T V can be an algebra.
        if tv.is_empty() {
            let v = AlgebraObj::new(
                carrier.clone(),
                FinMap::from_indices(&tv, carrier, vec![])?,
                "empty",
            );
            return Ok(if is_algebra(t, &v)? { vec![v] } else { vec![] });
        }
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let mut odometer = vec![0u32; free_positions.len()];
    loop {
        let mut tab = vec![0u32; tv.len()];
        for (i, f) in forced.iter().enumerate() {
            if let Some(j) = f {
                tab[i] = *j;
            }
        }
        for (k, &pos) in free_positions.iter().enumerate() {
            tab[pos] = odometer[k];
        }
        let v = AlgebraObj::new(
            carrier.clone(),
            FinMap::from_indices(&tv, carrier, tab)?,
            format!("alg{}#{}", carrier.len(), out.len()),
        );
        if is_algebra(t, &v)? {
            out.push(v);
        }
        // advance
        let mut done = true;
        for slot in odometer.iter_mut().rev() {
            *slot += 1;
            if (*slot as usize) < n {
                done = false;
                break;
            }
            *slot = 0;
        }
        if done {
            break;
        }
    }
    Ok(out)
}

/// All algebra maps `A -> B`, by enumerating the underlying maps and
/// filtering on the homomorphism condition.
pub fn algebra_maps(
    t: &MonadData,
    a: &AlgebraObj,
    b: &AlgebraObj,
    ctx: &Ctx,
) -> Result<Vec<AlgebraMap>> {
    ctx.admit(map_count(&a.carrier, &b.carrier))?;
    let mut out = Vec::new();
    for f in all_maps(&a.carrier, &b.carrier, ctx)? {
        let cand = AlgebraMap::new(a.clone(), b.clone(), f);
        if cand.is_homomorphism(t)? {
            out.push(cand);
        }
    }
    Ok(out)
}

/// Algebra maps out of a free algebra via the adjunction: `bar` of every
/// map from the generators. The bar/unbar bijection is itself a verified
/// law, so this is the cheap route when the free carrier is large.
pub fn algebra_maps_from_free(
    t: &MonadData,
    x: &FinSet,
    b: &AlgebraObj,
    ctx: &Ctx,
) -> Result<Vec<AlgebraMap>> {
    let mut out = Vec::new();
    for f in all_maps(x, &b.carrier, ctx)? {
        out.push(bar(t, &f, b)?);
    }
    Ok(out)
}
