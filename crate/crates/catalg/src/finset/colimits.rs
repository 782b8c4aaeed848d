//! Products, coproducts, coequalizers, and pushouts of finite sets.

use super::element::Element;
use super::map::FinMap;
use super::set::FinSet;
use crate::error::{CatError, Result};

/// Binary product: all `pair` elements with the two coordinate projections.
pub fn product(a: &FinSet, b: &FinSet) -> (FinSet, FinMap, FinMap) {
    let mut elems = Vec::with_capacity(a.len() * b.len());
    for x in a.iter() {
        for y in b.iter() {
            elems.push(Element::pair(x.clone(), y.clone()));
        }
    }
    let p = FinSet::new(elems);
    let pi1 = FinMap::from_fn(&p, a, |e| e.fst().unwrap().clone()).unwrap();
    let pi2 = FinMap::from_fn(&p, b, |e| e.snd().unwrap().clone()).unwrap();
    (p, pi1, pi2)
}

/// Pairing `<f,g>: X -> A x B` into the canonical product carrier.
pub fn pairing(f: &FinMap, g: &FinMap, prod: &FinSet) -> Result<FinMap> {
    if f.dom() != g.dom() {
        return Err(CatError::structural("pairing requires a shared domain"));
    }
    FinMap::from_fn(f.dom(), prod, |e| {
        Element::pair(f.apply(e).clone(), g.apply(e).clone())
    })
}

/// Binary coproduct: left- and right-tagged copies with the insertions.
pub fn coproduct(a: &FinSet, b: &FinSet) -> (FinSet, FinMap, FinMap) {
    let mut elems: Vec<Element> = a.iter().map(|x| Element::left(x.clone())).collect();
    elems.extend(b.iter().map(|y| Element::right(y.clone())));
    let c = FinSet::new(elems);
    let inl = FinMap::from_fn(a, &c, |e| Element::left(e.clone())).unwrap();
    let inr = FinMap::from_fn(b, &c, |e| Element::right(e.clone())).unwrap();
    (c, inl, inr)
}

/// Copairing `[f,g]: A + B -> Y` out of the canonical coproduct carrier.
pub fn copairing(f: &FinMap, g: &FinMap, coprod: &FinSet) -> Result<FinMap> {
    if f.cod() != g.cod() {
        return Err(CatError::structural("copairing requires a shared codomain"));
    }
    FinMap::try_from_fn(coprod, f.cod(), |e| match e {
        Element::Left(x) => Ok(f.try_apply(x)?.clone()),
        Element::Right(y) => Ok(g.try_apply(y)?.clone()),
        other => Err(CatError::structural(format!("not a tagged element: {other}"))),
    })
}

/// Union-find over codomain indices.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // Keep the least index as the root so representatives are the
            // least elements of their classes.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Quotient of `base` by the equivalence generated by the given index
/// pairs. Returns the quotient set (classes as `cls(least member)`) and the
/// projection.
pub fn quotient_by_pairs(base: &FinSet, pairs: impl Iterator<Item = (usize, usize)>) -> (FinSet, FinMap) {
    let mut uf = UnionFind::new(base.len());
    for (a, b) in pairs {
        uf.union(a, b);
    }
    let roots: Vec<usize> = (0..base.len()).map(|i| uf.find(i)).collect();
    let class_elems: Vec<Element> = roots
        .iter()
        .map(|&r| Element::class(base.get(r).clone()))
        .collect();
    let q = FinSet::new(class_elems.clone());
    let tab: Vec<u32> = class_elems
        .iter()
        .map(|c| q.index_of(c).unwrap() as u32)
        .collect();
    let proj = FinMap::from_indices(base, &q, tab).unwrap();
    (q, proj)
}

/// Coequalizer of a parallel pair `f, g: A -> B`: the quotient of `B` by
/// the least equivalence with `f(a) ~ g(a)`, together with the surjection.
pub fn coequalizer(f: &FinMap, g: &FinMap) -> Result<(FinSet, FinMap)> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(CatError::structural(
            "coequalizer requires a parallel pair (shared dom and cod)",
        ));
    }
    let pairs = (0..f.dom().len()).map(|i| (f.apply_index(i), g.apply_index(i)));
    Ok(quotient_by_pairs(f.cod(), pairs))
}

/// Pushout of `f: A -> B`, `g: A -> C`: coproduct of the codomains followed
/// by the coequalizer of the two composites. Returns the apex and the two
/// legs `B -> P`, `C -> P`.
pub fn pushout(f: &FinMap, g: &FinMap) -> Result<(FinSet, FinMap, FinMap)> {
    if f.dom() != g.dom() {
        return Err(CatError::structural("pushout requires a shared domain"));
    }
    let (_, inl, inr) = coproduct(f.cod(), g.cod());
    let left = f.then(&inl)?;
    let right = g.then(&inr)?;
    let (apex, q) = coequalizer(&left, &right)?;
    let leg_b = inl.then(&q)?;
    let leg_c = inr.then(&q)?;
    Ok((apex, leg_b, leg_c))
}
