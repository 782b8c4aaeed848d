//! Cartesian and cocartesian monoidal structures on finite sets.

use super::duoidal::{CartesianData, CocartesianData, DuoidalStructure};
use super::structures::MonoidalStructure;
use crate::cat::FinSetCat;
use crate::error::Result;
use crate::finset::{coproduct, copairing, pairing, product, Element, FinMap, FinSet};
use std::sync::Arc;

/// The cartesian structure `(FinSet, x, {*})` with the swap braiding.
pub fn cartesian_structure() -> MonoidalStructure<FinSetCat> {
    MonoidalStructure::new(
        FinSetCat,
        "cartesian",
        FinSet::singleton_unit(),
        Arc::new(|a, b| Ok(product(a, b).0)),
        Arc::new(|f: &FinMap, g: &FinMap| {
            let (dom, _, _) = product(f.dom(), g.dom());
            let (cod, _, _) = product(f.cod(), g.cod());
            FinMap::try_from_fn(&dom, &cod, |e| {
                Ok(Element::pair(
                    f.try_apply(e.fst()?)?.clone(),
                    g.try_apply(e.snd()?)?.clone(),
                ))
            })
        }),
        Arc::new(|a, b, c| {
            let ab = product(a, b).0;
            let bc = product(b, c).0;
            let dom = product(&ab, c).0;
            let cod = product(a, &bc).0;
            FinMap::try_from_fn(&dom, &cod, |e| {
                let ab_part = e.fst()?;
                Ok(Element::pair(
                    ab_part.fst()?.clone(),
                    Element::pair(ab_part.snd()?.clone(), e.snd()?.clone()),
                ))
            })
        }),
        Arc::new(|a| {
            let dom = product(&FinSet::singleton_unit(), a).0;
            FinMap::try_from_fn(&dom, a, |e| Ok(e.snd()?.clone()))
        }),
        Arc::new(|a| {
            let dom = product(a, &FinSet::singleton_unit()).0;
            FinMap::try_from_fn(&dom, a, |e| Ok(e.fst()?.clone()))
        }),
        Some(Arc::new(|a, b| {
            let dom = product(a, b).0;
            let cod = product(b, a).0;
            FinMap::try_from_fn(&dom, &cod, |e| {
                Ok(Element::pair(e.snd()?.clone(), e.fst()?.clone()))
            })
        })),
    )
}

/// Cartesian structure packaged with projections, pairing, and terminal
/// maps.
pub fn cartesian_data() -> CartesianData<FinSetCat> {
    CartesianData {
        structure: cartesian_structure(),
        proj1: Arc::new(|a, b| {
            let (_, p1, _) = product(a, b);
            Ok(p1)
        }),
        proj2: Arc::new(|a, b| {
            let (_, _, p2) = product(a, b);
            Ok(p2)
        }),
        pairing: Arc::new(|f, g| {
            let (p, _, _) = product(f.cod(), g.cod());
            pairing(f, g, &p)
        }),
        terminal_mor: Arc::new(|x| FinMap::from_fn(x, &FinSet::singleton_unit(), |_| Element::Unit)),
    }
}

/// The cocartesian structure `(FinSet, +, 0)`.
pub fn cocartesian_structure() -> MonoidalStructure<FinSetCat> {
    MonoidalStructure::new(
        FinSetCat,
        "cocartesian",
        FinSet::empty(),
        Arc::new(|a, b| Ok(coproduct(a, b).0)),
        Arc::new(|f: &FinMap, g: &FinMap| {
            let (dom, _, _) = coproduct(f.dom(), g.dom());
            let (cod, _, _) = coproduct(f.cod(), g.cod());
            FinMap::try_from_fn(&dom, &cod, |e| match e {
                Element::Left(x) => Ok(Element::left(f.try_apply(x)?.clone())),
                Element::Right(y) => Ok(Element::right(g.try_apply(y)?.clone())),
                other => Err(crate::error::CatError::structural(format!(
                    "untagged element {other}"
                ))),
            })
        }),
        Arc::new(|a, b, c| {
            let ab = coproduct(a, b).0;
            let bc = coproduct(b, c).0;
            let dom = coproduct(&ab, c).0;
            let cod = coproduct(a, &bc).0;
            FinMap::try_from_fn(&dom, &cod, |e| match e {
                Element::Left(x) => match x.as_ref() {
                    Element::Left(a_val) => Ok(Element::left(a_val.as_ref().clone())),
                    Element::Right(b_val) => {
                        Ok(Element::right(Element::left(b_val.as_ref().clone())))
                    }
                    other => Err(crate::error::CatError::structural(format!(
                        "untagged element {other}"
                    ))),
                },
                Element::Right(c_val) => {
                    Ok(Element::right(Element::right(c_val.as_ref().clone())))
                }
                other => Err(crate::error::CatError::structural(format!(
                    "untagged element {other}"
                ))),
            })
        }),
        Arc::new(|a| {
            let dom = coproduct(&FinSet::empty(), a).0;
            FinMap::try_from_fn(&dom, a, |e| match e {
                Element::Right(x) => Ok(x.as_ref().clone()),
                other => Err(crate::error::CatError::structural(format!(
                    "element of empty summand: {other}"
                ))),
            })
        }),
        Arc::new(|a| {
            let dom = coproduct(a, &FinSet::empty()).0;
            FinMap::try_from_fn(&dom, a, |e| match e {
                Element::Left(x) => Ok(x.as_ref().clone()),
                other => Err(crate::error::CatError::structural(format!(
                    "element of empty summand: {other}"
                ))),
            })
        }),
        Some(Arc::new(|a, b| {
            let dom = coproduct(a, b).0;
            let cod = coproduct(b, a).0;
            FinMap::try_from_fn(&dom, &cod, |e| match e {
                Element::Left(x) => Ok(Element::right(x.as_ref().clone())),
                Element::Right(y) => Ok(Element::left(y.as_ref().clone())),
                other => Err(crate::error::CatError::structural(format!(
                    "untagged element {other}"
                ))),
            })
        })),
    )
}

/// Cocartesian structure packaged with injections, copairing, and initial
/// maps.
pub fn cocartesian_data() -> CocartesianData<FinSetCat> {
    CocartesianData {
        structure: cocartesian_structure(),
        inj1: Arc::new(|a, b| {
            let (_, i1, _) = coproduct(a, b);
            Ok(i1)
        }),
        inj2: Arc::new(|a, b| {
            let (_, _, i2) = coproduct(a, b);
            Ok(i2)
        }),
        copairing: Arc::new(|f, g| {
            let (c, _, _) = coproduct(f.dom(), g.dom());
            copairing(f, g, &c)
        }),
        initial_mor: Arc::new(|x| FinMap::from_fn(&FinSet::empty(), x, |_| unreachable!())),
    }
}

/// The duoidal structure on finite sets induced by the swap braiding of the
/// cartesian structure; every structure map is invertible.
pub fn braided_cartesian_duoidal() -> Result<DuoidalStructure<FinSetCat>> {
    super::duoidal::duoidal_from_braiding(&cartesian_structure())
}
