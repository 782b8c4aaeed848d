//! The concrete monads: identity, finite powerset, finite-semiring
//! distribution monads, the pointing monad, and linear monads from finite
//! monoids. Functorial actions and transformation components are given
//! pointwise on element values.

use super::semiring::FiniteSemiring;
use crate::cat::FinSetCat;
use crate::error::{CatError, Result};
use crate::finset::{coproduct, product, Element, FinMap, FinSet};
use crate::lift::ComonoidalMonad;
use crate::monad::MonadData;
use crate::moncat::{cartesian_structure, FiniteMonoid, Obj2ToMor};
use crate::multilin::MonoidalMonad;
use std::sync::Arc;

/// The identity monad; monoidal (trivially) for any tensor.
pub fn identity_monad() -> MonadData {
    MonadData::new(
        "identity",
        Arc::new(|x: &FinSet| Ok(x.clone())),
        Arc::new(|f: &FinMap, e: &Element| Ok(f.try_apply(e)?.clone())),
        Arc::new(|e: &Element| Ok(e.clone())),
        Arc::new(|e: &Element| Ok(e.clone())),
    )
}

/// Identity monad as a monoidal monad on the cartesian structure.
pub fn identity_monoidal() -> MonoidalMonad {
    let tensor = cartesian_structure();
    let phi: Obj2ToMor<FinSetCat> = Arc::new(|x, y| Ok(FinMap::identity(&product(x, y).0)));
    let phi0 = FinMap::identity(&tensor.unit);
    MonoidalMonad::new(identity_monad(), tensor, phi, phi0)
}

/// Identity monad as a comonoidal monad on the cartesian structure.
pub fn identity_comonoidal() -> ComonoidalMonad {
    let tensor = cartesian_structure();
    let psi: Obj2ToMor<FinSetCat> = Arc::new(|x, y| Ok(FinMap::identity(&product(x, y).0)));
    let psi0 = FinMap::identity(&tensor.unit);
    ComonoidalMonad::new(identity_monad(), tensor, psi, psi0)
}

fn powerset_of(x: &FinSet) -> Result<FinSet> {
    if x.len() > 20 {
        let required = 1u128.checked_shl(x.len() as u32).unwrap_or(u128::MAX);
        return Err(CatError::Budget {
            required,
            budget: 1 << 20,
        });
    }
    let n = x.len();
    let mut subsets = Vec::with_capacity(1usize << n);
    for mask in 0u64..(1u64 << n) {
        let items: Vec<Element> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| x.get(i).clone())
            .collect();
        subsets.push(Element::subset(items));
    }
    Ok(FinSet::new(subsets))
}

/// The finite powerset monad with subsets as elements, union as
/// multiplication, singletons as unit.
pub fn powerset_monad() -> MonadData {
    MonadData::new(
        "powerset",
        Arc::new(powerset_of),
        Arc::new(|f: &FinMap, s: &Element| {
            let items = s
                .as_subset()?
                .iter()
                .map(|e| Ok(f.try_apply(e)?.clone()))
                .collect::<Result<Vec<_>>>()?;
            Ok(Element::subset(items))
        }),
        Arc::new(|family: &Element| {
            let mut items = Vec::new();
            for member in family.as_subset()? {
                items.extend(member.as_subset()?.iter().cloned());
            }
            Ok(Element::subset(items))
        }),
        Arc::new(|e: &Element| Ok(Element::subset(vec![e.clone()]))),
    )
}

/// Powerset as a monoidal monad on the cartesian structure:
/// `phi(S, T) = S x T` as a subset of the product.
pub fn powerset_monoidal() -> MonoidalMonad {
    let t = powerset_monad();
    let tensor = cartesian_structure();
    let phi: Obj2ToMor<FinSetCat> = Arc::new(|x, y| {
        let dom = product(&powerset_of(x)?, &powerset_of(y)?).0;
        let cod = powerset_of(&product(x, y).0)?;
        FinMap::try_from_fn(&dom, &cod, |e| {
            let s = e.fst()?.as_subset()?;
            let t = e.snd()?.as_subset()?;
            let mut items = Vec::with_capacity(s.len() * t.len());
            for a in s {
                for b in t {
                    items.push(Element::pair(a.clone(), b.clone()));
                }
            }
            Ok(Element::subset(items))
        })
    });
    let unit = tensor.unit.clone();
    let phi0 = t.eta_at(&unit).unwrap();
    MonoidalMonad::new(t, tensor, phi, phi0)
}

/// Powerset with the multiplication replaced by intersection of members:
/// breaks the monad laws, used by mutation tests.
pub fn powerset_monad_bad_mu() -> MonadData {
    let good = powerset_monad();
    MonadData::new(
        "powerset-bad-mu",
        Arc::new(powerset_of),
        Arc::new({
            let g = good.clone();
            move |f: &FinMap, e: &Element| g.apply_map(f, e)
        }),
        Arc::new(|family: &Element| {
            let members = family.as_subset()?;
            let mut iter = members.iter();
            let mut acc: Vec<Element> = match iter.next() {
                None => Vec::new(),
                Some(first) => first.as_subset()?.to_vec(),
            };
            for member in iter {
                let set = member.as_subset()?;
                acc.retain(|e| set.contains(e));
            }
            Ok(Element::subset(acc))
        }),
        Arc::new({
            let g = good.clone();
            move |e: &Element| g.apply_eta(e)
        }),
    )
}

fn table_value(entries: &[(Element, Element)], key: &Element, zero: &Element) -> Element {
    entries
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.clone())
        .unwrap_or_else(|| zero.clone())
}

fn all_tables(x: &FinSet, r: &FiniteSemiring) -> Result<FinSet> {
    let n = x.len();
    let k = r.carrier.len();
    let total = (k as u128).saturating_pow(n as u32);
    if total > (1 << 20) {
        return Err(CatError::Budget {
            required: total,
            budget: 1 << 20,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut odometer = vec![0usize; n];
    loop {
        let entries: Vec<(Element, Element)> = (0..n)
            .filter(|&i| r.carrier.get(odometer[i]) != &r.zero)
            .map(|i| (x.get(i).clone(), r.carrier.get(odometer[i]).clone()))
            .collect();
        out.push(Element::table(entries)?);
        let mut done = true;
        for slot in odometer.iter_mut().rev() {
            *slot += 1;
            if *slot < k {
                done = false;
                break;
            }
            *slot = 0;
        }
        if done || n == 0 {
            break;
        }
    }
    Ok(FinSet::new(out))
}

/// The distribution monad of a finite commutative semiring: `T X` is the
/// set of tables `X -> R` (zero entries normalized away), with
/// `mu(F)(x) = sum_f F(f) f(x)` and the Kronecker unit.
pub fn distribution_monad(r: &FiniteSemiring) -> MonadData {
    let r_obj = r.clone();
    let r_map = r.clone();
    let r_mu = r.clone();
    let r_eta = r.clone();
    MonadData::new(
        format!("dist({})", r.name),
        Arc::new(move |x: &FinSet| all_tables(x, &r_obj)),
        Arc::new(move |f: &FinMap, table: &Element| {
            let r = &r_map;
            // pushforward: group the entries by their image
            let mut acc: Vec<(Element, Element)> = Vec::new();
            for (k, v) in table.as_table()? {
                let y = f.try_apply(k)?.clone();
                match acc.iter_mut().find(|(key, _)| key == &y) {
                    Some((_, total)) => *total = r.add(total, v)?,
                    None => acc.push((y, v.clone())),
                }
            }
            acc.retain(|(_, v)| v != &r.zero);
            Element::table(acc)
        }),
        Arc::new(move |big: &Element| {
            let r = &r_mu;
            let mut acc: Vec<(Element, Element)> = Vec::new();
            for (inner, weight) in big.as_table()? {
                for (point, v) in inner.as_table()? {
                    let contrib = r.mul(weight, v)?;
                    if contrib == r.zero {
                        continue;
                    }
                    match acc.iter_mut().find(|(key, _)| key == point) {
                        Some((_, total)) => *total = r.add(total, &contrib)?,
                        None => acc.push((point.clone(), contrib)),
                    }
                }
            }
            acc.retain(|(_, v)| v != &r.zero);
            Element::table(acc)
        }),
        Arc::new(move |e: &Element| {
            Element::table(vec![(e.clone(), r_eta.one.clone())])
        }),
    )
}

/// Distribution monad as a monoidal monad on the cartesian structure:
/// `phi(f, g)(x, y) = f(x) g(y)`.
pub fn distribution_monoidal(r: &FiniteSemiring) -> MonoidalMonad {
    let t = distribution_monad(r);
    let tensor = cartesian_structure();
    let r2 = r.clone();
    let phi: Obj2ToMor<FinSetCat> = Arc::new(move |x, y| {
        let r = &r2;
        let dom = product(&all_tables(x, r)?, &all_tables(y, r)?).0;
        let cod = all_tables(&product(x, y).0, r)?;
        FinMap::try_from_fn(&dom, &cod, |e| {
            let f = e.fst()?.as_table()?;
            let g = e.snd()?.as_table()?;
            let mut out = Vec::with_capacity(f.len() * g.len());
            for (a, fv) in f {
                for (b, gv) in g {
                    let prod = r.mul(fv, gv)?;
                    if prod != r.zero {
                        out.push((Element::pair(a.clone(), b.clone()), prod));
                    }
                }
            }
            Element::table(out)
        })
    });
    let phi0 = t.eta_at(&tensor.unit).unwrap();
    MonoidalMonad::new(t, tensor, phi, phi0)
}

/// Table lookup against a semiring zero, for oracles that read
/// distribution-monad elements.
pub fn dist_value(table: &Element, key: &Element, r: &FiniteSemiring) -> Result<Element> {
    Ok(table_value(table.as_table()?, key, &r.zero))
}

fn pointing_of(x: &FinSet) -> FinSet {
    coproduct(&FinSet::singleton_unit(), x).0
}

/// The pointing monad `T X = I + X` for `I = {*}`; algebras are pointed
/// sets.
pub fn pointing_monad() -> MonadData {
    MonadData::new(
        "pointing",
        Arc::new(|x: &FinSet| Ok(pointing_of(x))),
        Arc::new(|f: &FinMap, e: &Element| match e {
            Element::Left(_) => Ok(e.clone()),
            Element::Right(x) => Ok(Element::right(f.try_apply(x)?.clone())),
            other => Err(CatError::structural(format!("untagged element {other}"))),
        }),
        Arc::new(|e: &Element| match e {
            Element::Left(_) => Ok(Element::left(Element::Unit)),
            Element::Right(inner) => Ok(inner.as_ref().clone()),
            other => Err(CatError::structural(format!("untagged element {other}"))),
        }),
        Arc::new(|e: &Element| Ok(Element::right(e.clone()))),
    )
}

/// The pointing monad as a monoidal monad on the cartesian structure. The
/// terminal unit collapses every mixed component:
/// `(I + X) x (I + Y) -> I + (X x Y)` sends a pair to the point unless both
/// coordinates are proper.
pub fn pointing_monoidal() -> MonoidalMonad {
    let t = pointing_monad();
    let tensor = cartesian_structure();
    let phi: Obj2ToMor<FinSetCat> = Arc::new(|x, y| {
        let dom = product(&pointing_of(x), &pointing_of(y)).0;
        let cod = pointing_of(&product(x, y).0);
        FinMap::try_from_fn(&dom, &cod, |e| match (e.fst()?, e.snd()?) {
            (Element::Right(a), Element::Right(b)) => Ok(Element::right(Element::pair(
                a.as_ref().clone(),
                b.as_ref().clone(),
            ))),
            _ => Ok(Element::left(Element::Unit)),
        })
    });
    let phi0 = t.eta_at(&tensor.unit).unwrap();
    MonoidalMonad::new(t, tensor, phi, phi0)
}

/// The pointing monad as a comonoidal monad on the cartesian structure,
/// from the comonoid structure of the distinguished object.
pub fn pointing_comonoidal() -> ComonoidalMonad {
    let t = pointing_monad();
    let tensor = cartesian_structure();
    let psi: Obj2ToMor<FinSetCat> = Arc::new(|x, y| {
        let dom = pointing_of(&product(x, y).0);
        let cod = product(&pointing_of(x), &pointing_of(y)).0;
        FinMap::try_from_fn(&dom, &cod, |e| match e {
            Element::Left(_) => Ok(Element::pair(
                Element::left(Element::Unit),
                Element::left(Element::Unit),
            )),
            Element::Right(p) => Ok(Element::pair(
                Element::right(p.fst()?.clone()),
                Element::right(p.snd()?.clone()),
            )),
            other => Err(CatError::structural(format!("untagged element {other}"))),
        })
    });
    let unit = tensor.unit.clone();
    let tj = pointing_of(&unit);
    let psi0 = FinMap::from_fn(&tj, &unit, |_| Element::Unit).unwrap();
    ComonoidalMonad::new(t, tensor, psi, psi0)
}

fn linear_of(h: &FiniteMonoid, x: &FinSet) -> FinSet {
    product(&h.carrier, x).0
}

/// The linear monad `T X = H x X` of a finite monoid: multiplication uses
/// the monoid product, the unit inserts the monoid unit.
pub fn linear_monad(h: &FiniteMonoid) -> MonadData {
    let h_obj = h.clone();
    let h_mu = h.clone();
    let h_eta = h.clone();
    MonadData::new(
        format!("linear({})", h.carrier.to_canonical_string()),
        Arc::new(move |x: &FinSet| Ok(linear_of(&h_obj, x))),
        Arc::new(|f: &FinMap, e: &Element| {
            Ok(Element::pair(
                e.fst()?.clone(),
                f.try_apply(e.snd()?)?.clone(),
            ))
        }),
        Arc::new(move |e: &Element| {
            let outer = e.fst()?;
            let inner = e.snd()?;
            Ok(Element::pair(
                h_mu.mul(outer, inner.fst()?)?,
                inner.snd()?.clone(),
            ))
        }),
        Arc::new(move |e: &Element| Ok(Element::pair(h_eta.unit.clone(), e.clone()))),
    )
}

/// Linear monad of a commutative monoid as a monoidal monad on the braided
/// cartesian structure: the structure map multiplies the monoid
/// coordinates ("middle swap" composed with the product).
pub fn linear_monoidal(h: &FiniteMonoid) -> Result<MonoidalMonad> {
    if !h.is_commutative() {
        return Err(CatError::structural(
            "a linear monad is monoidal only for a commutative monoid",
        ));
    }
    let t = linear_monad(h);
    let tensor = cartesian_structure();
    let h2 = h.clone();
    let phi: Obj2ToMor<FinSetCat> = Arc::new(move |x, y| {
        let h = &h2;
        let dom = product(&linear_of(h, x), &linear_of(h, y)).0;
        let cod = linear_of(h, &product(x, y).0);
        FinMap::try_from_fn(&dom, &cod, |e| {
            let (hx, a) = (e.fst()?.fst()?, e.fst()?.snd()?);
            let (hy, b) = (e.snd()?.fst()?, e.snd()?.snd()?);
            Ok(Element::pair(
                h.mul(hx, hy)?,
                Element::pair(a.clone(), b.clone()),
            ))
        })
    });
    let phi0 = t.eta_at(&tensor.unit)?;
    Ok(MonoidalMonad::new(t, tensor, phi, phi0))
}

/// Linear monad of a monoid as a comonoidal monad on the cartesian
/// structure, via the diagonal comonoid structure of the carrier.
pub fn linear_comonoidal(h: &FiniteMonoid) -> ComonoidalMonad {
    let t = linear_monad(h);
    let tensor = cartesian_structure();
    let h2 = h.clone();
    let psi: Obj2ToMor<FinSetCat> = Arc::new(move |x, y| {
        let h = &h2;
        let dom = linear_of(h, &product(x, y).0);
        let cod = product(&linear_of(h, x), &linear_of(h, y)).0;
        FinMap::try_from_fn(&dom, &cod, |e| {
            let k = e.fst()?;
            let p = e.snd()?;
            Ok(Element::pair(
                Element::pair(k.clone(), p.fst()?.clone()),
                Element::pair(k.clone(), p.snd()?.clone()),
            ))
        })
    });
    let unit = tensor.unit.clone();
    let tj = linear_of(h, &unit);
    let psi0 = FinMap::from_fn(&tj, &unit, |_| Element::Unit).unwrap();
    ComonoidalMonad::new(t, tensor, psi, psi0)
}
