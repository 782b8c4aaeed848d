//! Object-level algebraic data: finite monoids on the nose, plus monoids,
//! comonoids, bimonoids, and double (co)monoids inside a monoidal or
//! duoidal structure.

use super::duoidal::DuoidalStructure;
use super::structures::MonoidalStructure;
use crate::cat::Category;
use crate::error::{CatError, Result};
use crate::finset::{Element, FinSet};
use crate::report::{CheckItem, CheckReport};

/// A finite monoid with an explicit multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    pub carrier: FinSet,
    /// `op[i * n + j]` is the index of `e_i * e_j`.
    op: Vec<u32>,
    pub unit: Element,
}

impl FiniteMonoid {
    pub fn new(carrier: FinSet, table: &[(Element, Element, Element)], unit: Element) -> Result<Self> {
        let n = carrier.len();
        let mut op = vec![u32::MAX; n * n];
        for (a, b, c) in table {
            let i = carrier.index_of(a)?;
            let j = carrier.index_of(b)?;
            let k = carrier.index_of(c)?;
            op[i * n + j] = k as u32;
        }
        if op.iter().any(|&x| x == u32::MAX) {
            return Err(CatError::structural("monoid multiplication table is partial"));
        }
        carrier.index_of(&unit)?;
        let m = FiniteMonoid { carrier, op, unit };
        m.verify()?;
        Ok(m)
    }

    /// The cyclic group of order two on atoms `e`, `g`.
    pub fn z2() -> Self {
        let e = Element::atom("e");
        let g = Element::atom("g");
        let carrier = FinSet::new(vec![e.clone(), g.clone()]);
        FiniteMonoid::new(
            carrier,
            &[
                (e.clone(), e.clone(), e.clone()),
                (e.clone(), g.clone(), g.clone()),
                (g.clone(), e.clone(), g.clone()),
                (g.clone(), g.clone(), e.clone()),
            ],
            e,
        )
        .unwrap()
    }

    /// The two-element meet monoid on atoms `0`, `1` with unit `1`.
    pub fn bool_and() -> Self {
        let zero = Element::atom("0");
        let one = Element::atom("1");
        let carrier = FinSet::new(vec![zero.clone(), one.clone()]);
        FiniteMonoid::new(
            carrier,
            &[
                (zero.clone(), zero.clone(), zero.clone()),
                (zero.clone(), one.clone(), zero.clone()),
                (one.clone(), zero.clone(), zero.clone()),
                (one.clone(), one.clone(), one.clone()),
            ],
            one,
        )
        .unwrap()
    }

    /// The trivial one-element monoid.
    pub fn trivial() -> Self {
        let e = Element::Unit;
        FiniteMonoid::new(
            FinSet::singleton_unit(),
            &[(e.clone(), e.clone(), e.clone())],
            e,
        )
        .unwrap()
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        let n = self.carrier.len();
        let i = self.carrier.index_of(a)?;
        let j = self.carrier.index_of(b)?;
        Ok(self.carrier.get(self.op[i * n + j] as usize).clone())
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.carrier.len();
        (0..n).all(|i| (0..n).all(|j| self.op[i * n + j] == self.op[j * n + i]))
    }

    fn verify(&self) -> Result<()> {
        let es = self.carrier.elements();
        for a in es {
            if self.mul(&self.unit, a)? != *a || self.mul(a, &self.unit)? != *a {
                return Err(CatError::structural(format!("monoid unit law fails at {a}")));
            }
            for b in es {
                for c in es {
                    let lhs = self.mul(&self.mul(a, b)?, c)?;
                    let rhs = self.mul(a, &self.mul(b, c)?)?;
                    if lhs != rhs {
                        return Err(CatError::structural(format!(
                            "monoid associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A monoid object inside a monoidal structure.
#[derive(Clone)]
pub struct MonoidIn<C: Category> {
    pub obj: C::Obj,
    /// `H (x) H -> H`
    pub mul: C::Mor,
    /// `I -> H`
    pub unit_mor: C::Mor,
}

/// A comonoid object inside a monoidal structure.
#[derive(Clone)]
pub struct ComonoidIn<C: Category> {
    pub obj: C::Obj,
    /// `H -> H (x) H`
    pub comul: C::Mor,
    /// `H -> I`
    pub counit_mor: C::Mor,
}

pub fn check_monoid_in<C: Category>(
    m: &MonoidalStructure<C>,
    h: &MonoidIn<C>,
    label: &str,
) -> Result<CheckReport> {
    let cat = m.cat.clone();
    let mut report = CheckReport::new();
    let id_h = cat.identity(&h.obj);
    // (HH)H -> HH -> H agrees with (HH)H -> H(HH) -> HH -> H
    let lhs = cat.compose(&m.tensor_mor(&h.mul, &id_h)?, &h.mul)?;
    let rhs = cat.compose_all(&[
        &m.associator(&h.obj, &h.obj, &h.obj)?,
        &m.tensor_mor(&id_h, &h.mul)?,
        &h.mul,
    ])?;
    report.push(if lhs == rhs {
        CheckItem::pass(format!("{label}: monoid associativity"), 1)
    } else {
        CheckItem::fail(format!("{label}: monoid associativity"), 1, cat.mor_label(&lhs))
    });
    let left = cat.compose(&m.tensor_mor(&h.unit_mor, &id_h)?, &h.mul)?;
    let right = cat.compose(&m.tensor_mor(&id_h, &h.unit_mor)?, &h.mul)?;
    let ok = left == m.left_unitor(&h.obj)? && right == m.right_unitor(&h.obj)?;
    report.push(if ok {
        CheckItem::pass(format!("{label}: monoid unitality"), 2)
    } else {
        CheckItem::fail(format!("{label}: monoid unitality"), 2, cat.mor_label(&left))
    });
    Ok(report)
}

pub fn check_comonoid_in<C: Category>(
    m: &MonoidalStructure<C>,
    h: &ComonoidIn<C>,
    label: &str,
) -> Result<CheckReport> {
    let cat = m.cat.clone();
    let mut report = CheckReport::new();
    let id_h = cat.identity(&h.obj);
    let lhs = cat.compose_all(&[
        &h.comul,
        &m.tensor_mor(&h.comul, &id_h)?,
        &m.associator(&h.obj, &h.obj, &h.obj)?,
    ])?;
    let rhs = cat.compose(&h.comul, &m.tensor_mor(&id_h, &h.comul)?)?;
    report.push(if lhs == rhs {
        CheckItem::pass(format!("{label}: comonoid coassociativity"), 1)
    } else {
        CheckItem::fail(format!("{label}: comonoid coassociativity"), 1, cat.mor_label(&lhs))
    });
    let left = cat.compose_all(&[
        &h.comul,
        &m.tensor_mor(&h.counit_mor, &id_h)?,
        &m.left_unitor(&h.obj)?,
    ])?;
    let right = cat.compose_all(&[
        &h.comul,
        &m.tensor_mor(&id_h, &h.counit_mor)?,
        &m.right_unitor(&h.obj)?,
    ])?;
    let ok = left == id_h && right == id_h;
    report.push(if ok {
        CheckItem::pass(format!("{label}: comonoid counitality"), 2)
    } else {
        CheckItem::fail(format!("{label}: comonoid counitality"), 2, cat.mor_label(&left))
    });
    Ok(report)
}

/// Bimonoid in a duoidal structure: a monoid in the first structure and a
/// comonoid in the second, with the four compatibility diagrams.
pub fn check_bimonoid_in<C: Category>(
    d: &DuoidalStructure<C>,
    mon: &MonoidIn<C>,
    com: &ComonoidIn<C>,
    label: &str,
) -> Result<CheckReport> {
    if mon.obj != com.obj {
        return Err(CatError::structural("bimonoid pieces live on different objects"));
    }
    let cat = d.cat().clone();
    let h = &mon.obj;
    let mut report = check_monoid_in(&d.first, mon, label)?;
    report.merge(check_comonoid_in(&d.second, com, label)?);

    // comultiplication respects multiplication through the interchange
    let lhs = cat.compose(&mon.mul, &com.comul)?;
    let rhs = cat.compose_all(&[
        &d.first.tensor_mor(&com.comul, &com.comul)?,
        &d.zeta(h, h, h, h)?,
        &d.second.tensor_mor(&mon.mul, &mon.mul)?,
    ])?;
    report.push(if lhs == rhs {
        CheckItem::pass(format!("{label}: bimonoid interchange compatibility"), 1)
    } else {
        CheckItem::fail(
            format!("{label}: bimonoid interchange compatibility"),
            1,
            cat.mor_label(&lhs),
        )
    });

    // counit respects multiplication
    let lhs = cat.compose(&mon.mul, &com.counit_mor)?;
    let rhs = cat.compose(&d.first.tensor_mor(&com.counit_mor, &com.counit_mor)?, &d.mu_j)?;
    report.push(if lhs == rhs {
        CheckItem::pass(format!("{label}: counit respects multiplication"), 1)
    } else {
        CheckItem::fail(format!("{label}: counit respects multiplication"), 1, cat.mor_label(&lhs))
    });

    // comultiplication respects unit
    let lhs = cat.compose(&mon.unit_mor, &com.comul)?;
    let rhs = cat.compose(&d.delta_i, &d.second.tensor_mor(&mon.unit_mor, &mon.unit_mor)?)?;
    report.push(if lhs == rhs {
        CheckItem::pass(format!("{label}: comultiplication respects unit"), 1)
    } else {
        CheckItem::fail(format!("{label}: comultiplication respects unit"), 1, cat.mor_label(&lhs))
    });

    // counit of the unit is the duoidal unit map
    let lhs = cat.compose(&mon.unit_mor, &com.counit_mor)?;
    report.push(if lhs == d.iota {
        CheckItem::pass(format!("{label}: counit of unit"), 1)
    } else {
        CheckItem::fail(format!("{label}: counit of unit"), 1, cat.mor_label(&lhs))
    });

    Ok(report)
}

/// Double monoid in a duoidal structure: monoids in both structures with the
/// interchange and unit compatibilities.
pub fn check_double_monoid_in<C: Category>(
    d: &DuoidalStructure<C>,
    first: &MonoidIn<C>,
    second: &MonoidIn<C>,
    label: &str,
) -> Result<CheckReport> {
    if first.obj != second.obj {
        return Err(CatError::structural("double monoid pieces live on different objects"));
    }
    let cat = d.cat().clone();
    let h = &first.obj;
    let mut report = check_monoid_in(&d.first, first, &format!("{label} (first)"))?;
    report.merge(check_monoid_in(&d.second, second, &format!("{label} (second)"))?);

    // (H*H)<>(H*H) -> (H<>H)*(H<>H) -> H*H -> H equals mu* <> mu* then mu<>
    let lhs = cat.compose_all(&[
        &d.zeta(h, h, h, h)?,
        &d.second.tensor_mor(&first.mul, &first.mul)?,
        &second.mul,
    ])?;
    let rhs = cat.compose(&d.first.tensor_mor(&second.mul, &second.mul)?, &first.mul)?;
    report.push(if lhs == rhs {
        CheckItem::pass(format!("{label}: double monoid interchange"), 1)
    } else {
        CheckItem::fail(format!("{label}: double monoid interchange"), 1, cat.mor_label(&lhs))
    });

    // unit compatibilities
    let lhs = cat.compose_all(&[
        &d.delta_i,
        &d.second.tensor_mor(&first.unit_mor, &first.unit_mor)?,
        &second.mul,
    ])?;
    report.push(if lhs == first.unit_mor {
        CheckItem::pass(format!("{label}: first unit respects second product"), 1)
    } else {
        CheckItem::fail(
            format!("{label}: first unit respects second product"),
            1,
            cat.mor_label(&lhs),
        )
    });

    let lhs = cat.compose(&d.first.tensor_mor(&second.unit_mor, &second.unit_mor)?, &first.mul)?;
    let rhs = cat.compose(&d.mu_j, &second.unit_mor)?;
    report.push(if lhs == rhs {
        CheckItem::pass(format!("{label}: second unit respects first product"), 1)
    } else {
        CheckItem::fail(
            format!("{label}: second unit respects first product"),
            1,
            cat.mor_label(&lhs),
        )
    });

    let lhs = cat.compose(&d.iota, &second.unit_mor)?;
    report.push(if lhs == first.unit_mor {
        CheckItem::pass(format!("{label}: units agree through iota"), 1)
    } else {
        CheckItem::fail(format!("{label}: units agree through iota"), 1, cat.mor_label(&lhs))
    });

    Ok(report)
}

/// Double comonoid in a duoidal structure: comonoids in both structures,
/// dual compatibilities.
pub fn check_double_comonoid_in<C: Category>(
    d: &DuoidalStructure<C>,
    first: &ComonoidIn<C>,
    second: &ComonoidIn<C>,
    label: &str,
) -> Result<CheckReport> {
    if first.obj != second.obj {
        return Err(CatError::structural("double comonoid pieces live on different objects"));
    }
    let cat = d.cat().clone();
    let mut report = check_comonoid_in(&d.first, first, &format!("{label} (first)"))?;
    report.merge(check_comonoid_in(&d.second, second, &format!("{label} (second)"))?);

    // H -> H<>H -> (H*H)<>(H*H) -> (H<>H)*(H<>H) equals H -> H*H -> (H<>H)*(H<>H)
    let lhs = cat.compose_all(&[
        &first.comul,
        &d.first.tensor_mor(&second.comul, &second.comul)?,
        &d.zeta(&first.obj, &first.obj, &first.obj, &first.obj)?,
    ])?;
    let rhs = cat.compose(&second.comul, &d.second.tensor_mor(&first.comul, &first.comul)?)?;
    report.push(if lhs == rhs {
        CheckItem::pass(format!("{label}: double comonoid interchange"), 1)
    } else {
        CheckItem::fail(format!("{label}: double comonoid interchange"), 1, cat.mor_label(&lhs))
    });

    let lhs = cat.compose_all(&[
        &first.comul,
        &d.first.tensor_mor(&second.counit_mor, &second.counit_mor)?,
        &d.mu_j,
    ])?;
    report.push(if lhs == second.counit_mor {
        CheckItem::pass(format!("{label}: second counit respects first coproduct"), 1)
    } else {
        CheckItem::fail(
            format!("{label}: second counit respects first coproduct"),
            1,
            cat.mor_label(&lhs),
        )
    });

    let lhs = cat.compose(&second.comul, &d.second.tensor_mor(&first.counit_mor, &first.counit_mor)?)?;
    let rhs = cat.compose(&first.counit_mor, &d.delta_i)?;
    report.push(if lhs == rhs {
        CheckItem::pass(format!("{label}: first counit respects second coproduct"), 1)
    } else {
        CheckItem::fail(
            format!("{label}: first counit respects second coproduct"),
            1,
            cat.mor_label(&lhs),
        )
    });

    let lhs = cat.compose(&first.counit_mor, &d.iota)?;
    report.push(if lhs == second.counit_mor {
        CheckItem::pass(format!("{label}: counits agree through iota"), 1)
    } else {
        CheckItem::fail(format!("{label}: counits agree through iota"), 1, cat.mor_label(&lhs))
    });

    Ok(report)
}
