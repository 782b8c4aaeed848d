//! Finite commutative semirings with exhaustively verified laws.

use crate::error::{CatError, Result};
use crate::finset::{Element, FinSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemiring {
    pub name: String,
    pub carrier: FinSet,
    add: Vec<u32>,
    mul: Vec<u32>,
    pub zero: Element,
    pub one: Element,
}

impl FiniteSemiring {
    pub fn new(
        name: impl Into<String>,
        carrier: FinSet,
        add_table: &[(Element, Element, Element)],
        mul_table: &[(Element, Element, Element)],
        zero: Element,
        one: Element,
    ) -> Result<Self> {
        let n = carrier.len();
        let build = |table: &[(Element, Element, Element)]| -> Result<Vec<u32>> {
            let mut op = vec![u32::MAX; n * n];
            for (a, b, c) in table {
                op[carrier.index_of(a)? * n + carrier.index_of(b)?] =
                    carrier.index_of(c)? as u32;
            }
            if op.iter().any(|&x| x == u32::MAX) {
                return Err(CatError::structural("semiring operation table is partial"));
            }
            Ok(op)
        };
        let s = FiniteSemiring {
            name: name.into(),
            carrier: carrier.clone(),
            add: build(add_table)?,
            mul: build(mul_table)?,
            zero,
            one,
        };
        s.verify()?;
        Ok(s)
    }

    /// The Boolean semiring on atoms `0`, `1` (addition is join).
    pub fn boolean() -> Self {
        let (z, o) = (Element::atom("0"), Element::atom("1"));
        let carrier = FinSet::new(vec![z.clone(), o.clone()]);
        FiniteSemiring::new(
            "boolean",
            carrier,
            &[
                (z.clone(), z.clone(), z.clone()),
                (z.clone(), o.clone(), o.clone()),
                (o.clone(), z.clone(), o.clone()),
                (o.clone(), o.clone(), o.clone()),
            ],
            &[
                (z.clone(), z.clone(), z.clone()),
                (z.clone(), o.clone(), z.clone()),
                (o.clone(), z.clone(), z.clone()),
                (o.clone(), o.clone(), o.clone()),
            ],
            z,
            o,
        )
        .unwrap()
    }

    /// The two-element field on atoms `0`, `1` (addition is xor).
    pub fn gf2() -> Self {
        let (z, o) = (Element::atom("0"), Element::atom("1"));
        let carrier = FinSet::new(vec![z.clone(), o.clone()]);
        FiniteSemiring::new(
            "gf2",
            carrier,
            &[
                (z.clone(), z.clone(), z.clone()),
                (z.clone(), o.clone(), o.clone()),
                (o.clone(), z.clone(), o.clone()),
                (o.clone(), o.clone(), z.clone()),
            ],
            &[
                (z.clone(), z.clone(), z.clone()),
                (z.clone(), o.clone(), z.clone()),
                (o.clone(), z.clone(), z.clone()),
                (o.clone(), o.clone(), o.clone()),
            ],
            z,
            o,
        )
        .unwrap()
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        let n = self.carrier.len();
        let i = self.carrier.index_of(a)?;
        let j = self.carrier.index_of(b)?;
        Ok(self.carrier.get(self.add[i * n + j] as usize).clone())
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        let n = self.carrier.len();
        let i = self.carrier.index_of(a)?;
        let j = self.carrier.index_of(b)?;
        Ok(self.carrier.get(self.mul[i * n + j] as usize).clone())
    }

    /// Commutative semiring laws, exhaustively, with a witness on failure.
    pub fn verify(&self) -> Result<()> {
        let es = self.carrier.elements();
        for a in es {
            if self.add(&self.zero, a)? != *a {
                return Err(CatError::structural(format!("additive unit fails at {a}")));
            }
            if self.mul(&self.one, a)? != *a || self.mul(a, &self.one)? != *a {
                return Err(CatError::structural(format!("multiplicative unit fails at {a}")));
            }
            if self.mul(&self.zero, a)? != self.zero || self.mul(a, &self.zero)? != self.zero {
                return Err(CatError::structural(format!("zero annihilation fails at {a}")));
            }
            for b in es {
                if self.add(a, b)? != self.add(b, a)? {
                    return Err(CatError::structural(format!(
                        "additive commutativity fails at ({a}, {b})"
                    )));
                }
                if self.mul(a, b)? != self.mul(b, a)? {
                    return Err(CatError::structural(format!(
                        "multiplicative commutativity fails at ({a}, {b})"
                    )));
                }
                for c in es {
                    if self.add(&self.add(a, b)?, c)? != self.add(a, &self.add(b, c)?)? {
                        return Err(CatError::structural(format!(
                            "additive associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                    if self.mul(&self.mul(a, b)?, c)? != self.mul(a, &self.mul(b, c)?)? {
                        return Err(CatError::structural(format!(
                            "multiplicative associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                    if self.mul(a, &self.add(b, c)?)?
                        != self.add(&self.mul(a, b)?, &self.mul(a, c)?)?
                    {
                        return Err(CatError::structural(format!(
                            "distributivity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}
