//! Monoidal monads: a monad whose functor carries a monoidal structure for
//! which the multiplication and unit are morphisms of monoidal functors.

use crate::cat::FinSetCat;
use crate::ctx::Ctx;
use crate::error::Result;
use crate::finset::{FinMap, FinSet};
use crate::monad::MonadData;
use crate::moncat::{
    check_monoidal_functor, item_from_sweep, sweep_objects, Direction, MonoidalFunctorStructure,
    MonoidalStructure, Obj2ToMor,
};
use crate::report::{CheckItem, CheckReport};

#[derive(Clone)]
pub struct MonoidalMonad {
    pub monad: MonadData,
    pub tensor: MonoidalStructure<FinSetCat>,
    phi: Obj2ToMor<FinSetCat>,
    pub phi0: FinMap,
}

impl MonoidalMonad {
    pub fn new(
        monad: MonadData,
        tensor: MonoidalStructure<FinSetCat>,
        phi: Obj2ToMor<FinSetCat>,
        phi0: FinMap,
    ) -> Self {
        MonoidalMonad {
            monad,
            tensor,
            phi,
            phi0,
        }
    }

    /// `phi_{X,Y}: T X (x) T Y -> T(X (x) Y)`
    pub fn phi_at(&self, x: &FinSet, y: &FinSet) -> Result<FinMap> {
        (self.phi)(x, y)
    }

    pub fn functor_structure(&self) -> MonoidalFunctorStructure<FinSetCat> {
        MonoidalFunctorStructure::new(
            self.monad.functor(),
            self.tensor.clone(),
            Direction::Monoidal,
            self.phi.clone(),
            self.phi0.clone(),
        )
    }

    /// Iterated `phi_{X_1,...,X_n}`.
    pub fn phi_iterated(&self, objects: &[FinSet]) -> Result<FinMap> {
        self.functor_structure().iterate(objects)
    }
}

impl std::fmt::Debug for MonoidalMonad {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MonoidalMonad({} on {})", self.monad.name, self.tensor.name)
    }
}

/// The full law suite for a monoidal monad: monad laws are assumed checked
/// separately; here the functor's monoidal structure axioms plus the
/// conditions making the unit and multiplication morphisms of monoidal
/// functors, including `phi0 = eta_I`.
pub fn check_monoidal_monad(m: &MonoidalMonad, sample: &[FinSet], ctx: &Ctx) -> Result<CheckReport> {
    let mut report = check_monoidal_functor(&m.functor_structure(), sample, ctx)?;
    let t = &m.monad;
    let tensor = &m.tensor;

    // phi0 = eta_I
    let eta_i = t.eta_at(&tensor.unit)?;
    report.push(if m.phi0 == eta_i {
        CheckItem::pass("phi0 = eta at the unit", 1)
    } else {
        CheckItem::fail("phi0 = eta at the unit", 1, format!("phi0 {} != eta_I {}", m.phi0, eta_i))
    });

    // eta is a morphism of monoidal functors
    let out = sweep_objects::<FinSetCat>(ctx, sample, 2, |o| {
        let (x, y) = (o[0], o[1]);
        let xy = tensor.tensor_obj(x, y)?;
        let lhs = tensor
            .tensor_mor(&t.eta_at(x)?, &t.eta_at(y)?)?
            .then(&m.phi_at(x, y)?)?;
        let rhs = t.eta_at(&xy)?;
        Ok((lhs != rhs).then(|| format!("eta monoidal at ({x}, {y})")))
    })?;
    report.push(item_from_sweep("eta is a monoidal transformation", out));

    // mu is a morphism of monoidal functors; the instance at (X, Y) lives
    // on T(T X (x) T Y), so pairs beyond the budget are skipped and listed
    let mut admissible: Vec<(FinSet, FinSet)> = Vec::new();
    let mut skipped: Vec<String> = Vec::new();
    for x in sample {
        for y in sample {
            let feasible = (|| -> Result<bool> {
                let txty = tensor.tensor_obj(&t.t_obj(x)?, &t.t_obj(y)?)?;
                match t.t_obj(&txty) {
                    Ok(big) => Ok(ctx.admit(big.len() as u128).is_ok()),
                    Err(_) => Ok(false),
                }
            })()
            .unwrap_or(false);
            if feasible {
                admissible.push((x.clone(), y.clone()));
            } else {
                skipped.push(format!("({x}, {y})"));
            }
        }
    }
    let out = crate::moncat::sweep_indices(ctx, admissible.len(), 1, |idx| {
        let (x, y) = (&admissible[idx[0]].0, &admissible[idx[0]].1);
        let tx = t.t_obj(x)?;
        let ty = t.t_obj(y)?;
        let lhs = m
            .phi_at(&tx, &ty)?
            .then(&t.t_map(&m.phi_at(x, y)?)?)?
            .then(&t.mu_at(&tensor.tensor_obj(x, y)?)?)?;
        let rhs = tensor
            .tensor_mor(&t.mu_at(x)?, &t.mu_at(y)?)?
            .then(&m.phi_at(x, y)?)?;
        Ok((lhs != rhs).then(|| format!("mu monoidal at ({x}, {y})")))
    })?;
    report.push(item_from_sweep("mu is a monoidal transformation", out));
    if !skipped.is_empty() {
        report.push(CheckItem::pass(
            format!(
                "mu monoidal skipped where T(TX (x) TY) exceeds budget: {}",
                skipped.join(", ")
            ),
            0,
        ));
    }

    Ok(report)
}
