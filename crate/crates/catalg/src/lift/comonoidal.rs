//! Comonoidal monads and the strict lift of the tensor to algebras: for
//! algebras `(V, v)` and `(W, w)` the carrier `V (x) W` becomes an algebra
//! through `psi` followed by `v (x) w`, and the forgetful functor is strict
//! monoidal for the lifted structure.

use crate::cat::FinSetCat;
use crate::ctx::Ctx;
use crate::error::Result;
use crate::finset::{FinMap, FinSet};
use crate::monad::{algebra_law_witness, AlgebraMap, AlgebraObj, MonadData};
use crate::moncat::{
    check_monoidal_functor, item_from_sweep, sweep_objects, Direction, MonoidalFunctorStructure,
    MonoidalStructure, Obj2ToMor,
};
use crate::report::{CheckItem, CheckReport};

#[derive(Clone)]
pub struct ComonoidalMonad {
    pub monad: MonadData,
    pub tensor: MonoidalStructure<FinSetCat>,
    psi: Obj2ToMor<FinSetCat>,
    /// `T J -> J`
    pub psi0: FinMap,
}

impl ComonoidalMonad {
    pub fn new(
        monad: MonadData,
        tensor: MonoidalStructure<FinSetCat>,
        psi: Obj2ToMor<FinSetCat>,
        psi0: FinMap,
    ) -> Self {
        ComonoidalMonad {
            monad,
            tensor,
            psi,
            psi0,
        }
    }

    /// `psi_{X,Y}: T(X (x) Y) -> T X (x) T Y`
    pub fn psi_at(&self, x: &FinSet, y: &FinSet) -> Result<FinMap> {
        (self.psi)(x, y)
    }

    pub fn functor_structure(&self) -> MonoidalFunctorStructure<FinSetCat> {
        MonoidalFunctorStructure::new(
            self.monad.functor(),
            self.tensor.clone(),
            Direction::Comonoidal,
            self.psi.clone(),
            self.psi0.clone(),
        )
    }

    /// The unit object as an algebra `(J, psi0)`.
    pub fn unit_algebra(&self) -> Result<AlgebraObj> {
        Ok(AlgebraObj::new(
            self.tensor.unit.clone(),
            self.psi0.clone(),
            "unit(lifted)",
        ))
    }

    /// The lifted tensor of two algebras: structure `(v (x) w) . psi`.
    pub fn lift_tensor(&self, v: &AlgebraObj, w: &AlgebraObj) -> Result<AlgebraObj> {
        let carrier = self.tensor.tensor_obj(&v.carrier, &w.carrier)?;
        let structure = self
            .psi_at(&v.carrier, &w.carrier)?
            .then(&self.tensor.tensor_mor(&v.structure, &w.structure)?)?;
        Ok(AlgebraObj {
            carrier,
            structure,
            free_on: None,
            name: format!("({} (x) {})", v.name, w.name),
        })
    }

    /// The lifted tensor of algebra maps is the underlying tensor of maps.
    pub fn lift_tensor_mor(&self, f: &AlgebraMap, g: &AlgebraMap) -> Result<AlgebraMap> {
        Ok(AlgebraMap::new(
            self.lift_tensor(&f.src, &g.src)?,
            self.lift_tensor(&f.dst, &g.dst)?,
            self.tensor.tensor_mor(&f.map, &g.map)?,
        ))
    }
}

impl std::fmt::Debug for ComonoidalMonad {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ComonoidalMonad({} on {})", self.monad.name, self.tensor.name)
    }
}

/// Law suite: the comonoidal functor axioms plus the conditions making
/// `eta` and `mu` morphisms of comonoidal functors. The latter are exactly
/// the statements that `psi0` and `psi_{X,Y}` are algebra maps.
pub fn check_comonoidal_monad(
    c: &ComonoidalMonad,
    sample: &[FinSet],
    ctx: &Ctx,
) -> Result<CheckReport> {
    let mut report = check_monoidal_functor(&c.functor_structure(), sample, ctx)?;
    let t = &c.monad;
    let tensor = &c.tensor;

    // psi0 . eta_J = id
    let lhs = t.eta_at(&tensor.unit)?.then(&c.psi0)?;
    report.push(if lhs == FinMap::identity(&tensor.unit) {
        CheckItem::pass("psi0 splits eta at the unit", 1)
    } else {
        CheckItem::fail("psi0 splits eta at the unit", 1, format!("psi0 . eta = {lhs}"))
    });

    // eta comonoidal: psi . eta_{X(x)Y} = eta (x) eta
    let out = sweep_objects::<FinSetCat>(ctx, sample, 2, |o| {
        let (x, y) = (o[0], o[1]);
        let xy = tensor.tensor_obj(x, y)?;
        let lhs = t.eta_at(&xy)?.then(&c.psi_at(x, y)?)?;
        let rhs = tensor.tensor_mor(&t.eta_at(x)?, &t.eta_at(y)?)?;
        Ok((lhs != rhs).then(|| format!("eta comonoidal at ({x}, {y})")))
    })?;
    report.push(item_from_sweep("eta is a comonoidal transformation", out));

    // mu comonoidal, equivalently psi is an algebra map between the free
    // algebra on X(x)Y and the lifted tensor of free algebras
    let out = sweep_objects::<FinSetCat>(ctx, sample, 2, |o| {
        let (x, y) = (o[0], o[1]);
        let xy = tensor.tensor_obj(x, y)?;
        let lhs = t.mu_at(&xy)?.then(&c.psi_at(x, y)?)?;
        let rhs = t
            .t_map(&c.psi_at(x, y)?)?
            .then(&c.psi_at(&t.t_obj(x)?, &t.t_obj(y)?)?)?
            .then(&tensor.tensor_mor(&t.mu_at(x)?, &t.mu_at(y)?)?)?;
        Ok((lhs != rhs).then(|| format!("mu comonoidal at ({x}, {y})")))
    })?;
    report.push(item_from_sweep(
        "mu is a comonoidal transformation (psi is an algebra map)",
        out,
    ));

    // psi0 is an algebra map from the free algebra on J to (J, psi0)
    let lhs = t.mu_at(&tensor.unit)?.then(&c.psi0)?;
    let rhs = t.t_map(&c.psi0)?.then(&c.psi0)?;
    report.push(if lhs == rhs {
        CheckItem::pass("psi0 is an algebra map", 1)
    } else {
        CheckItem::fail("psi0 is an algebra map", 1, format!("{lhs} != {rhs}"))
    });

    // the unit algebra and sampled lifted tensors satisfy the algebra laws
    let out = sweep_objects::<FinSetCat>(ctx, sample, 2, |o| {
        let (x, y) = (o[0], o[1]);
        let fx = crate::monad::free_algebra(t, x)?;
        let fy = crate::monad::free_algebra(t, y)?;
        let lifted = c.lift_tensor(&fx, &fy)?;
        Ok(algebra_law_witness(t, &lifted)?)
    })?;
    report.push(item_from_sweep("lifted tensors of free algebras are algebras", out));
    let unit_ok = algebra_law_witness(t, &c.unit_algebra()?)?;
    report.push(match unit_ok {
        None => CheckItem::pass("unit algebra laws", 1),
        Some(w) => CheckItem::fail("unit algebra laws", 1, w),
    });

    Ok(report)
}

/// The lifted tensor of two validated algebras, with the algebra laws and
/// the homomorphy of sampled tensors of algebra maps certified.
pub fn comonoidal_lift(
    c: &ComonoidalMonad,
    v: &AlgebraObj,
    w: &AlgebraObj,
) -> Result<AlgebraObj> {
    let lifted = c.lift_tensor(v, w)?;
    if let Some(witness) = algebra_law_witness(&c.monad, &lifted)? {
        return Err(crate::error::CatError::InconsistentStructure(witness));
    }
    Ok(lifted)
}
