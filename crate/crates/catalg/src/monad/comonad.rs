//! Comonad data, generic over the category instance, with law checks and
//! coalgebras for the finite-set case.

use crate::cat::{Category, FinSetCat};
use crate::ctx::Ctx;
use crate::error::{CatError, Result};
use crate::finset::{all_maps, FinMap, FinSet};
use crate::moncat::{check_functor, item_from_sweep, sweep_objects, FunctorData, ObjToMor};
use crate::report::CheckReport;

/// A comonad: endofunctor with comultiplication `delta: T => T^2` and
/// counit `epsilon: T => Id`.
#[derive(Clone)]
pub struct CoMonadData<C: Category> {
    pub name: String,
    pub functor: FunctorData<C>,
    delta: ObjToMor<C>,
    epsilon: ObjToMor<C>,
}

impl<C: Category> CoMonadData<C> {
    pub fn new(
        name: impl Into<String>,
        functor: FunctorData<C>,
        delta: ObjToMor<C>,
        epsilon: ObjToMor<C>,
    ) -> Self {
        CoMonadData {
            name: name.into(),
            functor,
            delta,
            epsilon,
        }
    }

    pub fn t_obj(&self, x: &C::Obj) -> Result<C::Obj> {
        self.functor.on_obj(x)
    }

    pub fn t_mor(&self, f: &C::Mor) -> Result<C::Mor> {
        self.functor.on_mor(f)
    }

    /// `delta_X: T X -> T^2 X`
    pub fn delta_at(&self, x: &C::Obj) -> Result<C::Mor> {
        (self.delta)(x)
    }

    /// `epsilon_X: T X -> X`
    pub fn epsilon_at(&self, x: &C::Obj) -> Result<C::Mor> {
        (self.epsilon)(x)
    }
}

/// Functor laws plus coassociativity and counit laws on sampled objects.
pub fn check_comonad<C: Category>(
    t: &CoMonadData<C>,
    cat: &C,
    sample: &[C::Obj],
    ctx: &Ctx,
) -> Result<CheckReport> {
    let mut report = check_functor(&t.functor, cat, sample, ctx)?;

    let out = sweep_objects::<C>(ctx, sample, 1, |o| {
        let x = o[0];
        // (T delta) . delta = delta_T . delta on T X
        let lhs = cat.compose(&t.delta_at(x)?, &t.t_mor(&t.delta_at(x)?)?)?;
        let rhs = cat.compose(&t.delta_at(x)?, &t.delta_at(&t.t_obj(x)?)?)?;
        Ok((lhs != rhs).then(|| format!("coassociativity at {}", cat.obj_label(x))))
    })?;
    report.push(item_from_sweep("comonad coassociativity", out));

    let out = sweep_objects::<C>(ctx, sample, 1, |o| {
        let x = o[0];
        let tx = t.t_obj(x)?;
        let id_tx = cat.identity(&tx);
        let lhs = cat.compose(&t.delta_at(x)?, &t.t_mor(&t.epsilon_at(x)?)?)?;
        if lhs != id_tx {
            return Ok(Some(format!("counit law T eps . delta at {}", cat.obj_label(x))));
        }
        let rhs = cat.compose(&t.delta_at(x)?, &t.epsilon_at(&tx)?)?;
        Ok((rhs != id_tx).then(|| format!("counit law eps_T . delta at {}", cat.obj_label(x))))
    })?;
    report.push(item_from_sweep("comonad counit laws", out));

    Ok(report)
}

/// A coalgebra `(X, x: X -> T X)` over a finite-set comonad.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraObj {
    pub carrier: FinSet,
    pub structure: FinMap,
    pub name: String,
}

/// Exact coalgebra laws: counitality on the carrier and coassociativity
/// into `T^2 X`.
pub fn is_coalgebra(t: &CoMonadData<FinSetCat>, v: &CoalgebraObj) -> Result<bool> {
    let tx = t.t_obj(&v.carrier)?;
    if v.structure.dom() != &v.carrier || v.structure.cod() != &tx {
        return Ok(false);
    }
    let counit = v.structure.then(&t.epsilon_at(&v.carrier)?)?;
    if counit != FinMap::identity(&v.carrier) {
        return Ok(false);
    }
    let lhs = v.structure.then(&t.t_mor(&v.structure)?)?;
    let rhs = v.structure.then(&t.delta_at(&v.carrier)?)?;
    Ok(lhs == rhs)
}

/// Enumerates all coalgebra structures on a carrier.
pub fn enumerate_coalgebras(
    t: &CoMonadData<FinSetCat>,
    carrier: &FinSet,
    ctx: &Ctx,
) -> Result<Vec<CoalgebraObj>> {
    let tx = t.t_obj(carrier)?;
    let mut out = Vec::new();
    for f in all_maps(carrier, &tx, ctx)? {
        let cand = CoalgebraObj {
            carrier: carrier.clone(),
            structure: f,
            name: format!("coalg#{}", out.len()),
        };
        if is_coalgebra(t, &cand)? {
            out.push(cand);
        }
    }
    Ok(out)
}

/// A mixed distributive law `S T_c -> T_c S` between a monad `S` and a
/// comonad `T_c` on finite sets, as explicit components.
#[derive(Clone)]
pub struct MixedDistributiveLaw {
    pub monad: super::data::MonadData,
    pub comonad: CoMonadData<FinSetCat>,
    components: crate::moncat::ObjToMor<crate::cat::FinSetCat>,
}

impl MixedDistributiveLaw {
    pub fn new(
        monad: super::data::MonadData,
        comonad: CoMonadData<FinSetCat>,
        components: crate::moncat::ObjToMor<crate::cat::FinSetCat>,
    ) -> Self {
        MixedDistributiveLaw {
            monad,
            comonad,
            components,
        }
    }

    /// `lambda_X: S T_c X -> T_c S X`
    pub fn at(&self, x: &FinSet) -> Result<FinMap> {
        (self.components)(x)
    }

    /// The four compatibility squares of a mixed distributive law, checked
    /// pointwise on sampled objects.
    pub fn check(&self, sample: &[FinSet], ctx: &Ctx) -> Result<CheckReport> {
        let s = &self.monad;
        let w = &self.comonad;
        let mut report = CheckReport::new();

        let out = sweep_objects::<FinSetCat>(ctx, sample, 1, |o| {
            let x = o[0];
            let tx = w.t_obj(x)?;
            let sx = s.t_obj(x)?;

            // eta compatibility: lambda . eta_{T_c X} = T_c eta_X
            let lhs = s.eta_at(&tx)?.then(&self.at(x)?)?;
            let rhs = w.t_mor(&s.eta_at(x)?)?;
            if lhs != rhs {
                return Ok(Some(format!("unit square at {x}")));
            }

            // mu compatibility: lambda . mu_{T_c X} = T_c mu . lambda_S . S lambda
            let lhs = s.mu_at(&tx)?.then(&self.at(x)?)?;
            let rhs = s
                .t_map(&self.at(x)?)?
                .then(&self.at(&sx)?)?
                .then(&w.t_mor(&s.mu_at(x)?)?)?;
            if lhs != rhs {
                return Ok(Some(format!("multiplication square at {x}")));
            }

            // epsilon compatibility: epsilon_{S X} . lambda = S epsilon
            let lhs = self.at(x)?.then(&w.epsilon_at(&sx)?)?;
            let rhs = s.t_map(&w.epsilon_at(x)?)?;
            if lhs != rhs {
                return Ok(Some(format!("counit square at {x}")));
            }

            // delta compatibility: delta_{S X} . lambda = T_c lambda . lambda_{T_c} . S delta
            let lhs = self.at(x)?.then(&w.delta_at(&sx)?)?;
            let rhs = s
                .t_map(&w.delta_at(x)?)?
                .then(&self.at(&tx)?)?
                .then(&w.t_mor(&self.at(x)?)?)?;
            if lhs != rhs {
                return Ok(Some(format!("comultiplication square at {x}")));
            }
            Ok(None)
        })?;
        report.push(item_from_sweep("mixed distributive law squares", out));
        Ok(report)
    }
}

/// Lifts the monad along a distributive law to the category of coalgebras:
/// a coalgebra structure on `S X` for each coalgebra `(X, x)`.
pub fn lift_monad_to_coalgebras(
    law: &MixedDistributiveLaw,
    coalg: &CoalgebraObj,
) -> Result<CoalgebraObj> {
    let s = &law.monad;
    let sx = s.t_obj(&coalg.carrier)?;
    let structure = s.t_map(&coalg.structure)?.then(&law.at(&coalg.carrier)?)?;
    if !is_coalgebra(&law.comonad, &CoalgebraObj {
        carrier: sx.clone(),
        structure: structure.clone(),
        name: String::new(),
    })? {
        return Err(CatError::structural(
            "distributive law failed to lift the monad to coalgebras",
        ));
    }
    Ok(CoalgebraObj {
        carrier: sx,
        structure,
        name: format!("lifted({})", coalg.name),
    })
}
