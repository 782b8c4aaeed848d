//! Monad data on finite sets and the law suite.

use crate::cat::FinSetCat;
use crate::ctx::Ctx;
use crate::error::Result;
use crate::finset::{Element, FinMap, FinSet};
use crate::moncat::{check_functor, hom_sample, item_from_sweep, sweep_objects, FunctorData};
use crate::report::CheckReport;
use std::sync::Arc;

pub type ObjFn = Arc<dyn Fn(&FinSet) -> Result<FinSet> + Send + Sync>;
pub type MapElemFn = Arc<dyn Fn(&FinMap, &Element) -> Result<Element> + Send + Sync>;
pub type ElemFn = Arc<dyn Fn(&Element) -> Result<Element> + Send + Sync>;

/// An endofunctor on finite sets with multiplication and unit.
///
/// The functorial action and the transformation components are supplied
/// *pointwise* on element values: element values are closed terms, so
/// `T f`, `mu`, and `eta` can be evaluated on a single element without
/// materializing the (possibly enormous) ambient carrier. Whole-map views
/// are derived on demand.
#[derive(Clone)]
pub struct MonadData {
    pub name: String,
    on_obj: ObjFn,
    map_elem: MapElemFn,
    mu_elem: ElemFn,
    eta_elem: ElemFn,
}

impl MonadData {
    pub fn new(
        name: impl Into<String>,
        on_obj: ObjFn,
        map_elem: MapElemFn,
        mu_elem: ElemFn,
        eta_elem: ElemFn,
    ) -> Self {
        MonadData {
            name: name.into(),
            on_obj,
            map_elem,
            mu_elem,
            eta_elem,
        }
    }

    pub fn t_obj(&self, x: &FinSet) -> Result<FinSet> {
        (self.on_obj)(x)
    }

    /// `T f` applied to one element of `T(dom f)`.
    pub fn apply_map(&self, f: &FinMap, e: &Element) -> Result<Element> {
        (self.map_elem)(f, e)
    }

    /// `mu` applied to one element of `T^2 X`.
    pub fn apply_mu(&self, e: &Element) -> Result<Element> {
        (self.mu_elem)(e)
    }

    /// `eta` applied to one element of `X`.
    pub fn apply_eta(&self, e: &Element) -> Result<Element> {
        (self.eta_elem)(e)
    }

    pub fn t_map(&self, f: &FinMap) -> Result<FinMap> {
        let dom = self.t_obj(f.dom())?;
        let cod = self.t_obj(f.cod())?;
        FinMap::try_from_fn(&dom, &cod, |e| self.apply_map(f, e))
    }

    /// `mu_X: T^2 X -> T X`
    pub fn mu_at(&self, x: &FinSet) -> Result<FinMap> {
        let tx = self.t_obj(x)?;
        let ttx = self.t_obj(&tx)?;
        FinMap::try_from_fn(&ttx, &tx, |e| self.apply_mu(e))
    }

    /// `eta_X: X -> T X`
    pub fn eta_at(&self, x: &FinSet) -> Result<FinMap> {
        let tx = self.t_obj(x)?;
        FinMap::try_from_fn(x, &tx, |e| self.apply_eta(e))
    }

    pub fn functor(&self) -> FunctorData<FinSetCat> {
        let this = self.clone();
        let on_obj = self.on_obj.clone();
        FunctorData::new(
            self.name.clone(),
            on_obj,
            Arc::new(move |f| this.t_map(f)),
        )
    }
}

impl std::fmt::Debug for MonadData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MonadData({})", self.name)
    }
}

/// Can `T` be applied `depth` times to `x` within the budget? Oversized
/// iterated images (the cube of an exponential monad explodes immediately)
/// make the probe fail, and the corresponding law instances are skipped and
/// reported as such.
pub fn probe_depth(t: &MonadData, x: &FinSet, depth: usize, ctx: &Ctx) -> bool {
    let mut cur = x.clone();
    for _ in 0..depth {
        match t.t_obj(&cur) {
            Ok(next) if ctx.admit(next.len() as u128).is_ok() => cur = next,
            _ => return false,
        }
    }
    true
}

/// Functor laws, the associativity/unit laws, and naturality of the
/// multiplication and unit on sampled objects and maps. Laws quantified
/// over `T^3 X` run on the carriers where that object is admissible; a
/// separate item records any skipped carriers.
pub fn check_monad(t: &MonadData, sample: &[FinSet], ctx: &Ctx) -> Result<CheckReport> {
    let cat = FinSetCat;
    let mut report = check_functor(&t.functor(), &cat, sample, ctx)?;

    let (cubable, skipped): (Vec<FinSet>, Vec<FinSet>) = sample
        .iter()
        .cloned()
        .partition(|x| probe_depth(t, x, 3, ctx));
    let out = sweep_objects::<FinSetCat>(ctx, &cubable, 1, |o| {
        let x = o[0];
        // mu . T mu = mu . mu_T on T^3 X
        let lhs = t.t_map(&t.mu_at(x)?)?.then(&t.mu_at(x)?)?;
        let rhs = t.mu_at(&t.t_obj(x)?)?.then(&t.mu_at(x)?)?;
        Ok((lhs != rhs).then(|| format!("associativity at {x}")))
    })?;
    report.push(item_from_sweep("monad associativity", out));
    if !skipped.is_empty() {
        let names: Vec<String> = skipped.iter().map(|x| x.to_canonical_string()).collect();
        report.push(crate::report::CheckItem::pass(
            format!(
                "monad associativity skipped where T^3 exceeds budget: {}",
                names.join(", ")
            ),
            0,
        ));
    }

    let out = sweep_objects::<FinSetCat>(ctx, sample, 1, |o| {
        let x = o[0];
        let tx = t.t_obj(x)?;
        let id_tx = FinMap::identity(&tx);
        let lhs = t.t_map(&t.eta_at(x)?)?.then(&t.mu_at(x)?)?;
        if lhs != id_tx {
            return Ok(Some(format!("unit law mu . T eta at {x}")));
        }
        let rhs = t.eta_at(&tx)?.then(&t.mu_at(x)?)?;
        Ok((rhs != id_tx).then(|| format!("unit law mu . eta_T at {x}")))
    })?;
    report.push(item_from_sweep("monad unit laws", out));

    let out = sweep_objects::<FinSetCat>(ctx, sample, 2, |o| {
        let (x, y) = (o[0], o[1]);
        for f in hom_sample(&cat, x, y, ctx, 16)? {
            let tf = t.t_map(&f)?;
            // eta natural
            let lhs = f.then(&t.eta_at(y)?)?;
            let rhs = t.eta_at(x)?.then(&tf)?;
            if lhs != rhs {
                return Ok(Some(format!("eta not natural at {}", f)));
            }
            // mu natural
            let lhs = t.t_map(&tf)?.then(&t.mu_at(y)?)?;
            let rhs = t.mu_at(x)?.then(&tf)?;
            if lhs != rhs {
                return Ok(Some(format!("mu not natural at {}", f)));
            }
        }
        Ok(None)
    })?;
    report.push(item_from_sweep("mu and eta natural", out));

    Ok(report)
}
