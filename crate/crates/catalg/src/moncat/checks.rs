//! Structural-axiom checkers for monoidal structures and (co)monoidal
//! functor structures. Failures are reported as data with a witness tuple.

use super::structures::{Direction, FunctorData, MonoidalFunctorStructure, MonoidalStructure};
use super::sweep::{hom_sample, item_from_sweep, sweep_objects};
use crate::cat::Category;
use crate::ctx::Ctx;
use crate::error::Result;
use crate::report::{CheckItem, CheckReport};

/// Per-hom-set cap used when sampling morphisms for naturality and
/// bifunctoriality sweeps.
pub const HOM_CAP: u64 = 64;

fn witness<C: Category>(cat: &C, objs: &[&C::Obj], lhs: &C::Mor, rhs: &C::Mor) -> String {
    let labels: Vec<String> = objs.iter().map(|o| cat.obj_label(o)).collect();
    format!(
        "objects ({}): lhs {} != rhs {}",
        labels.join(", "),
        cat.mor_label(lhs),
        cat.mor_label(rhs)
    )
}

/// Checks every monoidal-category axiom on the sampled objects: functoriality
/// of the tensor, naturality of the structural maps, invertibility,
/// pentagon, triangle, and both hexagons plus naturality when a braiding is
/// present.
pub fn check_monoidal<C: Category>(
    m: &MonoidalStructure<C>,
    sample: &[C::Obj],
    ctx: &Ctx,
) -> Result<CheckReport> {
    let cat = m.cat.clone();
    let mut report = CheckReport::new();

    // tensor of identities is the identity
    let out = sweep_objects::<C>(ctx, sample, 2, |o| {
        let (a, b) = (o[0], o[1]);
        let lhs = m.tensor_mor(&cat.identity(a), &cat.identity(b))?;
        let rhs = cat.identity(&m.tensor_obj(a, b)?);
        Ok((lhs != rhs).then(|| witness(&cat, o, &lhs, &rhs)))
    })?;
    report.push(item_from_sweep("tensor preserves identities", out));

    // tensor of composites (first sampled map per hom keeps this tractable)
    let out = sweep_objects::<C>(ctx, sample, 3, |o| {
        let (a, b, c) = (o[0], o[1], o[2]);
        for f in hom_sample(&cat, a, b, ctx, 4)? {
            for f2 in hom_sample(&cat, b, c, ctx, 4)? {
                for g in hom_sample(&cat, a, b, ctx, 4)? {
                    for g2 in hom_sample(&cat, b, c, ctx, 4)? {
                        let lhs = m.tensor_mor(&cat.compose(&f, &f2)?, &cat.compose(&g, &g2)?)?;
                        let rhs =
                            cat.compose(&m.tensor_mor(&f, &g)?, &m.tensor_mor(&f2, &g2)?)?;
                        if lhs != rhs {
                            return Ok(Some(witness(&cat, o, &lhs, &rhs)));
                        }
                    }
                }
            }
        }
        Ok(None)
    })?;
    report.push(item_from_sweep("tensor preserves composition", out));

    // structural maps are isomorphisms
    let out = sweep_objects::<C>(ctx, sample, 3, |o| {
        let (a, b, c) = (o[0], o[1], o[2]);
        let assoc = m.associator(a, b, c)?;
        if !cat.is_invertible(&assoc) {
            return Ok(Some(format!("associator not invertible at {}", witness(&cat, o, &assoc, &assoc))));
        }
        let lu = m.left_unitor(a)?;
        let ru = m.right_unitor(a)?;
        if !cat.is_invertible(&lu) || !cat.is_invertible(&ru) {
            return Ok(Some(format!("unitor not invertible at {}", cat.obj_label(a))));
        }
        Ok(None)
    })?;
    report.push(item_from_sweep("structural maps invertible", out));

    // naturality of the associator
    let out = sweep_objects::<C>(ctx, sample, 3, |o| {
        let (a, b, c) = (o[0], o[1], o[2]);
        for f in hom_sample(&cat, a, a, ctx, 4)? {
            for g in hom_sample(&cat, b, b, ctx, 4)? {
                for h in hom_sample(&cat, c, c, ctx, 4)? {
                    let fg_h = m.tensor_mor(&m.tensor_mor(&f, &g)?, &h)?;
                    let f_gh = m.tensor_mor(&f, &m.tensor_mor(&g, &h)?)?;
                    let assoc = m.associator(a, b, c)?;
                    let lhs = cat.compose(&fg_h, &assoc)?;
                    let rhs = cat.compose(&assoc, &f_gh)?;
                    if lhs != rhs {
                        return Ok(Some(witness(&cat, o, &lhs, &rhs)));
                    }
                }
            }
        }
        Ok(None)
    })?;
    report.push(item_from_sweep("associator natural", out));

    // naturality of the unitors
    let out = sweep_objects::<C>(ctx, sample, 1, |o| {
        let a = o[0];
        for f in hom_sample(&cat, a, a, ctx, HOM_CAP)? {
            let id_i = cat.identity(&m.unit);
            let lhs = cat.compose(&m.tensor_mor(&id_i, &f)?, &m.left_unitor(a)?)?;
            let rhs = cat.compose(&m.left_unitor(a)?, &f)?;
            if lhs != rhs {
                return Ok(Some(witness(&cat, o, &lhs, &rhs)));
            }
            let lhs = cat.compose(&m.tensor_mor(&f, &id_i)?, &m.right_unitor(a)?)?;
            let rhs = cat.compose(&m.right_unitor(a)?, &f)?;
            if lhs != rhs {
                return Ok(Some(witness(&cat, o, &lhs, &rhs)));
            }
        }
        Ok(None)
    })?;
    report.push(item_from_sweep("unitors natural", out));

    // pentagon
    let out = sweep_objects::<C>(ctx, sample, 4, |o| {
        let (a, b, c, d) = (o[0], o[1], o[2], o[3]);
        let ab = m.tensor_obj(a, b)?;
        let cd = m.tensor_obj(c, d)?;
        // ((ab)c)d -> (ab)(cd) -> a(b(cd))
        let path1 = cat.compose(&m.associator(&ab, c, d)?, &m.associator(a, b, &cd)?)?;
        // ((ab)c)d -> (a(bc))d -> a((bc)d) -> a(b(cd))
        let bc = m.tensor_obj(b, c)?;
        let step1 = m.tensor_mor(&m.associator(a, b, c)?, &cat.identity(d))?;
        let step2 = m.associator(a, &bc, d)?;
        let step3 = m.tensor_mor(&cat.identity(a), &m.associator(b, c, d)?)?;
        let path2 = cat.compose(&cat.compose(&step1, &step2)?, &step3)?;
        Ok((path1 != path2).then(|| witness(&cat, o, &path1, &path2)))
    })?;
    report.push(item_from_sweep("pentagon", out));

    // triangle
    let out = sweep_objects::<C>(ctx, sample, 2, |o| {
        let (a, b) = (o[0], o[1]);
        let assoc = m.associator(a, &m.unit, b)?;
        let lhs = cat.compose(&assoc, &m.tensor_mor(&cat.identity(a), &m.left_unitor(b)?)?)?;
        let rhs = m.tensor_mor(&m.right_unitor(a)?, &cat.identity(b))?;
        Ok((lhs != rhs).then(|| witness(&cat, o, &lhs, &rhs)))
    })?;
    report.push(item_from_sweep("triangle", out));

    if m.has_braiding() {
        // braiding is invertible and natural
        let out = sweep_objects::<C>(ctx, sample, 2, |o| {
            let (a, b) = (o[0], o[1]);
            let beta = m.braiding(a, b)?;
            if !cat.is_invertible(&beta) {
                return Ok(Some(format!(
                    "braiding not invertible at ({}, {})",
                    cat.obj_label(a),
                    cat.obj_label(b)
                )));
            }
            for f in hom_sample(&cat, a, a, ctx, 4)? {
                for g in hom_sample(&cat, b, b, ctx, 4)? {
                    let lhs = cat.compose(&m.tensor_mor(&f, &g)?, &m.braiding(a, b)?)?;
                    let rhs = cat.compose(&m.braiding(a, b)?, &m.tensor_mor(&g, &f)?)?;
                    if lhs != rhs {
                        return Ok(Some(witness(&cat, o, &lhs, &rhs)));
                    }
                }
            }
            Ok(None)
        })?;
        report.push(item_from_sweep("braiding invertible and natural", out));

        // hexagon 1: (ab)c -> a(bc) -> (bc)a -> b(ca)
        let out = sweep_objects::<C>(ctx, sample, 3, |o| {
            let (a, b, c) = (o[0], o[1], o[2]);
            let bc = m.tensor_obj(b, c)?;
            let ca = m.tensor_obj(c, a)?;
            let path1 = cat.compose_all(&[
                &m.associator(a, b, c)?,
                &m.braiding(a, &bc)?,
                &m.associator(b, c, a)?,
            ])?;
            let path2 = cat.compose_all(&[
                &m.tensor_mor(&m.braiding(a, b)?, &cat.identity(c))?,
                &m.associator(b, a, c)?,
                &m.tensor_mor(&cat.identity(b), &m.braiding(a, c)?)?,
            ])?;
            let _ = ca;
            Ok((path1 != path2).then(|| witness(&cat, o, &path1, &path2)))
        })?;
        report.push(item_from_sweep("hexagon (braid forward)", out));

        // hexagon 2 with the inverse braiding direction
        let out = sweep_objects::<C>(ctx, sample, 3, |o| {
            let (a, b, c) = (o[0], o[1], o[2]);
            let ab = m.tensor_obj(a, b)?;
            let path1 = cat.compose_all(&[
                &cat.invert(&m.associator(a, b, c)?)?,
                &m.braiding(&ab, c)?,
                &cat.invert(&m.associator(c, a, b)?)?,
            ])?;
            let path2 = cat.compose_all(&[
                &m.tensor_mor(&cat.identity(a), &m.braiding(b, c)?)?,
                &cat.invert(&m.associator(a, c, b)?)?,
                &m.tensor_mor(&m.braiding(a, c)?, &cat.identity(b))?,
            ])?;
            Ok((path1 != path2).then(|| witness(&cat, o, &path1, &path2)))
        })?;
        report.push(item_from_sweep("hexagon (braid backward)", out));
    }

    Ok(report)
}

/// Functor laws on sampled objects and morphisms.
pub fn check_functor<C: Category>(
    f: &FunctorData<C>,
    cat: &C,
    sample: &[C::Obj],
    ctx: &Ctx,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();

    let out = sweep_objects::<C>(ctx, sample, 1, |o| {
        let lhs = f.on_mor(&cat.identity(o[0]))?;
        let rhs = cat.identity(&f.on_obj(o[0])?);
        Ok((lhs != rhs).then(|| witness(cat, o, &lhs, &rhs)))
    })?;
    report.push(item_from_sweep("functor preserves identities", out));

    let out = sweep_objects::<C>(ctx, sample, 3, |o| {
        let (a, b, c) = (o[0], o[1], o[2]);
        for g in hom_sample(cat, a, b, ctx, 6)? {
            for h in hom_sample(cat, b, c, ctx, 6)? {
                let lhs = f.on_mor(&cat.compose(&g, &h)?)?;
                let rhs = cat.compose(&f.on_mor(&g)?, &f.on_mor(&h)?)?;
                if lhs != rhs {
                    return Ok(Some(witness(cat, o, &lhs, &rhs)));
                }
            }
        }
        Ok(None)
    })?;
    report.push(item_from_sweep("functor preserves composition", out));

    Ok(report)
}

/// Associativity, unit, and naturality axioms for a (co)monoidal functor
/// structure, on sampled objects.
pub fn check_monoidal_functor<C: Category>(
    mf: &MonoidalFunctorStructure<C>,
    sample: &[C::Obj],
    ctx: &Ctx,
) -> Result<CheckReport> {
    let cat = mf.tensor.cat.clone();
    let m = &mf.tensor;
    let f = &mf.functor;
    let mut report = check_functor(f, &cat, sample, ctx)?;

    match mf.direction {
        Direction::Monoidal => {
            // associativity
            let out = sweep_objects::<C>(ctx, sample, 3, |o| {
                let (x, y, z) = (o[0], o[1], o[2]);
                let xy = m.tensor_obj(x, y)?;
                let yz = m.tensor_obj(y, z)?;
                let (fx, fy, fz) = (f.on_obj(x)?, f.on_obj(y)?, f.on_obj(z)?);
                // (FX(x)FY)(x)FZ -> F(X(x)Y)(x)FZ -> F((X(x)Y)(x)Z)
                let lhs = cat.compose(
                    &m.tensor_mor(&mf.comp(x, y)?, &cat.identity(&fz))?,
                    &mf.comp(&xy, z)?,
                )?;
                // via the associators on both sides
                let rhs = cat.compose_all(&[
                    &m.associator(&fx, &fy, &fz)?,
                    &m.tensor_mor(&cat.identity(&fx), &mf.comp(y, z)?)?,
                    &mf.comp(x, &yz)?,
                    &f.on_mor(&cat.invert(&m.associator(x, y, z)?)?)?,
                ])?;
                Ok((lhs != rhs).then(|| witness(&cat, o, &lhs, &rhs)))
            })?;
            report.push(item_from_sweep("monoidal functor associativity", out));

            // unit axioms
            let out = sweep_objects::<C>(ctx, sample, 1, |o| {
                let x = o[0];
                let fx = f.on_obj(x)?;
                let ix = m.tensor_obj(&m.unit, x)?;
                let _ = ix;
                let lhs = cat.compose_all(&[
                    &m.tensor_mor(&mf.comp0, &cat.identity(&fx))?,
                    &mf.comp(&m.unit, x)?,
                    &f.on_mor(&m.left_unitor(x)?)?,
                ])?;
                let rhs = m.left_unitor(&fx)?;
                if lhs != rhs {
                    return Ok(Some(witness(&cat, o, &lhs, &rhs)));
                }
                let lhs = cat.compose_all(&[
                    &m.tensor_mor(&cat.identity(&fx), &mf.comp0)?,
                    &mf.comp(x, &m.unit)?,
                    &f.on_mor(&m.right_unitor(x)?)?,
                ])?;
                let rhs = m.right_unitor(&fx)?;
                Ok((lhs != rhs).then(|| witness(&cat, o, &lhs, &rhs)))
            })?;
            report.push(item_from_sweep("monoidal functor unit axioms", out));
        }
        Direction::Comonoidal => {
            let out = sweep_objects::<C>(ctx, sample, 3, |o| {
                let (x, y, z) = (o[0], o[1], o[2]);
                let xy = m.tensor_obj(x, y)?;
                let yz = m.tensor_obj(y, z)?;
                let (fx, fy, fz) = (f.on_obj(x)?, f.on_obj(y)?, f.on_obj(z)?);
                // F((XY)Z) -> F(XY)(x)FZ -> (FX(x)FY)(x)FZ -> FX(x)(FY(x)FZ)
                let lhs = cat.compose_all(&[
                    &mf.comp(&xy, z)?,
                    &m.tensor_mor(&mf.comp(x, y)?, &cat.identity(&fz))?,
                    &m.associator(&fx, &fy, &fz)?,
                ])?;
                // F((XY)Z) -> F(X(YZ)) -> FX(x)F(YZ) -> FX(x)(FY(x)FZ)
                let rhs = cat.compose_all(&[
                    &f.on_mor(&m.associator(x, y, z)?)?,
                    &mf.comp(x, &yz)?,
                    &m.tensor_mor(&cat.identity(&fx), &mf.comp(y, z)?)?,
                ])?;
                Ok((lhs != rhs).then(|| witness(&cat, o, &lhs, &rhs)))
            })?;
            report.push(item_from_sweep("comonoidal functor associativity", out));

            let out = sweep_objects::<C>(ctx, sample, 1, |o| {
                let x = o[0];
                let fx = f.on_obj(x)?;
                let lhs = cat.compose_all(&[
                    &f.on_mor(&cat.invert(&m.left_unitor(x)?)?)?,
                    &mf.comp(&m.unit, x)?,
                    &m.tensor_mor(&mf.comp0, &cat.identity(&fx))?,
                    &m.left_unitor(&fx)?,
                ])?;
                if lhs != cat.identity(&fx) {
                    return Ok(Some(witness(&cat, o, &lhs, &cat.identity(&fx))));
                }
                let lhs = cat.compose_all(&[
                    &f.on_mor(&cat.invert(&m.right_unitor(x)?)?)?,
                    &mf.comp(x, &m.unit)?,
                    &m.tensor_mor(&cat.identity(&fx), &mf.comp0)?,
                    &m.right_unitor(&fx)?,
                ])?;
                Ok((lhs != cat.identity(&fx)).then(|| witness(&cat, o, &lhs, &cat.identity(&fx))))
            })?;
            report.push(item_from_sweep("comonoidal functor unit axioms", out));
        }
    }

    // naturality of the components
    let out = sweep_objects::<C>(ctx, sample, 2, |o| {
        let (x, y) = (o[0], o[1]);
        for g in hom_sample(&cat, x, x, ctx, 4)? {
            for h in hom_sample(&cat, y, y, ctx, 4)? {
                let fg_fh = m.tensor_mor(&f.on_mor(&g)?, &f.on_mor(&h)?)?;
                let f_gh = f.on_mor(&m.tensor_mor(&g, &h)?)?;
                let comp = mf.comp(x, y)?;
                let (lhs, rhs) = match mf.direction {
                    Direction::Monoidal => {
                        (cat.compose(&fg_fh, &comp)?, cat.compose(&comp, &f_gh)?)
                    }
                    Direction::Comonoidal => {
                        (cat.compose(&f_gh, &comp)?, cat.compose(&comp, &fg_fh)?)
                    }
                };
                if lhs != rhs {
                    return Ok(Some(witness(&cat, o, &lhs, &rhs)));
                }
            }
        }
        Ok(None)
    })?;
    report.push(item_from_sweep("structure components natural", out));

    Ok(report)
}

/// Is the structure strong on the sample (all components plus the unit
/// component invertible)?
pub fn is_strong<C: Category>(
    mf: &MonoidalFunctorStructure<C>,
    sample: &[C::Obj],
) -> Result<bool> {
    let cat = &mf.tensor.cat;
    if !cat.is_invertible(&mf.comp0) {
        return Ok(false);
    }
    for x in sample {
        for y in sample {
            if !cat.is_invertible(&mf.comp(x, y)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Parenthesization independence of the iterated structure map at `n = 3`:
/// evaluating left-nested agrees with the right-nested evaluation
/// transported along associators.
pub fn check_iterate_coherence<C: Category>(
    mf: &MonoidalFunctorStructure<C>,
    sample: &[C::Obj],
    ctx: &Ctx,
) -> Result<CheckItem> {
    let cat = mf.tensor.cat.clone();
    let m = &mf.tensor;
    let f = &mf.functor;
    let out = sweep_objects::<C>(ctx, sample, 3, |o| {
        let (x, y, z) = (o[0], o[1], o[2]);
        let left = mf.iterate(&[x.clone(), y.clone(), z.clone()])?;
        // right-nested: FX(x)(FY(x)FZ) -> FX(x)F(YZ) -> F(X(YZ)); transport to
        // the left-nested domain/codomain with associators.
        let (fx, fy, fz) = (f.on_obj(x)?, f.on_obj(y)?, f.on_obj(z)?);
        let yz = m.tensor_obj(y, z)?;
        let right = cat.compose_all(&[
            &m.associator(&fx, &fy, &fz)?,
            &m.tensor_mor(&cat.identity(&fx), &mf.comp(y, z)?)?,
            &mf.comp(x, &yz)?,
            &f.on_mor(&cat.invert(&m.associator(x, y, z)?)?)?,
        ])?;
        Ok((left != right).then(|| witness(&cat, o, &left, &right)))
    })?;
    Ok(item_from_sweep("iterated structure map coherent", out))
}
