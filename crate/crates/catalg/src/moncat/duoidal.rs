//! Duoidal and n-monoidal structure data with their axiom checkers.

use super::checks::{check_monoidal, HOM_CAP};
use super::structures::{MonoidalStructure, Obj2ToMor, ObjToMor};
use super::sweep::{hom_sample, item_from_sweep, sweep_objects};
use crate::cat::Category;
use crate::ctx::Ctx;
use crate::error::{CatError, Result};
use crate::report::{CheckItem, CheckReport};
use std::collections::BTreeMap;
use std::sync::Arc;

pub type Obj4ToMor<C> = Arc<
    dyn Fn(
            &<C as Category>::Obj,
            &<C as Category>::Obj,
            &<C as Category>::Obj,
            &<C as Category>::Obj,
        ) -> Result<<C as Category>::Mor>
        + Send
        + Sync,
>;

/// Two monoidal structures linked by an interchange law
/// `zeta: (A * B) <> (C * D) -> (A <> C) * (B <> D)` and three unit maps.
/// The convention: `first` is the structure written `<>` (unit `I`) and
/// `second` is `*` (unit `J`); the unit maps are `delta_i: I -> I * I`,
/// `mu_j: J <> J -> J`, `iota: I -> J`.
#[derive(Clone)]
pub struct DuoidalStructure<C: Category> {
    pub name: String,
    pub first: MonoidalStructure<C>,
    pub second: MonoidalStructure<C>,
    zeta: Obj4ToMor<C>,
    pub delta_i: C::Mor,
    pub mu_j: C::Mor,
    pub iota: C::Mor,
}

impl<C: Category> DuoidalStructure<C> {
    pub fn new(
        name: impl Into<String>,
        first: MonoidalStructure<C>,
        second: MonoidalStructure<C>,
        zeta: Obj4ToMor<C>,
        delta_i: C::Mor,
        mu_j: C::Mor,
        iota: C::Mor,
    ) -> Self {
        DuoidalStructure {
            name: name.into(),
            first,
            second,
            zeta,
            delta_i,
            mu_j,
            iota,
        }
    }

    pub fn cat(&self) -> &C {
        &self.first.cat
    }

    pub fn zeta(&self, a: &C::Obj, b: &C::Obj, c: &C::Obj, d: &C::Obj) -> Result<C::Mor> {
        (self.zeta)(a, b, c, d)
    }

    /// Iterated interchange
    /// `(A1 * B1) <> ... <> (An * Bn) -> (A1 <> ... <> An) * (B1 <> ... <> Bn)`
    /// (left-nested), built by repeated application of `zeta`.
    pub fn zeta_iterated(&self, firsts: &[C::Obj], seconds: &[C::Obj]) -> Result<C::Mor> {
        if firsts.len() != seconds.len() {
            return Err(CatError::structural("zeta_iterated needs equal-length rows"));
        }
        let cat = self.cat().clone();
        match firsts.len() {
            0 => {
                // I -> I * I is the degenerate case; callers with n = 0 want delta.
                Ok(self.delta_i.clone())
            }
            1 => {
                let obj = self.second.tensor_obj(&firsts[0], &seconds[0])?;
                Ok(cat.identity(&obj))
            }
            _ => {
                let (last_a, init_a) = firsts.split_last().unwrap();
                let (last_b, init_b) = seconds.split_last().unwrap();
                let init = self.zeta_iterated(init_a, init_b)?;
                let last_obj = self.second.tensor_obj(last_a, last_b)?;
                let step = self.first.tensor_mor(&init, &cat.identity(&last_obj))?;
                let a_init = self.first.tensor_all(init_a)?;
                let b_init = self.first.tensor_all(init_b)?;
                let fin = self.zeta(&a_init, &b_init, last_a, last_b)?;
                cat.compose(&step, &fin)
            }
        }
    }
}

/// All duoidal axioms pointwise on the sampled objects: the two monoidal
/// structures, monoid/comonoid laws for the units, both interchange
/// associativity hexagons, the four interchange unit diagrams, and
/// naturality of the interchange on sampled maps.
pub fn check_duoidal<C: Category>(
    d: &DuoidalStructure<C>,
    sample: &[C::Obj],
    ctx: &Ctx,
) -> Result<CheckReport> {
    let cat = d.cat().clone();
    let mut report = CheckReport::new();

    let mut first_rep = check_monoidal(&d.first, sample, ctx)?;
    for item in &mut first_rep.items {
        item.name = format!("[{}] {}", d.first.name, item.name);
    }
    report.merge(first_rep);
    let mut second_rep = check_monoidal(&d.second, sample, ctx)?;
    for item in &mut second_rep.items {
        item.name = format!("[{}] {}", d.second.name, item.name);
    }
    report.merge(second_rep);

    let i = d.first.unit.clone();
    let j = d.second.unit.clone();

    // J is a monoid in the first structure.
    {
        let jj = d.first.tensor_obj(&j, &j)?;
        let lhs = cat.compose(&d.first.tensor_mor(&d.mu_j, &cat.identity(&j))?, &d.mu_j)?;
        let rhs = cat.compose_all(&[
            &d.first.associator(&j, &j, &j)?,
            &d.first.tensor_mor(&cat.identity(&j), &d.mu_j)?,
            &d.mu_j,
        ])?;
        report.push(if lhs == rhs {
            CheckItem::pass("unit J: monoid associativity", 1)
        } else {
            CheckItem::fail("unit J: monoid associativity", 1, cat.mor_label(&lhs))
        });
        let _ = jj;
        let lhs = cat.compose(&d.first.tensor_mor(&d.iota, &cat.identity(&j))?, &d.mu_j)?;
        let rhs = d.first.left_unitor(&j)?;
        let lhs2 = cat.compose(&d.first.tensor_mor(&cat.identity(&j), &d.iota)?, &d.mu_j)?;
        let rhs2 = d.first.right_unitor(&j)?;
        report.push(if lhs == rhs && lhs2 == rhs2 {
            CheckItem::pass("unit J: monoid unitality", 2)
        } else {
            CheckItem::fail("unit J: monoid unitality", 2, cat.mor_label(&lhs))
        });
    }

    // I is a comonoid in the second structure.
    {
        let lhs = cat.compose_all(&[
            &d.delta_i,
            &d.second.tensor_mor(&d.delta_i, &cat.identity(&i))?,
            &d.second.associator(&i, &i, &i)?,
        ])?;
        let rhs = cat.compose(&d.delta_i, &d.second.tensor_mor(&cat.identity(&i), &d.delta_i)?)?;
        report.push(if lhs == rhs {
            CheckItem::pass("unit I: comonoid coassociativity", 1)
        } else {
            CheckItem::fail("unit I: comonoid coassociativity", 1, cat.mor_label(&lhs))
        });
        let lhs = cat.compose_all(&[
            &d.delta_i,
            &d.second.tensor_mor(&d.iota, &cat.identity(&i))?,
            &d.second.left_unitor(&i)?,
        ])?;
        let lhs2 = cat.compose_all(&[
            &d.delta_i,
            &d.second.tensor_mor(&cat.identity(&i), &d.iota)?,
            &d.second.right_unitor(&i)?,
        ])?;
        let id_i = cat.identity(&i);
        report.push(if lhs == id_i && lhs2 == id_i {
            CheckItem::pass("unit I: comonoid counitality", 2)
        } else {
            CheckItem::fail("unit I: comonoid counitality", 2, cat.mor_label(&lhs))
        });
    }

    // Interchange associativity in the first structure.
    let out = sweep_objects::<C>(ctx, sample, 6, |o| {
        let (a, x, b, y, c, z) = (o[0], o[1], o[2], o[3], o[4], o[5]);
        let ax = d.second.tensor_obj(a, x)?;
        let by = d.second.tensor_obj(b, y)?;
        let cz = d.second.tensor_obj(c, z)?;
        let ab = d.first.tensor_obj(a, b)?;
        let xy = d.first.tensor_obj(x, y)?;
        let bc = d.first.tensor_obj(b, c)?;
        let yz = d.first.tensor_obj(y, z)?;
        // path 1: (zeta <> id) then zeta
        let path1 = cat.compose_all(&[
            &d.first.tensor_mor(&d.zeta(a, x, b, y)?, &cat.identity(&cz))?,
            &d.zeta(&ab, &xy, c, z)?,
        ])?;
        // path 2: associate, id <> zeta, zeta, re-associate both rows
        let path2 = cat.compose_all(&[
            &d.first.associator(&ax, &by, &cz)?,
            &d.first.tensor_mor(&cat.identity(&ax), &d.zeta(b, y, c, z)?)?,
            &d.zeta(a, x, &bc, &yz)?,
            &d.second.tensor_mor(
                &d.first.associator_inv(a, b, c)?,
                &d.first.associator_inv(x, y, z)?,
            )?,
        ])?;
        Ok((path1 != path2).then(|| {
            format!(
                "({}, {}, {}, {}, {}, {})",
                cat.obj_label(a),
                cat.obj_label(x),
                cat.obj_label(b),
                cat.obj_label(y),
                cat.obj_label(c),
                cat.obj_label(z)
            )
        }))
    })?;
    report.push(item_from_sweep("interchange associativity (first)", out));

    // Interchange associativity in the second structure.
    let out = sweep_objects::<C>(ctx, sample, 6, |o| {
        let (a, b, c, x, y, z) = (o[0], o[1], o[2], o[3], o[4], o[5]);
        let ab = d.second.tensor_obj(a, b)?;
        let xy = d.second.tensor_obj(x, y)?;
        let bc = d.second.tensor_obj(b, c)?;
        let yz = d.second.tensor_obj(y, z)?;
        let ax = d.first.tensor_obj(a, x)?;
        let cz = d.first.tensor_obj(c, z)?;
        // ((A*B)*C) <> ((X*Y)*Z)
        // path 1: zeta_{A*B, C, X*Y, Z} then (zeta * id)
        let path1 = cat.compose_all(&[
            &d.zeta(&ab, c, &xy, z)?,
            &d.second.tensor_mor(&d.zeta(a, b, x, y)?, &cat.identity(&cz))?,
        ])?;
        // path 2: associate both rows, zeta, id * zeta, re-associate
        let path2 = cat.compose_all(&[
            &d.first.tensor_mor(
                &d.second.associator(a, b, c)?,
                &d.second.associator(x, y, z)?,
            )?,
            &d.zeta(a, &bc, x, &yz)?,
            &d.second.tensor_mor(&cat.identity(&ax), &d.zeta(b, c, y, z)?)?,
            &d.second.associator_inv(&ax, &d.first.tensor_obj(b, y)?, &cz)?,
        ])?;
        Ok((path1 != path2).then(|| {
            format!(
                "({}, {}, {}, {}, {}, {})",
                cat.obj_label(a),
                cat.obj_label(b),
                cat.obj_label(c),
                cat.obj_label(x),
                cat.obj_label(y),
                cat.obj_label(z)
            )
        }))
    })?;
    report.push(item_from_sweep("interchange associativity (second)", out));

    // Interchange unit diagrams.
    let out = sweep_objects::<C>(ctx, sample, 2, |o| {
        let (a, b) = (o[0], o[1]);
        let ab_star = d.second.tensor_obj(a, b)?;
        // right delta: (A*B) ~ (A*B)<>I -> (A*B)<>(I*I) -> (A<>I)*(B<>I) ~ A*B
        let lhs = cat.compose_all(&[
            &d.first.right_unitor_inv(&ab_star)?,
            &d.first.tensor_mor(&cat.identity(&ab_star), &d.delta_i)?,
            &d.zeta(a, b, &i, &i)?,
            &d.second.tensor_mor(&d.first.right_unitor(a)?, &d.first.right_unitor(b)?)?,
        ])?;
        if lhs != cat.identity(&ab_star) {
            return Ok(Some(format!(
                "delta right unit at ({}, {})",
                cat.obj_label(a),
                cat.obj_label(b)
            )));
        }
        // left delta
        let lhs = cat.compose_all(&[
            &d.first.left_unitor_inv(&ab_star)?,
            &d.first.tensor_mor(&d.delta_i, &cat.identity(&ab_star))?,
            &d.zeta(&i, &i, a, b)?,
            &d.second.tensor_mor(&d.first.left_unitor(a)?, &d.first.left_unitor(b)?)?,
        ])?;
        if lhs != cat.identity(&ab_star) {
            return Ok(Some(format!(
                "delta left unit at ({}, {})",
                cat.obj_label(a),
                cat.obj_label(b)
            )));
        }
        let ab_diam = d.first.tensor_obj(a, b)?;
        // right mu: A<>B ~ (A*J)<>(B*J) -> (A<>B)*(J<>J) -> (A<>B)*J ~ A<>B
        let lhs = cat.compose_all(&[
            &d.first.tensor_mor(
                &d.second.right_unitor_inv(a)?,
                &d.second.right_unitor_inv(b)?,
            )?,
            &d.zeta(a, &j, b, &j)?,
            &d.second.tensor_mor(&cat.identity(&ab_diam), &d.mu_j)?,
            &d.second.right_unitor(&ab_diam)?,
        ])?;
        if lhs != cat.identity(&ab_diam) {
            return Ok(Some(format!(
                "mu right unit at ({}, {})",
                cat.obj_label(a),
                cat.obj_label(b)
            )));
        }
        // left mu
        let lhs = cat.compose_all(&[
            &d.first.tensor_mor(
                &d.second.left_unitor_inv(a)?,
                &d.second.left_unitor_inv(b)?,
            )?,
            &d.zeta(&j, a, &j, b)?,
            &d.second.tensor_mor(&d.mu_j, &cat.identity(&ab_diam))?,
            &d.second.left_unitor(&ab_diam)?,
        ])?;
        Ok((lhs != cat.identity(&ab_diam)).then(|| {
            format!(
                "mu left unit at ({}, {})",
                cat.obj_label(a),
                cat.obj_label(b)
            )
        }))
    })?;
    report.push(item_from_sweep("interchange unit diagrams", out));

    // Naturality of the interchange on sampled endomorphisms (the
    // definitions require it but list no diagram; reported separately).
    let out = sweep_objects::<C>(ctx, sample, 4, |o| {
        let (a, b, c, e) = (o[0], o[1], o[2], o[3]);
        for f in hom_sample(&cat, a, a, ctx, 3)? {
            for g in hom_sample(&cat, b, b, ctx, 3)? {
                let id_c = cat.identity(c);
                let id_e = cat.identity(e);
                let src = d.first.tensor_mor(
                    &d.second.tensor_mor(&f, &g)?,
                    &d.second.tensor_mor(&id_c, &id_e)?,
                )?;
                let dst = d.second.tensor_mor(
                    &d.first.tensor_mor(&f, &id_c)?,
                    &d.first.tensor_mor(&g, &id_e)?,
                )?;
                let z = d.zeta(a, b, c, e)?;
                let lhs = cat.compose(&src, &z)?;
                let rhs = cat.compose(&z, &dst)?;
                if lhs != rhs {
                    return Ok(Some(format!(
                        "naturality at ({}, {}, {}, {})",
                        cat.obj_label(a),
                        cat.obj_label(b),
                        cat.obj_label(c),
                        cat.obj_label(e)
                    )));
                }
            }
        }
        Ok(None)
    })?;
    report.push(item_from_sweep("interchange naturality (sampled)", out));
    let _ = HOM_CAP;

    Ok(report)
}

/// A braided monoidal structure is duoidal with both tensors equal and the
/// interchange `id (x) braid (x) id` (built through explicit associators).
/// All structure maps come out invertible.
pub fn duoidal_from_braiding<C: Category>(m: &MonoidalStructure<C>) -> Result<DuoidalStructure<C>> {
    if !m.has_braiding() {
        return Err(CatError::structural(format!(
            "structure {} has no braiding to induce an interchange law",
            m.name
        )));
    }
    let cat = m.cat.clone();
    let mm = m.clone();
    let zeta: Obj4ToMor<C> = Arc::new(move |a, b, c, d| {
        let cat = &mm.cat;
        // (A(x)B)(x)(C(x)D) -> ((A(x)B)(x)C)(x)D -> (A(x)(B(x)C))(x)D
        //  -> (A(x)(C(x)B))(x)D -> ((A(x)C)(x)B)(x)D -> (A(x)C)(x)(B(x)D)
        let ab = mm.tensor_obj(a, b)?;
        let ac = mm.tensor_obj(a, c)?;
        let id_a = cat.identity(a);
        let id_d = cat.identity(d);
        cat.compose_all(&[
            &mm.associator_inv(&ab, c, d)?,
            &mm.tensor_mor(&mm.associator(a, b, c)?, &id_d)?,
            &mm.tensor_mor(&mm.tensor_mor(&id_a, &mm.braiding(b, c)?)?, &id_d)?,
            &mm.tensor_mor(&mm.associator_inv(a, c, b)?, &id_d)?,
            &mm.associator(&ac, b, d)?,
        ])
    });
    let delta_i = cat.invert(&m.left_unitor(&m.unit)?)?;
    let mu_j = m.left_unitor(&m.unit)?;
    let iota = cat.identity(&m.unit);
    Ok(DuoidalStructure::new(
        format!("braided({})", m.name),
        m.clone(),
        m.clone(),
        zeta,
        delta_i,
        mu_j,
        iota,
    ))
}

/// Product data on a category: the cartesian monoidal structure together
/// with projections, pairing, and the unique map to the terminal object.
#[derive(Clone)]
pub struct CartesianData<C: Category> {
    pub structure: MonoidalStructure<C>,
    pub proj1: Obj2ToMor<C>,
    pub proj2: Obj2ToMor<C>,
    pub pairing: Arc<dyn Fn(&C::Mor, &C::Mor) -> Result<C::Mor> + Send + Sync>,
    pub terminal_mor: ObjToMor<C>,
}

/// Coproduct data: the cocartesian monoidal structure with injections,
/// copairing, and the unique map from the initial object.
#[derive(Clone)]
pub struct CocartesianData<C: Category> {
    pub structure: MonoidalStructure<C>,
    pub inj1: Obj2ToMor<C>,
    pub inj2: Obj2ToMor<C>,
    pub copairing: Arc<dyn Fn(&C::Mor, &C::Mor) -> Result<C::Mor> + Send + Sync>,
    pub initial_mor: ObjToMor<C>,
}

/// An ordered list of monoidal structures with a duoidal structure for each
/// pair `i < j`.
#[derive(Clone)]
pub struct NMonoidalStructure<C: Category> {
    pub structures: Vec<MonoidalStructure<C>>,
    pub pair_data: BTreeMap<(usize, usize), DuoidalStructure<C>>,
}

impl<C: Category> NMonoidalStructure<C> {
    pub fn pair(&self, i: usize, j: usize) -> Result<&DuoidalStructure<C>> {
        self.pair_data
            .get(&(i, j))
            .ok_or_else(|| CatError::structural(format!("no duoidal data for pair ({i}, {j})")))
    }
}

/// Appends the cartesian structure as the last monoidal structure. The new
/// interchange laws `(A x B) <> (C x D) -> (A <> C) x (B <> D)` are the
/// pairings of the tensored projections.
pub fn extend_with_cartesian<C: Category>(
    d: &DuoidalStructure<C>,
    cart: &CartesianData<C>,
) -> Result<NMonoidalStructure<C>> {
    let mut pair_data = BTreeMap::new();
    pair_data.insert((0, 1), d.clone());
    pair_data.insert((0, 2), duoidal_over_cartesian(&d.first, cart)?);
    pair_data.insert((1, 2), duoidal_over_cartesian(&d.second, cart)?);
    Ok(NMonoidalStructure {
        structures: vec![d.first.clone(), d.second.clone(), cart.structure.clone()],
        pair_data,
    })
}

/// Prepends the cocartesian structure as the first monoidal structure.
pub fn prepend_with_cocartesian<C: Category>(
    d: &DuoidalStructure<C>,
    cocart: &CocartesianData<C>,
) -> Result<NMonoidalStructure<C>> {
    let mut pair_data = BTreeMap::new();
    pair_data.insert((1, 2), d.clone());
    pair_data.insert((0, 1), duoidal_under_cocartesian(cocart, &d.first)?);
    pair_data.insert((0, 2), duoidal_under_cocartesian(cocart, &d.second)?);
    Ok(NMonoidalStructure {
        structures: vec![
            cocart.structure.clone(),
            d.first.clone(),
            d.second.clone(),
        ],
        pair_data,
    })
}

/// The canonical duoidal structure `(C, <>, x)` for any monoidal `<>` over
/// the cartesian structure.
pub fn duoidal_over_cartesian<C: Category>(
    first: &MonoidalStructure<C>,
    cart: &CartesianData<C>,
) -> Result<DuoidalStructure<C>> {
    let cat = first.cat.clone();
    let f = first.clone();
    let c = cart.clone();
    let zeta: Obj4ToMor<C> = Arc::new(move |a, b, x, y| {
        // (A x B) <> (X x Y) -> (A <> X) x (B <> Y) = <pi1 <> pi1, pi2 <> pi2>
        let p1 = f.tensor_mor(&(c.proj1)(a, b)?, &(c.proj1)(x, y)?)?;
        let p2 = f.tensor_mor(&(c.proj2)(a, b)?, &(c.proj2)(x, y)?)?;
        (c.pairing)(&p1, &p2)
    });
    let i = first.unit.clone();
    let term = cart.structure.unit.clone();
    let delta_i = (cart.pairing)(&cat.identity(&i), &cat.identity(&i))?;
    let mu_j = (cart.terminal_mor)(&first.tensor_obj(&term, &term)?)?;
    let iota = (cart.terminal_mor)(&i)?;
    Ok(DuoidalStructure::new(
        format!("({}, {})", first.name, cart.structure.name),
        first.clone(),
        cart.structure.clone(),
        zeta,
        delta_i,
        mu_j,
        iota,
    ))
}

/// The canonical duoidal structure `(C, +, <>)` for any monoidal `<>` under
/// the cocartesian structure.
pub fn duoidal_under_cocartesian<C: Category>(
    cocart: &CocartesianData<C>,
    second: &MonoidalStructure<C>,
) -> Result<DuoidalStructure<C>> {
    let s = second.clone();
    let c = cocart.clone();
    let zeta: Obj4ToMor<C> = Arc::new(move |a, b, x, y| {
        // (A <> B) + (X <> Y) -> (A + X) <> (B + Y) = [in1 <> in1, in2 <> in2]
        let i1 = s.tensor_mor(&(c.inj1)(a, x)?, &(c.inj1)(b, y)?)?;
        let i2 = s.tensor_mor(&(c.inj2)(a, x)?, &(c.inj2)(b, y)?)?;
        (c.copairing)(&i1, &i2)
    });
    let cat = second.cat.clone();
    let init = cocart.structure.unit.clone();
    let j = second.unit.clone();
    let delta_i = (cocart.initial_mor)(&second.tensor_obj(&init, &init)?)?;
    let mu_j = (cocart.copairing)(&cat.identity(&j), &cat.identity(&j))?;
    let iota = (cocart.initial_mor)(&j)?;
    Ok(DuoidalStructure::new(
        format!("({}, {})", cocart.structure.name, second.name),
        cocart.structure.clone(),
        second.clone(),
        zeta,
        delta_i,
        mu_j,
        iota,
    ))
}

/// The braid compatibility between the three interchange laws of a
/// 3-monoidal structure plus the pairwise duoidal sweeps and the unit
/// compatibility triangle.
pub fn check_3monoidal<C: Category>(
    n3: &NMonoidalStructure<C>,
    sample: &[C::Obj],
    ctx: &Ctx,
) -> Result<CheckReport> {
    if n3.structures.len() != 3 {
        return Err(CatError::structural("check_3monoidal needs exactly three structures"));
    }
    let cat = n3.structures[0].cat.clone();
    let mut report = CheckReport::new();

    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        let mut rep = check_duoidal(n3.pair(i, j)?, sample, ctx)?;
        for item in &mut rep.items {
            item.name = format!("pair({i},{j}): {}", item.name);
        }
        report.merge(rep);
    }

    let s1 = &n3.structures[0];
    let s2 = &n3.structures[1];
    let s3 = &n3.structures[2];
    let z12 = n3.pair(0, 1)?;
    let z13 = n3.pair(0, 2)?;
    let z23 = n3.pair(1, 2)?;

    // Unit triangle: iota_{13} = iota_{12} then iota_{23}.
    {
        let lhs = cat.compose(&z12.iota, &z23.iota)?;
        report.push(if lhs == z13.iota {
            CheckItem::pass("unit triangle iota13 = iota23 . iota12", 1)
        } else {
            CheckItem::fail(
                "unit triangle iota13 = iota23 . iota12",
                1,
                cat.mor_label(&lhs),
            )
        });
    }

    // Unit objects carry the compatible algebraic structure: the last unit
    // is a double monoid in the first pair, the first unit a double comonoid
    // in the last pair, the middle unit a bimonoid in the outer pair.
    {
        use super::algdata::{
            check_bimonoid_in, check_double_comonoid_in, check_double_monoid_in, ComonoidIn,
            MonoidIn,
        };
        let i3 = &s3.unit;
        let rep = check_double_monoid_in(
            z12,
            &MonoidIn {
                obj: i3.clone(),
                mul: z13.mu_j.clone(),
                unit_mor: z13.iota.clone(),
            },
            &MonoidIn {
                obj: i3.clone(),
                mul: z23.mu_j.clone(),
                unit_mor: z23.iota.clone(),
            },
            "unit I3",
        )?;
        report.merge(rep);

        let i1 = &s1.unit;
        let rep = check_double_comonoid_in(
            z23,
            &ComonoidIn {
                obj: i1.clone(),
                comul: z12.delta_i.clone(),
                counit_mor: z12.iota.clone(),
            },
            &ComonoidIn {
                obj: i1.clone(),
                comul: z13.delta_i.clone(),
                counit_mor: z13.iota.clone(),
            },
            "unit I1",
        )?;
        report.merge(rep);

        let i2 = &s2.unit;
        let rep = check_bimonoid_in(
            z13,
            &MonoidIn {
                obj: i2.clone(),
                mul: z12.mu_j.clone(),
                unit_mor: z12.iota.clone(),
            },
            &ComonoidIn {
                obj: i2.clone(),
                comul: z23.delta_i.clone(),
                counit_mor: z23.iota.clone(),
            },
            "unit I2",
        )?;
        report.merge(rep);
    }

    // Braid hexagon on sampled 8-tuples.
    let out = sweep_objects::<C>(ctx, sample, 8, |o| {
        let (a1, b1, a2, b2, c1, d1, c2, d2) = (o[0], o[1], o[2], o[3], o[4], o[5], o[6], o[7]);
        let s3t = |x: &C::Obj, y: &C::Obj| s3.tensor_obj(x, y);
        let s2t = |x: &C::Obj, y: &C::Obj| s2.tensor_obj(x, y);
        let _s1t = |x: &C::Obj, y: &C::Obj| s1.tensor_obj(x, y);

        // start: ((A1*B1)(x)(A2*B2)) <> ((C1*D1)(x)(C2*D2))
        // right-then-down: (zeta23 (x-level <>) zeta23), zeta13, zeta12 * zeta12
        let top = s1.tensor_mor(
            &z23.zeta(a1, b1, a2, b2)?,
            &z23.zeta(c1, d1, c2, d2)?,
        )?;
        let a12 = s2t(a1, a2)?;
        let b12 = s2t(b1, b2)?;
        let c12 = s2t(c1, c2)?;
        let d12 = s2t(d1, d2)?;
        let right = z13.zeta(&a12, &b12, &c12, &d12)?;
        let bottom_right = s3.tensor_mor(
            &z12.zeta(a1, a2, c1, c2)?,
            &z12.zeta(b1, b2, d1, d2)?,
        )?;
        let path1 = cat.compose_all(&[&top, &right, &bottom_right])?;

        // down-then-right: zeta12, zeta13 (x) zeta13, zeta23
        let a1b1 = s3t(a1, b1)?;
        let a2b2 = s3t(a2, b2)?;
        let c1d1 = s3t(c1, d1)?;
        let c2d2 = s3t(c2, d2)?;
        let left = z12.zeta(&a1b1, &a2b2, &c1d1, &c2d2)?;
        let mid = s2.tensor_mor(
            &z13.zeta(a1, b1, c1, d1)?,
            &z13.zeta(a2, b2, c2, d2)?,
        )?;
        let a1c1 = s1.tensor_obj(a1, c1)?;
        let b1d1 = s1.tensor_obj(b1, d1)?;
        let a2c2 = s1.tensor_obj(a2, c2)?;
        let b2d2 = s1.tensor_obj(b2, d2)?;
        let bottom = z23.zeta(&a1c1, &b1d1, &a2c2, &b2d2)?;
        let path2 = cat.compose_all(&[&left, &mid, &bottom])?;

        Ok((path1 != path2).then(|| {
            let labels: Vec<String> = o.iter().map(|x| cat.obj_label(x)).collect();
            format!("braid hexagon at ({})", labels.join(", "))
        }))
    })?;
    report.push(item_from_sweep("interchange braid hexagon", out));

    Ok(report)
}
