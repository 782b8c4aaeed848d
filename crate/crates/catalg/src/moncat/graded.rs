//! The category of G-graded finite sets for a finite monoid G, with its
//! duoidal structure: a convolution-style product in the first slot and the
//! pointwise product in the second.

use super::algdata::FiniteMonoid;
use super::duoidal::DuoidalStructure;
use super::structures::MonoidalStructure;
use crate::cat::Category;
use crate::ctx::Ctx;
use crate::error::{CatError, Result};
use crate::finset::{all_maps, map_count, Element, FinMap, FinSet};
use itertools::Itertools;
use std::sync::Arc;

/// A G-graded finite set: one component per monoid element, in the monoid
/// carrier's canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedObj {
    pub components: Vec<FinSet>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GradedMor {
    pub dom: GradedObj,
    pub cod: GradedObj,
    pub components: Vec<FinMap>,
}

#[derive(Clone)]
pub struct GradedCat {
    pub monoid: Arc<FiniteMonoid>,
}

impl GradedCat {
    pub fn new(monoid: FiniteMonoid) -> Self {
        GradedCat {
            monoid: Arc::new(monoid),
        }
    }

    pub fn degrees(&self) -> usize {
        self.monoid.carrier.len()
    }

    pub fn obj(&self, components: Vec<FinSet>) -> Result<GradedObj> {
        if components.len() != self.degrees() {
            return Err(CatError::structural("graded object has wrong number of components"));
        }
        Ok(GradedObj { components })
    }

    pub fn mor(
        &self,
        dom: &GradedObj,
        cod: &GradedObj,
        f: impl Fn(usize, &Element) -> Element,
    ) -> Result<GradedMor> {
        let mut components = Vec::with_capacity(self.degrees());
        for g in 0..self.degrees() {
            components.push(FinMap::from_fn(&dom.components[g], &cod.components[g], |e| {
                f(g, e)
            })?);
        }
        Ok(GradedMor {
            dom: dom.clone(),
            cod: cod.clone(),
            components,
        })
    }
}

impl Category for GradedCat {
    type Obj = GradedObj;
    type Mor = GradedMor;

    fn dom(&self, f: &GradedMor) -> GradedObj {
        f.dom.clone()
    }

    fn cod(&self, f: &GradedMor) -> GradedObj {
        f.cod.clone()
    }

    fn identity(&self, x: &GradedObj) -> GradedMor {
        GradedMor {
            dom: x.clone(),
            cod: x.clone(),
            components: x.components.iter().map(FinMap::identity).collect(),
        }
    }

    fn compose(&self, f: &GradedMor, g: &GradedMor) -> Result<GradedMor> {
        if f.cod != g.dom {
            return Err(CatError::structural("graded composition mismatch"));
        }
        let components = f
            .components
            .iter()
            .zip(&g.components)
            .map(|(a, b)| a.then(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedMor {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            components,
        })
    }

    fn is_invertible(&self, f: &GradedMor) -> bool {
        f.components.iter().all(FinMap::is_bijective)
    }

    fn invert(&self, f: &GradedMor) -> Result<GradedMor> {
        let components = f
            .components
            .iter()
            .map(FinMap::inverse)
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedMor {
            dom: f.cod.clone(),
            cod: f.dom.clone(),
            components,
        })
    }

    fn hom(&self, x: &GradedObj, y: &GradedObj, ctx: &Ctx) -> Result<Vec<GradedMor>> {
        let mut total: u128 = 1;
        for (a, b) in x.components.iter().zip(&y.components) {
            total = total.saturating_mul(map_count(a, b));
        }
        ctx.admit(total)?;
        let per_degree: Vec<Vec<FinMap>> = x
            .components
            .iter()
            .zip(&y.components)
            .map(|(a, b)| all_maps(a, b, ctx))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Vec::new();
        for combo in per_degree.into_iter().multi_cartesian_product() {
            out.push(GradedMor {
                dom: x.clone(),
                cod: y.clone(),
                components: combo,
            });
        }
        Ok(out)
    }

    fn obj_label(&self, x: &GradedObj) -> String {
        let parts: Vec<String> = self
            .monoid
            .carrier
            .iter()
            .zip(&x.components)
            .map(|(g, s)| format!("{g}:{s}"))
            .collect();
        format!("[{}]", parts.join(" "))
    }

    fn mor_label(&self, f: &GradedMor) -> String {
        let parts: Vec<String> = f.components.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(" "))
    }
}

/// Elements of the convolution product at degree g: tagged pairs
/// `((x, y), (s, t))` with `x * y = g`, `s` in the x-component, `t` in the
/// y-component.
fn conv_component(
    cat: &GradedCat,
    s: &GradedObj,
    t: &GradedObj,
    target: &Element,
) -> Result<FinSet> {
    let monoid = &cat.monoid;
    let mut elems = Vec::new();
    for x in monoid.carrier.iter() {
        for y in monoid.carrier.iter() {
            if &monoid.mul(x, y)? == target {
                let xi = monoid.carrier.index_of(x)?;
                let yi = monoid.carrier.index_of(y)?;
                for a in s.components[xi].iter() {
                    for b in t.components[yi].iter() {
                        elems.push(Element::pair(
                            Element::pair(x.clone(), y.clone()),
                            Element::pair(a.clone(), b.clone()),
                        ));
                    }
                }
            }
        }
    }
    Ok(FinSet::new(elems))
}

/// The duoidal category of G-graded sets: first structure is the
/// convolution product with unit concentrated at the monoid unit, second is
/// the pointwise product with the everywhere-singleton unit; the
/// interchange is the canonical injection.
pub fn graded_sets_duoidal(monoid: FiniteMonoid) -> Result<DuoidalStructure<GradedCat>> {
    let cat = GradedCat::new(monoid);
    let degrees = cat.degrees();

    // convolution structure
    let conv_obj = {
        let cat = cat.clone();
        Arc::new(move |s: &GradedObj, t: &GradedObj| {
            let components = cat
                .monoid
                .carrier
                .iter()
                .map(|g| conv_component(&cat, s, t, g))
                .collect::<Result<Vec<_>>>()?;
            cat.obj(components)
        })
    };
    let conv_unit = {
        let mut components = vec![FinSet::empty(); degrees];
        let unit_idx = cat.monoid.carrier.index_of(&cat.monoid.unit)?;
        components[unit_idx] = FinSet::singleton_unit();
        GradedObj { components }
    };

    let conv_mor = {
        let cat = cat.clone();
        let conv_obj = conv_obj.clone();
        Arc::new(move |f: &GradedMor, g: &GradedMor| {
            let dom = conv_obj(&f.dom, &g.dom)?;
            let cod = conv_obj(&f.cod, &g.cod)?;
            let mut components = Vec::with_capacity(cat.degrees());
            for target in cat.monoid.carrier.iter() {
                let ti = cat.monoid.carrier.index_of(target)?;
                components.push(FinMap::try_from_fn(
                    &dom.components[ti],
                    &cod.components[ti],
                    |e| {
                        let tag = e.fst()?;
                        let (x, y) = (tag.fst()?, tag.snd()?);
                        let payload = e.snd()?;
                        let xi = cat.monoid.carrier.index_of(x)?;
                        let yi = cat.monoid.carrier.index_of(y)?;
                        Ok(Element::pair(
                            tag.clone(),
                            Element::pair(
                                f.components[xi].try_apply(payload.fst()?)?.clone(),
                                g.components[yi].try_apply(payload.snd()?)?.clone(),
                            ),
                        ))
                    },
                )?);
            }
            Ok(GradedMor {
                dom,
                cod,
                components,
            })
        })
    };

    let conv_assoc = {
        let cat = cat.clone();
        let conv_obj = conv_obj.clone();
        Arc::new(move |a: &GradedObj, b: &GradedObj, c: &GradedObj| {
            let ab = conv_obj(a, b)?;
            let bc = conv_obj(b, c)?;
            let dom = conv_obj(&ab, c)?;
            let cod = conv_obj(a, &bc)?;
            let mut components = Vec::with_capacity(cat.degrees());
            for ti in 0..cat.degrees() {
                components.push(FinMap::try_from_fn(
                    &dom.components[ti],
                    &cod.components[ti],
                    |e| {
                        // ((xy, z), ((tagged ab-elem), c-elem)) with xy split further
                        let tag = e.fst()?;
                        let (xy, z) = (tag.fst()?, tag.snd()?);
                        let payload = e.snd()?;
                        let ab_elem = payload.fst()?;
                        let c_elem = payload.snd()?;
                        let inner_tag = ab_elem.fst()?;
                        let (x, y) = (inner_tag.fst()?, inner_tag.snd()?);
                        let inner_payload = ab_elem.snd()?;
                        let (a_elem, b_elem) = (inner_payload.fst()?, inner_payload.snd()?);
                        let yz = cat.monoid.mul(y, z)?;
                        let _ = xy;
                        Ok(Element::pair(
                            Element::pair(x.clone(), yz.clone()),
                            Element::pair(
                                a_elem.clone(),
                                Element::pair(
                                    Element::pair(y.clone(), z.clone()),
                                    Element::pair(b_elem.clone(), c_elem.clone()),
                                ),
                            ),
                        ))
                    },
                )?);
            }
            Ok(GradedMor {
                dom,
                cod,
                components,
            })
        })
    };

    let conv_lu = {
        let cat = cat.clone();
        let conv_obj = conv_obj.clone();
        let conv_unit = conv_unit.clone();
        Arc::new(move |a: &GradedObj| {
            let dom = conv_obj(&conv_unit, a)?;
            let mut components = Vec::with_capacity(cat.degrees());
            for ti in 0..cat.degrees() {
                components.push(FinMap::try_from_fn(
                    &dom.components[ti],
                    &a.components[ti],
                    |e| Ok(e.snd()?.snd()?.clone()),
                )?);
            }
            Ok(GradedMor {
                dom,
                cod: a.clone(),
                components,
            })
        })
    };

    let conv_ru = {
        let cat = cat.clone();
        let conv_obj = conv_obj.clone();
        let conv_unit = conv_unit.clone();
        Arc::new(move |a: &GradedObj| {
            let dom = conv_obj(a, &conv_unit)?;
            let mut components = Vec::with_capacity(cat.degrees());
            for ti in 0..cat.degrees() {
                components.push(FinMap::try_from_fn(
                    &dom.components[ti],
                    &a.components[ti],
                    |e| Ok(e.snd()?.fst()?.clone()),
                )?);
            }
            Ok(GradedMor {
                dom,
                cod: a.clone(),
                components,
            })
        })
    };

    let first = MonoidalStructure::new(
        cat.clone(),
        "graded-convolution",
        conv_unit,
        conv_obj.clone(),
        conv_mor,
        conv_assoc,
        conv_lu,
        conv_ru,
        None,
    );

    // pointwise structure
    let point_obj = {
        let cat = cat.clone();
        Arc::new(move |s: &GradedObj, t: &GradedObj| {
            let components = s
                .components
                .iter()
                .zip(&t.components)
                .map(|(a, b)| crate::finset::product(a, b).0)
                .collect();
            cat.obj(components)
        })
    };

    let point_mor = {
        let cat = cat.clone();
        let point_obj = point_obj.clone();
        Arc::new(move |f: &GradedMor, g: &GradedMor| {
            let dom = point_obj(&f.dom, &g.dom)?;
            let cod = point_obj(&f.cod, &g.cod)?;
            let mut components = Vec::with_capacity(cat.degrees());
            for ti in 0..cat.degrees() {
                components.push(FinMap::try_from_fn(
                    &dom.components[ti],
                    &cod.components[ti],
                    |e| {
                        Ok(Element::pair(
                            f.components[ti].try_apply(e.fst()?)?.clone(),
                            g.components[ti].try_apply(e.snd()?)?.clone(),
                        ))
                    },
                )?);
            }
            Ok(GradedMor {
                dom,
                cod,
                components,
            })
        })
    };

    let point_unit = GradedObj {
        components: vec![FinSet::singleton_unit(); degrees],
    };

    let point_assoc = {
        let cat = cat.clone();
        let point_obj = point_obj.clone();
        Arc::new(move |a: &GradedObj, b: &GradedObj, c: &GradedObj| {
            let ab = point_obj(a, b)?;
            let bc = point_obj(b, c)?;
            let dom = point_obj(&ab, c)?;
            let cod = point_obj(a, &bc)?;
            let mut components = Vec::with_capacity(cat.degrees());
            for ti in 0..cat.degrees() {
                components.push(FinMap::try_from_fn(
                    &dom.components[ti],
                    &cod.components[ti],
                    |e| {
                        let abp = e.fst()?;
                        Ok(Element::pair(
                            abp.fst()?.clone(),
                            Element::pair(abp.snd()?.clone(), e.snd()?.clone()),
                        ))
                    },
                )?);
            }
            Ok(GradedMor {
                dom,
                cod,
                components,
            })
        })
    };

    let point_lu = {
        let cat = cat.clone();
        let point_obj = point_obj.clone();
        let point_unit = point_unit.clone();
        Arc::new(move |a: &GradedObj| {
            let dom = point_obj(&point_unit, a)?;
            let mut components = Vec::with_capacity(cat.degrees());
            for ti in 0..cat.degrees() {
                components.push(FinMap::try_from_fn(
                    &dom.components[ti],
                    &a.components[ti],
                    |e| Ok(e.snd()?.clone()),
                )?);
            }
            Ok(GradedMor {
                dom,
                cod: a.clone(),
                components,
            })
        })
    };

    let point_ru = {
        let cat = cat.clone();
        let point_obj = point_obj.clone();
        let point_unit = point_unit.clone();
        Arc::new(move |a: &GradedObj| {
            let dom = point_obj(a, &point_unit)?;
            let mut components = Vec::with_capacity(cat.degrees());
            for ti in 0..cat.degrees() {
                components.push(FinMap::try_from_fn(
                    &dom.components[ti],
                    &a.components[ti],
                    |e| Ok(e.fst()?.clone()),
                )?);
            }
            Ok(GradedMor {
                dom,
                cod: a.clone(),
                components,
            })
        })
    };

    let second = MonoidalStructure::new(
        cat.clone(),
        "graded-pointwise",
        point_unit,
        point_obj.clone(),
        point_mor,
        point_assoc,
        point_lu,
        point_ru,
        None,
    );

    // interchange: (S*T) <> (U*V) -> (S<>U) * (T<>V), the canonical injection
    let zeta = {
        let cat = cat.clone();
        let conv_obj = conv_obj.clone();
        let point_obj = point_obj.clone();
        Arc::new(
            move |s: &GradedObj, t: &GradedObj, u: &GradedObj, v: &GradedObj| {
                let st = point_obj(s, t)?;
                let uv = point_obj(u, v)?;
                let dom = conv_obj(&st, &uv)?;
                let su = conv_obj(s, u)?;
                let tv = conv_obj(t, v)?;
                let cod = point_obj(&su, &tv)?;
                let mut components = Vec::with_capacity(cat.degrees());
                for ti in 0..cat.degrees() {
                    components.push(FinMap::try_from_fn(
                        &dom.components[ti],
                        &cod.components[ti],
                        |e| {
                            let tag = e.fst()?;
                            let payload = e.snd()?;
                            let st_pair = payload.fst()?;
                            let uv_pair = payload.snd()?;
                            Ok(Element::pair(
                                Element::pair(
                                    tag.clone(),
                                    Element::pair(st_pair.fst()?.clone(), uv_pair.fst()?.clone()),
                                ),
                                Element::pair(
                                    tag.clone(),
                                    Element::pair(st_pair.snd()?.clone(), uv_pair.snd()?.clone()),
                                ),
                            ))
                        },
                    )?);
                }
                Ok(GradedMor {
                    dom,
                    cod,
                    components,
                })
            },
        )
    };

    let i = first.unit.clone();
    let j = second.unit.clone();
    let delta_i = {
        let dom = i.clone();
        let cod = (point_obj)(&i, &i)?;
        let mut components = Vec::with_capacity(degrees);
        for ti in 0..degrees {
            components.push(FinMap::from_fn(
                &dom.components[ti],
                &cod.components[ti],
                |e| Element::pair(e.clone(), e.clone()),
            )?);
        }
        GradedMor {
            dom,
            cod,
            components,
        }
    };
    let mu_j = {
        let dom = (conv_obj)(&j, &j)?;
        let mut components = Vec::with_capacity(degrees);
        for ti in 0..degrees {
            components.push(FinMap::from_fn(
                &dom.components[ti],
                &j.components[ti],
                |_| Element::Unit,
            )?);
        }
        GradedMor {
            dom,
            cod: j.clone(),
            components,
        }
    };
    let iota = {
        let mut components = Vec::with_capacity(degrees);
        for ti in 0..degrees {
            components.push(FinMap::from_fn(
                &i.components[ti],
                &j.components[ti],
                |_| Element::Unit,
            )?);
        }
        GradedMor {
            dom: i,
            cod: j,
            components,
        }
    };

    Ok(DuoidalStructure::new(
        "graded-sets",
        first,
        second,
        zeta,
        delta_i,
        mu_j,
        iota,
    ))
}
