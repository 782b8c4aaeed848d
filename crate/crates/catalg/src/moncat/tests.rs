use super::*;
use crate::cat::{Category, FinSetCat};
use crate::ctx::Ctx;
use crate::finset::{product, Element, FinMap, FinSet};
use std::sync::Arc;

fn sample_sets() -> Vec<FinSet> {
    vec![
        FinSet::singleton_unit(),
        FinSet::from_labels(&["a"]),
        FinSet::from_labels(&["b0", "b1"]),
    ]
}

#[test]
fn cartesian_structure_passes_all_axioms() {
    let ctx = Ctx::default();
    let m = cartesian_structure();
    let report = check_monoidal(&m, &sample_sets(), &ctx).unwrap();
    assert!(report.all_passed(), "{report}");
}

#[test]
fn cocartesian_structure_passes_all_axioms() {
    let ctx = Ctx::default();
    let m = cocartesian_structure();
    let mut sample = sample_sets();
    sample.push(FinSet::empty());
    let report = check_monoidal(&m, &sample, &ctx).unwrap();
    assert!(report.all_passed(), "{report}");
}

/// Replacing the associator by a non-natural bijection (canonical assoc
/// followed by order reversal) breaks the pentagon.
#[test]
fn mutated_associator_fails_pentagon() {
    let ctx = Ctx::default();
    let good = cartesian_structure();
    let bad = MonoidalStructure::new(
        FinSetCat,
        "cartesian-mutated",
        good.unit.clone(),
        Arc::new(|a, b| Ok(product(a, b).0)),
        {
            let g = good.clone();
            Arc::new(move |f, h| g.tensor_mor(f, h))
        },
        {
            let g = good.clone();
            Arc::new(move |a, b, c| {
                let canonical = g.associator(a, b, c)?;
                let cod = canonical.cod().clone();
                let n = cod.len();
                let reverse = FinMap::from_indices(
                    &cod,
                    &cod,
                    (0..n as u32).rev().collect(),
                )?;
                canonical.then(&reverse)
            })
        },
        {
            let g = good.clone();
            Arc::new(move |a| g.left_unitor(a))
        },
        {
            let g = good.clone();
            Arc::new(move |a| g.right_unitor(a))
        },
        None,
    );
    let sample = vec![FinSet::from_labels(&["x0", "x1"])];
    let report = check_monoidal(&bad, &sample, &ctx).unwrap();
    let pentagon = report.item("pentagon").unwrap();
    assert!(!pentagon.passed);
    assert!(pentagon.witness.is_some());
}

#[test]
fn braided_duoidal_passes_and_units_are_bijections() {
    let ctx = Ctx::default();
    let d = braided_cartesian_duoidal().unwrap();
    let sample = vec![FinSet::from_labels(&["a"]), FinSet::from_labels(&["b0", "b1"])];
    let report = check_duoidal(&d, &sample, &ctx).unwrap();
    assert!(report.all_passed(), "{report}");
    let cat = FinSetCat;
    assert!(cat.is_invertible(&d.delta_i));
    assert!(cat.is_invertible(&d.mu_j));
    assert!(cat.is_invertible(&d.iota));
    // every interchange component is a bijection
    for a in &sample {
        for b in &sample {
            let z = d.zeta(a, b, a, b).unwrap();
            assert!(z.is_bijective());
        }
    }
}

#[test]
fn braided_duoidal_on_singletons_is_unique() {
    let d = braided_cartesian_duoidal().unwrap();
    let s = FinSet::singleton_unit();
    let z = d.zeta(&s, &s, &s, &s).unwrap();
    assert_eq!(z.dom().len(), 1);
    assert_eq!(z.cod().len(), 1);
}

#[test]
fn duoidal_mutation_fails_interchange_associativity() {
    let ctx = Ctx::default();
    let good = braided_cartesian_duoidal().unwrap();
    // Constant interchange: send everything to the least element.
    let first = good.first.clone();
    let second = good.second.clone();
    let zeta: Obj4ToMor<FinSetCat> = {
        let first = first.clone();
        let second = second.clone();
        Arc::new(move |a, b, c, d| {
            let ab = second.tensor_obj(a, b)?;
            let cd = second.tensor_obj(c, d)?;
            let dom = first.tensor_obj(&ab, &cd)?;
            let ac = first.tensor_obj(a, c)?;
            let bd = first.tensor_obj(b, d)?;
            let cod = second.tensor_obj(&ac, &bd)?;
            let least = cod.get(0).clone();
            FinMap::from_fn(&dom, &cod, |_| least.clone())
        })
    };
    let bad = DuoidalStructure::new(
        "mutated",
        good.first.clone(),
        good.second.clone(),
        zeta,
        good.delta_i.clone(),
        good.mu_j.clone(),
        good.iota.clone(),
    );
    let sample = vec![FinSet::from_labels(&["x0", "x1"])];
    let report = check_duoidal(&bad, &sample, &ctx).unwrap();
    let iass = report.item("interchange associativity (first)").unwrap();
    let units = report.item("interchange unit diagrams").unwrap();
    assert!(!iass.passed || !units.passed, "{report}");
    assert!(report.first_failure().unwrap().witness.is_some());
}

#[test]
fn graded_z2_products_match_formulas() {
    let d = graded_sets_duoidal(FiniteMonoid::z2()).unwrap();
    let cat = GradedCat::new(FiniteMonoid::z2());
    let s = cat
        .obj(vec![FinSet::from_labels(&["a"]), FinSet::from_labels(&["b"])])
        .unwrap();
    let conv = d.first.tensor_obj(&s, &s).unwrap();
    // degree 0 receives (0,0) and (1,1) splittings: sizes 1 + 1
    assert_eq!(conv.components[0].len(), 2);
    assert_eq!(conv.components[1].len(), 2);
    let point = d.second.tensor_obj(&s, &s).unwrap();
    assert_eq!(point.components[1].len(), 1);
}

#[test]
fn graded_z2_duoidal_passes_and_zeta_injective() {
    let ctx = Ctx::default();
    let d = graded_sets_duoidal(FiniteMonoid::z2()).unwrap();
    let cat = GradedCat::new(FiniteMonoid::z2());
    let sample = vec![
        cat.obj(vec![FinSet::from_labels(&["a"]), FinSet::empty()]).unwrap(),
        cat.obj(vec![FinSet::from_labels(&["c"]), FinSet::from_labels(&["d"])]).unwrap(),
    ];
    let report = check_duoidal(&d, &sample, &ctx).unwrap();
    assert!(report.all_passed(), "{report}");
    for a in &sample {
        for b in &sample {
            let z = d.zeta(a, b, a, b).unwrap();
            assert!(z.components.iter().all(FinMap::is_injective));
        }
    }
    // iota is not invertible here (the convolution unit is concentrated).
    assert!(!GradedCat::new(FiniteMonoid::z2()).is_invertible(&d.iota));
}

#[test]
fn extend_braided_cartesian_to_3monoidal() {
    let ctx = Ctx::default();
    let d = braided_cartesian_duoidal().unwrap();
    let n3 = extend_with_cartesian(&d, &cartesian_data()).unwrap();
    let sample = vec![FinSet::from_labels(&["a"]), FinSet::from_labels(&["b0", "b1"])];
    let report = check_3monoidal(&n3, &sample, &ctx).unwrap();
    assert!(report.all_passed(), "{report}");
}

#[test]
fn prepend_cocartesian_to_3monoidal() {
    let ctx = Ctx::default();
    let d = braided_cartesian_duoidal().unwrap();
    let n3 = prepend_with_cocartesian(&d, &cocartesian_data()).unwrap();
    let sample = vec![FinSet::from_labels(&["a"]), FinSet::from_labels(&["b0", "b1"])];
    let report = check_3monoidal(&n3, &sample, &ctx).unwrap();
    assert!(report.all_passed(), "{report}");
}

#[test]
fn iterate_phi_degenerate_cases() {
    // Identity functor with its identity monoidal structure.
    let m = cartesian_structure();
    let f = FunctorData::identity(&FinSetCat);
    let mf = MonoidalFunctorStructure::new(
        f,
        m.clone(),
        Direction::Monoidal,
        Arc::new({
            let m = m.clone();
            move |a: &FinSet, b: &FinSet| Ok(FinMap::identity(&m.tensor_obj(a, b)?))
        }),
        FinMap::identity(&m.unit),
    );
    let x = FinSet::from_labels(&["x0", "x1"]);
    // n = 1 is the identity
    assert_eq!(mf.iterate(std::slice::from_ref(&x)).unwrap(), FinMap::identity(&x));
    // n = 0 is the unit component
    assert_eq!(mf.iterate(&[]).unwrap(), FinMap::identity(&m.unit));
    // n = 3 parenthesization independence
    let ctx = Ctx::default();
    let item = check_iterate_coherence(&mf, &[x], &ctx).unwrap();
    assert!(item.passed);
}

/// A genuinely non-identity monoidal endofunctor: `F X = X x X` with the
/// middle-swap structure map.
#[test]
fn square_functor_is_monoidal() {
    let ctx = Ctx::default();
    let m = cartesian_structure();
    let f = FunctorData::<FinSetCat>::new(
        "square",
        Arc::new(|x| Ok(product(x, x).0)),
        Arc::new(|f: &FinMap| {
            let dom = product(f.dom(), f.dom()).0;
            let cod = product(f.cod(), f.cod()).0;
            FinMap::try_from_fn(&dom, &cod, |e| {
                Ok(Element::pair(
                    f.try_apply(e.fst()?)?.clone(),
                    f.try_apply(e.snd()?)?.clone(),
                ))
            })
        }),
    );
    let comp: Obj2ToMor<FinSetCat> = Arc::new(|x, y| {
        let fx = product(x, x).0;
        let fy = product(y, y).0;
        let dom = product(&fx, &fy).0;
        let xy = product(x, y).0;
        let cod = product(&xy, &xy).0;
        FinMap::try_from_fn(&dom, &cod, |e| {
            let (x1, x2) = (e.fst()?.fst()?, e.fst()?.snd()?);
            let (y1, y2) = (e.snd()?.fst()?, e.snd()?.snd()?);
            Ok(Element::pair(
                Element::pair(x1.clone(), y1.clone()),
                Element::pair(x2.clone(), y2.clone()),
            ))
        })
    });
    let unit = m.unit.clone();
    let comp0 = FinMap::from_fn(&unit, &product(&unit, &unit).0, |e| {
        Element::pair(e.clone(), e.clone())
    })
    .unwrap();
    let mf = MonoidalFunctorStructure::new(f, m, Direction::Monoidal, comp, comp0);
    let sample = vec![FinSet::from_labels(&["a"]), FinSet::from_labels(&["b0", "b1"])];
    let report = check_monoidal_functor(&mf, &sample, &ctx).unwrap();
    assert!(report.all_passed(), "{report}");
    assert!(is_strong(&mf, &sample).unwrap());
    let item = check_iterate_coherence(&mf, &sample, &ctx).unwrap();
    assert!(item.passed, "{}", item.witness.unwrap_or_default());
}
