use super::*;
use crate::ctx::Ctx;
use proptest::prelude::*;

fn set(labels: &[&str]) -> FinSet {
    FinSet::from_labels(labels)
}

#[test]
fn product_sizes() {
    let (p, _, _) = product(&set(&["a"]), &set(&["b"]));
    assert_eq!(p.len(), 1);
    let (p, pi1, pi2) = product(&set(&["a1", "a2"]), &set(&["b1", "b2", "b3"]));
    assert_eq!(p.len(), 6);
    assert!(pi1.is_surjective());
    assert!(pi2.is_surjective());
    let (p, _, _) = product(&FinSet::empty(), &set(&["b"]));
    assert!(p.is_empty());
}

#[test]
fn coproduct_sizes() {
    let (c, _, _) = coproduct(&set(&["a"]), &set(&["b"]));
    assert_eq!(c.len(), 2);
    let (c, inl, _) = coproduct(&FinSet::empty(), &set(&["b1", "b2"]));
    assert_eq!(c.len(), 2);
    assert!(inl.dom().is_empty());
    let (c, _, _) = coproduct(&set(&["a1", "a2"]), &set(&["b"]));
    assert_eq!(c.len(), 3);
}

#[test]
fn coequalizer_equal_legs_is_bijection() {
    let a = set(&["a1", "a2"]);
    let b = set(&["b1", "b2", "b3"]);
    let f = FinMap::from_fn(&a, &b, |e| match e {
        Element::Atom(s) if s == "a1" => Element::atom("b1"),
        _ => Element::atom("b3"),
    })
    .unwrap();
    let (q, proj) = coequalizer(&f, &f).unwrap();
    assert_eq!(q.len(), b.len());
    assert!(proj.is_bijective());
}

#[test]
fn coequalizer_chain_merges_all() {
    // f: a1->b1, a2->b2; g: a1->b2, a2->b3. Closure merges b1~b2~b3.
    let a = set(&["a1", "a2"]);
    let b = set(&["b1", "b2", "b3"]);
    let f = FinMap::from_fn(&a, &b, |e| match e {
        Element::Atom(s) if s == "a1" => Element::atom("b1"),
        _ => Element::atom("b2"),
    })
    .unwrap();
    let g = FinMap::from_fn(&a, &b, |e| match e {
        Element::Atom(s) if s == "a1" => Element::atom("b2"),
        _ => Element::atom("b3"),
    })
    .unwrap();
    let (q, proj) = coequalizer(&f, &g).unwrap();
    assert_eq!(q.len(), 1);
    assert!(proj.is_surjective());
    // Representative is the least element of the merged class.
    assert_eq!(q.get(0), &Element::class(Element::atom("b1")));
}

#[test]
fn coequalizer_empty_domain_is_identity_shaped() {
    let b = set(&["b1", "b2"]);
    let f = FinMap::from_fn(&FinSet::empty(), &b, |_| unreachable!()).unwrap();
    let (q, proj) = coequalizer(&f, &f).unwrap();
    assert_eq!(q.len(), b.len());
    assert!(proj.is_bijective());
}

#[test]
fn coequalizer_mismatch_rejected() {
    let a = set(&["a"]);
    let b = set(&["b"]);
    let f = FinMap::from_fn(&a, &b, |_| Element::atom("b")).unwrap();
    let g = FinMap::from_fn(&b, &b, |_| Element::atom("b")).unwrap();
    assert!(coequalizer(&f, &g).is_err());
}

#[test]
fn pushout_of_identities() {
    let a = set(&["a"]);
    let id = FinMap::identity(&a);
    let (apex, _, _) = pushout(&id, &id).unwrap();
    assert_eq!(apex.len(), 1);
}

#[test]
fn pushout_inclusion_vs_collapse() {
    let x = set(&["x"]);
    let xy = set(&["x", "y"]);
    let pt = FinSet::singleton_unit();
    let f = FinMap::from_fn(&x, &xy, |e| e.clone()).unwrap();
    let g = FinMap::from_fn(&x, &pt, |_| Element::Unit).unwrap();
    let (apex, leg_b, leg_c) = pushout(&f, &g).unwrap();
    assert_eq!(apex.len(), 2);
    // Square commutes.
    assert_eq!(f.then(&leg_b).unwrap(), g.then(&leg_c).unwrap());
}

#[test]
fn pushout_over_initial_is_coproduct() {
    let a = set(&["a1", "a2"]);
    let b = set(&["b"]);
    let f = FinMap::from_fn(&FinSet::empty(), &a, |_| unreachable!()).unwrap();
    let g = FinMap::from_fn(&FinSet::empty(), &b, |_| unreachable!()).unwrap();
    let (apex, leg_b, leg_c) = pushout(&f, &g).unwrap();
    assert_eq!(apex.len(), a.len() + b.len());
    assert!(leg_b.is_injective());
    assert!(leg_c.is_injective());
}

#[test]
fn enumerate_map_counts() {
    let ctx = Ctx::default();
    assert_eq!(all_maps(&set(&["a"]), &set(&["b1", "b2"]), &ctx).unwrap().len(), 2);
    assert_eq!(
        all_maps(&set(&["a1", "a2"]), &set(&["b1", "b2", "b3"]), &ctx).unwrap().len(),
        9
    );
    assert_eq!(all_maps(&FinSet::empty(), &set(&["b"]), &ctx).unwrap().len(), 1);
    assert_eq!(all_maps(&set(&["a"]), &FinSet::empty(), &ctx).unwrap().len(), 0);
}

#[test]
fn enumerate_budget_refusal_names_count() {
    let ctx = Ctx::default().with_budget(8);
    let err = enumerate_maps(&set(&["a", "b"]), &set(&["x", "y", "z"]), &ctx).unwrap_err();
    match err {
        crate::error::CatError::Budget { required, budget } => {
            assert_eq!(required, 9);
            assert_eq!(budget, 8);
        }
        other => panic!("expected budget error, got {other}"),
    }
}

#[test]
fn enumerate_is_duplicate_free() {
    let ctx = Ctx::default();
    let maps = all_maps(&set(&["a1", "a2"]), &set(&["b1", "b2"]), &ctx).unwrap();
    for i in 0..maps.len() {
        for j in i + 1..maps.len() {
            assert_ne!(maps[i], maps[j]);
        }
    }
}

/// Universal property of the coequalizer: every map coequalizing the pair
/// factors uniquely through the projection.
#[test]
fn coequalizer_universal_property_small() {
    let ctx = Ctx::default();
    let a = set(&["a1", "a2"]);
    let b = set(&["b1", "b2", "b3"]);
    let targets = [set(&["t1"]), set(&["t1", "t2"]), set(&["t1", "t2", "t3"])];
    for f in all_maps(&a, &b, &ctx).unwrap() {
        for g in all_maps(&a, &b, &ctx).unwrap() {
            let (q, proj) = coequalizer(&f, &g).unwrap();
            assert_eq!(f.then(&proj).unwrap(), g.then(&proj).unwrap());
            for t in &targets {
                for h in all_maps(&b, t, &ctx).unwrap() {
                    if f.then(&h).unwrap() == g.then(&h).unwrap() {
                        let factors: Vec<FinMap> = all_maps(&q, t, &ctx)
                            .unwrap()
                            .into_iter()
                            .filter(|k| proj.then(k).unwrap() == h)
                            .collect();
                        assert_eq!(factors.len(), 1, "factorization must be unique");
                    }
                }
            }
        }
    }
}

/// Universal property of products against enumerated cones (carriers <= 4
/// are covered by the smaller instances here; the full sweep lives in the
/// acceptance suite).
#[test]
fn product_universal_property() {
    let ctx = Ctx::default();
    let a = set(&["a1", "a2"]);
    let b = set(&["b1", "b2"]);
    let x = set(&["x1", "x2", "x3"]);
    let (p, pi1, pi2) = product(&a, &b);
    for f in all_maps(&x, &a, &ctx).unwrap() {
        for g in all_maps(&x, &b, &ctx).unwrap() {
            let mediating: Vec<FinMap> = all_maps(&x, &p, &ctx)
                .unwrap()
                .into_iter()
                .filter(|m| &m.then(&pi1).unwrap() == &f && &m.then(&pi2).unwrap() == &g)
                .collect();
            assert_eq!(mediating.len(), 1);
            assert_eq!(mediating[0], pairing(&f, &g, &p).unwrap());
        }
    }
}

#[test]
fn coproduct_universal_property() {
    let ctx = Ctx::default();
    let a = set(&["a1", "a2"]);
    let b = set(&["b1"]);
    let y = set(&["y1", "y2"]);
    let (c, inl, inr) = coproduct(&a, &b);
    for f in all_maps(&a, &y, &ctx).unwrap() {
        for g in all_maps(&b, &y, &ctx).unwrap() {
            let mediating: Vec<FinMap> = all_maps(&c, &y, &ctx)
                .unwrap()
                .into_iter()
                .filter(|m| &inl.then(m).unwrap() == &f && &inr.then(m).unwrap() == &g)
                .collect();
            assert_eq!(mediating.len(), 1);
            assert_eq!(mediating[0], copairing(&f, &g, &c).unwrap());
        }
    }
}

// Recursive element strategy for property tests.
fn element_strategy() -> impl Strategy<Value = Element> {
    let leaf = prop_oneof![
        "[a-z][a-z0-9_]{0,4}".prop_map(Element::atom),
        Just(Element::Unit),
    ];
    leaf.prop_recursive(3, 24, 4, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Element::pair(a, b)),
            inner.clone().prop_map(Element::left),
            inner.clone().prop_map(Element::right),
            prop::collection::vec(inner.clone(), 0..4).prop_map(Element::subset),
            inner.clone().prop_map(Element::class),
        ]
    })
}

proptest! {
    /// Canonical order stability: serializing and re-parsing any finite set
    /// yields an identical element order.
    #[test]
    fn finset_serialization_round_trip(elems in prop::collection::vec(element_strategy(), 0..6)) {
        let s = FinSet::new(elems);
        let parsed = FinSet::parse(&s.to_canonical_string()).unwrap();
        prop_assert_eq!(s.elements(), parsed.elements());
    }

    /// Coequalizing again after quotienting yields a bijection.
    #[test]
    fn coequalizer_idempotent(tab_f in prop::collection::vec(0u32..4, 3), tab_g in prop::collection::vec(0u32..4, 3)) {
        let a = FinSet::atoms("a", 3);
        let b = FinSet::atoms("b", 4);
        let f = FinMap::from_indices(&a, &b, tab_f).unwrap();
        let g = FinMap::from_indices(&a, &b, tab_g).unwrap();
        let (_, q) = coequalizer(&f, &g).unwrap();
        let (_, q2) = coequalizer(&f.then(&q).unwrap(), &g.then(&q).unwrap()).unwrap();
        prop_assert!(q2.is_bijective());
    }
}
