use super::*;
use crate::builtins::{
    identity_monad, pointing_monad, powerset_monad, powerset_monad_bad_mu, FiniteSemiring,
};
use crate::ctx::Ctx;
use crate::finset::{all_maps, Element, FinMap, FinSet};

fn small_sample() -> Vec<FinSet> {
    vec![
        FinSet::empty(),
        FinSet::from_labels(&["x"]),
        FinSet::from_labels(&["a", "b"]),
    ]
}

/// The free powerset algebra on one generator, a two-element chain.
fn chain2(t: &MonadData) -> AlgebraObj {
    free_algebra(t, &FinSet::from_labels(&["x"])).unwrap()
}

#[test]
fn identity_monad_laws() {
    let ctx = Ctx::default();
    let report = check_monad(&identity_monad(), &small_sample(), &ctx).unwrap();
    assert!(report.all_passed(), "{report}");
}

#[test]
fn powerset_monad_laws_up_to_three() {
    let ctx = Ctx::default();
    let mut sample = small_sample();
    sample.push(FinSet::from_labels(&["a", "b", "c"]));
    let report = check_monad(&powerset_monad(), &sample, &ctx).unwrap();
    assert!(report.all_passed(), "{report}");
}

#[test]
fn distribution_monad_laws() {
    let ctx = Ctx::default();
    for r in [FiniteSemiring::boolean(), FiniteSemiring::gf2()] {
        let t = crate::builtins::distribution_monad(&r);
        let report = check_monad(&t, &small_sample(), &ctx).unwrap();
        assert!(report.all_passed(), "{}: {report}", r.name);
    }
}

#[test]
fn intersection_mu_breaks_associativity() {
    let ctx = Ctx::default();
    let t = powerset_monad_bad_mu();
    let report = check_monad(&t, &[FinSet::from_labels(&["a", "b"])], &ctx).unwrap();
    let assoc = report.item("monad associativity").unwrap();
    assert!(!assoc.passed);
    assert!(assoc.witness.is_some());
}

#[test]
fn free_algebra_sizes() {
    let x = FinSet::from_labels(&["x"]);
    assert_eq!(free_algebra(&powerset_monad(), &x).unwrap().carrier.len(), 2);
    let a = FinSet::from_labels(&["a", "b"]);
    let fa = free_algebra(&identity_monad(), &a).unwrap();
    assert_eq!(fa.carrier, a);
    assert_eq!(fa.structure, FinMap::identity(&a));
    assert_eq!(free_algebra(&pointing_monad(), &x).unwrap().carrier.len(), 2);
}

#[test]
fn bar_of_eta_is_identity() {
    let t = powerset_monad();
    let x = FinSet::from_labels(&["x", "y"]);
    let fx = free_algebra(&t, &x).unwrap();
    let eta = t.eta_at(&x).unwrap();
    let g = bar(&t, &eta, &fx).unwrap();
    assert_eq!(g.map, FinMap::identity(&fx.carrier));
}

#[test]
fn bar_into_semilattice_folds_joins() {
    // W: powerset algebra on {bot, top} with union-fold structure.
    let t = powerset_monad();
    let w_carrier = FinSet::from_labels(&["bot", "top"]);
    let tw = t.t_obj(&w_carrier).unwrap();
    let structure = FinMap::from_fn(&tw, &w_carrier, |s| {
        let items = s.as_subset().unwrap();
        if items.iter().any(|e| e == &Element::atom("top")) {
            Element::atom("top")
        } else {
            Element::atom("bot")
        }
    })
    .unwrap();
    let w = AlgebraObj::new(w_carrier.clone(), structure, "2-chain");
    assert!(is_algebra(&t, &w).unwrap());

    let x = FinSet::from_labels(&["x"]);
    let f = FinMap::from_fn(&x, &w_carrier, |_| Element::atom("top")).unwrap();
    let g = bar(&t, &f, &w).unwrap();
    assert!(g.is_homomorphism(&t).unwrap());
    // {x} |-> top, {} |-> bot
    assert_eq!(
        g.map.apply(&Element::subset(vec![Element::atom("x")])),
        &Element::atom("top")
    );
    assert_eq!(g.map.apply(&Element::subset(vec![])), &Element::atom("bot"));
}

/// bar/unbar is a bijection between maps `X -> U(W)` and algebra maps
/// `F X -> W`, exhaustively at |X|, |W| <= 2.
#[test]
fn bar_unbar_bijection() {
    let ctx = Ctx::default();
    let t = powerset_monad();
    for xn in 0..=2usize {
        let x = FinSet::atoms("x", xn);
        for wn in 1..=2usize {
            let carrier = FinSet::atoms("w", wn);
            for w in enumerate_algebras(&t, &carrier, &ctx).unwrap() {
                // every plain map round-trips through bar
                for f in all_maps(&x, &carrier, &ctx).unwrap() {
                    let g = bar(&t, &f, &w).unwrap();
                    assert!(g.is_homomorphism(&t).unwrap());
                    assert_eq!(unbar(&t, &g).unwrap(), f);
                }
                // every algebra map out of the free algebra round-trips
                let fx = free_algebra(&t, &x).unwrap();
                for g in algebra_maps(&t, &fx, &w, &ctx).unwrap() {
                    let f = unbar(&t, &g).unwrap();
                    let g2 = bar(&t, &f, &w).unwrap();
                    assert_eq!(g.map, g2.map);
                }
            }
        }
    }
}

#[test]
fn split_fork_for_identity_and_powerset() {
    let t = identity_monad();
    let v = AlgebraObj::new(
        FinSet::from_labels(&["a", "b"]),
        FinMap::identity(&FinSet::from_labels(&["a", "b"])),
        "discrete",
    );
    assert!(check_split_fork(&t, &v).unwrap().all_passed());

    let t = powerset_monad();
    let v = chain2(&t);
    let report = check_split_fork(&t, &v).unwrap();
    assert!(report.all_passed(), "{report}");
}

#[test]
fn split_fork_rejects_broken_unitality() {
    let t = powerset_monad();
    let carrier = FinSet::from_labels(&["a", "b"]);
    let tv = t.t_obj(&carrier).unwrap();
    // send every subset to `a`: unitality fails at b
    let bad = AlgebraObj::new(
        carrier.clone(),
        FinMap::from_fn(&tv, &carrier, |_| Element::atom("a")).unwrap(),
        "broken",
    );
    let report = check_split_fork(&t, &bad).unwrap();
    assert!(!report.all_passed());
    assert!(report.first_failure().unwrap().witness.is_some());
}

#[test]
fn coequalizer_of_equal_legs_is_isomorphism() {
    let ctx = Ctx::default();
    let t = powerset_monad();
    let a = chain2(&t);
    let b = chain2(&t);
    let f = AlgebraMap::new(a.clone(), b.clone(), FinMap::identity(&a.carrier));
    let out = create_coequalizer(&t, &f, &f, &ctx).unwrap();
    assert_eq!(out.algebra.carrier.len(), b.carrier.len());
    assert!(out.projection.map.is_bijective());
    assert!(is_algebra(&t, &out.algebra).unwrap());
}

/// Universal property of the created coequalizer against enumerated algebra
/// maps.
#[test]
fn created_coequalizer_universal_property() {
    let ctx = Ctx::default();
    let t = pointing_monad();
    // two parallel algebra maps between pointed sets
    let carrier_a = FinSet::from_labels(&["p", "q", "r"]);
    let ta = t.t_obj(&carrier_a).unwrap();
    let a = AlgebraObj::new(
        carrier_a.clone(),
        FinMap::try_from_fn(&ta, &carrier_a, |e| match e {
            Element::Left(_) => Ok(Element::atom("p")),
            Element::Right(x) => Ok(x.as_ref().clone()),
            _ => unreachable!(),
        })
        .unwrap(),
        "A",
    );
    let carrier_b = FinSet::from_labels(&["p", "q", "r", "s"]);
    let tb = t.t_obj(&carrier_b).unwrap();
    let b = AlgebraObj::new(
        carrier_b.clone(),
        FinMap::try_from_fn(&tb, &carrier_b, |e| match e {
            Element::Left(_) => Ok(Element::atom("p")),
            Element::Right(x) => Ok(x.as_ref().clone()),
            _ => unreachable!(),
        })
        .unwrap(),
        "B",
    );
    let maps = algebra_maps(&t, &a, &b, &ctx).unwrap();
    assert!(maps.len() > 1);
    for f in maps.iter().take(4) {
        for g in maps.iter().take(4) {
            let out = create_coequalizer(&t, f, g, &ctx).unwrap();
            // q coequalizes
            assert_eq!(
                f.then(&out.projection).unwrap().map,
                g.then(&out.projection).unwrap().map
            );
            // one-step universal property against every coequalizing map
            for target in enumerate_algebras(&t, &FinSet::from_labels(&["u", "v"]), &ctx).unwrap()
            {
                for h in algebra_maps(&t, &b, &target, &ctx).unwrap() {
                    if f.then(&h).unwrap().map == g.then(&h).unwrap().map {
                        let factors: Vec<_> =
                            algebra_maps(&t, &out.algebra, &target, &ctx)
                                .unwrap()
                                .into_iter()
                                .filter(|k| {
                                    out.projection.then(k).unwrap().map == h.map
                                })
                                .collect();
                        assert_eq!(factors.len(), 1);
                    }
                }
            }
        }
    }
}

/// A non-reflexive pair whose set-level coequalizer is not preserved: the
/// creation certificate must fail with a witness rather than return a bogus
/// algebra.
#[test]
fn creation_certificate_failure_is_loud() {
    let ctx = Ctx::default();
    let t = powerset_monad();
    let x = FinSet::from_labels(&["x"]);
    let ab = FinSet::from_labels(&["a", "b"]);
    let fab = free_algebra(&t, &ab).unwrap();
    let pick = |label: &str| {
        let lbl = label.to_string();
        FinMap::from_fn(&x, &fab.carrier, move |_| {
            Element::subset(vec![Element::atom(lbl.clone())])
        })
        .unwrap()
    };
    let f = bar(&t, &pick("a"), &fab).unwrap();
    let g = bar(&t, &pick("b"), &fab).unwrap();
    let err = create_coequalizer(&t, &f, &g, &ctx).unwrap_err();
    match err {
        crate::error::CatError::CreationFailed { witness } => {
            assert!(witness.contains("not well-defined"));
        }
        other => panic!("expected creation failure, got {other}"),
    }
}

/// The congruence-closure quotient agrees with the fully certified creation
/// route on a reflexive pair out of a free algebra.
#[test]
fn congruence_quotient_matches_certified_route() {
    let ctx = Ctx::default();
    let t = powerset_monad();
    let gens = FinSet::from_labels(&["a", "b"]);
    let fab = free_algebra(&t, &gens).unwrap();
    // identify eta(a) with eta(b)
    let ea = t.eta_at(&gens).unwrap().apply(&Element::atom("a")).clone();
    let eb = t.eta_at(&gens).unwrap().apply(&Element::atom("b")).clone();
    let (q_set, q, _) =
        quotient_free_by_congruence(&t, &gens, &[(ea.clone(), eb.clone())], &ctx).unwrap();

    // certified route: the pair bar(eta a), bar(eta b) is not parallelizable
    // directly, so present the same congruence as a coequalizer of algebra
    // maps out of the free algebra on one generator made reflexive by
    // pairing with the identity-ish legs.
    let x = FinSet::from_labels(&["x", "y"]);
    let f_map = FinMap::from_fn(&x, &fab.carrier, |e| {
        if e == &Element::atom("x") {
            ea.clone()
        } else {
            eb.clone()
        }
    })
    .unwrap();
    let g_map = FinMap::from_fn(&x, &fab.carrier, |e| {
        if e == &Element::atom("x") {
            eb.clone()
        } else {
            eb.clone()
        }
    })
    .unwrap();
    let f = bar(&t, &f_map, &fab).unwrap();
    let g = bar(&t, &g_map, &fab).unwrap();
    let out = create_coequalizer(&t, &f, &g, &ctx).unwrap();

    assert_eq!(out.algebra.carrier.len(), q_set.len());
    // identical kernels
    for i in 0..fab.carrier.len() {
        for j in 0..fab.carrier.len() {
            assert_eq!(
                q.apply_index(i) == q.apply_index(j),
                out.projection.map.apply_index(i) == out.projection.map.apply_index(j)
            );
        }
    }
}

#[test]
fn powerset_algebras_on_small_carriers_are_semilattices() {
    let ctx = Ctx::default();
    let t = powerset_monad();
    // independent oracle: bounded join-semilattice structures (bottom + a
    // commutative, associative, idempotent join with bottom as unit)
    for n in 1..=3usize {
        let carrier = FinSet::atoms("c", n);
        let algebras = enumerate_algebras(&t, &carrier, &ctx).unwrap();
        let mut semilattices = 0usize;
        let elems = carrier.elements();
        // enumerate candidate (bottom, join-table) pairs
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .collect();
        let total = (n as u64).pow(pairs.len() as u32) * n as u64;
        let mut counter = vec![0usize; pairs.len() + 1];
        for _ in 0..total {
            let bottom = counter[pairs.len()];
            let join = |i: usize, j: usize| -> usize {
                counter[pairs.iter().position(|&p| p == (i, j)).unwrap()]
            };
            let assoc = (0..n).all(|i| {
                (0..n).all(|j| (0..n).all(|k| join(join(i, j), k) == join(i, join(j, k))))
            });
            let comm = (0..n).all(|i| (0..n).all(|j| join(i, j) == join(j, i)));
            let idem = (0..n).all(|i| join(i, i) == i);
            let unit = (0..n).all(|i| join(bottom, i) == i);
            if assoc && comm && idem && unit {
                semilattices += 1;
                // this semilattice folds to a powerset algebra that must be
                // in the enumerated list
                let tv = t.t_obj(&carrier).unwrap();
                let structure = FinMap::from_fn(&tv, &carrier, |s| {
                    let mut acc = bottom;
                    for e in s.as_subset().unwrap() {
                        acc = join(acc, carrier.index_of(e).unwrap());
                    }
                    elems[acc].clone()
                })
                .unwrap();
                let alg = AlgebraObj::new(carrier.clone(), structure, "folded");
                assert!(algebras.contains(&alg));
            }
            // advance counter: first pairs.len() digits over n, last digit over n
            let mut pos = 0;
            loop {
                counter[pos] += 1;
                if counter[pos] < n {
                    break;
                }
                counter[pos] = 0;
                pos += 1;
                if pos > pairs.len() {
                    break;
                }
            }
        }
        assert_eq!(
            algebras.len(),
            semilattices,
            "algebra count differs from semilattice count at n = {n}"
        );
    }
}

#[test]
fn pointing_algebras_are_pointed_sets() {
    let ctx = Ctx::default();
    let t = pointing_monad();
    for n in 1..=3usize {
        let carrier = FinSet::atoms("p", n);
        let algebras = enumerate_algebras(&t, &carrier, &ctx).unwrap();
        // a pointed structure is exactly a choice of base point
        assert_eq!(algebras.len(), n);
    }
    // and the empty carrier admits none
    assert!(enumerate_algebras(&t, &FinSet::empty(), &ctx).unwrap().is_empty());
}
