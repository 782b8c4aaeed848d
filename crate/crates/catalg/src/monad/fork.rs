//! The canonical split fork `T^2 V => T V -> V` of an algebra.

use super::algebra::{algebra_law_witness, AlgebraObj};
use super::data::MonadData;
use crate::finset::{coequalizer, FinMap};
use crate::report::{CheckItem, CheckReport};
use crate::Result;

/// Verifies that `(mu_V, T v, v)` is a reflexive split fork and an actual
/// coequalizer:
///
/// - common section `T eta_V` of the parallel pair,
/// - splitting data `s = eta_V`, `t = eta_{T V}` with `v . s = id`,
///   `mu . t = id`, `T v . t = s . v`,
/// - the computed set-level coequalizer of the pair is the quotient by
///   `ker v`.
pub fn check_split_fork(t: &MonadData, v: &AlgebraObj) -> Result<CheckReport> {
    let mut report = CheckReport::new();

    if let Some(w) = algebra_law_witness(t, v)? {
        report.push(CheckItem::fail("algebra laws", 1, w));
        return Ok(report);
    }
    report.push(CheckItem::pass("algebra laws", 1));

    let carrier = &v.carrier;
    let tv = t.t_obj(carrier)?;
    let leg_mu = t.mu_at(carrier)?;
    let leg_tv = t.t_map(&v.structure)?;

    // fork: v coequalizes the pair
    let fork_ok = leg_mu.then(&v.structure)? == leg_tv.then(&v.structure)?;
    report.push(if fork_ok {
        CheckItem::pass("fork commutes", tv.len() as u64)
    } else {
        CheckItem::fail("fork commutes", tv.len() as u64, "v . mu != v . T v")
    });

    // reflexivity: T eta_V is a common section
    let section = t.t_map(&t.eta_at(carrier)?)?;
    let refl_ok = section.then(&leg_mu)? == FinMap::identity(&tv)
        && section.then(&leg_tv)? == FinMap::identity(&tv);
    report.push(if refl_ok {
        CheckItem::pass("common section T eta", tv.len() as u64)
    } else {
        CheckItem::fail("common section T eta", tv.len() as u64, "T eta is not a common section")
    });

    // splitting data
    let s = t.eta_at(carrier)?;
    let t_split = t.eta_at(&tv)?;
    let split_ok = s.then(&v.structure)? == FinMap::identity(carrier)
        && t_split.then(&leg_mu)? == FinMap::identity(&tv)
        && t_split.then(&leg_tv)? == v.structure.then(&s)?;
    report.push(if split_ok {
        CheckItem::pass("split fork equations", (carrier.len() + 2 * tv.len()) as u64)
    } else {
        CheckItem::fail("split fork equations", 3, "splitting data equations fail")
    });

    // coequalizer: set-level quotient of the pair agrees with v
    let (_, q) = coequalizer(&leg_mu, &leg_tv)?;
    let mut coeq_ok = v.structure.is_surjective();
    if coeq_ok {
        'outer: for i in 0..tv.len() {
            for j in 0..tv.len() {
                let same_q = q.apply_index(i) == q.apply_index(j);
                let same_v = v.structure.apply_index(i) == v.structure.apply_index(j);
                if same_q != same_v {
                    coeq_ok = false;
                    break 'outer;
                }
            }
        }
    }
    report.push(if coeq_ok {
        CheckItem::pass("fork is a coequalizer", (tv.len() * tv.len()) as u64)
    } else {
        CheckItem::fail(
            "fork is a coequalizer",
            (tv.len() * tv.len()) as u64,
            "kernel of v differs from the coequalizer kernel",
        )
    });

    Ok(report)
}
