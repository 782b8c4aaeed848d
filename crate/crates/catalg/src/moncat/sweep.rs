//! Tuple-sweep driver shared by all axiom checkers.

use crate::cat::Category;
use crate::ctx::Ctx;
use crate::error::Result;
use crate::par;
use crate::report::CheckItem;

/// Runs `f` over all `len^arity` index tuples (decoded mixed-radix), in
/// parallel when the context says so. `f` returns `Ok(None)` for a passing
/// tuple and `Ok(Some(witness))` for a failing one; the first failing tuple
/// in index order wins.
pub fn sweep_indices(
    ctx: &Ctx,
    len: usize,
    arity: u32,
    f: impl Fn(&[usize]) -> Result<Option<String>> + Send + Sync,
) -> Result<(u64, Option<String>)> {
    let total = (len as u128).pow(arity);
    ctx.admit(total)?;
    let total = total as usize;
    let decode = |mut i: usize| {
        let mut idx = vec![0usize; arity as usize];
        for slot in idx.iter_mut().rev() {
            *slot = i % len.max(1);
            i /= len.max(1);
        }
        idx
    };
    if len == 0 {
        return Ok((0, None));
    }
    let outcome = par::find_first(ctx.exec, total, |i| match f(&decode(i)) {
        Ok(None) => None,
        Ok(Some(w)) => Some(Ok(w)),
        Err(e) => Some(Err(e)),
    });
    match outcome {
        None => Ok((total as u64, None)),
        Some(Ok(witness)) => Ok((total as u64, Some(witness))),
        Some(Err(e)) => Err(e),
    }
}

/// Wraps a sweep outcome as a named check item.
pub fn item_from_sweep(name: &str, outcome: (u64, Option<String>)) -> CheckItem {
    match outcome {
        (n, None) => CheckItem::pass(name, n),
        (n, Some(w)) => CheckItem::fail(name, n, w),
    }
}

/// Sweeps tuples of objects drawn from a sample.
pub fn sweep_objects<C: Category>(
    ctx: &Ctx,
    sample: &[C::Obj],
    arity: u32,
    f: impl Fn(&[&C::Obj]) -> Result<Option<String>> + Send + Sync,
) -> Result<(u64, Option<String>)> {
    sweep_indices(ctx, sample.len(), arity, |idx| {
        let objs: Vec<&C::Obj> = idx.iter().map(|&i| &sample[i]).collect();
        f(&objs)
    })
}

/// A deterministic sample of morphisms `x -> y`: the full hom-set when it
/// fits in `cap`, otherwise the first `cap` maps in canonical order.
pub fn hom_sample<C: Category>(
    cat: &C,
    x: &C::Obj,
    y: &C::Obj,
    ctx: &Ctx,
    cap: u64,
) -> Result<Vec<C::Mor>> {
    let capped = Ctx {
        budget: ctx.budget,
        exec: ctx.exec,
    };
    match cat.hom(x, y, &capped.with_budget(cap)) {
        Ok(maps) => Ok(maps),
        Err(_) => {
            // Too many maps: take a deterministic prefix by enumerating under
            // the full budget and truncating.
            let maps = cat.hom(x, y, ctx)?;
            Ok(maps.into_iter().take(cap as usize).collect())
        }
    }
}
