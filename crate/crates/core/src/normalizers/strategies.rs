use std::collections::{BTreeMap, VecDeque};

use super::{BulkyContext, BulkyStrategy, Method, NormalizerReport, Witness};
use crate::coxgroup::{conjugate_subset_by_inverse, GroupElement};
use crate::error::{Error, Result};
use crate::rootsystem::{RootSystem, Subset};

fn labels(word: &[usize]) -> Vec<usize> {
    word.iter().map(|i| i + 1).collect()
}

fn is_central(rs: &RootSystem, w: &GroupElement, l: Subset) -> bool {
    l.iter().all(|t| w.apply(t) == rs.negative_of(t))
}

/// The loops `L → L` of the Brink–Howlett groupoid on the class of `J`: for
/// each `L` conjugate to `J` and `K = L ∪ {s}` with `L^{w_K} = L`, every
/// `t ∈ L` must satisfy `t^{w_L w_K} = t`. Returns the first failure.
pub fn loop_test(ctx: &BulkyContext, j: Subset) -> Result<Option<Witness>> {
    let rs = ctx.rs();
    for &l in ctx.classes().members(j) {
        let wl = ctx.longest(l);
        let l_central = is_central(rs, wl, l);
        for s in (0..rs.rank()).filter(|&s| !l.contains(s)) {
            let k = l.with(s);
            let wk = ctx.longest(k);
            // w_K is an involution, so it serves as its own inverse
            if conjugate_subset_by_inverse(rs, l, wk) != Some(l) {
                continue;
            }
            let nu = wl.compose(wk);
            for t in l.iter() {
                // ν permutes Δ_L, so t^ν = t iff ν(α_t) = α_t
                let fixed = nu.apply(t) == t;
                if l_central && fixed != (wk.apply(t) == rs.negative_of(t)) {
                    return Err(Error::Internal(format!(
                        "{}: t^(w_L w_K) and t^(w_K) disagree for L={l}, K={k}",
                        rs.ctype()
                    )));
                }
                if !fixed {
                    return Ok(Some(Witness::Generator { l, k, t: t + 1 }));
                }
            }
        }
    }
    Ok(None)
}

/// Every edge `L → L^{w_K}` (via `ν = w_L w_K`) of the groupoid on the class
/// of `J`. With a spanning tree of paths `p_L`, the elements
/// `p_L · ν · p_{L'}⁻¹` generate `N_J`; each must fix every `α_j`, `j ∈ J`.
pub fn groupoid_test(ctx: &BulkyContext, j: Subset) -> Result<Option<Witness>> {
    let rs = ctx.rs();
    let mut paths: BTreeMap<Subset, GroupElement> = BTreeMap::from([(j, GroupElement::identity(rs))]);
    let mut queue = VecDeque::from([j]);
    while let Some(l) = queue.pop_front() {
        let wl = ctx.longest(l);
        for s in (0..rs.rank()).filter(|&s| !l.contains(s)) {
            let k = l.with(s);
            let wk = ctx.longest(k);
            let target = conjugate_subset_by_inverse(rs, l, wk).ok_or_else(|| {
                Error::Internal(format!("{}: w_K does not permute ±Δ_L", rs.ctype()))
            })?;
            let step = paths[&l].compose(&wl.compose(wk));
            let Some(p_target) = paths.get(&target) else {
                paths.insert(target, step);
                queue.push_back(target);
                continue;
            };
            let g = step.compose(&p_target.inverse());
            for t in j.iter() {
                let image = g.apply(t);
                if image >= rs.rank() || !j.contains(image) {
                    return Err(Error::Internal(format!(
                        "{}: groupoid loop does not normalize W_J for J={j}",
                        rs.ctype()
                    )));
                }
                if image != t {
                    return Ok(Some(Witness::Element {
                        word: labels(&g.reduced_word(rs)),
                        t: t + 1,
                    }));
                }
            }
        }
    }
    if paths.len() != ctx.classes().members(j).len() {
        return Err(Error::Internal(format!(
            "{}: groupoid component of J={j} differs from its subset class",
            rs.ctype()
        )));
    }
    Ok(None)
}

/// The loop test alone. Exact when `w_J` is central in `W_J`; it can miss
/// non-trivial elements of `N_J` that only arise from longer cycles.
pub struct LoopStrategy;

impl BulkyStrategy for LoopStrategy {
    fn method(&self) -> Method {
        Method::Loops
    }

    fn decide(&self, ctx: &BulkyContext, j: Subset) -> Result<NormalizerReport> {
        ctx.report(j, loop_test(ctx, j)?, Method::Loops)
    }
}

/// The full groupoid test.
pub struct GroupoidStrategy;

impl BulkyStrategy for GroupoidStrategy {
    fn method(&self) -> Method {
        Method::Groupoid
    }

    fn decide(&self, ctx: &BulkyContext, j: Subset) -> Result<NormalizerReport> {
        ctx.report(j, groupoid_test(ctx, j)?, Method::Groupoid)
    }
}

/// The loop test, which yields a generator witness, followed by the
/// groupoid test for the cycles it does not see.
pub struct FastStrategy;

impl BulkyStrategy for FastStrategy {
    fn method(&self) -> Method {
        Method::Fast
    }

    fn decide(&self, ctx: &BulkyContext, j: Subset) -> Result<NormalizerReport> {
        let witness = match loop_test(ctx, j)? {
            Some(w) => Some(w),
            None => groupoid_test(ctx, j)?,
        };
        ctx.report(j, witness, Method::Fast)
    }
}

/// Enumerates `N_J = {x ∈ D_J : J^x = J}` and checks that each element
/// fixes every `s ∈ J`. Needs the element table.
pub struct BruteStrategy;

impl BulkyStrategy for BruteStrategy {
    fn method(&self) -> Method {
        Method::Brute
    }

    fn decide(&self, ctx: &BulkyContext, j: Subset) -> Result<NormalizerReport> {
        let rs = ctx.rs();
        let oracle = ctx.oracle()?;
        let mut n_j = Vec::new();
        for x in coset_reps_dj(ctx, j)? {
            let x_inv = oracle.inverses[x];
            let inv = oracle.table.get(x_inv);
            if j.iter().all(|s| inv.apply(s) < rs.rank() && j.contains(inv.apply(s))) {
                n_j.push(x);
            }
        }
        // |N_W(W_J)| = |W_J|·|N_J|
        let order_wj: u64 = crate::rootsystem::classify_components(rs, j)?
            .iter()
            .map(|t| t.group_order())
            .product();
        let normalizer = normalizer_of_parabolic(ctx, j)?;
        if normalizer.len() as u64 != order_wj * n_j.len() as u64 {
            return Err(Error::Internal(format!(
                "{}: |N_W(W_J)| = {} but |W_J|·|N_J| = {}·{} for J={j}",
                rs.ctype(),
                normalizer.len(),
                order_wj,
                n_j.len()
            )));
        }
        for &x in &n_j {
            let inv = oracle.table.get(oracle.inverses[x]);
            if let Some(t) = j.iter().find(|&t| inv.apply(t) != t) {
                let witness = Witness::Element {
                    word: labels(&oracle.table.get(x).reduced_word(rs)),
                    t: t + 1,
                };
                return ctx.report(j, Some(witness), Method::Brute);
            }
        }
        ctx.report(j, None, Method::Brute)
    }
}

/// Indices (into the element table) of `D_J = {x : l(sx) > l(x) and
/// l(xs) > l(x) for all s ∈ J}`.
pub fn coset_reps_dj(ctx: &BulkyContext, j: Subset) -> Result<Vec<usize>> {
    let rs = ctx.rs();
    let oracle = ctx.oracle()?;
    Ok((0..oracle.table.len())
        .filter(|&i| {
            let x = oracle.table.get(i);
            let x_inv = oracle.table.get(oracle.inverses[i]);
            // l(xs) > l(x) iff x(α_s) > 0, and l(sx) > l(x) iff x⁻¹(α_s) > 0
            j.iter()
                .all(|s| rs.is_positive(x.apply(s)) && rs.is_positive(x_inv.apply(s)))
        })
        .collect())
}

/// Indices of `N_W(W_J) = {x : x·s·x⁻¹ ∈ W_J and x⁻¹·s·x ∈ W_J for all s ∈ J}`.
pub fn normalizer_of_parabolic(ctx: &BulkyContext, j: Subset) -> Result<Vec<usize>> {
    let rs = ctx.rs();
    let oracle = ctx.oracle()?;
    let mut in_phi_j = vec![false; rs.num_roots()];
    for i in rs.parabolic_roots(j) {
        in_phi_j[i] = true;
    }
    // x·s_α·x⁻¹ = s_{x(α)} lies in W_J iff x(α) ∈ Φ_J
    Ok((0..oracle.table.len())
        .filter(|&i| {
            let x = oracle.table.get(i);
            let x_inv = oracle.table.get(oracle.inverses[i]);
            j.iter()
                .all(|s| in_phi_j[x.apply(s)] && in_phi_j[x_inv.apply(s)])
        })
        .collect())
}
