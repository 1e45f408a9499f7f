//! Membership in `W(P) = {-x_1 + y_1 - ⋯ - x_k + y_k : (x_i, y_i) ∈ U_i}` and in
//! `W_n(P)`, where at most `n` pairs use distinct entourages of the sequence.

use std::collections::HashSet;

use super::EntourageSequence;
use crate::error::{Error, Result};
use crate::words::{AbelianWord, Generator};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WMembership {
    /// `g = Σ_{i ≤ k} (-x_i + y_i)` with `(x_i, y_i) ∈ U_i`.
    Member { k: usize, pairs: Vec<(Generator, Generator)> },
    /// No decomposition with `k ≤ k_max`; says nothing about longer ones.
    NotFoundWithinBound,
}

fn residual_of(g: &AbelianWord, n: usize) -> Result<Vec<i64>> {
    if g.generator_bound() > n {
        return Err(Error::Domain("element uses a generator outside the base set".into()));
    }
    let mut r = vec![0i64; n];
    for (x, m) in g.terms() {
        r[x.0] = m;
    }
    Ok(r)
}

fn l1(r: &[i64]) -> u64 {
    r.iter().map(|v| v.unsigned_abs()).sum()
}

/// Smallest `k ≤ k_max` with `g` a sum of pairs from `U_1, …, U_k` in order.
///
/// Pairs are tried in lexicographic order, so the witness is the first one in
/// that order. Diagonal pairs are free padding: membership at `k` implies it at `k + 1`.
pub fn wp_member(g: &AbelianWord, seq: &EntourageSequence, k_max: usize) -> Result<WMembership> {
    if k_max == 0 || k_max > seq.len() {
        return Err(Error::Precondition(format!("k_max must be in 1..={}", seq.len())));
    }
    let target = residual_of(g, seq.points().len())?;
    if g.coefficient_sum() != 0 {
        return Ok(WMembership::NotFoundWithinBound);
    }
    for k in 1..=k_max {
        let mut failed = HashSet::new();
        let mut pairs = Vec::with_capacity(k);
        let mut residual = target.clone();
        if decompose_in_order(seq, k, 0, &mut residual, &mut pairs, &mut failed) {
            return Ok(WMembership::Member { k, pairs });
        }
    }
    Ok(WMembership::NotFoundWithinBound)
}

/// `residual` is what remains of `g` after the chosen pairs; each pair `-x + y`
/// adds 1 at `x` and removes 1 at `y`.
fn decompose_in_order(
    seq: &EntourageSequence,
    k: usize,
    i: usize,
    residual: &mut Vec<i64>,
    pairs: &mut Vec<(Generator, Generator)>,
    failed: &mut HashSet<(usize, Vec<i64>)>,
) -> bool {
    if i == k {
        return residual.iter().all(|&v| v == 0);
    }
    if l1(residual) > 2 * (k - i) as u64 || failed.contains(&(i, residual.clone())) {
        return false;
    }
    for (x, y) in seq.get(i).pairs() {
        residual[x.0] += 1;
        residual[y.0] -= 1;
        pairs.push((x, y));
        if decompose_in_order(seq, k, i + 1, residual, pairs, failed) {
            return true;
        }
        pairs.pop();
        residual[x.0] -= 1;
        residual[y.0] += 1;
    }
    failed.insert((i, residual.clone()));
    false
}

/// `g ∈ W_n(P)`: `g = Σ_{t ≤ j} (-x_t + y_t)` for some `j ≤ n`, each pair taken
/// from a different entourage of the sequence (any assignment of pairs to positions).
///
/// Returns the witness as `(position, x, y)` triples, positions 0-based.
pub fn wn_member(
    g: &AbelianWord,
    seq: &EntourageSequence,
    n: usize,
) -> Result<Option<Vec<(usize, Generator, Generator)>>> {
    if n == 0 || n > seq.len() {
        return Err(Error::Precondition(format!("n must be in 1..={}", seq.len())));
    }
    let mut residual = residual_of(g, seq.points().len())?;
    if g.coefficient_sum() != 0 {
        return Ok(None);
    }
    let mut failed = HashSet::new();
    let mut chosen = Vec::new();
    if choose_subset(seq, n, 0, &mut residual, &mut chosen, &mut failed) {
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

fn choose_subset(
    seq: &EntourageSequence,
    budget: usize,
    i: usize,
    residual: &mut Vec<i64>,
    chosen: &mut Vec<(usize, Generator, Generator)>,
    failed: &mut HashSet<(usize, usize, Vec<i64>)>,
) -> bool {
    if residual.iter().all(|&v| v == 0) {
        return true;
    }
    let usable = budget.min(seq.len() - i);
    if l1(residual) > 2 * usable as u64 || failed.contains(&(i, budget, residual.clone())) {
        return false;
    }
    // skip U_i
    if choose_subset(seq, budget, i + 1, residual, chosen, failed) {
        return true;
    }
    for (x, y) in seq.get(i).pairs().filter(|(x, y)| x != y) {
        residual[x.0] += 1;
        residual[y.0] -= 1;
        chosen.push((i, x, y));
        if choose_subset(seq, budget - 1, i + 1, residual, chosen, failed) {
            return true;
        }
        chosen.pop();
        residual[x.0] -= 1;
        residual[y.0] += 1;
    }
    failed.insert((i, budget, residual.clone()));
    false
}
