//! Quasi-pseudometrics from entourage chains, and the composition lemma.

use num_traits::{One, Zero};

use super::{universal_base, Entourage, EntourageSequence, FiniteSpace};
use crate::error::{Error, Result};
use crate::qpspace::QPSpace;
use crate::rational::{dyadic, int, Rational};

/// How pairs inside the last given entourage `V_m` are weighted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrinkTail {
    /// Only the prefix is known: pairs in `V_m` get `2^-m`.
    Truncated,
    /// The chain continues as `V_m, V_m, …` (needs `V_m` transitive): pairs in `V_m` get `0`.
    Stationary,
}

/// Frink's chaining construction for `V_0 = X×X ⊇ V_1 ⊇ ⋯ ⊇ V_m` with `V_{i+1}³ ⊆ V_i`.
///
/// `seq` holds `V_1, …, V_m`. With `f(x, y) = 2^-i` for the deepest `i` such that
/// `(x, y) ∈ V_i`, the result is `ρ(x, y) = min Σ f(z_j, z_{j+1})` over chains from
/// `x` to `y`, and `V_i ⊆ {ρ ≤ 2^-i} ⊆ V_{i-1}` for `1 ≤ i ≤ m`.
pub fn frink_qpm(seq: &EntourageSequence, tail: FrinkTail) -> Result<QPSpace> {
    seq.require_chain()?;
    let m = seq.len();
    let last = seq.get(m - 1);
    if tail == FrinkTail::Stationary && !last.is_transitive() {
        return Err(Error::Precondition("a stationary tail needs the last entourage to be transitive".into()));
    }
    let points = seq.points().clone();
    let n = points.len();
    let mut rho: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n]; n];
    for (x, row) in rho.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            if x == y {
                continue;
            }
            let (gx, gy) = (crate::words::Generator(x), crate::words::Generator(y));
            let level = seq.iter().take_while(|v| v.contains(gx, gy)).count();
            *cell = if level == m && tail == FrinkTail::Stationary {
                Rational::zero()
            } else {
                dyadic(level as u32)
            };
        }
    }
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                let via = &rho[x][z] + &rho[z][y];
                if via < rho[x][y] {
                    rho[x][y] = via;
                }
            }
        }
    }
    QPSpace::new(points, rho)
}

/// A quasi-pseudometric bounded by 1 with `{(x, y) : ρ(x, y) < 1} ⊆ V`.
///
/// Uses the chain `X×X, V, R, R, …` with `R` the universal base (idempotent, so
/// `R³ = R ⊆ V`); Frink gives `{ρ ≤ 1/4} ⊆ V`, and `min(4ρ, 1)` moves that
/// threshold to 1. `R`-pairs stay at distance 0.
pub fn lemma3_qpm(space: &FiniteSpace, v: &Entourage) -> Result<QPSpace> {
    if v.points() != space.points() {
        return Err(Error::Domain("entourage and topology have different points".into()));
    }
    let r = universal_base(space)?;
    if !r.is_subset(v) {
        return Err(Error::Precondition("V does not contain the universal base entourage".into()));
    }
    let seq = EntourageSequence::new(vec![v.clone(), r])?;
    let rho = frink_qpm(&seq, FrinkTail::Stationary)?;
    let one = Rational::one();
    let points = rho.points().clone();
    Ok(QPSpace::from_fn(points, |x, y| (rho.d(x, y) * int(4)).min(one.clone())))
}

/// Lemma on chains `U_{n+1}³ ⊆ U_n`: if `Σ 2^-k_i < 2^-k` then `U_{k_1}∘⋯∘U_{k_p} ⊆ U_k`.
///
/// `seq` is indexed from 0 (`U_0, U_1, …`); each `k_i ≥ 1`. Returns whether the
/// containment holds for this finite data.
pub fn lemma5_check(seq: &EntourageSequence, k: usize, ks: &[usize]) -> Result<bool> {
    seq.require_chain()?;
    let m = seq.len();
    if ks.is_empty() {
        return Err(Error::Precondition("need at least one index k_i".into()));
    }
    if k >= m {
        return Err(Error::Precondition(format!("k = {k} but the sequence stops at U_{}", m - 1)));
    }
    if let Some(&bad) = ks.iter().find(|&&ki| ki == 0 || ki >= m) {
        return Err(Error::Precondition(format!("index k_i = {bad} outside 1..{}", m - 1)));
    }
    let sum = ks.iter().fold(Rational::zero(), |acc, &ki| acc + dyadic(ki as u32));
    if sum >= dyadic(k as u32) {
        return Err(Error::Precondition(format!("Σ 2^-k_i = {sum} is not below 2^-{k}")));
    }
    let mut composed = seq.get(ks[0]).clone();
    for &ki in &ks[1..] {
        composed = composed.compose(seq.get(ki))?;
    }
    Ok(composed.is_subset(seq.get(k)))
}
