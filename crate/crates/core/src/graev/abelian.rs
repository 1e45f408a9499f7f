//! The abelian norm `d̂_A(e, h)` as a minimum over pairings of the letters of `h`.

use num_traits::Zero;

use super::assignment::min_cost_assignment;
use super::{check_generators, Caps, PairingWitness, ScaledRhoStar};
use crate::error::{Error, Result};
use crate::qpspace::QPSpace;
use crate::rational::Rational;
use crate::words::{AbelianWord, Letter};

/// `d̂_A(e, h)` by exhaustive pairing.
///
/// The `l` signed letters of `h` (plus one `e` when `l` is odd) are split into
/// unordered pairs `{s, t}`; a pair is written `-u + v = s + t` with the cheaper
/// of `(u, v) = (-s, t)` and `(-t, s)`, costing `ρ*(u, v)`. The minimum over all
/// `(l-1)!!` pairings is computed by a subset recursion.
pub fn abelian_norm(space: &QPSpace, h: &AbelianWord, caps: &Caps) -> Result<(Rational, PairingWitness)> {
    space.require_bounded()?;
    check_generators(space, h.generator_bound())?;
    let l = h.length();
    if l > caps.abelian_letters {
        return Err(Error::CapExceeded { what: "abelian length", cap: caps.abelian_letters, actual: l });
    }
    if l == 0 {
        return Ok((Rational::zero(), PairingWitness { pairs: Vec::new(), value: Rational::zero() }));
    }
    let mut letters = h.letters();
    if l % 2 == 1 {
        letters.push(Letter::Neutral);
    }
    let rho = ScaledRhoStar::new(space)?;
    let m = letters.len();
    let mut cost = vec![vec![(0u64, (Letter::Neutral, Letter::Neutral)); m]; m];
    for i in 0..m {
        for j in 0..m {
            let (s, t) = (letters[i], letters[j]);
            let first = rho.get(s.inverse(), t);
            let second = rho.get(t.inverse(), s);
            cost[i][j] = if first <= second {
                (first, (s.inverse(), t))
            } else {
                (second, (t.inverse(), s))
            };
        }
    }

    let full = (1usize << m) - 1;
    let mut memo: Vec<Option<(u64, usize)>> = vec![None; 1 << m];
    let total = pairing_min(full, 0, &cost, &mut memo);

    let mut pairs = Vec::with_capacity(m / 2);
    let mut used = 0usize;
    while used != full {
        let i = (!used).trailing_zeros() as usize;
        let (_, j) = memo[used].expect("visited");
        pairs.push(cost[i][j].1);
        used |= (1 << i) | (1 << j);
    }
    let value = rho.unscale(total, 1);
    Ok((value.clone(), PairingWitness { pairs, value }))
}

/// Least cost of pairing the letters not in `used`; records the partner of the lowest free index.
fn pairing_min(full: usize, used: usize, cost: &[Vec<(u64, (Letter, Letter))>], memo: &mut [Option<(u64, usize)>]) -> u64 {
    if used == full {
        return 0;
    }
    if let Some((v, _)) = memo[used] {
        return v;
    }
    let i = (!used).trailing_zeros() as usize;
    let mut best: Option<(u64, usize)> = None;
    for j in i + 1..cost.len() {
        if used & (1 << j) != 0 {
            continue;
        }
        let v = cost[i][j].0 + pairing_min(full, used | (1 << i) | (1 << j), cost, memo);
        if best.map_or(true, |(b, _)| v < b) {
            best = Some((v, j));
        }
    }
    memo[used] = best;
    best.expect("an even number of free letters remains").0
}

/// `d̂_A(e, h)` for `Σ m_i = 0` as a minimum-cost bipartite matching between
/// the negative letters `Z` and the positive letters `T` with edge cost `d(z, t)`.
pub fn abelian_norm_balanced(space: &QPSpace, h: &AbelianWord) -> Result<(Rational, PairingWitness)> {
    let report = space.validate(false);
    if !report.is_valid() {
        return Err(Error::InvalidSpace(report.render(space)));
    }
    check_generators(space, h.generator_bound())?;
    if h.coefficient_sum() != 0 {
        return Err(Error::Precondition(format!(
            "coefficient sum is {}, the balanced path needs 0",
            h.coefficient_sum()
        )));
    }
    let mut negative = Vec::new();
    let mut positive = Vec::new();
    for (g, m) in h.terms() {
        let side = if m < 0 { &mut negative } else { &mut positive };
        side.extend(std::iter::repeat(g).take(m.unsigned_abs() as usize));
    }
    let matrix: Vec<Vec<Rational>> = negative
        .iter()
        .map(|&z| positive.iter().map(|&t| space.d(z, t).clone()).collect())
        .collect();
    let (value, assign) = min_cost_assignment(&matrix)?;
    let pairs = negative
        .iter()
        .zip(&assign)
        .map(|(&z, &j)| (Letter::pos(z.0), Letter::pos(positive[j].0)))
        .collect();
    Ok((value.clone(), PairingWitness { pairs, value }))
}

/// `d̂_A(g, h) = d̂_A(e, h - g)`.
pub fn abelian_dist(space: &QPSpace, g: &AbelianWord, h: &AbelianWord, caps: &Caps) -> Result<Rational> {
    Ok(abelian_norm(space, &h.sub(g), caps)?.0)
}
