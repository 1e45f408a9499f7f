//! Exact `N_ρ` on the free group.
//!
//! The search space is every almost irreducible word `𝒳` of length `2n`,
//! `1 ≤ n ≤ ℓ(g)`, over `e`, the signed letters of `g` and their inverses, with
//! `[𝒳] = g`, paired with every scheme `φ ∈ 𝒮_n`. A scheme is a Dyck structure
//! on the positions, so the pair is generated left to right: each new letter
//! either opens a pair or closes the most recent open one. The state after a
//! prefix is (letters left, reduced prefix, last letter, stack of open letters) and
//! the remaining cost depends only on that state, so the minimum is a memoized
//! recursion over states instead of an enumeration of (word, scheme) pairs.

use num_traits::Zero;
use rustc_hash::FxHashMap;

use super::{check_generators, Caps, NormWitness, ScaledRhoStar};
use crate::error::{Error, Result};
use crate::qpspace::QPSpace;
use crate::rational::Rational;
use crate::schemes::Scheme;
use crate::words::{Letter, Word};

const NO_LETTER: u8 = u8::MAX;
const NEUTRAL: u8 = 0;

/// `N_ρ(g)` with the shortlex-smallest minimizing witness (shortest word, then letters, then scheme).
///
/// `space` must be a quasi-pseudometric bounded by 1; `N_ρ(e) = 0` with an empty witness.
pub fn graev_norm_free(space: &QPSpace, g: &Word, caps: &Caps) -> Result<(Rational, NormWitness)> {
    space.require_bounded()?;
    check_generators(space, g.generator_bound())?;
    let target = g.reduce();
    let cap = caps.free_reduced_len.min(MAX_WORD / 2);
    if target.len() > cap {
        return Err(Error::CapExceeded {
            what: "reduced length",
            cap,
            actual: target.len(),
        });
    }
    if target.is_empty() {
        let witness = NormWitness { word: Word::empty(), scheme: Scheme::empty(), value: Rational::zero() };
        return Ok((Rational::zero(), witness));
    }
    let rho = ScaledRhoStar::new(space)?;
    let mut search = Search::new(&target, &rho);
    let (total, word, pairs) = search.solve();
    let value = rho.unscale(total, 2);
    let witness = NormWitness {
        word,
        scheme: Scheme::new(pairs).expect("extracted pairing is a scheme"),
        value: value.clone(),
    };
    Ok((value, witness))
}

/// `ρ̂(g, h) = N_ρ(g⁻¹h)`.
pub fn graev_dist_free(space: &QPSpace, g: &Word, h: &Word, caps: &Caps) -> Result<Rational> {
    let diff = g.inverse().product(h).reduce();
    Ok(graev_norm_free(space, &diff, caps)?.0)
}

/// Longest search word (reduced length 8); bounds the inline buffers below.
const MAX_WORD: usize = 16;

/// A short letter sequence stored inline so states are `Copy` and cheap to hash.
/// Slots past `len` stay zero, so derived equality matches slice equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Letters {
    len: u8,
    buf: [u8; MAX_WORD],
}

impl Letters {
    const EMPTY: Letters = Letters { len: 0, buf: [0; MAX_WORD] };

    fn as_slice(&self) -> &[u8] {
        &self.buf[..self.len as usize]
    }

    fn len(&self) -> usize {
        self.len as usize
    }

    fn last(&self) -> Option<u8> {
        self.as_slice().last().copied()
    }

    fn push(&mut self, l: u8) {
        self.buf[self.len as usize] = l;
        self.len += 1;
    }

    fn pop(&mut self) {
        self.len -= 1;
        self.buf[self.len as usize] = 0;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct State {
    /// Letters still allowed before the length bound.
    remaining: u8,
    last: u8,
    prefix: Letters,
    stack: Letters,
}

struct Step {
    letter: u8,
    cost: u64,
    next: State,
}

struct Search {
    /// Local alphabet, sorted; index 0 is `e`.
    letters: Vec<Letter>,
    inverse: Vec<u8>,
    /// `2·c(u, v)·scale` where `c(u, v) = ½(ρ*(u⁻¹, v) + ρ*(v⁻¹, u))` is the cost of pairing `u` with `v`.
    pair_cost: Vec<Vec<u64>>,
    target: Vec<u8>,
    memo: FxHashMap<State, Option<u64>>,
}

impl Search {
    fn new(target: &Word, rho: &ScaledRhoStar<'_>) -> Self {
        let mut letters = vec![Letter::Neutral];
        for &l in target.letters() {
            letters.push(l);
            letters.push(l.inverse());
        }
        letters.sort();
        letters.dedup();
        let index = |l: Letter| letters.binary_search(&l).expect("letter in local alphabet") as u8;
        let inverse = letters.iter().map(|l| index(l.inverse())).collect();
        let pair_cost = letters
            .iter()
            .map(|&u| letters.iter().map(|&v| rho.get(u.inverse(), v) + rho.get(v.inverse(), u)).collect())
            .collect();
        let target_local = target.letters().iter().map(|&l| index(l)).collect();
        Search {
            inverse,
            pair_cost,
            target: target_local,
            memo: FxHashMap::default(),
            letters,
        }
    }

    fn initial(max_len: usize) -> State {
        State { remaining: max_len as u8, last: NO_LETTER, prefix: Letters::EMPTY, stack: Letters::EMPTY }
    }

    // The target is nonempty, so a stop is never at length 0 and the balanced stack makes the length even.
    fn can_stop(&self, s: &State) -> bool {
        s.stack.len == 0 && s.prefix.as_slice() == self.target
    }

    /// Letters needed to turn `prefix` into the target: undo the part after the
    /// common prefix, then spell the rest of the target.
    fn distance_to_target(&self, prefix: &[u8]) -> usize {
        let common = prefix.iter().zip(&self.target).take_while(|(a, b)| a == b).count();
        (prefix.len() - common) + (self.target.len() - common)
    }

    /// Successor states in ascending letter order.
    fn steps(&self, s: &State) -> Vec<Step> {
        let mut out = Vec::new();
        if s.remaining == 0 {
            return out;
        }
        let remaining = s.remaining - 1;
        for l in 0..self.letters.len() as u8 {
            if l != NEUTRAL && s.last != NO_LETTER && l == self.inverse[s.last as usize] {
                continue;
            }
            let mut prefix = s.prefix;
            if l != NEUTRAL {
                if prefix.last() == Some(self.inverse[l as usize]) {
                    prefix.pop();
                } else {
                    prefix.push(l);
                }
            }
            if self.distance_to_target(prefix.as_slice()) > remaining as usize {
                continue;
            }
            if s.stack.len() < remaining as usize {
                let mut stack = s.stack;
                stack.push(l);
                let next = State { remaining, last: l, prefix, stack };
                out.push(Step { letter: l, cost: 0, next });
            }
            if let Some(open) = s.stack.last() {
                let mut stack = s.stack;
                stack.pop();
                let cost = self.pair_cost[open as usize][l as usize];
                let next = State { remaining, last: l, prefix, stack };
                out.push(Step { letter: l, cost, next });
            }
        }
        out
    }

    /// Least completion cost from `s`, `None` if no completion reaches the target.
    fn best(&mut self, s: &State) -> Option<u64> {
        if let Some(&v) = self.memo.get(s) {
            return v;
        }
        let mut result = if self.can_stop(s) { Some(0) } else { None };
        for step in self.steps(s) {
            if let Some(rest) = self.best(&step.next) {
                let total = step.cost + rest;
                if result.map_or(true, |r| total < r) {
                    result = Some(total);
                }
            }
        }
        self.memo.insert(*s, result);
        result
    }

    /// Optimum over lengths `2..=2ℓ(g)`, with the shortlex-smallest optimal word.
    fn solve(&mut self) -> (u64, Word, Vec<(usize, usize)>) {
        let max_len = 2 * self.target.len();
        let optimum = self.best(&Self::initial(max_len)).expect("g padded with e is always feasible");
        // Shortest length bound that already attains the optimum; the memo is shared.
        let len = (1..=self.target.len())
            .map(|n| 2 * n)
            .find(|&len| self.best(&Self::initial(len)) == Some(optimum))
            .expect("the full bound attains the optimum");
        let init = Self::initial(len);

        // Within that bound every optimal word has the same length; take the
        // least letter that some optimal continuation (any stack choice) uses.
        let mut live: Vec<(State, u64)> = vec![(init, 0)];
        let mut word: Vec<u8> = Vec::new();
        loop {
            if live.iter().any(|(s, acc)| *acc == optimum && self.can_stop(s)) {
                break;
            }
            let mut by_letter: Vec<Vec<(State, u64)>> = vec![Vec::new(); self.letters.len()];
            for (s, acc) in &live {
                for step in self.steps(s) {
                    let acc = acc + step.cost;
                    if self.best(&step.next).map(|r| acc + r) == Some(optimum)
                        && !by_letter[step.letter as usize].iter().any(|(t, _)| *t == step.next)
                    {
                        by_letter[step.letter as usize].push((step.next, acc));
                    }
                }
            }
            let (letter, next) = by_letter
                .into_iter()
                .enumerate()
                .find(|(_, v)| !v.is_empty())
                .expect("an optimal continuation exists");
            word.push(letter as u8);
            live = next;
        }

        let pairs = self.smallest_scheme(&word, optimum);
        let word = word.iter().map(|&l| self.letters[l as usize]).collect();
        (optimum, word, pairs)
    }

    /// Lexicographically smallest optimal scheme for a fixed word, by interval DP.
    fn smallest_scheme(&self, word: &[u8], optimum: u64) -> Vec<(usize, usize)> {
        let n = word.len();
        let mut best = vec![vec![u64::MAX; n + 1]; n + 1];
        for i in 0..=n {
            best[i][i] = 0;
        }
        for len in (2..=n).step_by(2) {
            for i in 0..=n - len {
                let j = i + len;
                let mut m = u64::MAX;
                for k in (i + 1..j).step_by(2) {
                    let c = self.pair_cost[word[i] as usize][word[k] as usize] + best[i + 1][k] + best[k + 1][j];
                    m = m.min(c);
                }
                best[i][j] = m;
            }
        }
        debug_assert_eq!(best[0][n], optimum);
        let mut pairs = Vec::with_capacity(n / 2);
        self.extract(word, &best, 0, n, &mut pairs);
        pairs
    }

    fn extract(&self, word: &[u8], best: &[Vec<u64>], lo: usize, hi: usize, pairs: &mut Vec<(usize, usize)>) {
        if lo == hi {
            return;
        }
        for k in (lo + 1..hi).step_by(2) {
            let c = self.pair_cost[word[lo] as usize][word[k] as usize] + best[lo + 1][k] + best[k + 1][hi];
            if c == best[lo][hi] {
                pairs.push((lo + 1, k + 1));
                self.extract(word, best, lo + 1, k, pairs);
                self.extract(word, best, k + 1, hi, pairs);
                return;
            }
        }
        unreachable!("interval optimum is attained");
    }
}
