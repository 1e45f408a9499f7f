//! Brute-force oracles and random generators shared by the integration tests.
//!
//! Nothing here calls the search code of the library: the oracles work from the
//! distance matrix and the definitions directly.

#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use graev_core::rational::{int, ratio};
use graev_core::{AbelianWord, Alphabet, Entourage, Generator, Letter, QPSpace, Rational, Sign, Word};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::Rng;

pub const NAMES: [&str; 6] = ["a", "b", "c", "d", "f", "g"];

pub fn alphabet(n: usize) -> Alphabet {
    Alphabet::new(&NAMES[..n]).unwrap()
}

/// The fixture with `ρ(a, b) = 1/4`, `ρ(b, a) = 1/2`.
pub fn two_point() -> QPSpace {
    QPSpace::new(alphabet(2), vec![vec![int(0), ratio(1, 4)], vec![ratio(1, 2), int(0)]]).unwrap()
}

/// Entries `j/q` with one random `q ≤ 16`, closed under shortest paths; bounded by 1.
pub fn random_space(rng: &mut StdRng, n: usize) -> QPSpace {
    let q: i64 = rng.gen_range(1..=16);
    let mut d: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { int(0) } else { ratio(rng.gen_range(0..=q), q) }).collect())
        .collect();
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                let via = &d[x][z] + &d[z][y];
                if via < d[x][y] {
                    d[x][y] = via;
                }
            }
        }
    }
    QPSpace::new(alphabet(n), d).unwrap()
}

pub fn random_letter(rng: &mut StdRng, gens: usize) -> Letter {
    let g = rng.gen_range(0..gens);
    if rng.gen_bool(0.5) {
        Letter::pos(g)
    } else {
        Letter::neg(g)
    }
}

/// A reduced word of length at most `max_len`.
pub fn random_reduced_word(rng: &mut StdRng, gens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = random_letter(rng, gens);
        if letters.last() != Some(&l.inverse()) {
            letters.push(l);
        }
    }
    Word::new(letters)
}

pub fn random_abelian(rng: &mut StdRng, gens: usize, max_len: usize) -> AbelianWord {
    let mut h = AbelianWord::identity();
    for _ in 0..rng.gen_range(0..=max_len) {
        h.add_term(Generator(rng.gen_range(0..gens)), if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    h
}

/// Coefficient sum zero, `Σ|m_i| ≤ max_len`.
pub fn random_balanced(rng: &mut StdRng, gens: usize, max_len: usize) -> AbelianWord {
    let mut h = AbelianWord::identity();
    for _ in 0..rng.gen_range(0..=max_len / 2) {
        h.add_term(Generator(rng.gen_range(0..gens)), -1);
        h.add_term(Generator(rng.gen_range(0..gens)), 1);
    }
    h
}

// ---- extended distance, straight from the case definitions ----

fn in_x_or_e(p: Letter) -> bool {
    !matches!(p, Letter::Signed(_, Sign::Neg))
}

fn in_x_inv_or_e(p: Letter) -> bool {
    !matches!(p, Letter::Signed(_, Sign::Pos))
}

pub fn rho_e_oracle(space: &QPSpace, p: Letter, q: Letter) -> Rational {
    match (p, q) {
        _ if p == q => int(0),
        (Letter::Signed(x, Sign::Pos), Letter::Signed(y, Sign::Pos)) => space.matrix()[x.0][y.0].clone(),
        _ => int(1),
    }
}

pub fn rho_star_oracle(space: &QPSpace, p: Letter, q: Letter) -> Rational {
    if p == q {
        int(0)
    } else if in_x_or_e(p) && in_x_or_e(q) {
        rho_e_oracle(space, p, q)
    } else if in_x_inv_or_e(p) && in_x_inv_or_e(q) {
        rho_e_oracle(space, q.inverse(), p.inverse())
    } else {
        int(2)
    }
}

/// Every element of `X̃`: `e`, then `x` and `x⁻¹` for each point.
pub fn extended_points(n: usize) -> Vec<Letter> {
    let mut v = vec![Letter::Neutral];
    for g in 0..n {
        v.push(Letter::pos(g));
        v.push(Letter::neg(g));
    }
    v
}

// ---- words ----

/// Stack reduction, written independently of the library.
pub fn reduce_oracle(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for &l in letters {
        if l.is_neutral() {
            continue;
        }
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

// ---- schemes ----

/// All perfect pairings of `1..=2n`, crossing ones included.
pub fn all_pairings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(free: &[usize], cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&first, rest)) = free.split_first() else {
            let mut p = cur.clone();
            p.sort();
            out.push(p);
            return;
        };
        for k in 0..rest.len() {
            let mut remaining = rest.to_vec();
            let partner = remaining.remove(k);
            cur.push((first, partner));
            go(&remaining, cur, out);
            cur.pop();
        }
    }
    let free: Vec<usize> = (1..=2 * n).collect();
    let mut out = Vec::new();
    go(&free, &mut Vec::new(), &mut out);
    out
}

pub fn crosses(p: (usize, usize), q: (usize, usize)) -> bool {
    (p.0 < q.0 && q.0 < p.1 && p.1 < q.1) || (q.0 < p.0 && p.0 < q.1 && q.1 < p.1)
}

/// All perfect pairings filtered to the non-crossing ones, sorted.
pub fn noncrossing_bruteforce(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut v: Vec<_> = all_pairings(n)
        .into_iter()
        .filter(|p| p.iter().all(|&a| p.iter().all(|&b| !crosses(a, b))))
        .collect();
    v.sort();
    v
}

/// `½ Σ_i ρ*(x_i⁻¹, x_φ(i))` over all `2n` positions.
pub fn gamma_oracle(space: &QPSpace, word: &[Letter], pairs: &[(usize, usize)]) -> Rational {
    let mut total = int(0);
    for &(a, b) in pairs {
        let (u, v) = (word[a - 1], word[b - 1]);
        total += rho_star_oracle(space, u.inverse(), v) + rho_star_oracle(space, v.inverse(), u);
    }
    total / int(2)
}

/// `N_ρ(g)` by enumerating almost irreducible words and non-crossing pairings.
///
/// Only words that can still reach `g` in the remaining letters are extended;
/// that pruning is sound and keeps `ℓ(g) ≤ 4` affordable.
pub fn free_norm_oracle(space: &QPSpace, g: &Word) -> Rational {
    let target = reduce_oracle(g.letters());
    if target.is_empty() {
        return int(0);
    }
    let mut alphabet = vec![Letter::Neutral];
    for &l in &target {
        alphabet.push(l);
        alphabet.push(l.inverse());
    }
    alphabet.sort();
    alphabet.dedup();
    let mut best: Option<Rational> = None;
    for n in 1..=target.len() {
        let schemes = noncrossing_bruteforce(n);
        let mut words = Vec::new();
        extend(&alphabet, &target, 2 * n, &mut Vec::new(), &mut words);
        for w in &words {
            for s in &schemes {
                let v = gamma_oracle(space, w, s);
                if best.as_ref().map_or(true, |b| v < *b) {
                    best = Some(v);
                }
            }
        }
    }
    best.expect("g padded with e is always a candidate")
}

fn extend(alphabet: &[Letter], target: &[Letter], len: usize, cur: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
    let reduced = reduce_oracle(cur);
    let common = reduced.iter().zip(target).take_while(|(a, b)| a == b).count();
    if (reduced.len() - common) + (target.len() - common) > len - cur.len() {
        return;
    }
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for &l in alphabet {
        if !l.is_neutral() && cur.last() == Some(&l.inverse()) {
            continue;
        }
        cur.push(l);
        extend(alphabet, target, len, cur, out);
        cur.pop();
    }
}

// ---- abelian ----

fn scale_of(space: &QPSpace) -> BigInt {
    space.matrix().iter().flatten().fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()))
}

fn scaled(v: &Rational, scale: &BigInt) -> u64 {
    (v * Rational::from_integer(scale.clone())).to_integer().to_u64().unwrap()
}

/// `d̂_A(e, h)` as a shortest path: every step adds some `-u + v` with
/// `u, v ∈ X̃` at cost `ρ*(u, v)`. Coordinates stay within `Σ|m_i| + 1`.
pub fn abelian_norm_oracle(space: &QPSpace, h: &AbelianWord) -> Rational {
    let n = space.len();
    let bound = h.length() as i64 + 1;
    let side = (2 * bound + 1) as usize;
    let encode = |c: &[i64]| c.iter().fold(0usize, |acc, &v| acc * side + (v + bound) as usize);
    let scale = scale_of(space);
    let points = extended_points(n);
    let mut steps: Vec<(Vec<i64>, u64)> = Vec::new();
    for &u in &points {
        for &v in &points {
            let mut delta = vec![0i64; n];
            if let Some(g) = u.generator() {
                delta[g.0] -= u.exponent();
            }
            if let Some(g) = v.generator() {
                delta[g.0] += v.exponent();
            }
            steps.push((delta, scaled(&rho_star_oracle(space, u, v), &scale)));
        }
    }
    let target: Vec<i64> = (0..n).map(|i| h.exponent(Generator(i))).collect();
    let mut dist: HashMap<usize, u64> = HashMap::new();
    let mut heap = BinaryHeap::new();
    let start = vec![0i64; n];
    dist.insert(encode(&start), 0);
    heap.push(Reverse((0u64, start)));
    while let Some(Reverse((d, c))) = heap.pop() {
        if c == target {
            return Rational::new(BigInt::from(d), scale);
        }
        if dist.get(&encode(&c)).is_some_and(|&best| best < d) {
            continue;
        }
        for (delta, w) in &steps {
            let next: Vec<i64> = c.iter().zip(delta).map(|(a, b)| a + b).collect();
            if next.iter().any(|v| v.abs() > bound) {
                continue;
            }
            let nd = d + w;
            let key = encode(&next);
            if dist.get(&key).map_or(true, |&best| nd < best) {
                dist.insert(key, nd);
                heap.push(Reverse((nd, next)));
            }
        }
    }
    unreachable!("every element is reachable through e-pairs")
}

/// Minimum over all perfect pairings of the letters of `h` (plus one `e` if
/// odd), each pair `{s, t}` written as `-s⁻¹ + t` or `-t⁻¹ + s`.
pub fn pairing_norm_oracle(space: &QPSpace, h: &AbelianWord) -> Rational {
    let mut letters = h.letters();
    if letters.is_empty() {
        return int(0);
    }
    if letters.len() % 2 == 1 {
        letters.push(Letter::Neutral);
    }
    let m = letters.len() / 2;
    all_pairings(m)
        .into_iter()
        .map(|p| {
            p.iter().fold(int(0), |acc, &(i, j)| {
                let (s, t) = (letters[i - 1], letters[j - 1]);
                let c1 = rho_star_oracle(space, s.inverse(), t);
                let c2 = rho_star_oracle(space, t.inverse(), s);
                acc + c1.min(c2)
            })
        })
        .min()
        .unwrap()
}

// ---- entourages ----

pub type Rel = Vec<Vec<bool>>;

pub fn compose_oracle(u: &Rel, v: &Rel) -> Rel {
    let n = u.len();
    (0..n).map(|x| (0..n).map(|z| (0..n).any(|y| u[x][y] && v[y][z])).collect()).collect()
}

pub fn subset_oracle(u: &Rel, v: &Rel) -> bool {
    u.iter().flatten().zip(v.iter().flatten()).all(|(&a, &b)| !a || b)
}

pub fn random_reflexive(rng: &mut StdRng, n: usize, density: f64) -> Rel {
    (0..n).map(|x| (0..n).map(|y| x == y || rng.gen_bool(density)).collect()).collect()
}

/// `V_1 ⊇ ⋯ ⊇ V_m` with `V_{i+1}³ ⊆ V_i`, built from the deepest entourage up.
pub fn random_chain(rng: &mut StdRng, n: usize, m: usize) -> Vec<Rel> {
    let density = rng.gen_range(0.0..0.3);
    let mut chain = vec![random_reflexive(rng, n, density)];
    while chain.len() < m {
        let deeper = chain.last().unwrap();
        let cube = compose_oracle(&compose_oracle(deeper, deeper), deeper);
        let density = rng.gen_range(0.0..0.3);
        let extra = random_reflexive(rng, n, density);
        let next = cube.iter().zip(&extra).map(|(a, b)| a.iter().zip(b).map(|(&p, &q)| p || q).collect()).collect();
        chain.push(next);
    }
    chain.reverse();
    chain
}

pub fn to_entourage(points: &Alphabet, r: &Rel) -> Entourage {
    Entourage::new(points.clone(), r.clone()).unwrap()
}

/// `2^-i`.
pub fn dyadic(i: usize) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(1) << i)
}

pub fn zero() -> Rational {
    Rational::zero()
}
