//! The quasi-prenorm `N_ρ` on the free group, the Graev quasi-pseudometric
//! `ρ̂(g, h) = N_ρ(g⁻¹h)`, and the abelian norm `d̂_A` with its witnesses.

mod abelian;
pub mod assignment;
mod free;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub use abelian::{abelian_dist, abelian_norm, abelian_norm_balanced};
pub use free::{graev_dist_free, graev_norm_free};

use crate::error::{Error, Result};
use crate::qpspace::QPSpace;
use crate::rational::{format_rational, Rational};
use crate::schemes::Scheme;
use crate::words::{AbelianWord, Alphabet, Letter, Word};

/// Search limits; the free-group search is exponential in the reduced length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest reduced length accepted by [`graev_norm_free`].
    pub free_reduced_len: usize,
    /// Largest `Σ|m_i|` accepted by [`abelian_norm`].
    pub abelian_letters: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { free_reduced_len: 6, abelian_letters: 12 }
    }
}

/// A minimizing almost irreducible word and scheme for `N_ρ(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormWitness {
    pub word: Word,
    pub scheme: Scheme,
    pub value: Rational,
}

impl NormWitness {
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        NormWitnessDisplay { w: self, alphabet }
    }
}

struct NormWitnessDisplay<'a> {
    w: &'a NormWitness,
    alphabet: &'a Alphabet,
}

impl fmt::Display for NormWitnessDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scheme = if self.w.scheme.n() == 0 { "()".to_string() } else { self.w.scheme.to_string() };
        write!(
            f,
            "word=\"{}\" scheme={} value={}",
            self.w.word.display(self.alphabet),
            scheme,
            format_rational(&self.w.value)
        )
    }
}

/// A representation `h = Σ (-u_i + v_i)` with `value = Σ ρ*(u_i, v_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingWitness {
    pub pairs: Vec<(Letter, Letter)>,
    pub value: Rational,
}

impl PairingWitness {
    /// `Σ (-u_i + v_i)`.
    pub fn element(&self) -> AbelianWord {
        self.pairs
            .iter()
            .fold(AbelianWord::identity(), |acc, &(u, v)| acc.add(&AbelianWord::pair(u, v)))
    }

    /// `Σ ρ*(u_i, v_i)` recomputed from the space.
    pub fn evaluate(&self, space: &QPSpace) -> Result<Rational> {
        self.pairs
            .iter()
            .try_fold(Rational::zero(), |acc, &(u, v)| Ok(acc + space.rho_star(u, v)?))
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        PairingWitnessDisplay { w: self, alphabet }
    }
}

struct PairingWitnessDisplay<'a> {
    w: &'a PairingWitness,
    alphabet: &'a Alphabet,
}

impl fmt::Display for PairingWitnessDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("pairs=")?;
        if self.w.pairs.is_empty() {
            f.write_str("()")?;
        }
        for (u, v) in &self.w.pairs {
            write!(
                f,
                "({},{})",
                u.display_additive(self.alphabet),
                v.display_additive(self.alphabet)
            )?;
        }
        write!(f, " value={}", format_rational(&self.w.value))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupElement {
    Free(Word),
    Abelian(AbelianWord),
}

/// `N_ρ(g) < ε` for free words (the ball `U_ρ(ε)`), `ρ̂_A(e, g) < ε` for abelian ones.
pub fn v_rho_member(space: &QPSpace, g: &GroupElement, eps: &Rational, caps: &Caps) -> Result<bool> {
    if *eps <= Rational::zero() {
        return Err(Error::Precondition("ε must be positive".into()));
    }
    let norm = match g {
        GroupElement::Free(w) => graev_norm_free(space, w, caps)?.0,
        GroupElement::Abelian(h) => abelian_norm(space, h, caps)?.0,
    };
    Ok(norm < *eps)
}

/// Integer image of `ρ*`: every value multiplied by the lcm of the matrix denominators.
pub(crate) struct ScaledRhoStar<'a> {
    space: &'a QPSpace,
    scale: u64,
}

impl<'a> ScaledRhoStar<'a> {
    // Room for sums of a few hundred values of at most 2·scale each.
    const MAX_SCALE: u64 = 1 << 48;

    pub(crate) fn new(space: &'a QPSpace) -> Result<Self> {
        let mut lcm = BigInt::one();
        for row in space.matrix() {
            for v in row {
                lcm = lcm.lcm(v.denom());
            }
        }
        match lcm.to_u64() {
            Some(s) if s <= Self::MAX_SCALE => Ok(ScaledRhoStar { space, scale: s }),
            _ => Err(Error::Overflow(format!("common denominator {lcm} is too large"))),
        }
    }

    pub(crate) fn get(&self, p: Letter, q: Letter) -> u64 {
        let v = self.space.rho_star_unchecked(p, q) * Rational::from_integer(BigInt::from(self.scale));
        debug_assert!(v.is_integer());
        v.to_integer().to_u64().expect("ρ* is non-negative and bounded")
    }

    /// `total / (divisor · scale)` as an exact rational.
    pub(crate) fn unscale(&self, total: u64, divisor: u64) -> Rational {
        Rational::new(BigInt::from(total), BigInt::from(self.scale) * BigInt::from(divisor))
    }
}

pub(crate) fn check_generators(space: &QPSpace, bound: usize) -> Result<()> {
    if bound > space.len() {
        return Err(Error::Domain(format!(
            "element uses generator index {} but the space has {} points",
            bound - 1,
            space.len()
        )));
    }
    Ok(())
}
