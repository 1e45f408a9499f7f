//! Finite quasi-uniformities: entourages, composition, the Frink chain
//! construction, the universal base of a finite space, and `W(P)` / `W_n(P)`.
//!
//! Composition is relational and left to right throughout:
//! `U∘V = {(x, z) : ∃y, (x, y) ∈ U and (y, z) ∈ V}`.

mod file;
mod frink;
mod topology;
mod wsets;

use std::fmt;

pub use file::{ChainEntry, ChainFile, EntourageFile, TopologyFile};
pub use frink::{frink_qpm, lemma3_qpm, lemma5_check, FrinkTail};
pub use topology::{universal_base, FiniteSpace};
pub use wsets::{wn_member, wp_member, WMembership};

use crate::error::{Error, Result};
use crate::words::{Alphabet, Generator};

/// A reflexive relation on a finite point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entourage {
    points: Alphabet,
    rel: Vec<bool>,
}

impl Entourage {
    pub fn new(points: Alphabet, matrix: Vec<Vec<bool>>) -> Result<Self> {
        let n = points.len();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("relation matrix must be {n}×{n}")));
        }
        let missing: Vec<&str> = (0..n).filter(|&i| !matrix[i][i]).map(|i| points.names()[i].as_str()).collect();
        if !missing.is_empty() {
            return Err(Error::Domain(format!("entourage is not reflexive at {}", missing.join(", "))));
        }
        Ok(Entourage { points, rel: matrix.into_iter().flatten().collect() })
    }

    /// Builds the relation `{(x, y) : f(x, y)}` plus the diagonal.
    pub fn from_fn(points: Alphabet, mut f: impl FnMut(Generator, Generator) -> bool) -> Self {
        let n = points.len();
        let rel = (0..n * n).map(|k| k / n == k % n || f(Generator(k / n), Generator(k % n))).collect();
        Entourage { points, rel }
    }

    pub fn diagonal(points: Alphabet) -> Self {
        Self::from_fn(points, |_, _| false)
    }

    pub fn full(points: Alphabet) -> Self {
        Self::from_fn(points, |_, _| true)
    }

    pub fn points(&self) -> &Alphabet {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: Generator, y: Generator) -> bool {
        self.rel[x.0 * self.len() + y.0]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Generator, Generator)> + '_ {
        let n = self.len();
        (0..n * n).filter(|&k| self.rel[k]).map(move |k| (Generator(k / n), Generator(k % n)))
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        self.rel.chunks(self.len().max(1)).take(self.len()).map(|r| r.to_vec()).collect()
    }

    fn same_base(&self, other: &Entourage) -> Result<()> {
        if self.points != other.points {
            return Err(Error::Domain("entourages live on different base sets".into()));
        }
        Ok(())
    }

    /// `self ∘ other = {(x, z) : ∃y, (x, y) ∈ self, (y, z) ∈ other}`.
    pub fn compose(&self, other: &Entourage) -> Result<Entourage> {
        self.same_base(other)?;
        let n = self.len();
        let mut rel = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                if self.rel[x * n + y] {
                    for z in 0..n {
                        rel[x * n + z] |= other.rel[y * n + z];
                    }
                }
            }
        }
        Ok(Entourage { points: self.points.clone(), rel })
    }

    /// `U∘U∘U`.
    pub fn cube(&self) -> Entourage {
        let sq = self.compose(self).expect("same base");
        sq.compose(self).expect("same base")
    }

    pub fn is_subset(&self, other: &Entourage) -> bool {
        self.points == other.points && self.rel.iter().zip(&other.rel).all(|(&a, &b)| !a || b)
    }

    pub fn is_transitive(&self) -> bool {
        self.compose(self).expect("same base").is_subset(self)
    }

    pub fn to_file(&self) -> EntourageFile {
        EntourageFile {
            points: self.points.names().to_vec(),
            relation: self.matrix().into_iter().map(|r| r.into_iter().map(u8::from).collect()).collect(),
        }
    }
}

impl fmt::Display for Entourage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .pairs()
            .map(|(x, y)| format!("({},{})", self.points.name(x), self.points.name(y)))
            .collect();
        write!(f, "{{{}}}", pairs.join(" "))
    }
}

/// A finite run `U_1, …, U_m` of entourages on one base set; repeats are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntourageSequence {
    entourages: Vec<Entourage>,
}

impl EntourageSequence {
    pub fn new(entourages: Vec<Entourage>) -> Result<Self> {
        let Some(first) = entourages.first() else {
            return Err(Error::Precondition("entourage sequence is empty".into()));
        };
        for u in &entourages[1..] {
            first.same_base(u)?;
        }
        Ok(EntourageSequence { entourages })
    }

    pub fn len(&self) -> usize {
        self.entourages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entourages.is_empty()
    }

    pub fn points(&self) -> &Alphabet {
        self.entourages[0].points()
    }

    pub fn get(&self, i: usize) -> &Entourage {
        &self.entourages[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Entourage> {
        self.entourages.iter()
    }

    /// Positions `i` (0-based) where `U_{i+1}³ ⊄ U_i`.
    pub fn chain_violations(&self) -> Vec<usize> {
        (0..self.len().saturating_sub(1))
            .filter(|&i| !self.entourages[i + 1].cube().is_subset(&self.entourages[i]))
            .collect()
    }

    pub(crate) fn require_chain(&self) -> Result<()> {
        let bad = self.chain_violations();
        if bad.is_empty() {
            return Ok(());
        }
        let list: Vec<String> = bad.iter().map(|i| i.to_string()).collect();
        Err(Error::Precondition(format!("U_(n+1)³ ⊄ U_n for n = {}", list.join(", "))))
    }
}
