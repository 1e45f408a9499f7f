//! Finite quasi-pseudometric spaces and the extensions `ρ → ρ_e → ρ*`.
//!
//! `ρ_e` lives on `X ∪ {e}` and `ρ*` on `X̃ = X ∪ {e} ∪ X⁻¹`; points of both are
//! represented by [`Letter`] (`e` is [`Letter::Neutral`], `x⁻¹` is a negative letter).

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, is_negative, parse_rational, Rational};
use crate::words::{Alphabet, Generator, Letter, Sign};

pub type ExtendedPoint = Letter;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPSpace {
    points: Alphabet,
    dist: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Negative { x: Generator, y: Generator },
    NonzeroDiagonal { x: Generator },
    Triangle { x: Generator, y: Generator, z: Generator },
    AboveOne { x: Generator, y: Generator },
}

/// Every violated axiom instance; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render(&self, space: &QPSpace) -> String {
        let name = |g: Generator| space.points.name(g).to_string();
        let d = |x: Generator, y: Generator| format_rational(space.d(x, y));
        self.violations
            .iter()
            .map(|v| match *v {
                Violation::Negative { x, y } => {
                    format!("negative distance d({},{}) = {}", name(x), name(y), d(x, y))
                }
                Violation::NonzeroDiagonal { x } => {
                    format!("nonzero diagonal d({0},{0}) = {1}", name(x), d(x, x))
                }
                Violation::Triangle { x, y, z } => format!(
                    "triangle inequality fails: d({},{}) = {} > d({},{}) + d({},{}) = {} + {}",
                    name(x),
                    name(y),
                    d(x, y),
                    name(x),
                    name(z),
                    name(z),
                    name(y),
                    d(x, z),
                    d(z, y)
                ),
                Violation::AboveOne { x, y } => {
                    format!("not bounded by 1: d({},{}) = {}", name(x), name(y), d(x, y))
                }
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl QPSpace {
    /// Checks only the shape of `dist`; axioms are checked by [`QPSpace::validate`].
    pub fn new(points: Alphabet, dist: Vec<Vec<Rational>>) -> Result<Self> {
        let n = points.len();
        if dist.len() != n {
            return Err(Error::Dimension(format!("{} points but {} rows", n, dist.len())));
        }
        if let Some((i, row)) = dist.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::Dimension(format!("row {} has {} entries, expected {}", i, row.len(), n)));
        }
        Ok(QPSpace { points, dist })
    }

    pub fn from_fn(points: Alphabet, mut f: impl FnMut(Generator, Generator) -> Rational) -> Self {
        let n = points.len();
        let dist = (0..n)
            .map(|i| (0..n).map(|j| f(Generator(i), Generator(j))).collect())
            .collect();
        QPSpace { points, dist }
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

    pub fn d(&self, x: Generator, y: Generator) -> &Rational {
        &self.dist[x.0][y.0]
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.dist
    }

    pub fn validate(&self, require_bounded: bool) -> ValidationReport {
        let n = self.len();
        let gens: Vec<Generator> = self.points.generators().collect();
        let mut violations = Vec::new();
        for &x in &gens {
            for &y in &gens {
                if is_negative(self.d(x, y)) {
                    violations.push(Violation::Negative { x, y });
                }
            }
        }
        for &x in &gens {
            if !self.d(x, x).is_zero() {
                violations.push(Violation::NonzeroDiagonal { x });
            }
        }
        for &x in &gens {
            for &y in &gens {
                for &z in &gens {
                    if *self.d(x, y) > self.d(x, z) + self.d(z, y) {
                        violations.push(Violation::Triangle { x, y, z });
                    }
                }
            }
        }
        if require_bounded {
            let one = Rational::one();
            for i in 0..n {
                for j in 0..n {
                    if self.dist[i][j] > one {
                        violations.push(Violation::AboveOne { x: Generator(i), y: Generator(j) });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Errors with the rendered report unless the space is a quasi-pseudometric bounded by 1.
    pub fn require_bounded(&self) -> Result<()> {
        let report = self.validate(true);
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidSpace(report.render(self)))
        }
    }

    pub fn cap_at_one(&self) -> QPSpace {
        let one = Rational::one();
        QPSpace {
            points: self.points.clone(),
            dist: self
                .dist
                .iter()
                .map(|row| row.iter().map(|v| v.clone().min(one.clone())).collect())
                .collect(),
        }
    }

    /// `d⁻¹(x, y) = d(y, x)`.
    pub fn conjugate(&self) -> QPSpace {
        let n = self.len();
        QPSpace {
            points: self.points.clone(),
            dist: (0..n).map(|i| (0..n).map(|j| self.dist[j][i].clone()).collect()).collect(),
        }
    }

    fn check_point(&self, p: Letter) -> Result<()> {
        match p.generator() {
            Some(g) if g.0 >= self.len() => Err(Error::Domain(format!(
                "generator index {} outside a space of {} points",
                g.0,
                self.len()
            ))),
            _ => Ok(()),
        }
    }

    /// `ρ_e` on `X ∪ {e}`: `0` on the diagonal, `ρ` on `X × X`, `1` otherwise.
    pub fn rho_e(&self, p: ExtendedPoint, q: ExtendedPoint) -> Result<Rational> {
        for r in [p, q] {
            self.check_point(r)?;
            if let Letter::Signed(_, Sign::Neg) = r {
                return Err(Error::Domain("ρ_e is defined on X ∪ {e} only".into()));
            }
        }
        Ok(self.rho_e_unchecked(p, q))
    }

    fn rho_e_unchecked(&self, p: Letter, q: Letter) -> Rational {
        match (p, q) {
            _ if p == q => Rational::zero(),
            (Letter::Signed(x, _), Letter::Signed(y, _)) => self.d(x, y).clone(),
            _ => Rational::one(),
        }
    }

    /// `ρ*` on `X̃`, cases tested in order: equal points, both in `X ∪ {e}`,
    /// both in `X⁻¹ ∪ {e}` (via `ρ_e(q⁻¹, p⁻¹)`), otherwise `2`.
    pub fn rho_star(&self, p: ExtendedPoint, q: ExtendedPoint) -> Result<Rational> {
        self.check_point(p)?;
        self.check_point(q)?;
        Ok(self.rho_star_unchecked(p, q))
    }

    pub(crate) fn rho_star_unchecked(&self, p: Letter, q: Letter) -> Rational {
        let positive = |l: Letter| !matches!(l, Letter::Signed(_, Sign::Neg));
        let negative = |l: Letter| !matches!(l, Letter::Signed(_, Sign::Pos));
        if p == q {
            Rational::zero()
        } else if positive(p) && positive(q) {
            self.rho_e_unchecked(p, q)
        } else if negative(p) && negative(q) {
            self.rho_e_unchecked(q.inverse(), p.inverse())
        } else {
            int(2)
        }
    }

    pub fn to_file(&self, bounded_by_one: Option<bool>) -> SpaceFile {
        SpaceFile {
            points: self.points.names().to_vec(),
            dist: self
                .dist
                .iter()
                .map(|row| row.iter().map(|v| RationalEntry::Text(format_rational(v))).collect())
                .collect(),
            bounded_by_one,
        }
    }

    pub fn to_json(&self, bounded_by_one: Option<bool>) -> String {
        serde_json::to_string_pretty(&self.to_file(bounded_by_one)).expect("space serializes")
    }

    /// Parses a space file; returns the space and its `bounded_by_one` flag (default `false`).
    pub fn from_json(text: &str) -> Result<(QPSpace, bool)> {
        let file: SpaceFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("space file: {e}")))?;
        let bounded = file.bounded_by_one.unwrap_or(false);
        Ok((file.into_space()?, bounded))
    }
}

impl fmt::Display for QPSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.dist.iter().enumerate() {
            write!(f, "{}:", self.points.names()[i])?;
            for v in row {
                write!(f, " {}", format_rational(v))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// On-disk form of a space: `points`, row-major `dist`, optional `bounded_by_one`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub points: Vec<String>,
    pub dist: Vec<Vec<RationalEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounded_by_one: Option<bool>,
}

/// A matrix entry: `"p/q"`, `"k"`, or a bare JSON integer.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalEntry {
    Integer(i64),
    Text(String),
}

impl RationalEntry {
    fn value(&self) -> Result<Rational> {
        match self {
            RationalEntry::Integer(k) => Ok(int(*k)),
            RationalEntry::Text(s) => parse_rational(s),
        }
    }
}

impl SpaceFile {
    pub fn into_space(self) -> Result<QPSpace> {
        let points = Alphabet::new(&self.points)?;
        let dist = self
            .dist
            .iter()
            .map(|row| row.iter().map(RationalEntry::value).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        QPSpace::new(points, dist)
    }
}
