//! Words in the free group `F_a(X)` and elements of the free abelian group `A_a(X)`.
//!
//! A [`Word`] is a finite sequence of [`Letter`]s over `X ∪ {e} ∪ X⁻¹`, where
//! generators are indices into an [`Alphabet`]. The empty word is the neutral
//! element in both groups.

mod parse;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Index of a generator in an [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A letter of the extended alphabet `X̃ = X ∪ {e} ∪ X⁻¹`.
///
/// The derived order puts `e` first, then generators by index with `x` before `x⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Neutral,
    Signed(Generator, Sign),
}

impl Letter {
    pub fn pos(g: usize) -> Letter {
        Letter::Signed(Generator(g), Sign::Pos)
    }

    pub fn neg(g: usize) -> Letter {
        Letter::Signed(Generator(g), Sign::Neg)
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Neutral => Letter::Neutral,
            Letter::Signed(g, s) => Letter::Signed(g, s.flip()),
        }
    }

    pub fn is_neutral(self) -> bool {
        self == Letter::Neutral
    }

    pub fn generator(self) -> Option<Generator> {
        match self {
            Letter::Neutral => None,
            Letter::Signed(g, _) => Some(g),
        }
    }

    /// Contribution to the abelianized exponent: `+1`, `-1`, or `0` for `e`.
    pub fn exponent(self) -> i64 {
        match self {
            Letter::Neutral => 0,
            Letter::Signed(_, Sign::Pos) => 1,
            Letter::Signed(_, Sign::Neg) => -1,
        }
    }

    pub fn display<'a>(&self, alphabet: &'a Alphabet) -> LetterDisplay<'a> {
        LetterDisplay { letter: *self, alphabet, additive: false }
    }

    /// Additive notation used for abelian pairings: `a`, `-a`, `e`.
    pub fn display_additive<'a>(&self, alphabet: &'a Alphabet) -> LetterDisplay<'a> {
        LetterDisplay { letter: *self, alphabet, additive: true }
    }
}

pub struct LetterDisplay<'a> {
    letter: Letter,
    alphabet: &'a Alphabet,
    additive: bool,
}

impl fmt::Display for LetterDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.letter {
            Letter::Neutral => f.write_str("e"),
            Letter::Signed(g, Sign::Pos) => f.write_str(self.alphabet.name(g)),
            Letter::Signed(g, Sign::Neg) if self.additive => write!(f, "-{}", self.alphabet.name(g)),
            Letter::Signed(g, Sign::Neg) => write!(f, "{}^-1", self.alphabet.name(g)),
        }
    }
}

/// Declared generator names. `e` is reserved for the neutral letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut out = Alphabet { names: Vec::new(), index: HashMap::new() };
        for name in names {
            let name = name.as_ref();
            if !parse::is_symbol(name) {
                return Err(Error::Parse(format!("`{name}` is not a valid generator symbol")));
            }
            if name == "e" {
                return Err(Error::Parse("`e` is reserved for the neutral element".into()));
            }
            if out.index.insert(name.to_string(), out.names.len()).is_some() {
                return Err(Error::Parse(format!("duplicate generator `{name}`")));
            }
            out.names.push(name.to_string());
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: Generator) -> &str {
        &self.names[g.0]
    }

    pub fn lookup(&self, name: &str) -> Result<Generator> {
        self.index
            .get(name)
            .map(|&i| Generator(i))
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> {
        (0..self.names.len()).map(Generator)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// Parses whitespace-separated tokens `x`, `x^k`, `e`.
    pub fn parse(s: &str, alphabet: &Alphabet) -> Result<Self> {
        parse::parse_word(s, alphabet)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of letters, `e` included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_neutral(&self) -> usize {
        self.0.iter().filter(|l| l.is_neutral()).count()
    }

    /// Deletes every `e` and cancels adjacent inverse pairs in one stack pass.
    pub fn reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if l.is_neutral() {
                continue;
            }
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
    }

    pub fn is_reduced(&self) -> bool {
        !self.0.iter().any(|l| l.is_neutral()) && self.is_almost_irreducible()
    }

    /// No two consecutive letters `u, u⁻¹` with `u ≠ e`; any number of `e` is allowed.
    pub fn is_almost_irreducible(&self) -> bool {
        self.0
            .windows(2)
            .all(|w| w[0].is_neutral() || w[1] != w[0].inverse())
    }

    pub fn normal_form(&self) -> NormalForm {
        let mut terms: Vec<(Generator, i64)> = Vec::new();
        for l in self.reduce().0 {
            let Letter::Signed(g, _) = l else { unreachable!() };
            match terms.last_mut() {
                Some((h, r)) if *h == g => *r += l.exponent(),
                _ => terms.push((g, l.exponent())),
            }
        }
        NormalForm { terms }
    }

    pub fn abelianize(&self) -> AbelianWord {
        let mut out = AbelianWord::identity();
        for &l in &self.0 {
            if let Some(g) = l.generator() {
                out.add_term(g, l.exponent());
            }
        }
        out
    }

    /// Concatenation `u·v`, not reduced.
    pub fn product(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Membership in `B_n(X)`: reduced length at most `n`.
    pub fn in_ball(&self, n: usize) -> bool {
        self.reduce().len() <= n
    }

    /// Max generator index + 1, or 0 for words without generators.
    pub fn generator_bound(&self) -> usize {
        self.0.iter().filter_map(|l| l.generator()).map(|g| g.0 + 1).max().unwrap_or(0)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay { word: self, alphabet }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

pub fn reduce(w: &Word) -> Word {
    w.reduce()
}

pub fn normal_form(w: &Word) -> NormalForm {
    w.normal_form()
}

pub fn abelianize(w: &Word) -> AbelianWord {
    w.abelianize()
}

pub fn word_product(u: &Word, v: &Word) -> Word {
    u.product(v)
}

pub fn word_inverse(u: &Word) -> Word {
    u.inverse()
}

pub fn bn_member(w: &Word, n: usize) -> bool {
    w.in_ball(n)
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.display(self.alphabet))?;
        }
        Ok(())
    }
}

/// Run-length encoding `x_1^{r_1} … x_n^{r_n}` of a reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalForm {
    terms: Vec<(Generator, i64)>,
}

impl NormalForm {
    pub fn terms(&self) -> &[(Generator, i64)] {
        &self.terms
    }

    pub fn is_identity(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_word(&self) -> Word {
        let mut letters = Vec::new();
        for &(g, r) in &self.terms {
            let sign = if r > 0 { Sign::Pos } else { Sign::Neg };
            letters.extend(std::iter::repeat(Letter::Signed(g, sign)).take(r.unsigned_abs() as usize));
        }
        Word(letters)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        NormalFormDisplay { nf: self, alphabet }
    }
}

struct NormalFormDisplay<'a> {
    nf: &'a NormalForm,
    alphabet: &'a Alphabet,
}

impl fmt::Display for NormalFormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nf.is_identity() {
            return f.write_str("e");
        }
        for (i, &(g, r)) in self.nf.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match r {
                1 => write!(f, "{}", self.alphabet.name(g))?,
                _ => write!(f, "{}^{}", self.alphabet.name(g), r)?,
            }
        }
        Ok(())
    }
}

/// Element `m_1 x_1 + ⋯ + m_n x_n` of the free abelian group; zero exponents are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianWord {
    exponents: BTreeMap<Generator, i64>,
}

impl AbelianWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Generator, i64)>) -> Self {
        let mut out = Self::identity();
        for (g, m) in terms {
            out.add_term(g, m);
        }
        out
    }

    /// `-u + v` for extended letters `u`, `v`.
    pub fn pair(u: Letter, v: Letter) -> Self {
        let mut out = Self::identity();
        if let Some(g) = u.generator() {
            out.add_term(g, -u.exponent());
        }
        if let Some(g) = v.generator() {
            out.add_term(g, v.exponent());
        }
        out
    }

    pub fn parse(s: &str, alphabet: &Alphabet) -> Result<Self> {
        parse::parse_abelian(s, alphabet)
    }

    pub fn add_term(&mut self, g: Generator, m: i64) {
        if m == 0 {
            return;
        }
        let entry = self.exponents.entry(g).or_insert(0);
        *entry += m;
        if *entry == 0 {
            self.exponents.remove(&g);
        }
    }

    pub fn exponent(&self, g: Generator) -> i64 {
        self.exponents.get(&g).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Generator, i64)> + '_ {
        self.exponents.iter().map(|(&g, &m)| (g, m))
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.is_empty()
    }

    /// `Σ|m_i|`.
    pub fn length(&self) -> usize {
        self.exponents.values().map(|m| m.unsigned_abs() as usize).sum()
    }

    /// `Σ m_i`.
    pub fn coefficient_sum(&self) -> i64 {
        self.exponents.values().sum()
    }

    pub fn add(&self, other: &AbelianWord) -> AbelianWord {
        let mut out = self.clone();
        for (g, m) in other.terms() {
            out.add_term(g, m);
        }
        out
    }

    pub fn neg(&self) -> AbelianWord {
        AbelianWord::from_terms(self.terms().map(|(g, m)| (g, -m)))
    }

    pub fn sub(&self, other: &AbelianWord) -> AbelianWord {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> AbelianWord {
        AbelianWord::from_terms(self.terms().map(|(g, m)| (g, m * k)))
    }

    /// The multiset of signed letters, generators ascending.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.length());
        for (g, m) in self.terms() {
            let sign = if m > 0 { Sign::Pos } else { Sign::Neg };
            out.extend(std::iter::repeat(Letter::Signed(g, sign)).take(m.unsigned_abs() as usize));
        }
        out
    }

    pub fn generator_bound(&self) -> usize {
        self.exponents.keys().next_back().map(|g| g.0 + 1).unwrap_or(0)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        AbelianDisplay { word: self, alphabet }
    }
}

struct AbelianDisplay<'a> {
    word: &'a AbelianWord,
    alphabet: &'a Alphabet,
}

impl fmt::Display for AbelianDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str("e");
        }
        for (i, (g, m)) in self.word.terms().enumerate() {
            let name = self.alphabet.name(g);
            let sign = match (i, m < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            match m.unsigned_abs() {
                1 => write!(f, "{sign}{name}")?,
                k => write!(f, "{sign}{k}{name}")?,
            }
        }
        Ok(())
    }
}
