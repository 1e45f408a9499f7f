//! Text syntax for words.
//!
//! Free words: whitespace-separated tokens `x`, `x^k` (k may be negative) or `e`.
//! Abelian words additionally accept signed, integer-scaled terms: `-2a + 3b`.

use super::{AbelianWord, Alphabet, Letter, Sign, Word};
use crate::error::{Error, Result};

pub(super) fn is_symbol(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => chars.all(|c| c.is_alphanumeric() || c == '_'),
        _ => false,
    }
}

fn parse_power(token: &str) -> Result<(&str, i64)> {
    match token.split_once('^') {
        Some((sym, exp)) => {
            let k = exp
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad exponent in `{token}`")))?;
            Ok((sym, k))
        }
        None => Ok((token, 1)),
    }
}

pub(super) fn parse_word(s: &str, alphabet: &Alphabet) -> Result<Word> {
    let mut letters = Vec::new();
    for token in s.split_whitespace() {
        let (sym, k) = parse_power(token)?;
        if sym == "e" {
            letters.push(Letter::Neutral);
            continue;
        }
        if !is_symbol(sym) {
            return Err(Error::Parse(format!("bad token `{token}`")));
        }
        let g = alphabet.lookup(sym)?;
        let sign = if k < 0 { Sign::Neg } else { Sign::Pos };
        letters.extend(std::iter::repeat(Letter::Signed(g, sign)).take(k.unsigned_abs() as usize));
    }
    Ok(Word::new(letters))
}

pub(super) fn parse_abelian(s: &str, alphabet: &Alphabet) -> Result<AbelianWord> {
    let mut out = AbelianWord::identity();
    let mut rest = s.trim_start();
    let bad = |msg: &str| Error::Parse(format!("{msg} in abelian word `{s}`"));
    while !rest.is_empty() {
        let mut coeff: i64 = 1;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('-') {
            coeff = -1;
            rest = r.trim_start();
        }
        let digits = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if digits > 0 {
            let k: i64 = rest[..digits].parse().map_err(|_| bad("bad coefficient"))?;
            coeff *= k;
            rest = rest[digits..].trim_start();
            if let Some(r) = rest.strip_prefix('*') {
                rest = r.trim_start();
            }
        }
        let sym_len = rest
            .char_indices()
            .find(|&(_, c)| !(c.is_alphanumeric() || c == '_'))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let mut end = sym_len;
        if rest[end..].starts_with('^') {
            end += 1;
            if rest[end..].starts_with('-') {
                end += 1;
            }
            end += rest[end..].find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len() - end);
        }
        let token = &rest[..end];
        if token.is_empty() {
            return Err(bad("missing generator"));
        }
        let (sym, k) = parse_power(token)?;
        if sym != "e" {
            if !is_symbol(sym) {
                return Err(bad(&format!("bad token `{token}`")));
            }
            out.add_term(alphabet.lookup(sym)?, coeff * k);
        }
        rest = rest[end..].trim_start();
    }
    Ok(out)
}
