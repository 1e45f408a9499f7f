//! Schemes: non-crossing perfect pairings of `{1, …, 2n}`, and the cost `Γ_ρ(𝒳, φ)`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qpspace::QPSpace;
use crate::rational::{int, Rational};
use crate::words::Word;

pub const DEFAULT_SCHEME_CAP: usize = 10;

/// A non-crossing perfect pairing of `{1, …, 2n}`; pairs are 1-based and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scheme {
    pairs: Vec<(usize, usize)>,
}

impl Scheme {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> =
            pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        if !is_scheme(&pairs) {
            return Err(Error::Domain(format!("{pairs:?} is not a scheme")));
        }
        Ok(Scheme { pairs })
    }

    /// The scheme on the empty set, used for witnesses of the neutral element.
    pub fn empty() -> Self {
        Scheme { pairs: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The involution `φ` as a 1-based table; index 0 is unused.
    pub fn involution(&self) -> Vec<usize> {
        let mut phi = vec![0; 2 * self.n() + 1];
        for &(a, b) in &self.pairs {
            phi[a] = b;
            phi[b] = a;
        }
        phi
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.pairs {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// Pairs partition `{1..2n}` (`n` = number of pairs) with no crossing `a_i < a_j < b_i < b_j`.
pub fn is_scheme(pairs: &[(usize, usize)]) -> bool {
    let size = 2 * pairs.len();
    let mut partner = vec![0usize; size + 1];
    for &(a, b) in pairs {
        let (a, b) = (a.min(b), a.max(b));
        if a == 0 || b > size || a == b || partner[a] != 0 || partner[b] != 0 {
            return false;
        }
        partner[a] = b;
        partner[b] = a;
    }
    // Non-crossing iff scanning left to right closes pairs in LIFO order.
    let mut stack = Vec::new();
    for i in 1..=size {
        if partner[i] > i {
            stack.push(i);
        } else if stack.pop() != Some(partner[i]) {
            return false;
        }
    }
    true
}

/// Every scheme on `{1..2n}` in lexicographic order of the sorted pair list.
pub fn enumerate_schemes(n: usize) -> Result<Vec<Scheme>> {
    enumerate_schemes_capped(n, DEFAULT_SCHEME_CAP)
}

pub fn enumerate_schemes_capped(n: usize, cap: usize) -> Result<Vec<Scheme>> {
    if n == 0 {
        return Err(Error::Precondition("schemes need n ≥ 1".into()));
    }
    if n > cap {
        return Err(Error::CapExceeded { what: "scheme size n", cap, actual: n });
    }
    Ok(segment(1, n).into_iter().map(|pairs| Scheme { pairs }).collect())
}

/// Schemes on `{start, …, start + 2n - 1}`: `start` pairs with `start + 2j - 1`,
/// the inside and the outside recurse. Inside pairs sort before outside pairs,
/// so iterating `j`, then inside, then outside yields lexicographic order.
fn segment(start: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for j in 1..=n {
        let close = start + 2 * j - 1;
        let inside = segment(start + 1, j - 1);
        let outside = segment(close + 1, n - j);
        for ins in &inside {
            for outs in &outside {
                let mut pairs = Vec::with_capacity(n);
                pairs.push((start, close));
                pairs.extend_from_slice(ins);
                pairs.extend_from_slice(outs);
                out.push(pairs);
            }
        }
    }
    out
}

/// `Γ_ρ(𝒳, φ) = ½ Σ_{i=1}^{2n} ρ*(x_i⁻¹, x_φ(i))`; each pair contributes both orientations.
pub fn gamma(space: &QPSpace, word: &Word, scheme: &Scheme) -> Result<Rational> {
    if word.len() != 2 * scheme.n() {
        return Err(Error::Dimension(format!(
            "word of length {} against a scheme on {} indices",
            word.len(),
            2 * scheme.n()
        )));
    }
    let letters = word.letters();
    let phi = scheme.involution();
    let mut sum = Rational::zero();
    for i in 1..=letters.len() {
        sum += space.rho_star(letters[i - 1].inverse(), letters[phi[i] - 1])?;
    }
    Ok(sum / int(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::words::Alphabet;

    fn two_point() -> QPSpace {
        let pts = Alphabet::new(["a", "b"]).unwrap();
        QPSpace::new(pts, vec![vec![int(0), ratio(1, 4)], vec![ratio(1, 2), int(0)]]).unwrap()
    }

    fn s(pairs: &[(usize, usize)]) -> Scheme {
        Scheme::new(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_schemes(1).unwrap(), vec![s(&[(1, 2)])]);
        assert_eq!(
            enumerate_schemes(2).unwrap(),
            vec![s(&[(1, 2), (3, 4)]), s(&[(1, 4), (2, 3)])]
        );
        assert_eq!(enumerate_schemes(3).unwrap().len(), 5);
        assert_eq!(enumerate_schemes(4).unwrap().len(), 14);
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        for n in 1..=6 {
            let all = enumerate_schemes(n).unwrap();
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert!(all.iter().all(|sc| is_scheme(sc.pairs())));
        }
    }

    #[test]
    fn caps() {
        assert!(matches!(enumerate_schemes(11), Err(Error::CapExceeded { .. })));
        assert!(enumerate_schemes(0).is_err());
    }

    #[test]
    fn is_scheme_examples() {
        assert!(!is_scheme(&[(1, 3), (2, 4)]));
        assert!(is_scheme(&[(1, 4), (2, 3)]));
        assert!(!is_scheme(&[(1, 2), (2, 3)]));
        assert!(is_scheme(&[(2, 1)]));
        assert!(!is_scheme(&[(1, 5), (2, 3)]));
        assert!(is_scheme(&[]));
    }

    #[test]
    fn gamma_examples() {
        let sp = two_point();
        let alpha = sp.points().clone();
        let w = |t: &str| Word::parse(t, &alpha).unwrap();
        assert_eq!(gamma(&sp, &w("a b^-1"), &s(&[(1, 2)])).unwrap(), ratio(1, 2));
        assert_eq!(gamma(&sp, &w("a a^-1"), &s(&[(1, 2)])).unwrap(), int(0));
        assert_eq!(gamma(&sp, &w("a e"), &s(&[(1, 2)])).unwrap(), int(1));
        assert!(matches!(gamma(&sp, &w("a"), &s(&[(1, 2)])), Err(Error::Dimension(_))));
    }

    #[test]
    fn display_and_involution() {
        let sc = s(&[(1, 4), (2, 3), (5, 6)]);
        assert_eq!(sc.to_string(), "(1,4)(2,3)(5,6)");
        assert_eq!(sc.involution(), vec![0, 4, 3, 2, 1, 6, 5]);
    }
}
