use std::collections::BTreeSet;

use super::Entourage;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Generator};

/// A topology on at most 64 points, open sets stored as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    points: Alphabet,
    opens: BTreeSet<u64>,
}

impl FiniteSpace {
    /// `∅` and the whole set are added; the family must then be closed under
    /// pairwise union and intersection.
    pub fn new(points: Alphabet, open_sets: Vec<Vec<usize>>) -> Result<Self> {
        let n = points.len();
        if n > 64 {
            return Err(Error::CapExceeded { what: "topology size", cap: 64, actual: n });
        }
        let whole = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut opens = BTreeSet::from([0, whole]);
        for set in open_sets {
            let mut mask = 0u64;
            for i in set {
                if i >= n {
                    return Err(Error::InvalidTopology(format!("point index {i} out of range")));
                }
                mask |= 1 << i;
            }
            opens.insert(mask);
        }
        for &a in &opens {
            for &b in &opens {
                if !opens.contains(&(a | b)) || !opens.contains(&(a & b)) {
                    let show = |m: u64| {
                        let names: Vec<&str> =
                            (0..n).filter(|i| m >> i & 1 == 1).map(|i| points.names()[i].as_str()).collect();
                        format!("{{{}}}", names.join(","))
                    };
                    return Err(Error::InvalidTopology(format!(
                        "not closed under union and intersection: {} and {}",
                        show(a),
                        show(b)
                    )));
                }
            }
        }
        Ok(FiniteSpace { points, opens })
    }

    pub fn points(&self) -> &Alphabet {
        &self.points
    }

    pub fn open_sets(&self) -> Vec<u64> {
        self.opens.iter().copied().collect()
    }

    /// Intersection of all open sets containing `x`.
    pub fn minimal_open(&self, x: Generator) -> u64 {
        self.opens.iter().filter(|&&o| o >> x.0 & 1 == 1).fold(u64::MAX, |acc, &o| acc & o)
    }

    pub fn is_t0(&self) -> bool {
        let mins: BTreeSet<u64> = self.points.generators().map(|x| self.minimal_open(x)).collect();
        mins.len() == self.points.len()
    }
}

/// `R = {(x, y) : y ∈ U_x}` with `U_x` the minimal open set of `x`.
///
/// `R` is a preorder with `R∘R = R`; on a finite space every compatible
/// quasi-uniformity is the filter of supersets of `R`.
pub fn universal_base(space: &FiniteSpace) -> Result<Entourage> {
    if !space.is_t0() {
        return Err(Error::InvalidTopology("space is not T0".into()));
    }
    Ok(Entourage::from_fn(space.points.clone(), |x, y| space.minimal_open(x) >> y.0 & 1 == 1))
}
