//! Exact minimum-cost assignment (Hungarian method with potentials) over rationals.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Minimum-cost perfect matching of rows to columns of a square matrix.
///
/// Returns the optimal cost and `assign[row] = column`. Runs in `O(n³)`.
pub fn min_cost_assignment(cost: &[Vec<Rational>]) -> Result<(Rational, Vec<usize>)> {
    let n = cost.len();
    if let Some(row) = cost.iter().find(|r| r.len() != n) {
        return Err(Error::Dimension(format!("{n} rows but a row of length {}", row.len())));
    }
    if n == 0 {
        return Ok((Rational::zero(), Vec::new()));
    }
    // Larger than any finite reduced-cost difference.
    let inf = cost.iter().flatten().fold(int(1), |acc, c| acc + c.abs()) * int(2);

    // 1-based arrays; column 0 is the virtual start column.
    let mut u = vec![Rational::zero(); n + 1];
    let mut v = vec![Rational::zero(); n + 1];
    let mut row_of = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf.clone(); n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = inf.clone();
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = &cost[i0 - 1][j - 1] - &u[i0] - &v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j].clone();
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of[j]] += &delta;
                    v[j] -= &delta;
                } else {
                    minv[j] -= &delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0usize; n];
    for j in 1..=n {
        assign[row_of[j] - 1] = j - 1;
    }
    let total = assign
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (i, &j)| acc + &cost[i][j]);
    Ok((total, assign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn brute(cost: &[Vec<Rational>]) -> Rational {
        fn go(cost: &[Vec<Rational>], row: usize, used: &mut Vec<bool>) -> Rational {
            if row == cost.len() {
                return Rational::zero();
            }
            let mut best: Option<Rational> = None;
            for j in 0..cost.len() {
                if !used[j] {
                    used[j] = true;
                    let c = &cost[row][j] + go(cost, row + 1, used);
                    used[j] = false;
                    if best.as_ref().map_or(true, |b| c < *b) {
                        best = Some(c);
                    }
                }
            }
            best.unwrap()
        }
        go(cost, 0, &mut vec![false; cost.len()])
    }

    #[test]
    fn small_known_case() {
        let m: Vec<Vec<Rational>> = [[4, 1, 3], [2, 0, 5], [3, 2, 2]]
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        let (c, a) = min_cost_assignment(&m).unwrap();
        assert_eq!(c, int(5));
        assert_eq!(a, vec![1, 0, 2]);
    }

    #[test]
    fn matches_permutation_brute_force() {
        let mut seed = 17u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) % 17
        };
        for n in 1..=6 {
            for _ in 0..20 {
                let m: Vec<Vec<Rational>> = (0..n)
                    .map(|_| (0..n).map(|_| ratio(next() as i64, 1 + (next() % 8) as i64)).collect())
                    .collect();
                let (c, a) = min_cost_assignment(&m).unwrap();
                assert_eq!(c, brute(&m));
                let mut cols = a.clone();
                cols.sort();
                assert_eq!(cols, (0..n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn empty_and_ragged() {
        assert_eq!(min_cost_assignment(&[]).unwrap().0, int(0));
        assert!(min_cost_assignment(&[vec![int(1), int(2)]]).is_err());
    }
}
