use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Basis in which a [`BivariatePolynomialFit`] stores its coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FitBasis {
    /// `C(r + p, p) C(s + q, q)`, as produced by the series numerator.
    Shifted,
    /// `C(r - o, p) C(s - o, q)`, Newton form on a grid starting at `o`.
    Newton { offset: i64 },
}

/// `h(r, s)` as an exact polynomial for large `r, s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivariatePolynomialFit {
    pub degree: usize,
    pub basis: FitBasis,
    pub coefficients: BTreeMap<(u32, u32), i128>,
}

/// `C(m, p)` as a polynomial in `m`, valid for negative `m` too.
pub fn binomial_poly(m: i64, p: u32) -> i128 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..p as i64 {
        num *= (m - i) as i128;
        den *= (i + 1) as i128;
    }
    num / den
}

impl BivariatePolynomialFit {
    pub fn new(basis: FitBasis, mut coefficients: BTreeMap<(u32, u32), i128>) -> Self {
        coefficients.retain(|_, c| *c != 0);
        let degree = coefficients
            .keys()
            .map(|&(p, q)| (p + q) as usize)
            .max()
            .unwrap_or(0);
        Self {
            degree,
            basis,
            coefficients,
        }
    }

    /// Newton interpolation from `grid[a][b] = h(o + a, o + b)` for
    /// `a, b <= d`, keeping total degree at most `d`.
    pub fn from_grid(grid: &[Vec<i128>], offset: i64, d: usize) -> Self {
        let mut table: Vec<Vec<i128>> = grid.iter().map(|row| row[..=d].to_vec()).collect();
        table.truncate(d + 1);
        // forward differences in r, then in s
        for p in 1..=d {
            for a in (p..=d).rev() {
                for b in 0..=d {
                    table[a][b] -= table[a - 1][b];
                }
            }
        }
        for q in 1..=d {
            for row in table.iter_mut() {
                for b in (q..=d).rev() {
                    row[b] -= row[b - 1];
                }
            }
        }
        let mut coefficients = BTreeMap::new();
        for (p, row) in table.iter().enumerate() {
            for (q, &c) in row.iter().enumerate() {
                coefficients.insert((p as u32, q as u32), c);
            }
        }
        Self::new(FitBasis::Newton { offset }, coefficients)
    }

    pub fn evaluate(&self, r: i64, s: i64) -> i128 {
        self.coefficients
            .iter()
            .map(|(&(p, q), &c)| match self.basis {
                FitBasis::Shifted => c * binomial_poly(r + p as i64, p) * binomial_poly(s + q as i64, q),
                FitBasis::Newton { offset } => c * binomial_poly(r - offset, p) * binomial_poly(s - offset, q),
            })
            .sum()
    }

    /// Normalized top-degree coefficients `c_i`, `i = 0..=d`, read at
    /// `r^{d-i} s^i`.
    pub fn leading(&self, d: usize) -> Vec<i128> {
        (0..=d)
            .map(|i| {
                self.coefficients
                    .get(&((d - i) as u32, i as u32))
                    .copied()
                    .unwrap_or(0)
            })
            .collect()
    }

    /// Whether the fit matches `grid[a][b] = h(o + a, o + b)` everywhere.
    pub fn reproduces(&self, grid: &[Vec<i128>], offset: i64) -> bool {
        grid.iter().enumerate().all(|(a, row)| {
            row.iter()
                .enumerate()
                .all(|(b, &h)| self.evaluate(offset + a as i64, offset + b as i64) == h)
        })
    }
}

/// Leading coefficient `Δ^d f(o)` of a univariate polynomial fit, with the
/// value at `o + d + 1` used as a check.
pub fn univariate_top_difference(values: &[i128], d: usize) -> Option<i128> {
    if values.len() < d + 2 {
        return None;
    }
    let diff = |vals: &[i128]| -> Vec<i128> {
        let mut v = vals.to_vec();
        for k in 1..=d {
            for i in (k..v.len()).rev() {
                v[i] -= v[i - 1];
            }
        }
        v
    };
    let v = diff(&values[..d + 2]);
    // the degree-d polynomial has constant d-th difference
    if v[d + 1] != v[d] {
        return None;
    }
    Some(v[d])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_fit_recovers_polynomial() {
        let h = |r: i64, s: i64| (r * (r - 1) + 3 * r * s + s) as i128;
        let grid: Vec<Vec<i128>> = (0..4).map(|a| (0..4).map(|b| h(2 + a, 2 + b)).collect()).collect();
        let fit = BivariatePolynomialFit::from_grid(&grid, 2, 2);
        assert_eq!(fit.degree, 2);
        assert!(fit.reproduces(&grid, 2));
        assert_eq!(fit.evaluate(10, 7), h(10, 7));
        // r^2 = 2 C(r, 2) + r, rs = C(r, 1) C(s, 1)
        assert_eq!(fit.leading(2), vec![2, 3, 0]);
    }

    #[test]
    fn shifted_basis_evaluation() {
        let mut c = BTreeMap::new();
        c.insert((1, 0), 1);
        let fit = BivariatePolynomialFit::new(FitBasis::Shifted, c);
        assert_eq!(fit.evaluate(4, 9), 5);
        assert_eq!(binomial_poly(-1, 2), 1);
    }

    #[test]
    fn top_difference() {
        let vals: Vec<i128> = (3..8).map(|n: i128| 3 * n * n + n).collect();
        assert_eq!(univariate_top_difference(&vals, 2), Some(6));
        let bad = vec![0, 1, 8, 27, 65];
        assert_eq!(univariate_top_difference(&bad, 2), None);
    }
}
