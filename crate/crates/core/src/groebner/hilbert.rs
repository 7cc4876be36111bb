//! Hilbert series of monomial quotients, univariate and bigraded.
//!
//! Numerators are computed by pivot splitting:
//! `N(M) = N(M + (p)) + t^deg(p) N(M : p)` for a pure power pivot `p`, with
//! the coprime case `N = prod (1 - t^deg(m))` as the base.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::buchberger::minimal_monomials;
use crate::kernel::Monomial;

pub type BiPoly = BTreeMap<(u32, u32), i128>;

fn add_shifted(acc: &mut BiPoly, p: &BiPoly, shift: (u32, u32)) {
    for (&(a, b), &c) in p {
        let e = acc.entry((a + shift.0, b + shift.1)).or_insert(0);
        *e += c;
        if *e == 0 {
            acc.remove(&(a + shift.0, b + shift.1));
        }
    }
}

fn bidegree(m: &Monomial, bideg: &[(u32, u32)]) -> (u32, u32) {
    m.exponents()
        .iter()
        .zip(bideg)
        .fold((0, 0), |(a, b), (&e, &(da, db))| {
            (a + e as u32 * da, b + e as u32 * db)
        })
}

fn mul_one_minus(p: &BiPoly, shift: (u32, u32)) -> BiPoly {
    let mut out = p.clone();
    let neg: BiPoly = p.iter().map(|(&k, &c)| (k, -c)).collect();
    add_shifted(&mut out, &neg, shift);
    out
}

/// Numerator of the multigraded Hilbert series of `k[x]/(gens)` where
/// variable `i` has bidegree `bideg[i]`.
pub fn numerator(gens: &[Monomial], bideg: &[(u32, u32)]) -> BiPoly {
    let gens = minimal_monomials(gens.to_vec());
    numerator_rec(gens, bideg)
}

fn numerator_rec(gens: Vec<Monomial>, bideg: &[(u32, u32)]) -> BiPoly {
    let mut one = BiPoly::new();
    one.insert((0, 0), 1);
    if gens.iter().any(|g| g.is_one()) {
        return BiPoly::new();
    }
    if gens.is_empty() {
        return one;
    }
    let n = gens[0].nvars();
    let mut counts = vec![0usize; n];
    for g in &gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let (var, &cnt) = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .unwrap();
    if cnt <= 1 {
        // pairwise coprime
        return gens
            .iter()
            .fold(one, |acc, g| mul_one_minus(&acc, bidegree(g, bideg)));
    }
    let mut exps: Vec<u16> = gens
        .iter()
        .map(|g| g.exponent(var))
        .filter(|&e| e > 0)
        .collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pe = vec![0u16; n];
    pe[var] = e;
    let pivot = Monomial::new(pe);

    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).cloned().collect();
    plus.push(pivot.clone());
    let colon = minimal_monomials(gens.iter().map(|g| g.saturating_div(&pivot)).collect());

    let mut out = numerator_rec(plus, bideg);
    let second = numerator_rec(colon, bideg);
    add_shifted(&mut out, &second, bidegree(&pivot, bideg));
    out
}

/// `C(n, k)` for `n >= 0`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

/// Coefficient of `t^e` in `(1 - t)^{-p}`.
fn inverse_power_coeff(p: u32, e: i64) -> i128 {
    if e < 0 {
        return 0;
    }
    if p == 0 {
        return if e == 0 { 1 } else { 0 };
    }
    binomial(e + p as i64 - 1, p as i64 - 1)
}

/// Rational generating function `N(t1, t2) / ((1 - t1)^p (1 - t2)^q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivariateSeries {
    pub numerator: BiPoly,
    pub denominator_exponents: (u32, u32),
}

impl BivariateSeries {
    /// Series of `k[x]/(gens)` for variables of bidegree `(1,0)` or `(0,1)`.
    pub fn of_monomials(gens: &[Monomial], bideg: &[(u32, u32)]) -> Self {
        assert!(
            bideg.iter().all(|&d| d == (1, 0) || d == (0, 1)),
            "standard bigrading required"
        );
        let p = bideg.iter().filter(|&&d| d == (1, 0)).count() as u32;
        let q = bideg.len() as u32 - p;
        Self {
            numerator: numerator(gens, bideg),
            denominator_exponents: (p, q),
        }
    }

    /// Coefficient of `t1^u t2^v` in the expansion.
    pub fn coefficient(&self, u: u32, v: u32) -> i128 {
        let (p, q) = self.denominator_exponents;
        self.numerator
            .iter()
            .map(|(&(a, b), &c)| {
                c * inverse_power_coeff(p, u as i64 - a as i64) * inverse_power_coeff(q, v as i64 - b as i64)
            })
            .sum()
    }

    /// Rewrites the numerator as `sum a_{jk} (1 - t1)^j (1 - t2)^k`.
    pub fn numerator_in_shifted_basis(&self) -> BiPoly {
        let mut out = BiPoly::new();
        for (&(a, b), &c) in &self.numerator {
            // t^a = (1 - (1 - t))^a = sum_j C(a, j) (-1)^j (1 - t)^j
            for j in 0..=a {
                let sj = if j % 2 == 0 { 1 } else { -1 };
                let cj = binomial(a as i64, j as i64) * sj;
                for k in 0..=b {
                    let sk = if k % 2 == 0 { 1 } else { -1 };
                    let ck = binomial(b as i64, k as i64) * sk;
                    *out.entry((j, k)).or_insert(0) += c * cj * ck;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

/// Univariate Hilbert series `N(t) / (1 - t)^n` of a standard graded quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: Vec<i128>,
    pub nvars: usize,
}

impl HilbertSeries {
    pub fn of_monomials(gens: &[Monomial], nvars: usize) -> Self {
        let bideg = vec![(1, 0); nvars];
        let num = numerator(gens, &bideg);
        let len = num.keys().map(|&(a, _)| a as usize + 1).max().unwrap_or(0);
        let mut numerator = vec![0i128; len];
        for (&(a, _), &c) in &num {
            numerator[a as usize] += c;
        }
        while numerator.last() == Some(&0) {
            numerator.pop();
        }
        Self { numerator, nvars }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.iter().all(|&c| c == 0)
    }

    /// Value of the Hilbert function at degree `e`.
    pub fn hilbert_function(&self, e: i64) -> i128 {
        self.numerator
            .iter()
            .enumerate()
            .map(|(i, &c)| c * inverse_power_coeff(self.nvars as u32, e - i as i64))
            .sum()
    }

    /// Krull dimension (order of the pole at `t = 1`), `-1` for the zero module.
    pub fn dimension(&self) -> i64 {
        if self.is_zero() {
            return -1;
        }
        let (k, _) = self.reduced();
        self.nvars as i64 - k as i64
    }

    /// Splits `N(t) = (1 - t)^k M(t)` with `M(1) != 0`.
    fn reduced(&self) -> (usize, Vec<i128>) {
        let mut num = self.numerator.clone();
        let mut k = 0;
        while !num.is_empty() && num.iter().sum::<i128>() == 0 {
            num = divide_one_minus_t(&num);
            k += 1;
        }
        (k, num)
    }

    /// Multiplicity (normalized leading Hilbert coefficient); 0 for the zero module.
    pub fn degree(&self) -> i128 {
        if self.is_zero() {
            return 0;
        }
        self.reduced().1.iter().sum()
    }

    /// Total dimension of a finite-length quotient.
    pub fn total_length(&self) -> Option<i128> {
        if self.is_zero() {
            return Some(0);
        }
        let (k, m) = self.reduced();
        if k < self.nvars {
            return None;
        }
        // the series is a polynomial; its value at 1 is the length
        let mut num = m;
        for _ in self.nvars..k {
            num = mul_one_minus_t(&num);
        }
        Some(num.iter().sum())
    }
}

fn divide_one_minus_t(num: &[i128]) -> Vec<i128> {
    // N(t) = (1 - t) Q(t): q_0 = n_0, q_i = n_i + q_{i-1}
    let mut q = Vec::with_capacity(num.len().saturating_sub(1));
    let mut acc = 0;
    for &c in &num[..num.len() - 1] {
        acc += c;
        q.push(acc);
    }
    while q.last() == Some(&0) {
        q.pop();
    }
    q
}

fn mul_one_minus_t(num: &[i128]) -> Vec<i128> {
    let mut out = vec![0; num.len() + 1];
    for (i, &c) in num.iter().enumerate() {
        out[i] += c;
        out[i + 1] -= c;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}
