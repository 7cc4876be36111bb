use std::fmt;

use smallvec::SmallVec;

pub type Exponent = u16;

/// A power product `x_0^{e_0} ... x_{n-1}^{e_{n-1}}` with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: SmallVec<[Exponent; 16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            deg: 0,
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn new(exps: impl IntoIterator<Item = Exponent>) -> Self {
        let exps: SmallVec<[Exponent; 16]> = exps.into_iter().collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Self { deg, exps }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> Exponent {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Dot product with a weight vector.
    pub fn weighted_degree(&self, w: &[u32]) -> u64 {
        self.exps
            .iter()
            .zip(w)
            .map(|(&e, &wi)| e as u64 * wi as u64)
            .sum()
    }

    /// Degree in the variables `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        Self {
            deg: self.deg + other.deg,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let mut exps = SmallVec::with_capacity(self.nvars());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(b)?);
        }
        Some(Self {
            deg: self.deg + other.deg,
            exps,
        })
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        Some(Self {
            deg: other.deg - self.deg,
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// Division with exponents floored at zero (monomial colon).
    pub fn saturating_div(&self, other: &Self) -> Self {
        Self::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b)),
        )
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self::new(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)))
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit `i` is set when variable `i mod 64` occurs.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    /// Insert `count` zero exponents at position `at`.
    pub fn insert_vars(&self, at: usize, count: usize) -> Self {
        let mut exps = SmallVec::with_capacity(self.nvars() + count);
        exps.extend_from_slice(&self.exps[..at]);
        exps.extend(std::iter::repeat_n(0, count));
        exps.extend_from_slice(&self.exps[at..]);
        Self { deg: self.deg, exps }
    }

    /// Reorder/select variables: result exponent `j` is `self[map[j]]`.
    pub fn select(&self, map: &[usize]) -> Self {
        Self::new(map.iter().map(|&i| self.exps[i]))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}
