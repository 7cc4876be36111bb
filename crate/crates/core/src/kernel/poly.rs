use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use super::field::Field;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::groebner::cache::GbCache;

/// A multivariate polynomial in normal form: terms sorted in decreasing
/// grevlex order, no zero coefficients, no repeated monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<E> {
    nvars: usize,
    terms: Vec<(Monomial, E)>,
}

impl<E> Polynomial<E> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, E)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        // grevlex is degree compatible, so the first term has maximal degree
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn is_weighted_homogeneous(&self, w: &[u32]) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.weighted_degree(w);
                self.terms.iter().all(|(t, _)| t.weighted_degree(w) == d)
            }
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Variables occurring in some term.
    pub fn support(&self) -> Vec<bool> {
        let mut s = vec![false; self.nvars];
        for (m, _) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    s[i] = true;
                }
            }
        }
        s
    }
}

impl<E: Clone> Polynomial<E> {
    /// Terms sorted decreasingly for `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, E)> {
        let mut t = self.terms.clone();
        if *order != MonomialOrder::GrevLex {
            t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        t
    }
}

/// The arithmetic operations exposed by [`PolyRing::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A polynomial ring `k[x_0, ..., x_{n-1}]` with named variables. Holds a
/// Gröbner basis cache that is shared by every ideal of the ring.
#[derive(Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    names: Vec<String>,
    pub(crate) cache: GbCache<F::Elem>,
}

impl<F: Field> PartialEq for PolyRing<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.names == other.names
    }
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>) -> Arc<Self> {
        Arc::new(Self {
            field,
            names,
            cache: GbCache::default(),
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn check(&self, f: &Polynomial<F::Elem>) -> Result<()> {
        if f.nvars != self.nvars() {
            return Err(Error::RingMismatch {
                expected: self.nvars(),
                found: f.nvars,
            });
        }
        Ok(())
    }

    pub fn zero(&self) -> Polynomial<F::Elem> {
        Polynomial {
            nvars: self.nvars(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F::Elem> {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn int(&self, n: i64) -> Polynomial<F::Elem> {
        self.constant(self.field.from_i64(n))
    }

    pub fn var(&self, i: usize) -> Polynomial<F::Elem> {
        self.term(Monomial::variable(self.nvars(), i), self.field.one())
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Polynomial<F::Elem> {
        debug_assert_eq!(m.nvars(), self.nvars());
        let terms = if self.field.is_zero(&c) {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            nvars: self.nvars(),
            terms,
        }
    }

    /// Normalizes an arbitrary term list: sorts, merges duplicates, drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F::Elem> {
        terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if self.field.is_zero(lc) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if self.field.is_zero(lc) {
                out.pop();
            }
        }
        Polynomial {
            nvars: self.nvars(),
            terms: out,
        }
    }

    pub fn arith(
        &self,
        f: &Polynomial<F::Elem>,
        g: &Polynomial<F::Elem>,
        op: ArithOp,
    ) -> Result<Polynomial<F::Elem>> {
        self.check(f)?;
        self.check(g)?;
        Ok(match op {
            ArithOp::Add => self.add(f, g),
            ArithOp::Sub => self.sub(f, g),
            ArithOp::Mul => self.mul(f, g),
        })
    }

    fn merge(
        &self,
        f: &Polynomial<F::Elem>,
        g: &Polynomial<F::Elem>,
        negate_g: bool,
    ) -> Polynomial<F::Elem> {
        let fl = &self.field;
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            let (fm, fc) = &f.terms[i];
            let (gm, gc) = &g.terms[j];
            match MonomialOrder::GrevLex.cmp(fm, gm) {
                Ordering::Greater => {
                    out.push((fm.clone(), fc.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_g { fl.neg(gc) } else { gc.clone() };
                    out.push((gm.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_g { fl.sub(fc, gc) } else { fl.add(fc, gc) };
                    if !fl.is_zero(&c) {
                        out.push((fm.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(f.terms[i..].iter().cloned());
        for (m, c) in &g.terms[j..] {
            let c = if negate_g { fl.neg(c) } else { c.clone() };
            out.push((m.clone(), c));
        }
        Polynomial {
            nvars: self.nvars(),
            terms: out,
        }
    }

    pub fn add(&self, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.merge(f, g, false)
    }

    pub fn sub(&self, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.merge(f, g, true)
    }

    pub fn neg(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial {
            nvars: f.nvars,
            terms: f
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, f: &Polynomial<F::Elem>, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Polynomial {
            nvars: f.nvars,
            terms: f
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
                .collect(),
        }
    }

    /// `c * m * f`; multiplication by a monomial preserves every global order.
    pub fn mul_term(
        &self,
        f: &Polynomial<F::Elem>,
        m: &Monomial,
        c: &F::Elem,
    ) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Polynomial {
            nvars: f.nvars,
            terms: f
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), self.field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        if f.is_zero() || g.is_zero() {
            return self.zero();
        }
        if f.terms.len() == 1 {
            let (m, c) = &f.terms[0];
            return self.mul_term(g, m, c);
        }
        if g.terms.len() == 1 {
            let (m, c) = &g.terms[0];
            return self.mul_term(f, m, c);
        }
        let mut acc: HashMap<Monomial, F::Elem> =
            HashMap::with_capacity(f.terms.len() * g.terms.len());
        for (fm, fc) in &f.terms {
            for (gm, gc) in &g.terms {
                let p = self.field.mul(fc, gc);
                acc.entry(fm.mul(gm))
                    .and_modify(|c| *c = self.field.add(c, &p))
                    .or_insert(p);
            }
        }
        let mut terms: Vec<_> = acc
            .into_iter()
            .filter(|(_, c)| !self.field.is_zero(c))
            .collect();
        terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp(&b.0, &a.0));
        Polynomial {
            nvars: f.nvars,
            terms,
        }
    }

    pub fn pow(&self, f: &Polynomial<F::Elem>, mut e: u32) -> Polynomial<F::Elem> {
        let mut base = f.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn product<'a>(
        &self,
        fs: impl IntoIterator<Item = &'a Polynomial<F::Elem>>,
    ) -> Polynomial<F::Elem>
    where
        F::Elem: 'a,
    {
        fs.into_iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn leading_term(
        &self,
        f: &Polynomial<F::Elem>,
        order: &MonomialOrder,
    ) -> Result<(Monomial, F::Elem)> {
        let best = f
            .terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .ok_or(Error::ZeroPolynomial)?;
        Ok(best.clone())
    }

    /// Sum of the terms of maximal `w`-weight.
    pub fn weighted_initial_form(
        &self,
        f: &Polynomial<F::Elem>,
        w: &[u32],
    ) -> Result<Polynomial<F::Elem>> {
        let top = f
            .terms
            .iter()
            .map(|(m, _)| m.weighted_degree(w))
            .max()
            .ok_or(Error::ZeroPolynomial)?;
        Ok(Polynomial {
            nvars: f.nvars,
            terms: f
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree(w) == top)
                .cloned()
                .collect(),
        })
    }

    /// Scales so that the grevlex-leading coefficient is one.
    pub fn monic(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        match f.terms.first() {
            None => f.clone(),
            Some((_, c)) if self.field.is_one(c) => f.clone(),
            Some((_, c)) => self.scale(f, &self.field.inv(c).expect("nonzero")),
        }
    }

    pub fn evaluate(&self, f: &Polynomial<F::Elem>, point: &[F::Elem]) -> F::Elem {
        let fl = &self.field;
        let mut acc = fl.zero();
        for (m, c) in &f.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = fl.mul(&t, &point[i]);
                }
            }
            acc = fl.add(&acc, &t);
        }
        acc
    }

    /// Ring map defined by `images[i]` for variable `i`; images live in
    /// `target`.
    pub fn substitute(
        &self,
        f: &Polynomial<F::Elem>,
        target: &PolyRing<F>,
        images: &[Polynomial<F::Elem>],
    ) -> Polynomial<F::Elem> {
        let mut acc = target.zero();
        for (m, c) in &f.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = target.mul(&t, &target.pow(&images[i], e as u32));
                }
            }
            acc = target.add(&acc, &t);
        }
        acc
    }

    /// Re-embeds `f` (from a ring with `f.nvars()` variables) by inserting
    /// `count` fresh variables at position `at`.
    pub fn insert_vars(&self, f: &Polynomial<F::Elem>, at: usize, count: usize) -> Polynomial<F::Elem> {
        debug_assert_eq!(f.nvars + count, self.nvars());
        self.from_terms(
            f.terms
                .iter()
                .map(|(m, c)| (m.insert_vars(at, count), c.clone()))
                .collect(),
        )
    }

    /// Maps `f` into this ring; variable `i` of `f` becomes variable `map[i]`.
    pub fn rename_into(&self, f: &Polynomial<F::Elem>, map: &[usize]) -> Polynomial<F::Elem> {
        let n = self.nvars();
        self.from_terms(
            f.terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0u16; n];
                    for (i, &x) in m.exponents().iter().enumerate() {
                        e[map[i]] += x;
                    }
                    (Monomial::new(e), c.clone())
                })
                .collect(),
        )
    }

    pub fn format(&self, f: &Polynomial<F::Elem>) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in f.terms.iter().enumerate() {
            let neg = self.field.is_negative(c);
            let abs = if neg { self.field.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.format_monomial(m);
            if mono.is_empty() {
                s.push_str(&self.field.format(&abs));
            } else if self.field.is_one(&abs) {
                s.push_str(&mono);
            } else {
                s.push_str(&self.field.format(&abs));
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        parts.join("*")
    }
}
