use std::sync::Arc;

use super::buchberger::{normal_form, reduced_basis};
use super::hilbert::{BivariateSeries, HilbertSeries};
use crate::error::{Error, Result};
use crate::kernel::{Field, Monomial, MonomialOrder, PolyRing, Polynomial};

/// Colon steps allowed before a saturation is declared non-stabilizing.
pub const SATURATION_CAP: usize = 64;

/// An ideal of a polynomial ring given by generators.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing<F>>,
    gens: Vec<Polynomial<F::Elem>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: Arc<PolyRing<F>>, gens: Vec<Polynomial<F::Elem>>) -> Result<Self> {
        for g in &gens {
            ring.check(g)?;
        }
        Ok(Self::from_parts(ring, gens))
    }

    pub(crate) fn from_parts(ring: Arc<PolyRing<F>>, gens: Vec<Polynomial<F::Elem>>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Self { ring, gens }
    }

    pub fn zero(ring: Arc<PolyRing<F>>) -> Self {
        Self { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Arc<PolyRing<F>>) -> Self {
        let one = ring.one();
        Self { ring, gens: vec![one] }
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: Arc<PolyRing<F>>) -> Self {
        let gens = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        Self { ring, gens }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F::Elem>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Reduced Gröbner basis for `order`, cached per ring.
    pub fn groebner(&self, order: &MonomialOrder) -> Arc<Vec<Polynomial<F::Elem>>> {
        let w = vec![1; self.ring.nvars()];
        self.groebner_with_sugar(order, &w)
    }

    /// Like [`Ideal::groebner`], with `weights` defining the sugar degree used
    /// for pair selection. The result does not depend on `weights`.
    pub fn groebner_with_sugar(&self, order: &MonomialOrder, weights: &[u32]) -> Arc<Vec<Polynomial<F::Elem>>> {
        if let Some(b) = self.ring.cache.get(order, &self.gens) {
            return b;
        }
        let b = Arc::new(reduced_basis(&self.ring, &self.gens, order, weights));
        self.ring.cache.insert(order, &self.gens, b.clone());
        b
    }

    pub fn gb(&self) -> Arc<Vec<Polynomial<F::Elem>>> {
        self.groebner(&MonomialOrder::GrevLex)
    }

    /// The ideal generated by its reduced grevlex basis.
    pub fn standardized(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            gens: self.gb().to_vec(),
        }
    }

    pub fn normal_form(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        normal_form(&self.ring, f, &self.gb(), &MonomialOrder::GrevLex)
    }

    pub fn contains(&self, f: &Polynomial<F::Elem>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.gb() == other.gb()
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.gb();
        gb.len() == 1 && gb[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self {
            ring: self.ring.clone(),
            gens,
        }
    }

    pub fn with_gens(&self, extra: impl IntoIterator<Item = Polynomial<F::Elem>>) -> Self {
        let mut gens = self.gens.clone();
        gens.extend(extra.into_iter().filter(|g| !g.is_zero()));
        Self {
            ring: self.ring.clone(),
            gens,
        }
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(self.ring.mul(f, g));
            }
        }
        dedup(&mut gens);
        Self {
            ring: self.ring.clone(),
            gens,
        }
    }

    /// `I^n` by products of generators; `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit(self.ring.clone());
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }

    pub fn lead_monomials(&self, order: &MonomialOrder) -> Vec<Monomial> {
        self.groebner(order)
            .iter()
            .map(|g| self.ring.leading_term(g, order).expect("nonzero").0)
            .collect()
    }

    /// Hilbert series of `k[x]/I` in the standard grading (I homogeneous).
    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::of_monomials(&self.lead_monomials(&MonomialOrder::GrevLex), self.ring.nvars())
    }

    /// Bigraded series of `k[x]/I` from leading monomials under `order`.
    pub fn bigraded_series(&self, order: &MonomialOrder, bideg: &[(u32, u32)]) -> BivariateSeries {
        BivariateSeries::of_monomials(&self.lead_monomials(order), bideg)
    }

    /// Krull dimension of `k[x]/I`; `-1` for the unit ideal.
    pub fn krull_dimension(&self) -> i64 {
        krull_dimension_of_leads(&self.lead_monomials(&MonomialOrder::GrevLex), self.ring.nvars())
    }

    pub fn krull_dimension_in(&self, order: &MonomialOrder) -> i64 {
        krull_dimension_of_leads(&self.lead_monomials(order), self.ring.nvars())
    }

    /// Multiplicity of `k[x]/I` (homogeneous `I`).
    pub fn degree(&self) -> i128 {
        self.hilbert_series().degree()
    }

    /// Ideal of max-convention `w`-initial forms of a `w`-refined basis.
    pub fn initial_ideal_weight(&self, w: &[u32]) -> Self {
        self.initial_ideal_weight_with_sugar(w, &vec![1; self.ring.nvars()])
    }

    pub fn initial_ideal_weight_with_sugar(&self, w: &[u32], sugar: &[u32]) -> Self {
        let order = MonomialOrder::weighted_grevlex(w.to_vec());
        let gb = self.groebner_with_sugar(&order, sugar);
        let gens = gb
            .iter()
            .map(|g| self.ring.weighted_initial_form(g, w).expect("nonzero"))
            .collect();
        Self {
            ring: self.ring.clone(),
            gens,
        }
    }

    pub fn format(&self) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.format(g)).collect();
        format!("({})", parts.join(", "))
    }
}

fn dedup<E: PartialEq>(v: &mut Vec<E>) {
    let mut out: Vec<E> = Vec::with_capacity(v.len());
    for x in v.drain(..) {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    *v = out;
}

/// Largest set of variables containing no support of a leading monomial.
pub fn krull_dimension_of_leads(leads: &[Monomial], nvars: usize) -> i64 {
    if leads.iter().any(|m| m.is_one()) {
        return -1;
    }
    let supports: Vec<Vec<usize>> = leads
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut allowed = vec![true; nvars];
    max_independent(&supports, &mut allowed) as i64
}

fn max_independent(supports: &[Vec<usize>], allowed: &mut [bool]) -> usize {
    // a support entirely inside the allowed set must lose one variable
    let hit = supports.iter().find(|s| s.iter().all(|&i| allowed[i]));
    match hit {
        None => allowed.iter().filter(|&&a| a).count(),
        Some(s) => {
            let mut best = 0;
            for &v in s {
                allowed[v] = false;
                best = best.max(max_independent(supports, allowed));
                allowed[v] = true;
            }
            best
        }
    }
}

/// Generators of `I ∩ k[x_front, ...]` where the first `front` variables of
/// `I`'s ring are eliminated; the result lives in `target`, whose variables
/// are the remaining ones in order.
pub fn eliminate_front<F: Field>(
    ideal: &Ideal<F>,
    front: usize,
    target: &Arc<PolyRing<F>>,
    sugar: &[u32],
) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    if target.nvars() + front != ring.nvars() {
        return Err(Error::RingMismatch {
            expected: ring.nvars() - front,
            found: target.nvars(),
        });
    }
    if front == 0 {
        return Ok(Ideal {
            ring: target.clone(),
            gens: ideal.gens.clone(),
        });
    }
    let order = MonomialOrder::Elimination { front };
    let gb = ideal.groebner_with_sugar(&order, sugar);
    let map: Vec<usize> = (front..ring.nvars()).collect();
    let gens = gb
        .iter()
        .filter(|g| g.monomials().all(|m| m.partial_degree(0..front) == 0))
        .map(|g| {
            target.from_terms(
                g.terms()
                    .iter()
                    .map(|(m, c)| (m.select(&map), c.clone()))
                    .collect(),
            )
        })
        .collect();
    Ok(Ideal {
        ring: target.clone(),
        gens,
    })
}

/// `k[t, x]` with a fresh leading variable and `I`'s generators embedded.
fn with_leading_var<F: Field>(ring: &Arc<PolyRing<F>>) -> Arc<PolyRing<F>> {
    let mut names = vec![fresh_name(ring.names(), "t")];
    names.extend(ring.names().iter().cloned());
    PolyRing::new(ring.field().clone(), names)
}

pub(crate) fn fresh_name(names: &[String], base: &str) -> String {
    let mut name = base.to_string();
    let mut k = 0;
    while names.contains(&name) {
        k += 1;
        name = format!("{base}_{k}");
    }
    name
}

/// `A ∩ B` via `t A + (1 - t) B` and elimination of `t`.
pub fn intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Ideal<F> {
    let ring = a.ring();
    if a.is_unit() {
        return b.clone();
    }
    if b.is_unit() {
        return a.clone();
    }
    if a.gens.is_empty() || b.gens.is_empty() {
        return Ideal::zero(ring.clone());
    }
    let big = with_leading_var(ring);
    let t = big.var(0);
    let one_minus_t = big.sub(&big.one(), &t);
    let mut gens = Vec::new();
    for g in a.gb().iter() {
        gens.push(big.mul(&t, &big.insert_vars(g, 0, 1)));
    }
    for g in b.gb().iter() {
        gens.push(big.mul(&one_minus_t, &big.insert_vars(g, 0, 1)));
    }
    let mut sugar = vec![1; big.nvars()];
    sugar[0] = 0;
    let joint = Ideal::from_parts(big, gens);
    eliminate_front(&joint, 1, ring, &sugar).expect("ring sizes match")
}

/// Exact quotient `f / g`; `g` must divide `f`.
pub fn exact_division<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    g: &Polynomial<F::Elem>,
) -> Option<Polynomial<F::Elem>> {
    let (gm, gc) = g.terms().first()?.clone();
    let inv = ring.field().inv(&gc)?;
    let mut rem = f.clone();
    let mut quotient = ring.zero();
    while let Some((m, c)) = rem.terms().first().cloned() {
        let q = gm.quotient_of(&m)?;
        let coef = ring.field().mul(&c, &inv);
        let t = ring.term(q, coef);
        rem = ring.sub(&rem, &ring.mul(&t, g));
        quotient = ring.add(&quotient, &t);
    }
    Some(quotient)
}

/// `A : (g)`.
pub fn colon_poly<F: Field>(a: &Ideal<F>, g: &Polynomial<F::Elem>) -> Ideal<F> {
    let ring = a.ring();
    if g.is_zero() || a.contains(g) {
        return Ideal::unit(ring.clone());
    }
    if a.gens.is_empty() {
        return Ideal::zero(ring.clone());
    }
    let principal = Ideal::from_parts(ring.clone(), vec![g.clone()]);
    let meet = intersect(a, &principal);
    let gens = meet
        .gb()
        .iter()
        .map(|h| exact_division(ring, h, g).expect("intersection with (g) is divisible by g"))
        .collect();
    Ideal::from_parts(ring.clone(), gens).standardized()
}

/// `A : B = ∩_g A : (g)` over the generators of `B`.
pub fn colon<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Ideal<F> {
    let ring = a.ring();
    let mut acc: Option<Ideal<F>> = None;
    for g in b.gens() {
        let c = colon_poly(a, g);
        acc = Some(match acc {
            None => c,
            Some(prev) if prev.is_unit() => c,
            Some(prev) => intersect(&prev, &c).standardized(),
        });
    }
    acc.unwrap_or_else(|| Ideal::unit(ring.clone()))
}

/// `A : B^∞` by iterated colon. Returns the saturation and the number of
/// colon steps until the chain became stationary.
pub fn saturate<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<(Ideal<F>, usize)> {
    let mut cur = a.standardized();
    for step in 1..=SATURATION_CAP {
        let next = colon(&cur, b);
        if next.equals(&cur) {
            return Ok((cur, step - 1));
        }
        cur = next;
    }
    Err(Error::SaturationCap(SATURATION_CAP))
}
