//! Rees algebra, associated graded ring and the doubly graded ring `G`, all as
//! explicit presentations over `k[x, y]`, plus seeded general elements.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::ideal::{eliminate_front, fresh_name};
use crate::groebner::{BivariateSeries, Ideal, IdealPresentation};
use crate::kernel::{Field, MonomialOrder, PolyRing, Polynomial, MIN_GENERAL_FIELD_SIZE};

/// The kernel `P` of `k[x, y] -> R[It]`, `y_j -> f_j t`.
#[derive(Clone, Debug)]
pub struct ReesPresentation<F: Field> {
    /// `k[x, y]`, the `x` block first.
    pub ring: Arc<PolyRing<F>>,
    pub kernel: Ideal<F>,
    pub nx: usize,
    /// Degrees `D_j` of the generators `f_j`.
    pub degrees: Vec<u32>,
    /// The generators `f_j` embedded in `k[x, y]`.
    pub generators: Vec<Polynomial<F::Elem>>,
}

impl<F: Field> ReesPresentation<F> {
    pub fn ny(&self) -> usize {
        self.degrees.len()
    }

    /// Weights `x: 1`, `y_j: D_j` under which `P` and the `f_j` are homogeneous.
    pub fn internal_weights(&self) -> Vec<u32> {
        let mut w = vec![1; self.nx];
        w.extend(self.degrees.iter().copied());
        w
    }

    /// Weights `0` on `x`, `D_j` on `y_j`, selecting lowest `x`-degree forms.
    pub fn cone_weights(&self) -> Vec<u32> {
        let mut w = vec![0; self.nx];
        w.extend(self.degrees.iter().copied());
        w
    }
}

pub fn rees_presentation<F: Field>(ideal: &IdealPresentation<F>) -> Result<ReesPresentation<F>> {
    let base = ideal.ring();
    let src = base.ring();
    let nx = src.nvars();
    let degrees = ideal.degrees();
    let s = degrees.len();

    let mut names: Vec<String> = src.names().to_vec();
    for j in 1..=s {
        let name = fresh_name(&names, &format!("T{j}"));
        names.push(name);
    }
    let target = PolyRing::new(src.field().clone(), names.clone());
    let mut big_names = vec![fresh_name(&names, "t")];
    big_names.extend(names);
    let big = PolyRing::new(src.field().clone(), big_names);

    let t = big.var(0);
    let mut gens: Vec<Polynomial<F::Elem>> = base
        .quotient()
        .gens()
        .iter()
        .map(|a| big.insert_vars(&target.insert_vars(a, nx, s), 0, 1))
        .collect();
    for (j, f) in ideal.gens().iter().enumerate() {
        let fe = big.insert_vars(&target.insert_vars(f, nx, s), 0, 1);
        gens.push(big.sub(&big.var(1 + nx + j), &big.mul(&t, &fe)));
    }
    let mut sugar = vec![1u32; 1 + nx];
    sugar.extend(degrees.iter().map(|d| d + 1));
    let joint = Ideal::new(big, gens)?;
    let kernel = eliminate_front(&joint, 1, &target, &sugar)?;

    let generators = ideal
        .gens()
        .iter()
        .map(|f| target.insert_vars(f, nx, s))
        .collect();
    Ok(ReesPresentation {
        ring: target,
        kernel,
        nx,
        degrees,
        generators,
    })
}

/// `G = G_m(G_I(R))` as `k[x, y] / J` with `x` of bidegree `(1, 0)` and `y` of
/// bidegree `(0, 1)`.
#[derive(Clone, Debug)]
pub struct BigradedPresentation<F: Field> {
    pub rees: ReesPresentation<F>,
    /// `Q = P + (f)`, the associated graded ring `G_I(R)`.
    pub cone: Ideal<F>,
    /// The defining ideal of `G`.
    pub ideal: Ideal<F>,
    series: BivariateSeries,
}

impl<F: Field> BigradedPresentation<F> {
    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.rees.ring
    }

    pub fn nx(&self) -> usize {
        self.rees.nx
    }

    pub fn ny(&self) -> usize {
        self.rees.ny()
    }

    pub fn bidegrees(&self) -> Vec<(u32, u32)> {
        let mut b = vec![(1, 0); self.nx()];
        b.extend(std::iter::repeat_n((0, 1), self.ny()));
        b
    }

    pub fn series(&self) -> &BivariateSeries {
        &self.series
    }

    /// `λ(G_uv)`.
    pub fn component_length(&self, u: u32, v: u32) -> i128 {
        self.series.coefficient(u, v)
    }
}

pub fn graded_cone_presentation<F: Field>(ideal: &IdealPresentation<F>) -> Result<BigradedPresentation<F>> {
    let rees = rees_presentation(ideal)?;
    let cone = rees.kernel.with_gens(rees.generators.iter().cloned());
    let sugar = rees.internal_weights();
    let order = MonomialOrder::weighted_grevlex(rees.cone_weights());
    let gb = cone.groebner_with_sugar(&order, &sugar);
    let ring = rees.ring.clone();
    let w = rees.cone_weights();
    let mut gens = Vec::with_capacity(gb.len());
    let mut leads = Vec::with_capacity(gb.len());
    for g in gb.iter() {
        gens.push(ring.weighted_initial_form(g, &w)?);
        leads.push(ring.leading_term(g, &order)?.0);
    }
    let mut bideg = vec![(1, 0); rees.nx];
    bideg.extend(std::iter::repeat_n((0, 1), rees.ny()));
    let series = BivariateSeries::of_monomials(&leads, &bideg);
    Ok(BigradedPresentation {
        ideal: Ideal::new(ring, gens)?,
        cone,
        rees,
        series,
    })
}

/// `ℓ(I) = dim F(I)` from the fiber presentation `P + (x)`.
pub fn analytic_spread<F: Field>(ideal: &IdealPresentation<F>) -> Result<usize> {
    let rees = rees_presentation(ideal)?;
    analytic_spread_of(&rees)
}

pub fn analytic_spread_of<F: Field>(rees: &ReesPresentation<F>) -> Result<usize> {
    let fiber = rees.kernel.with_gens((0..rees.nx).map(|i| rees.ring.var(i)));
    let dim = fiber.krull_dimension();
    if dim < 0 {
        return Err(Error::Inconsistent("fiber ring is zero".into()));
    }
    Ok(dim as usize)
}

/// Scalars `λ_ij` and the elements `x_i = Σ_j λ_ij a_j` they define.
#[derive(Clone, Debug)]
pub struct GeneralElementTranscript<E> {
    pub seed: u64,
    pub scalars: Vec<Vec<E>>,
    pub elements: Vec<Polynomial<E>>,
}

pub fn general_elements<F: Field>(
    ideal: &IdealPresentation<F>,
    count: usize,
    seed: u64,
) -> Result<GeneralElementTranscript<F::Elem>> {
    let ring = ideal.ring().ring();
    let field = ring.field();
    if let Some(q) = field.size() {
        if q < MIN_GENERAL_FIELD_SIZE {
            return Err(Error::SmallField(q));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut scalars = Vec::with_capacity(count);
    let mut elements = Vec::with_capacity(count);
    for _ in 0..count {
        let row: Vec<F::Elem> = loop {
            let row: Vec<F::Elem> = ideal.gens().iter().map(|_| field.random(&mut rng)).collect();
            if ideal.gens().is_empty() || row.iter().any(|c| !field.is_zero(c)) {
                break row;
            }
        };
        let x = ideal
            .gens()
            .iter()
            .zip(&row)
            .fold(ring.zero(), |acc, (g, c)| ring.add(&acc, &ring.scale(g, c)));
        scalars.push(row);
        elements.push(x);
    }
    Ok(GeneralElementTranscript {
        seed,
        scalars,
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::RingPresentation;
    use crate::kernel::PrimeField;

    fn setup(names: &[&str]) -> (Arc<PolyRing<PrimeField>>, Arc<RingPresentation<PrimeField>>) {
        let r = PolyRing::new(
            PrimeField::new(32003).unwrap(),
            names.iter().map(|s| s.to_string()).collect(),
        );
        let rp = Arc::new(RingPresentation::polynomial(r.clone()));
        (r, rp)
    }

    #[test]
    fn rees_of_x2_xy() {
        let (r, rp) = setup(&["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let i = IdealPresentation::new(rp, vec![r.mul(&x, &x), r.mul(&x, &y)], "I").unwrap();
        let rees = rees_presentation(&i).unwrap();
        let q = &rees.ring;
        let rel = q.sub(&q.mul(&q.var(1), &q.var(2)), &q.mul(&q.var(0), &q.var(3)));
        let expected = Ideal::new(q.clone(), vec![rel]).unwrap();
        assert!(rees.kernel.equals(&expected));
        assert_eq!(analytic_spread_of(&rees).unwrap(), 2);
    }

    #[test]
    fn principal_rees_is_free() {
        let (r, rp) = setup(&["x", "y"]);
        let i = IdealPresentation::new(rp, vec![r.var(0)], "I").unwrap();
        let rees = rees_presentation(&i).unwrap();
        assert!(rees.kernel.gens().is_empty());
        assert_eq!(analytic_spread_of(&rees).unwrap(), 1);
    }

    #[test]
    fn cone_of_maximal_ideal() {
        let (r, rp) = setup(&["x", "y"]);
        let i = IdealPresentation::new(rp, vec![r.var(0), r.var(1)], "I").unwrap();
        let g = graded_cone_presentation(&i).unwrap();
        // G_uv = m^{u+v}/m^{u+v+1} restricted to u = 0: dim v + 1 at u = 0
        assert_eq!(g.component_length(0, 3), 4);
        assert_eq!(g.component_length(1, 3), 0);
    }

    #[test]
    fn general_elements_are_seeded() {
        let (r, rp) = setup(&["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let i = IdealPresentation::new(rp, vec![r.mul(&x, &x), r.mul(&x, &y)], "I").unwrap();
        assert!(general_elements(&i, 0, 1).unwrap().elements.is_empty());
        let a = general_elements(&i, 2, 7).unwrap();
        let b = general_elements(&i, 2, 7).unwrap();
        assert_eq!(a.elements, b.elements);
        assert_eq!(a.scalars.len(), 2);
        assert!(a.elements.iter().all(|e| !e.is_zero()));
    }

    #[test]
    fn small_fields_are_refused() {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), vec!["x".into()]);
        let rp = Arc::new(RingPresentation::polynomial(r.clone()));
        let i = IdealPresentation::new(rp, vec![r.var(0)], "I").unwrap();
        assert!(matches!(general_elements(&i, 1, 0), Err(Error::SmallField(101))));
    }
}
