use std::sync::Arc;

use super::ideal::Ideal;
use crate::error::{Error, Result};
use crate::kernel::{Field, FieldSpec, PolyRing, Polynomial};

/// A standard graded ring `k[x]/A` with `A` homogeneous. Its localization at
/// the irrelevant ideal stands in for a local ring: graded lengths computed
/// here are the local lengths.
#[derive(Clone, Debug)]
pub struct RingPresentation<F: Field> {
    ring: Arc<PolyRing<F>>,
    quotient: Ideal<F>,
    equidimensional_asserted: bool,
    dim: i64,
}

impl<F: Field> RingPresentation<F> {
    pub fn polynomial(ring: Arc<PolyRing<F>>) -> Self {
        let dim = ring.nvars() as i64;
        Self {
            quotient: Ideal::zero(ring.clone()),
            ring,
            equidimensional_asserted: true,
            dim,
        }
    }

    pub fn new(
        ring: Arc<PolyRing<F>>,
        quotient_generators: Vec<Polynomial<F::Elem>>,
        equidimensional_asserted: bool,
    ) -> Result<Self> {
        for g in &quotient_generators {
            ring.check(g)?;
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(ring.format(g)));
            }
        }
        let quotient = Ideal::new(ring.clone(), quotient_generators)?.standardized();
        if quotient.is_unit() {
            return Err(Error::UnitIdeal("quotient ideal".into()));
        }
        let dim = quotient.krull_dimension();
        Ok(Self {
            ring,
            quotient,
            equidimensional_asserted,
            dim,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn field_spec(&self) -> FieldSpec {
        FieldSpec {
            characteristic: self.field().characteristic(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// The defining ideal `A`.
    pub fn quotient(&self) -> &Ideal<F> {
        &self.quotient
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.quotient.gens().is_empty()
    }

    pub fn equidimensional_asserted(&self) -> bool {
        self.equidimensional_asserted
    }

    /// Krull dimension `d`.
    pub fn dimension(&self) -> usize {
        self.dim as usize
    }

    /// Multiplicity `e(R)` of the ring.
    pub fn multiplicity(&self) -> i128 {
        self.quotient.degree()
    }

    /// Ideal of `k[x]` generated by `gens` and `A`.
    pub fn lift(&self, gens: &[Polynomial<F::Elem>]) -> Ideal<F> {
        self.quotient.with_gens(gens.iter().cloned())
    }

    /// `R/(extra)`; the equidimensionality assertion is kept.
    pub fn quotient_by(&self, extra: &[Polynomial<F::Elem>]) -> Result<Self> {
        let mut gens = self.quotient.gens().to_vec();
        gens.extend(extra.iter().cloned());
        Self::new(self.ring.clone(), gens, self.equidimensional_asserted)
    }

    /// `R[name]` with the new variable appended last.
    pub fn adjoin_variable(&self, name: &str) -> Result<Self> {
        if self.ring.var_index(name).is_some() {
            return Err(Error::NameClash(name.to_string()));
        }
        let mut names = self.ring.names().to_vec();
        names.push(name.to_string());
        let ring = PolyRing::new(self.field().clone(), names);
        let n = self.nvars();
        let quotient = self
            .quotient
            .gens()
            .iter()
            .map(|g| ring.insert_vars(g, n, 1))
            .collect();
        Self::new(ring, quotient, self.equidimensional_asserted)
    }

    /// Polynomial of `self`'s ambient ring embedded after appending variables.
    pub fn embed_into(&self, target: &PolyRing<F>, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let n = self.nvars();
        target.insert_vars(f, n, target.nvars() - n)
    }
}

/// A homogeneous ideal of a [`RingPresentation`], with generators reduced
/// modulo the defining ideal.
#[derive(Clone, Debug)]
pub struct IdealPresentation<F: Field> {
    ring: Arc<RingPresentation<F>>,
    gens: Vec<Polynomial<F::Elem>>,
    label: String,
}

impl<F: Field> IdealPresentation<F> {
    pub fn new(
        ring: Arc<RingPresentation<F>>,
        generators: Vec<Polynomial<F::Elem>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let label = label.into();
        let mut gens = Vec::with_capacity(generators.len());
        for g in &generators {
            ring.ring().check(g)?;
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(ring.ring().format(g)));
            }
            let r = if ring.is_polynomial_ring() {
                g.clone()
            } else {
                ring.quotient().normal_form(g)
            };
            if !r.is_zero() {
                gens.push(r);
            }
        }
        let ideal = Self { ring, gens, label };
        if ideal.ambient().is_unit() {
            return Err(Error::UnitIdeal(ideal.label.clone()));
        }
        Ok(ideal)
    }

    pub fn ring(&self) -> &Arc<RingPresentation<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F::Elem>] {
        &self.gens
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.gens
            .iter()
            .map(|g| g.total_degree().expect("nonzero generator"))
            .collect()
    }

    pub fn is_equigenerated(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    /// `I + A` as an ideal of the ambient polynomial ring.
    pub fn ambient(&self) -> Ideal<F> {
        self.ring.lift(&self.gens)
    }

    /// The same ideal over another presentation of the same ambient ring.
    pub fn over(&self, ring: Arc<RingPresentation<F>>) -> Result<Self> {
        Self::new(ring, self.gens.clone(), self.label.clone())
    }

    /// `dim R/I`.
    pub fn quotient_dimension(&self) -> i64 {
        self.ambient().krull_dimension()
    }

    /// `ht I = dim R - dim R/I` (equidimensional catenary rings).
    pub fn height(&self) -> usize {
        (self.ring.dimension() as i64 - self.quotient_dimension()) as usize
    }

    pub fn format(&self) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.ring().format(g)).collect();
        format!("({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::PrimeField;

    #[test]
    fn generators_are_reduced_and_checked() {
        let r = PolyRing::new(
            PrimeField::new(32003).unwrap(),
            vec!["x".into(), "y".into()],
        );
        let (x, y) = (r.var(0), r.var(1));
        let rp = Arc::new(RingPresentation::new(r.clone(), vec![r.mul(&x, &y)], true).unwrap());
        assert_eq!(rp.dimension(), 1);
        let i = IdealPresentation::new(rp.clone(), vec![r.mul(&x, &y), x.clone()], "I").unwrap();
        assert_eq!(i.gens().len(), 1);
        let unit = IdealPresentation::new(rp.clone(), vec![r.one()], "U");
        assert!(matches!(unit, Err(Error::UnitIdeal(_))));
        let inhom = IdealPresentation::new(rp, vec![r.add(&x, &r.mul(&y, &y))], "H");
        assert!(matches!(inhom, Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn adjoining_a_clashing_name_fails() {
        let r = PolyRing::new(PrimeField::new(7).unwrap(), vec!["x".into()]);
        let rp = RingPresentation::polynomial(r);
        assert!(matches!(rp.adjoin_variable("x"), Err(Error::NameClash(_))));
        assert_eq!(rp.adjoin_variable("z").unwrap().dimension(), 2);
    }
}
