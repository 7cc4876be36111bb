use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::fit::{univariate_top_difference, BivariatePolynomialFit};
use super::{MultiplicitySequence, Route};
use crate::error::{Error, Result};
use crate::groebner::{HilbertSeries, Ideal, IdealPresentation};
use crate::kernel::{Field, Monomial, PolyRing, Polynomial};

/// Default grid cap for Route A: `r, s <= 24`.
pub const DEFAULT_CAP_RS: usize = 24;
/// Default cap for the Samuel oracle: `n <= 16`.
pub const DEFAULT_CAP_N: usize = 16;

/// A basis of the span of homogeneous `gens`, with distinct leading monomials.
pub(crate) fn linear_basis<F: Field>(ring: &PolyRing<F>, gens: Vec<Polynomial<F::Elem>>) -> Vec<Polynomial<F::Elem>> {
    let field = ring.field();
    let mut basis: Vec<Polynomial<F::Elem>> = Vec::new();
    let mut by_lead: HashMap<Monomial, usize> = HashMap::new();
    for g in gens {
        let mut h = g;
        while let Some((m, c)) = h.terms().first().cloned() {
            match by_lead.get(&m) {
                Some(&k) => {
                    let scaled = ring.scale(&basis[k], &c);
                    h = ring.sub(&h, &scaled);
                }
                None => {
                    let inv = field.inv(&c).expect("nonzero lead");
                    by_lead.insert(m, basis.len());
                    basis.push(ring.scale(&h, &inv));
                    break;
                }
            }
        }
    }
    basis
}

/// Extends `out` to the generators of `I^0, ..., I^top`, each reduced to a
/// linear basis of its span.
pub(crate) fn extend_powers<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    out: &mut Vec<Vec<Polynomial<F::Elem>>>,
    top: usize,
) {
    if out.is_empty() {
        out.push(vec![ring.one()]);
    }
    while out.len() <= top {
        let last = out.last().expect("nonempty");
        let mut next = Vec::with_capacity(last.len() * gens.len());
        for p in last {
            for g in gens {
                next.push(ring.mul(p, g));
            }
        }
        out.push(linear_basis(ring, next));
    }
}

/// Series of `S / L_k` for the chain `L_0 = I^{v+1} + A ⊆ L_1 ⊆ ...`, where
/// `L_k` adds the generators of `I^v` of degree at most `δ_k`.
struct Layer {
    steps: Vec<(u32, HilbertSeries, HilbertSeries)>,
}

impl Layer {
    fn build<F: Field>(
        ring: &Arc<PolyRing<F>>,
        a: &[Polynomial<F::Elem>],
        pv: &[Polynomial<F::Elem>],
        pv1: &[Polynomial<F::Elem>],
    ) -> Self {
        let mut degs: Vec<u32> = pv.iter().filter_map(|g| g.total_degree()).collect();
        degs.sort_unstable();
        degs.dedup();
        let mut cur: Vec<Polynomial<F::Elem>> = a.iter().chain(pv1).cloned().collect();
        let mut hs = Ideal::from_parts(ring.clone(), cur.clone()).hilbert_series();
        let mut steps = Vec::with_capacity(degs.len());
        for &delta in &degs {
            cur.extend(pv.iter().filter(|g| g.total_degree() == Some(delta)).cloned());
            let next = Ideal::from_parts(ring.clone(), cur.clone()).hilbert_series();
            steps.push((delta, hs, next.clone()));
            hs = next;
        }
        Self { steps }
    }

    /// `λ(G_uv)`.
    fn length(&self, u: u32) -> i128 {
        self.steps
            .iter()
            .map(|(delta, before, after)| {
                let e = (delta + u) as i64;
                before.hilbert_function(e) - after.hilbert_function(e)
            })
            .sum()
    }
}

/// Route A: `λ(G_uv)` by direct dimension counts on a doubling grid, then a
/// Newton fit of `h(r, s)`. Gives up once the grid would exceed `cap`.
pub fn multseq_oracle_truncated<F: Field>(ideal: &IdealPresentation<F>, cap: usize) -> Result<MultiplicitySequence> {
    let (seq, _) = oracle_with_fit(ideal, cap)?;
    Ok(seq)
}

pub(crate) fn oracle_with_fit<F: Field>(
    ideal: &IdealPresentation<F>,
    cap: usize,
) -> Result<(MultiplicitySequence, BivariatePolynomialFit)> {
    let rp = ideal.ring();
    let ring = rp.ring();
    let d = rp.dimension();
    let a = rp.quotient().gens().to_vec();
    let mut pows: Vec<Vec<Polynomial<F::Elem>>> = Vec::new();
    let mut layers: Vec<Layer> = Vec::new();
    let mut prev: Option<BivariatePolynomialFit> = None;
    let mut offset = 1usize;
    loop {
        let top = offset + d + 1;
        if top > cap {
            return Err(Error::NonStabilization {
                what: "Route A grid".into(),
                cap,
            });
        }
        extend_powers(ring, ideal.gens(), &mut pows, top + 1);
        let fresh: Vec<Layer> = (layers.len()..=top)
            .into_par_iter()
            .map(|v| Layer::build(ring, &a, &pows[v], &pows[v + 1]))
            .collect();
        layers.extend(fresh);

        let lam: Vec<Vec<i128>> = layers
            .iter()
            .map(|layer| (0..=top as u32).map(|u| layer.length(u)).collect())
            .collect();
        let h = |r: usize, s: usize| -> i128 { lam[..=s].iter().map(|row| row[..=r].iter().sum::<i128>()).sum() };
        let grid: Vec<Vec<i128>> = (0..=d + 1)
            .map(|x| (0..=d + 1).map(|y| h(offset + x, offset + y)).collect())
            .collect();
        let fit = BivariatePolynomialFit::from_grid(&grid, offset as i64, d);
        let stable = fit.reproduces(&grid, offset as i64)
            && prev.as_ref().is_some_and(|p| p.reproduces(&grid, offset as i64));
        if stable {
            if fit.degree != d {
                return Err(Error::DegreeCheck {
                    expected: d,
                    found: fit.degree,
                });
            }
            let seq = MultiplicitySequence::from_signed(d, fit.leading(d), Route::A, Vec::new())?;
            return Ok((seq, fit));
        }
        prev = Some(fit);
        offset *= 2;
    }
}

/// `e(I, R)` for `m`-primary `I` from the colengths `λ(R / I^n)`.
pub fn hs_multiplicity_oracle<F: Field>(ideal: &IdealPresentation<F>, cap: usize) -> Result<u64> {
    if ideal.quotient_dimension() != 0 {
        return Err(Error::NotPrimary(ideal.label().to_string()));
    }
    let rp = ideal.ring();
    let ring = rp.ring();
    let d = rp.dimension();
    let a = rp.quotient().gens();
    let mut pows = Vec::new();
    let mut prev: Option<i128> = None;
    let mut offset = 1usize;
    loop {
        let top = offset + d + 1;
        if top > cap {
            return Err(Error::NonStabilization {
                what: "Samuel colength fit".into(),
                cap,
            });
        }
        extend_powers(ring, ideal.gens(), &mut pows, top);
        let vals: Vec<i128> = (offset..=top)
            .into_par_iter()
            .map(|n| {
                let gens: Vec<_> = a.iter().chain(&pows[n]).cloned().collect();
                Ideal::from_parts(ring.clone(), gens)
                    .hilbert_series()
                    .total_length()
                    .expect("m-primary quotient has finite length")
            })
            .collect();
        let e = univariate_top_difference(&vals, d);
        if let (Some(e), Some(p)) = (e, prev) {
            if e == p {
                return u64::try_from(e).map_err(|_| Error::Inconsistent(format!("negative multiplicity {e}")));
            }
        }
        prev = e;
        offset *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::RingPresentation;
    use crate::kernel::PrimeField;

    #[test]
    fn linear_basis_drops_dependent_rows() {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), vec!["x".into(), "y".into()]);
        let (x, y) = (r.var(0), r.var(1));
        let f = r.add(&x, &y);
        let g = r.sub(&x, &y);
        let h = r.scale(&x, &r.field().from_i64(2));
        assert_eq!(linear_basis(&r, vec![f, g, h]).len(), 2);
    }

    #[test]
    fn samuel_multiplicity_of_x2_y3() {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), vec!["x".into(), "y".into()]);
        let rp = Arc::new(RingPresentation::polynomial(r.clone()));
        let (x, y) = (r.var(0), r.var(1));
        let i = IdealPresentation::new(rp.clone(), vec![r.pow(&x, 2), r.pow(&y, 3)], "I").unwrap();
        assert_eq!(hs_multiplicity_oracle(&i, DEFAULT_CAP_N).unwrap(), 6);
        let j = IdealPresentation::new(rp, vec![x.clone()], "J").unwrap();
        assert!(matches!(hs_multiplicity_oracle(&j, DEFAULT_CAP_N), Err(Error::NotPrimary(_))));
    }
}
