use std::collections::BTreeMap;

use super::fit::{BivariatePolynomialFit, FitBasis};
use super::{MultiplicitySequence, Route};
use crate::blowup::{graded_cone_presentation, BigradedPresentation};
use crate::error::{Error, Result};
use crate::groebner::IdealPresentation;
use crate::kernel::Field;

pub fn multiplicity_sequence<F: Field>(ideal: &IdealPresentation<F>) -> Result<MultiplicitySequence> {
    Ok(multiplicity_sequence_with_fit(ideal)?.0)
}

/// Route B together with the fitted `h(r, s)`.
pub fn multiplicity_sequence_with_fit<F: Field>(
    ideal: &IdealPresentation<F>,
) -> Result<(MultiplicitySequence, BivariatePolynomialFit)> {
    let g = graded_cone_presentation(ideal)?;
    let d = ideal.ring().dimension();
    let fit = partial_sum_fit(&g);
    if fit.degree != d {
        return Err(Error::DegreeCheck {
            expected: d,
            found: fit.degree,
        });
    }
    let seq = MultiplicitySequence::from_signed(d, fit.leading(d), Route::B, Vec::new())?;
    Ok((seq, fit))
}

/// `h(r, s)` from the series `N / ((1 - t1)^n (1 - t2)^S)`: summation adds one
/// to each exponent, and `a_jk (1 - t1)^j (1 - t2)^k` contributes
/// `a_jk C(r + n - j, n - j) C(s + S - k, S - k)`.
pub fn partial_sum_fit<F: Field>(g: &BigradedPresentation<F>) -> BivariatePolynomialFit {
    let (n, s) = g.series().denominator_exponents;
    let shifted = g.series().numerator_in_shifted_basis();
    let mut coefficients = BTreeMap::new();
    for (&(j, k), &a) in &shifted {
        if j > n || k > s {
            continue;
        }
        *coefficients.entry((n - j, s - k)).or_insert(0) += a;
    }
    BivariatePolynomialFit::new(FitBasis::Shifted, coefficients)
}
