//! Gröbner bases and the ideal-theoretic toolkit built on them.

pub(crate) mod buchberger;
pub mod cache;
pub mod hilbert;
pub mod ideal;
pub mod presentation;

pub use buchberger::minimal_monomials;
pub use hilbert::{BivariateSeries, HilbertSeries};
pub use ideal::{colon, colon_poly, eliminate_front, intersect, saturate, Ideal, SATURATION_CAP};
pub use presentation::{IdealPresentation, RingPresentation};

use crate::kernel::{Field, MonomialOrder, PolyRing, Polynomial};

/// Reduced Gröbner basis of `gens` for `order`.
pub fn groebner_basis<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    order: &MonomialOrder,
) -> crate::Result<Vec<Polynomial<F::Elem>>> {
    for g in gens {
        ring.check(g)?;
    }
    Ok(buchberger::reduced_basis(ring, gens, order, &vec![1; ring.nvars()]))
}

/// Remainder of `f` modulo a Gröbner basis `basis` for `order`.
pub fn normal_form<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    basis: &[Polynomial<F::Elem>],
    order: &MonomialOrder,
) -> Polynomial<F::Elem> {
    buchberger::normal_form(ring, f, basis, order)
}
