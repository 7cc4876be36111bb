//! The multiplicity sequence `c_0, ..., c_d` by three independent routes.
//!
//! * Route B (default) reads the sequence off the bigraded Hilbert series of
//!   the doubly graded ring `G`.
//! * Route A counts `λ(G_uv)` directly on a growing grid and fits `h(r, s)`.
//! * Route C uses general elements and the length formula.

mod fit;
pub(crate) mod route_a;
mod route_b;
mod route_c;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use fit::{binomial_poly, univariate_top_difference, BivariatePolynomialFit, FitBasis};
pub use route_a::{hs_multiplicity_oracle, multseq_oracle_truncated, DEFAULT_CAP_N, DEFAULT_CAP_RS};
pub use route_b::{multiplicity_sequence, multiplicity_sequence_with_fit};
pub use route_c::{formula_one_c0, length_formula_sequence, length_formula_single, DEFAULT_SEEDS};

use crate::error::{Error, Result};
use crate::groebner::{IdealPresentation, RingPresentation};
use crate::kernel::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Route {
    A,
    B,
    C,
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Route::A => "A",
            Route::B => "B",
            Route::C => "C",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Route::A),
            "B" | "b" => Ok(Route::B),
            "C" | "c" => Ok(Route::C),
            other => Err(Error::Format(format!("unknown route {other}"))),
        }
    }
}

/// Outcome of comparing a sequence against another route.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crosscheck {
    pub route: Route,
    pub seeds: Vec<u64>,
    pub c: Vec<u64>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicitySequence {
    pub d: usize,
    pub c: Vec<u64>,
    pub route: Route,
    pub seeds: Vec<u64>,
    pub crosschecks: Vec<Crosscheck>,
}

impl MultiplicitySequence {
    pub(crate) fn from_signed(d: usize, c: Vec<i128>, route: Route, seeds: Vec<u64>) -> Result<Self> {
        let mut out = Vec::with_capacity(c.len());
        for (i, v) in c.into_iter().enumerate() {
            if v < 0 {
                return Err(Error::Inconsistent(format!("route {route} produced c_{i} = {v}")));
            }
            out.push(v as u64);
        }
        Ok(Self {
            d,
            c: out,
            route,
            seeds,
            crosschecks: Vec::new(),
        })
    }

    pub fn get(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    /// Records `other` as a cross-check and reports whether it agrees.
    pub fn crosscheck(&mut self, other: &MultiplicitySequence) -> bool {
        let agrees = other.c == self.c;
        self.crosschecks.push(Crosscheck {
            route: other.route,
            seeds: other.seeds.clone(),
            c: other.c.clone(),
            agrees,
        });
        agrees
    }
}

/// `(ht I, ℓ(I))` read as the extreme nonzero indices.
pub fn sequence_endpoints(seq: &MultiplicitySequence) -> Result<(usize, usize)> {
    let lo = seq.c.iter().position(|&c| c != 0);
    let hi = seq.c.iter().rposition(|&c| c != 0);
    match (lo, hi) {
        (Some(lo), Some(hi)) => Ok((lo, hi)),
        _ => Err(Error::Inconsistent("multiplicity sequence is identically zero".into())),
    }
}

/// `c_d` via Route B.
pub fn j_multiplicity<F: Field>(ideal: &IdealPresentation<F>) -> Result<u64> {
    let seq = multiplicity_sequence(ideal)?;
    Ok(seq.get(seq.d))
}

/// `R[z]` with the ideal `(I, z)`.
pub fn adjoin_variable<F: Field>(
    ideal: &IdealPresentation<F>,
    name: &str,
) -> Result<(Arc<RingPresentation<F>>, IdealPresentation<F>)> {
    let base = ideal.ring();
    let ext = Arc::new(base.adjoin_variable(name)?);
    let ring = ext.ring().clone();
    let mut gens: Vec<_> = ideal.gens().iter().map(|g| base.embed_into(&ring, g)).collect();
    gens.push(ring.var(ring.nvars() - 1));
    let lifted = IdealPresentation::new(ext.clone(), gens, ideal.label())?;
    Ok((ext, lifted))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints() {
        let s = |c: Vec<u64>| MultiplicitySequence {
            d: c.len() - 1,
            c,
            route: Route::B,
            seeds: vec![],
            crosschecks: vec![],
        };
        assert_eq!(sequence_endpoints(&s(vec![0, 1, 2])).unwrap(), (1, 2));
        assert_eq!(sequence_endpoints(&s(vec![0, 0, 4])).unwrap(), (2, 2));
        assert_eq!(sequence_endpoints(&s(vec![1, 0, 0])).unwrap(), (0, 0));
        assert!(sequence_endpoints(&s(vec![0, 0])).is_err());
    }

    #[test]
    fn route_names() {
        assert_eq!("b".parse::<Route>().unwrap(), Route::B);
        assert!("D".parse::<Route>().is_err());
        assert_eq!(Route::C.to_string(), "C");
    }
}

#[cfg(test)]
mod route_tests {
    use super::*;
    use crate::groebner::RingPresentation;
    use crate::kernel::{PolyRing, PrimeField};

    fn check(names: &[&str], gens: impl Fn(&PolyRing<PrimeField>) -> Vec<crate::kernel::Polynomial<u32>>, expected: &[u64]) {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), names.iter().map(|s| s.to_string()).collect());
        let rp = Arc::new(RingPresentation::polynomial(r.clone()));
        let i = IdealPresentation::new(rp, gens(&r), "I").unwrap();
        let b = multiplicity_sequence(&i).unwrap();
        assert_eq!(b.c, expected, "route B");
        let a = multseq_oracle_truncated(&i, DEFAULT_CAP_RS).unwrap();
        assert_eq!(a.c, expected, "route A");
        if i.is_equigenerated() {
            let c = length_formula_sequence(&i, 0, DEFAULT_SEEDS).unwrap();
            assert_eq!(c.c, expected, "route C");
        }
    }

    #[test]
    fn small_corpus() {
        check(&["x", "y"], |r| vec![r.var(0), r.var(1)], &[0, 0, 1]);
        check(&["x", "y"], |r| vec![r.pow(&r.var(0), 2), r.mul(&r.var(0), &r.var(1))], &[0, 1, 2]);
        check(&["x", "y", "z"], |r| vec![r.mul(&r.var(0), &r.var(1)), r.mul(&r.var(0), &r.var(2))], &[0, 1, 2, 0]);
        check(&["x", "y"], |r| vec![r.pow(&r.var(0), 2), r.pow(&r.var(1), 2)], &[0, 0, 4]);
        check(&["x", "y"], |r| vec![r.pow(&r.var(0), 2), r.pow(&r.var(1), 3)], &[0, 0, 6]);
        check(&["x", "y"], |_| vec![], &[1, 0, 0]);
    }
}
