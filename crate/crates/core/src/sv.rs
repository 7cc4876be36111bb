//! Stückrad–Vogel intersection degrees: for projective schemes `X, Y` in the
//! same space, `deg v_i` is `c_i` of the diagonal ideal in the join ring
//! `k[X, Y] / (I_X + I_Y)`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::ideal::eliminate_front;
use crate::groebner::{Ideal, IdealPresentation, RingPresentation};
use crate::kernel::{Field, Monomial, PolyRing, Polynomial};
use crate::multseq::{length_formula_sequence, multiplicity_sequence, MultiplicitySequence};

#[derive(Clone, Debug)]
pub struct SVInstance<F: Field> {
    pub ring: Arc<RingPresentation<F>>,
    /// `(X_0 - Y_0, ..., X_n - Y_n)`.
    pub diagonal: IdealPresentation<F>,
    pub seed: u64,
    pub degree_x: i128,
    pub degree_y: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SVReport {
    pub c: Vec<u64>,
    /// `deg v_i`, equal to `c_i`.
    pub degrees: Vec<u64>,
    pub degree_product: i128,
    pub sum: u64,
    pub sequence: MultiplicitySequence,
}

/// Joins `I_X ⊆ k[X]` and `I_Y ⊆ k[Y]` into `k[X, Y] / (I_X + I_Y)`.
pub fn sv_instance<F: Field>(x: &IdealPresentation<F>, y: &IdealPresentation<F>, seed: u64) -> Result<SVInstance<F>> {
    let rx = x.ring().ring();
    let ry = y.ring().ring();
    if rx.nvars() != ry.nvars() {
        return Err(Error::VariableCountMismatch(rx.nvars(), ry.nvars()));
    }
    if !x.ring().is_polynomial_ring() || !y.ring().is_polynomial_ring() {
        return Err(Error::Unsupported("both schemes must be given in a polynomial ring".into()));
    }
    let n = rx.nvars();
    let mut names = rx.names().to_vec();
    for name in ry.names() {
        if names.contains(name) {
            return Err(Error::NameClash(name.clone()));
        }
        names.push(name.clone());
    }
    let joint = PolyRing::new(rx.field().clone(), names);
    let mut quotient: Vec<Polynomial<F::Elem>> = x.gens().iter().map(|g| joint.insert_vars(g, n, n)).collect();
    quotient.extend(y.gens().iter().map(|g| joint.insert_vars(g, 0, n)));
    let ring = Arc::new(RingPresentation::new(joint.clone(), quotient, true)?);
    let diagonal: Vec<_> = (0..n).map(|i| joint.sub(&joint.var(i), &joint.var(n + i))).collect();
    let diagonal = IdealPresentation::new(ring.clone(), diagonal, "diagonal")?;
    Ok(SVInstance {
        ring,
        diagonal,
        seed,
        degree_x: x.ambient().degree(),
        degree_y: y.ambient().degree(),
    })
}

/// Route B on the diagonal, cross-checked by Route C over `replicas` seeds.
pub fn sv_degrees<F: Field>(inst: &SVInstance<F>, replicas: usize) -> Result<SVReport> {
    let (b, c) = rayon::join(
        || multiplicity_sequence(&inst.diagonal),
        || length_formula_sequence(&inst.diagonal, inst.seed, replicas),
    );
    let mut seq = b?;
    let c = c?;
    if !seq.crosscheck(&c) {
        return Err(Error::Inconsistent(format!(
            "Route B gave {:?} but Route C gave {:?}",
            seq.c, c.c
        )));
    }
    seq.seeds = c.seeds.clone();
    Ok(SVReport {
        c: seq.c.clone(),
        degrees: seq.c.clone(),
        degree_product: inst.degree_x * inst.degree_y,
        sum: seq.c.iter().sum(),
        sequence: seq,
    })
}

/// Ideal of the projective monomial curve `[s^a_0 t^b_0 : ... ]`, with every
/// `a_i + b_i` equal, as an ideal of `ring`.
pub fn monomial_curve_ideal<F: Field>(ring: &Arc<PolyRing<F>>, exponents: &[(u16, u16)]) -> Result<Ideal<F>> {
    let n = ring.nvars();
    if exponents.len() != n {
        return Err(Error::VariableCountMismatch(n, exponents.len()));
    }
    let deg = exponents.first().map(|&(a, b)| a + b).unwrap_or(0);
    if exponents.iter().any(|&(a, b)| a + b != deg) {
        return Err(Error::MixedDegrees("curve parametrization".into()));
    }
    let mut names = vec![
        crate::groebner::ideal::fresh_name(ring.names(), "s"),
        crate::groebner::ideal::fresh_name(ring.names(), "t"),
    ];
    names.extend(ring.names().iter().cloned());
    let big = PolyRing::new(ring.field().clone(), names);
    let gens = exponents
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            let mut e = vec![0u16; n + 2];
            e[0] = a;
            e[1] = b;
            let param = big.term(Monomial::new(e), big.field().one());
            big.sub(&big.var(2 + i), &param)
        })
        .collect();
    let mut sugar = vec![1u32, 1];
    sugar.extend(std::iter::repeat_n(deg as u32, n));
    let joint = Ideal::new(big, gens)?;
    Ok(eliminate_front(&joint, 2, ring, &sugar)?.standardized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::PrimeField;

    fn proj(names: &[&str]) -> (Arc<PolyRing<PrimeField>>, Arc<RingPresentation<PrimeField>>) {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), names.iter().map(|s| s.to_string()).collect());
        let rp = Arc::new(RingPresentation::polynomial(r.clone()));
        (r, rp)
    }

    #[test]
    fn point_in_p1() {
        let (rx, px) = proj(&["X0", "X1"]);
        let (ry, py) = proj(&["Y0", "Y1"]);
        let x = IdealPresentation::new(px, vec![rx.var(1)], "X").unwrap();
        let y = IdealPresentation::new(py, vec![ry.var(1)], "Y").unwrap();
        let inst = sv_instance(&x, &y, 0).unwrap();
        assert_eq!(inst.ring.dimension(), 2);
        let rep = sv_degrees(&inst, 3).unwrap();
        assert_eq!(rep.c, vec![0, 1, 0]);
        assert_eq!(rep.degree_product, 1);
    }

    #[test]
    fn line_in_p2() {
        let (rx, px) = proj(&["X0", "X1", "X2"]);
        let (ry, py) = proj(&["Y0", "Y1", "Y2"]);
        let x = IdealPresentation::new(px, vec![rx.var(2)], "X").unwrap();
        let y = IdealPresentation::new(py, vec![ry.var(2)], "Y").unwrap();
        let inst = sv_instance(&x, &y, 5).unwrap();
        assert_eq!(inst.ring.dimension(), 4);
        assert_eq!(sv_degrees(&inst, 3).unwrap().c, vec![0, 0, 1, 0, 0]);
    }

    #[test]
    fn twisted_cubic_by_elimination() {
        let (r, _) = proj(&["a", "b", "c", "d"]);
        let i = monomial_curve_ideal(&r, &[(3, 0), (2, 1), (1, 2), (0, 3)]).unwrap();
        assert_eq!(i.gens().len(), 3);
        assert_eq!(i.krull_dimension(), 2);
        assert_eq!(i.degree(), 3);
    }

    #[test]
    fn mismatched_counts() {
        let (rx, px) = proj(&["X0", "X1"]);
        let (ry, py) = proj(&["Y0", "Y1", "Y2"]);
        let x = IdealPresentation::new(px, vec![rx.var(1)], "X").unwrap();
        let y = IdealPresentation::new(py, vec![ry.var(1)], "Y").unwrap();
        assert!(matches!(sv_instance(&x, &y, 0), Err(Error::VariableCountMismatch(2, 3))));
    }
}
