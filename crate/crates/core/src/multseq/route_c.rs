use rayon::prelude::*;

use super::{MultiplicitySequence, Route};
use crate::blowup::general_elements;
use crate::error::{Error, Result};
use crate::groebner::{saturate, Ideal, IdealPresentation};
use crate::kernel::Field;

/// Number of independent seeds a randomized answer must agree across.
pub const DEFAULT_SEEDS: usize = 3;

/// `deg_j(S / K)`: the degree if `dim = j`, zero below, an anomaly above.
fn graded_degree<F: Field>(k: &Ideal<F>, j: usize, index: usize) -> Result<i128> {
    let hs = k.hilbert_series();
    let dim = hs.dimension();
    match dim.cmp(&(j as i64)) {
        std::cmp::Ordering::Less => Ok(0),
        std::cmp::Ordering::Equal => Ok(hs.degree()),
        std::cmp::Ordering::Greater => Err(Error::DimensionAnomaly {
            index,
            expected: j as i64,
            found: dim,
        }),
    }
}

fn ideal_in_ambient<F: Field>(ideal: &IdealPresentation<F>) -> Ideal<F> {
    Ideal::from_parts(ideal.ring().ring().clone(), ideal.gens().to_vec())
}

/// `c_0 = deg_d(R) - deg_d(R / (0 : I^∞))`, the components of `R` inside `V(I)`.
pub fn formula_one_c0<F: Field>(ideal: &IdealPresentation<F>) -> Result<u64> {
    let rp = ideal.ring();
    let d = rp.dimension();
    let a = rp.quotient();
    let (sat, _) = saturate(a, &ideal_in_ambient(ideal))?;
    let c0 = graded_degree(a, d, 0)? - graded_degree(&sat, d, 0)?;
    u64::try_from(c0).map_err(|_| Error::Inconsistent(format!("c_0 = {c0}")))
}

fn check_preconditions<F: Field>(ideal: &IdealPresentation<F>) -> Result<()> {
    if !ideal.is_equigenerated() {
        return Err(Error::MixedDegrees(ideal.label().to_string()));
    }
    let rp = ideal.ring();
    if !rp.is_polynomial_ring() && !rp.equidimensional_asserted() {
        return Err(Error::Unsupported(
            "the length formula needs the quotient ring to be asserted equidimensional".into(),
        ));
    }
    Ok(())
}

/// Route C for one seed: with general `x_1, ..., x_d` and
/// `K_i = ((x_1, ..., x_{i-1}) : I^∞) + (x_i)`,
/// `c_i = deg_{d-i}(R / K_i) - deg_{d-i}(R / (K_i : I^∞))`.
pub fn length_formula_single<F: Field>(ideal: &IdealPresentation<F>, seed: u64) -> Result<MultiplicitySequence> {
    check_preconditions(ideal)?;
    let rp = ideal.ring();
    let d = rp.dimension();
    let i_amb = ideal_in_ambient(ideal);
    let transcript = general_elements(ideal, d, seed)?;

    let a = rp.quotient();
    let (mut sat, _) = saturate(a, &i_amb)?;
    let mut c = Vec::with_capacity(d + 1);
    c.push(graded_degree(a, d, 0)? - graded_degree(&sat, d, 0)?);
    for (i, x) in transcript.elements.iter().enumerate() {
        let i = i + 1;
        if sat.is_unit() {
            c.push(0);
            continue;
        }
        let k = sat.with_gens([x.clone()]);
        let (next, _) = saturate(&k, &i_amb)?;
        c.push(graded_degree(&k, d - i, i)? - graded_degree(&next, d - i, i)?);
        sat = next;
    }
    MultiplicitySequence::from_signed(d, c, Route::C, vec![seed])
}

/// Route C under seeds `seed, seed + 1, ...`; all replicas must agree.
pub fn length_formula_sequence<F: Field>(
    ideal: &IdealPresentation<F>,
    seed: u64,
    replicas: usize,
) -> Result<MultiplicitySequence> {
    check_preconditions(ideal)?;
    let seeds: Vec<u64> = (0..replicas.max(1) as u64).map(|k| seed.wrapping_add(k)).collect();
    let runs: Vec<MultiplicitySequence> = seeds
        .par_iter()
        .map(|&s| length_formula_single(ideal, s))
        .collect::<Result<_>>()?;
    let first = &runs[0];
    if let Some(bad) = runs.iter().find(|r| r.c != first.c) {
        return Err(Error::SeedDisagreement(format!(
            "seed {} gave {:?}, seed {} gave {:?}",
            first.seeds[0], first.c, bad.seeds[0], bad.c
        )));
    }
    let mut out = first.clone();
    out.seeds = seeds;
    Ok(out)
}
