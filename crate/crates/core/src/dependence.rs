//! Integral dependence of nested ideals `I ⊆ J`: `J` is integral over `I`
//! exactly when the two multiplicity sequences agree (equidimensional,
//! universally catenary `R`). A reduction search corroborates positive answers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{Ideal, IdealPresentation};
use crate::kernel::Field;
use crate::multseq::route_a::extend_powers;
use crate::multseq::{multiplicity_sequence, MultiplicitySequence};

/// Default largest `n` tried by [`reduction_oracle`].
pub const DEFAULT_MAX_N: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Integral,
    NotIntegral,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Integral => "integral",
            Verdict::NotIntegral => "not-integral",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleResult {
    /// `J^{n+1} = I J^n` for this least `n`.
    ConfirmedIntegral(u32),
    Inconclusive,
    NotRun,
}

impl std::fmt::Display for OracleResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OracleResult::ConfirmedIntegral(n) => write!(f, "confirmed-integral({n})"),
            OracleResult::Inconclusive => f.write_str("inconclusive"),
            OracleResult::NotRun => f.write_str("not-run"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralVerdict {
    pub small: MultiplicitySequence,
    pub large: MultiplicitySequence,
    /// `c_i(J) - c_i(I)`.
    pub deltas: Vec<i64>,
    pub verdict: Verdict,
    /// First index where the sequences differ.
    pub witness_index: Option<usize>,
    pub oracle: OracleResult,
    pub equidimensional_asserted: bool,
    pub note: Option<String>,
}

/// Checks `I ⊆ J + A`, naming the first generator that fails.
fn check_containment<F: Field>(i: &IdealPresentation<F>, j: &IdealPresentation<F>) -> Result<()> {
    let amb = j.ambient();
    for g in i.gens() {
        if !amb.contains(g) {
            return Err(Error::NotContained {
                small: i.label().to_string(),
                large: j.label().to_string(),
                generator: i.ring().ring().format(g),
            });
        }
    }
    Ok(())
}

/// Decides whether `J` is integral over `I`. With `join`, `J` is replaced by
/// `I + J` instead of requiring containment. `max_n` runs the reduction
/// oracle alongside.
pub fn check_integral<F: Field>(
    i: &IdealPresentation<F>,
    j: &IdealPresentation<F>,
    join: bool,
    max_n: Option<u32>,
) -> Result<IntegralVerdict> {
    if i.ring().ring().nvars() != j.ring().ring().nvars() {
        return Err(Error::RingMismatch {
            expected: i.ring().ring().nvars(),
            found: j.ring().ring().nvars(),
        });
    }
    let j = if join {
        let mut gens = j.gens().to_vec();
        gens.extend(i.gens().iter().cloned());
        IdealPresentation::new(i.ring().clone(), gens, j.label())?
    } else {
        check_containment(i, j)?;
        j.clone()
    };

    let ((small, large), oracle) = rayon::join(
        || rayon::join(|| multiplicity_sequence(i), || multiplicity_sequence(&j)),
        || match max_n {
            Some(n) => reduction_oracle(i, &j, n),
            None => OracleResult::NotRun,
        },
    );
    let (small, large) = (small?, large?);

    let deltas: Vec<i64> = small
        .c
        .iter()
        .zip(&large.c)
        .map(|(&a, &b)| b as i64 - a as i64)
        .collect();
    let witness_index = deltas.iter().position(|&x| x != 0);
    let verdict = if witness_index.is_none() {
        Verdict::Integral
    } else {
        Verdict::NotIntegral
    };
    if verdict == Verdict::NotIntegral {
        if let OracleResult::ConfirmedIntegral(n) = oracle {
            return Err(Error::Inconsistent(format!(
                "sequences differ but J^{} = I J^{n}",
                n + 1
            )));
        }
    }
    let rp = i.ring();
    let note = (!rp.is_polynomial_ring()).then(|| {
        format!(
            "verdict assumes R is equidimensional and universally catenary; equidimensionality {}",
            if rp.equidimensional_asserted() {
                "asserted by the input"
            } else {
                "NOT asserted"
            }
        )
    });
    Ok(IntegralVerdict {
        small,
        large,
        deltas,
        verdict,
        witness_index,
        oracle,
        equidimensional_asserted: rp.equidimensional_asserted(),
        note,
    })
}

/// Least `n <= max_n` with `J^{n+1} ⊆ I J^n` modulo `A`.
pub fn reduction_oracle<F: Field>(i: &IdealPresentation<F>, j: &IdealPresentation<F>, max_n: u32) -> OracleResult {
    let rp = i.ring();
    let ring = rp.ring();
    let a = rp.quotient().gens();
    let mut pows = Vec::new();
    for n in 0..=max_n as usize {
        extend_powers(ring, j.gens(), &mut pows, n + 1);
        let mut gens: Vec<_> = a.to_vec();
        for f in i.gens() {
            for g in &pows[n] {
                gens.push(ring.mul(f, g));
            }
        }
        let target = Ideal::from_parts(ring.clone(), gens);
        if pows[n + 1].iter().all(|g| target.contains(g)) {
            return OracleResult::ConfirmedIntegral(n as u32);
        }
    }
    OracleResult::Inconclusive
}
