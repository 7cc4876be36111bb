//! Turns a problem file into a report.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use super::parser::parse_polynomial;
use super::problem::{Options, ProblemFile, Settings, TaskKind};
use super::report::{EndpointSection, HilbertSection, Report, Sequences, SvSection};
use crate::blowup::analytic_spread;
use crate::dependence::check_integral;
use crate::error::{Error, Result};
use crate::groebner::{IdealPresentation, RingPresentation};
use crate::kernel::{Field, PolyRing, PrimeField, Rationals};
use crate::multseq::{
    hs_multiplicity_oracle, length_formula_sequence, multiplicity_sequence, multseq_oracle_truncated,
    sequence_endpoints, MultiplicitySequence, Route,
};
use crate::sv::{sv_degrees, sv_instance};

/// Runs the file's task. `kind` replaces the task named in the file, and
/// `overrides` replaces its options. With `normalize`, timings are left out
/// so that equal inputs give byte-identical reports.
pub fn run_task(file: &ProblemFile, kind: Option<TaskKind>, overrides: &Options, normalize: bool) -> Result<Report> {
    let start = Instant::now();
    let file_kind = file.task.as_ref().map(|t| t.kind);
    let kind = kind
        .or(file_kind)
        .ok_or_else(|| Error::Format("no task given".into()))?;
    let labels = match &file.task {
        Some(t) if t.kind == kind && !t.labels.is_empty() => t.labels.clone(),
        _ => kind.default_labels(),
    };
    let needed = kind.default_labels().len();
    if labels.len() != needed {
        return Err(Error::Format(format!(
            "task {} takes {needed} ideal label(s), got {}",
            kind.as_str(),
            labels.len()
        )));
    }
    let settings = file.options.overridden_by(overrides).settings();
    let p = file.field_spec()?.characteristic;
    let mut report = if p == 0 {
        Runner::new(file, Rationals, settings)?.run(kind, &labels)?
    } else {
        Runner::new(file, PrimeField::new(p)?, settings)?.run(kind, &labels)?
    };
    if !normalize {
        let mut t = BTreeMap::new();
        t.insert("total".to_string(), start.elapsed().as_millis() as u64);
        report.timings_ms = Some(t);
    }
    Ok(report)
}

struct Runner<'a, F: Field> {
    file: &'a ProblemFile,
    ring: Arc<PolyRing<F>>,
    presentation: Arc<RingPresentation<F>>,
    settings: Settings,
}

fn randomness_warning(seeds: &[u64]) -> String {
    format!(
        "general elements are random; agreement across seeds {seeds:?} makes a non-general draw unlikely but not impossible"
    )
}

impl<'a, F: Field> Runner<'a, F> {
    fn new(file: &'a ProblemFile, field: F, settings: Settings) -> Result<Self> {
        let ring = PolyRing::new(field, file.vars.clone());
        let quotient = file
            .quotient
            .iter()
            .map(|t| parse_polynomial(t, &ring))
            .collect::<Result<Vec<_>>>()?;
        let presentation = if quotient.is_empty() {
            RingPresentation::polynomial(ring.clone())
        } else {
            RingPresentation::new(ring.clone(), quotient, settings.equidimensional)?
        };
        Ok(Self {
            file,
            ring,
            presentation: Arc::new(presentation),
            settings,
        })
    }

    fn ideal_in(&self, label: &str, ring: &Arc<PolyRing<F>>, rp: &Arc<RingPresentation<F>>) -> Result<IdealPresentation<F>> {
        let spec = self.file.ideal(label)?;
        let gens = spec
            .gens
            .iter()
            .map(|t| parse_polynomial(t, ring))
            .collect::<Result<Vec<_>>>()?;
        IdealPresentation::new(rp.clone(), gens, label)
    }

    fn ideal(&self, label: &str) -> Result<IdealPresentation<F>> {
        self.ideal_in(label, &self.ring, &self.presentation)
    }

    fn report(&self, kind: TaskKind, labels: &[String]) -> Report {
        let mut r = Report::new(kind.as_str(), labels.to_vec(), self.ring.field().characteristic());
        let rp = &self.presentation;
        if !rp.is_polynomial_ring() && !rp.equidimensional_asserted() {
            r.warnings.push(
                "R is a proper quotient not asserted equidimensional; height, vanishing and dependence statements assume it is"
                    .into(),
            );
        }
        r
    }

    fn run(&self, kind: TaskKind, labels: &[String]) -> Result<Report> {
        match kind {
            TaskKind::Multseq | TaskKind::Jmult | TaskKind::Endpoints => self.sequence_task(kind, labels),
            TaskKind::CheckIntegral => self.integral_task(labels),
            TaskKind::Sv => self.sv_task(labels),
            TaskKind::Hilbert => self.hilbert_task(labels),
        }
    }

    fn sequence_by(&self, route: Route, ideal: &IdealPresentation<F>) -> Result<MultiplicitySequence> {
        match route {
            Route::A => multseq_oracle_truncated(ideal, self.settings.cap_rs),
            Route::B => multiplicity_sequence(ideal),
            Route::C => length_formula_sequence(ideal, self.settings.seed, self.settings.seeds),
        }
    }

    fn route_c_applies(&self, ideal: &IdealPresentation<F>) -> bool {
        ideal.is_equigenerated() && (self.presentation.is_polynomial_ring() || self.presentation.equidimensional_asserted())
    }

    fn sequence_task(&self, kind: TaskKind, labels: &[String]) -> Result<Report> {
        let ideal = self.ideal(&labels[0])?;
        let mut r = self.report(kind, labels);
        let route = self.settings.route;
        let mut seq = self.sequence_by(route, &ideal)?;
        if self.settings.oracle {
            let others: Vec<Route> = [Route::A, Route::B, Route::C]
                .into_iter()
                .filter(|&o| o != route && (o != Route::C || self.route_c_applies(&ideal)))
                .collect();
            let results: Vec<Result<MultiplicitySequence>> = {
                use rayon::prelude::*;
                others.par_iter().map(|&o| self.sequence_by(o, &ideal)).collect()
            };
            for other in results {
                let other = other?;
                if !seq.crosscheck(&other) {
                    return Err(Error::Inconsistent(format!(
                        "route {route} gave {:?} but route {} gave {:?}",
                        seq.c, other.route, other.c
                    )));
                }
            }
        }
        let used_c = route == Route::C || seq.crosschecks.iter().any(|x| x.route == Route::C);
        if used_c {
            let seeds: Vec<u64> = if route == Route::C {
                seq.seeds.clone()
            } else {
                seq.crosschecks
                    .iter()
                    .filter(|x| x.route == Route::C)
                    .flat_map(|x| x.seeds.clone())
                    .collect()
            };
            r.warnings.push(randomness_warning(&seeds));
        }
        let (ht, ell) = sequence_endpoints(&seq)?;
        r.c = Some(seq.c.clone());
        r.j = Some(seq.get(seq.d));
        r.ht = Some(ht);
        r.ell = Some(ell);
        r.route = Some(route);
        r.seeds = seq.seeds.clone();
        if kind == TaskKind::Endpoints {
            let height = ideal.height();
            let spread = analytic_spread(&ideal)?;
            let agrees = height == ht && spread == ell;
            if !agrees {
                if self.presentation.is_polynomial_ring() || self.presentation.equidimensional_asserted() {
                    return Err(Error::Inconsistent(format!(
                        "sequence endpoints ({ht}, {ell}) differ from height {height} and analytic spread {spread}"
                    )));
                }
                r.warnings
                    .push("endpoints differ from the independent height and analytic spread".into());
            }
            r.endpoints = Some(EndpointSection {
                height,
                analytic_spread: spread,
                agrees,
            });
        }
        r.crosschecks = seq.crosschecks;
        Ok(r)
    }

    fn integral_task(&self, labels: &[String]) -> Result<Report> {
        let i = self.ideal(&labels[0])?;
        let j = self.ideal(&labels[1])?;
        let v = check_integral(&i, &j, self.settings.join, Some(self.settings.max_n))?;
        let mut r = self.report(TaskKind::CheckIntegral, labels);
        r.route = Some(Route::B);
        r.verdict = Some(v.verdict);
        r.witness_index = v.witness_index;
        r.sequences = Some(Sequences {
            small: v.small.c.clone(),
            large: v.large.c.clone(),
        });
        r.deltas = Some(v.deltas.clone());
        r.oracle = Some(v.oracle.to_string());
        if let Some(note) = v.note {
            r.warnings.push(note);
        }
        Ok(r)
    }

    fn sv_task(&self, labels: &[String]) -> Result<Report> {
        if !self.presentation.is_polynomial_ring() {
            return Err(Error::Unsupported("sv takes no quotient; give both schemes as ideals".into()));
        }
        let names = &self.file.vars;
        if !names.len().is_multiple_of(2) {
            return Err(Error::Format(format!(
                "sv needs an even number of variables (X then Y), got {}",
                names.len()
            )));
        }
        let half = names.len() / 2;
        let field = self.ring.field().clone();
        let rx = PolyRing::new(field.clone(), names[..half].to_vec());
        let ry = PolyRing::new(field, names[half..].to_vec());
        let px = Arc::new(RingPresentation::polynomial(rx.clone()));
        let py = Arc::new(RingPresentation::polynomial(ry.clone()));
        let x = self.ideal_in(&labels[0], &rx, &px)?;
        let y = self.ideal_in(&labels[1], &ry, &py)?;
        let inst = sv_instance(&x, &y, self.settings.seed)?;
        let rep = sv_degrees(&inst, self.settings.seeds)?;
        let mut r = self.report(TaskKind::Sv, labels);
        let (ht, ell) = sequence_endpoints(&rep.sequence)?;
        r.c = Some(rep.c.clone());
        r.j = Some(rep.sequence.get(rep.sequence.d));
        r.ht = Some(ht);
        r.ell = Some(ell);
        r.route = Some(Route::B);
        r.seeds = rep.sequence.seeds.clone();
        r.crosschecks = rep.sequence.crosschecks.clone();
        r.warnings.push(randomness_warning(&r.seeds.clone()));
        r.sv = Some(SvSection {
            degrees: rep.degrees,
            sum: rep.sum,
            degree_x: inst.degree_x,
            degree_y: inst.degree_y,
            degree_product: rep.degree_product,
        });
        Ok(r)
    }

    fn hilbert_task(&self, labels: &[String]) -> Result<Report> {
        let ideal = self.ideal(&labels[0])?;
        let hs = ideal.ambient().hilbert_series();
        let dimension = hs.dimension();
        let samuel = if dimension == 0 && !ideal.is_zero() {
            Some(hs_multiplicity_oracle(&ideal, self.settings.cap_n)?)
        } else {
            None
        };
        let mut r = self.report(TaskKind::Hilbert, labels);
        r.hilbert = Some(HilbertSection {
            numerator: hs.numerator.clone(),
            nvars: hs.nvars,
            dimension,
            degree: hs.degree(),
            length: hs.total_length(),
            samuel_multiplicity: samuel,
        });
        Ok(r)
    }
}
