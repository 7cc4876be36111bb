use std::sync::Arc;

use multiseq_core::blowup::graded_cone_presentation;
use multiseq_core::groebner::{saturate, Ideal, IdealPresentation, RingPresentation};
use multiseq_core::io::{parse_polynomial, IdealSpec, Options, ProblemFile, TaskKind, TaskSpec};
use multiseq_core::kernel::{Field, Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField};
use multiseq_core::multseq::Route;
use multiseq_core::Error;
use proptest::prelude::*;

type P = Polynomial<u32>;

fn ring(n: usize) -> Arc<PolyRing<PrimeField>> {
    let names = ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect();
    PolyRing::new(PrimeField::new(32003).unwrap(), names)
}

fn poly(r: &PolyRing<PrimeField>, terms: &[(Vec<u16>, i64)]) -> P {
    r.from_terms(
        terms
            .iter()
            .map(|(e, c)| (Monomial::new(e.clone()), r.field().from_i64(*c)))
            .collect(),
    )
}

fn terms(n: usize, max_exp: u16, max_len: usize) -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), -20i64..20), 0..=max_len)
}

/// Homogeneous terms of degree `deg` in `n` variables.
fn homogeneous_terms(n: usize, deg: u16, max_len: usize) -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    let mono = prop::collection::vec(0..=deg, n - 1).prop_map(move |mut e| {
        let mut left = deg;
        for x in e.iter_mut() {
            *x = (*x).min(left);
            left -= *x;
        }
        e.push(left);
        e
    });
    prop::collection::vec((mono, 1i64..20), 1..=max_len)
}

fn homogeneous_ideal(n: usize, max_gens: usize) -> impl Strategy<Value = Vec<(u16, Vec<(Vec<u16>, i64)>)>> {
    prop::collection::vec((1u16..=2).prop_flat_map(move |d| (Just(d), homogeneous_terms(n, d, 3))), 1..=max_gens)
}

fn orders(n: usize) -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::GrevLex,
        MonomialOrder::Lex,
        MonomialOrder::weighted_grevlex((1..=n as u32).collect()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in terms(3, 3, 5), b in terms(3, 3, 5), c in terms(3, 3, 5)) {
        let r = ring(3);
        let (f, g, h) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(r.add(&f, &g), r.add(&g, &f));
        prop_assert_eq!(r.mul(&f, &g), r.mul(&g, &f));
        prop_assert_eq!(r.add(&r.add(&f, &g), &h), r.add(&f, &r.add(&g, &h)));
        prop_assert_eq!(r.mul(&r.mul(&f, &g), &h), r.mul(&f, &r.mul(&g, &h)));
        prop_assert_eq!(r.mul(&f, &r.add(&g, &h)), r.add(&r.mul(&f, &g), &r.mul(&f, &h)));
        prop_assert!(r.add(&f, &r.neg(&f)).is_zero());
        prop_assert_eq!(r.mul(&f, &r.one()), f.clone());
        prop_assert_eq!(r.sub(&f, &g), r.add(&f, &r.neg(&g)));
    }

    #[test]
    fn leading_terms_multiply(a in terms(3, 4, 5), b in terms(3, 4, 5), w in prop::collection::vec(0u32..4, 3)) {
        let r = ring(3);
        let (f, g) = (poly(&r, &a), poly(&r, &b));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = r.mul(&f, &g);
        for order in orders(3) {
            let (mf, cf) = r.leading_term(&f, &order).unwrap();
            let (mg, cg) = r.leading_term(&g, &order).unwrap();
            let (m, c) = r.leading_term(&fg, &order).unwrap();
            prop_assert_eq!(m, mf.mul(&mg));
            prop_assert_eq!(c, r.field().mul(&cf, &cg));
        }
        let inf = r.weighted_initial_form(&f, &w).unwrap();
        let ing = r.weighted_initial_form(&g, &w).unwrap();
        prop_assert_eq!(r.weighted_initial_form(&fg, &w).unwrap(), r.mul(&inf, &ing));
    }

    #[test]
    fn dimension_does_not_depend_on_the_order(gens in homogeneous_ideal(3, 3)) {
        let r = ring(3);
        let gens: Vec<P> = gens.iter().map(|(_, t)| poly(&r, t)).collect();
        let i = Ideal::new(r.clone(), gens).unwrap();
        prop_assert_eq!(i.krull_dimension_in(&MonomialOrder::GrevLex), i.krull_dimension_in(&MonomialOrder::Lex));
    }

    #[test]
    fn saturation_is_stable(a in homogeneous_ideal(3, 3), b in homogeneous_ideal(3, 2)) {
        let r = ring(3);
        let a = Ideal::new(r.clone(), a.iter().map(|(_, t)| poly(&r, t)).collect()).unwrap();
        let b = Ideal::new(r.clone(), b.iter().map(|(_, t)| poly(&r, t)).collect()).unwrap();
        let (s, _) = saturate(&a, &b).unwrap();
        prop_assert!(a.is_subset(&s));
        let (again, _) = saturate(&s, &b).unwrap();
        prop_assert!(again.equals(&s));
    }

    #[test]
    fn parser_never_panics(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
        if let Err(e) = ProblemFile::from_bytes(&bytes) {
            prop_assert!(matches!(e, Error::Parse { line, column, .. } if line >= 1 && column >= 1), "{:?}", e);
        }
        let r = ring(3);
        if let Err(e) = parse_polynomial(&String::from_utf8_lossy(&bytes), &r) {
            prop_assert!(matches!(e, Error::Parse { .. }), "{:?}", e);
        }
    }

    #[test]
    fn formatted_polynomials_parse_back(a in terms(3, 5, 6)) {
        let r = ring(3);
        let f = poly(&r, &a);
        prop_assert_eq!(parse_polynomial(&r.format(&f), &r).unwrap(), f);
    }
}

/// `λ(G_uv)` for an ideal generated in degree `δ`: the only degree where
/// `G_uv` is nonzero is `u + vδ`, and there it is `[I^v]/[I^{v+1}]`.
fn brute_force_component(powers: &[Ideal<PrimeField>], delta: u32, u: u32, v: u32) -> i128 {
    let e = (u + v * delta) as i64;
    let hf = |k: usize| -> i128 {
        if k == 0 {
            0
        } else {
            powers[k].hilbert_series().hilbert_function(e)
        }
    };
    let below = if v == 0 { 0 } else { hf(v as usize) };
    hf(v as usize + 1) - below
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn bigraded_components_match_brute_force(
        n in 2usize..=3,
        delta in 1u16..=2,
        seed_terms in prop::collection::vec(homogeneous_terms(3, 2, 3), 1..=3),
    ) {
        let r = ring(n);
        let gens: Vec<P> = seed_terms
            .iter()
            .map(|t| {
                // project to n variables and the chosen degree
                let projected: Vec<(Vec<u16>, i64)> = t
                    .iter()
                    .map(|(e, c)| {
                        let mut e: Vec<u16> = e[..n].to_vec();
                        let d: u16 = e.iter().sum();
                        if d < delta {
                            e[n - 1] += delta - d;
                        } else {
                            let mut extra = d - delta;
                            for x in e.iter_mut() {
                                let take = extra.min(*x);
                                *x -= take;
                                extra -= take;
                            }
                        }
                        (e, *c)
                    })
                    .collect();
                poly(&r, &projected)
            })
            .filter(|g| !g.is_zero())
            .collect();
        prop_assume!(!gens.is_empty());
        let rp = Arc::new(RingPresentation::polynomial(r.clone()));
        let ideal = IdealPresentation::new(rp, gens.clone(), "I").unwrap();
        let g = graded_cone_presentation(&ideal).unwrap();
        let base = Ideal::new(r.clone(), gens).unwrap();
        let powers: Vec<Ideal<PrimeField>> = (0..=9).map(|k| base.power(k)).collect();
        for u in 0..=8u32 {
            for v in 0..=8 - u {
                prop_assert_eq!(
                    g.component_length(u, v),
                    brute_force_component(&powers, delta as u32, u, v),
                    "u = {}, v = {}", u, v
                );
            }
        }
    }

    #[test]
    fn problem_files_round_trip(
        nvars in 1usize..=4,
        char_choice in 0usize..3,
        ideals in prop::collection::vec(terms(4, 3, 4), 0..3),
        quotient in prop::option::of(terms(4, 2, 2)),
        seed in prop::option::of(any::<u64>()),
        route in prop::option::of(prop_oneof![Just(Route::A), Just(Route::B), Just(Route::C)]),
        flags in (any::<Option<bool>>(), any::<Option<bool>>(), any::<Option<u32>>()),
        kind in 0usize..TaskKind::ALL.len(),
    ) {
        let characteristic = [None, Some(0), Some(7)][char_choice];
        let r = ring(nvars);
        let spec_of = |t: &Vec<(Vec<u16>, i64)>| {
            let t: Vec<(Vec<u16>, i64)> = t.iter().map(|(e, c)| (e[..nvars].to_vec(), *c)).collect();
            r.format(&poly(&r, &t))
        };
        let file = ProblemFile {
            characteristic,
            vars: r.names().to_vec(),
            quotient: quotient.iter().map(&spec_of).collect(),
            ideals: ideals
                .iter()
                .enumerate()
                .map(|(k, t)| IdealSpec { label: format!("I{k}"), gens: vec![spec_of(t)] })
                .collect(),
            task: Some(TaskSpec { kind: TaskKind::ALL[kind], labels: vec!["I0".into()] }),
            options: Options {
                seed,
                route,
                equidimensional: flags.0,
                join: flags.1,
                max_n: flags.2,
                ..Options::default()
            },
        };
        prop_assert_eq!(&ProblemFile::parse(&file.to_text()).unwrap(), &file);
        prop_assert_eq!(&ProblemFile::parse(&file.to_json()).unwrap(), &file);
    }
}

#[test]
fn parse_errors_carry_file_positions() {
    let e = ProblemFile::parse("vars x, y\n\nideal I = x^2 + w\n").unwrap_err();
    assert_eq!(e.to_string(), "unknown variable w at 3:17");
    let f = ProblemFile::parse("vars x\nideal I = x\n").unwrap();
    assert_eq!(f.ideals[0].gens, vec!["x"]);
}
