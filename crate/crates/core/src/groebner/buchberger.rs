//! Buchberger's algorithm with Gebauer–Möller pair elimination and the sugar
//! refinement of the normal selection strategy.
//!
//! Polynomials are handled internally as term vectors sorted *ascending* for
//! the active order, so that the leading term sits at the end of the vector
//! and can be popped in constant time during reduction.

use std::cmp::Ordering;

use crate::kernel::{Field, Monomial, MonomialOrder, PolyRing, Polynomial};

type Terms<E> = Vec<(Monomial, E)>;

/// Internal polynomial sorted ascending for the active order.
#[derive(Clone, Debug)]
pub(crate) struct OPoly<E> {
    pub terms: Terms<E>,
    pub sugar: u64,
}

impl<E> OPoly<E> {
    fn lead(&self) -> &Monomial {
        &self.terms.last().expect("nonzero").0
    }
}

pub(crate) struct Ctx<'a, F: Field> {
    pub field: &'a F,
    pub order: &'a MonomialOrder,
    pub weights: &'a [u32],
}

impl<F: Field> Ctx<'_, F> {
    pub fn to_internal(&self, f: &Polynomial<F::Elem>) -> OPoly<F::Elem> {
        let mut terms = f.terms().to_vec();
        terms.sort_by(|a, b| self.order.cmp(&a.0, &b.0));
        let sugar = terms
            .iter()
            .map(|(m, _)| m.weighted_degree(self.weights))
            .max()
            .unwrap_or(0);
        OPoly { terms, sugar }
    }

    pub fn to_external(&self, ring: &PolyRing<F>, p: &OPoly<F::Elem>) -> Polynomial<F::Elem> {
        ring.from_terms(p.terms.clone())
    }

    fn make_monic(&self, p: &mut OPoly<F::Elem>) {
        if let Some((_, c)) = p.terms.last() {
            if !self.field.is_one(c) {
                let inv = self.field.inv(c).expect("nonzero lead");
                for (_, a) in p.terms.iter_mut() {
                    *a = self.field.mul(a, &inv);
                }
            }
        }
    }

    /// `p - c * m * g` where all inputs are ascending term vectors.
    fn sub_mul(
        &self,
        p: &[(Monomial, F::Elem)],
        c: &F::Elem,
        m: &Monomial,
        g: &[(Monomial, F::Elem)],
    ) -> Terms<F::Elem> {
        let fl = self.field;
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut i = 0;
        let mut gi = g.iter().map(|(t, a)| (t.mul(m), fl.mul(a, c))).peekable();
        while i < p.len() {
            match gi.peek() {
                None => break,
                Some((gm, _)) => match self.order.cmp(&p[i].0, gm) {
                    Ordering::Less => {
                        out.push(p[i].clone());
                        i += 1;
                    }
                    Ordering::Greater => {
                        let (gm, gc) = gi.next().unwrap();
                        out.push((gm, fl.neg(&gc)));
                    }
                    Ordering::Equal => {
                        let (gm, gc) = gi.next().unwrap();
                        let v = fl.sub(&p[i].1, &gc);
                        if !fl.is_zero(&v) {
                            out.push((gm, v));
                        }
                        i += 1;
                    }
                },
            }
        }
        out.extend(p[i..].iter().cloned());
        for (gm, gc) in gi {
            out.push((gm, fl.neg(&gc)));
        }
        out
    }

    fn find_reducer(&self, basis: &[Entry<F::Elem>], m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        basis
            .iter()
            .position(|e| e.active && e.mask & !mask == 0 && e.lead.divides(m))
    }

    /// Full reduction of `p` by the active entries of `basis`. The result's
    /// leading coefficient is not normalized.
    fn reduce(&self, mut p: OPoly<F::Elem>, basis: &[Entry<F::Elem>], full: bool) -> OPoly<F::Elem> {
        let mut rem: Terms<F::Elem> = Vec::new();
        while let Some((m, c)) = p.terms.last() {
            match self.find_reducer(basis, m) {
                Some(k) => {
                    let g = &basis[k].poly;
                    let (gm, gc) = g.terms.last().unwrap();
                    let q = gm.quotient_of(m).unwrap();
                    let coef = self.field.div(c, gc).unwrap();
                    p.sugar = p.sugar.max(g.sugar + q.weighted_degree(self.weights));
                    let n = p.terms.len();
                    p.terms = self.sub_mul(&p.terms[..n - 1], &coef, &q, &g.terms[..g.terms.len() - 1]);
                }
                None => {
                    if !full {
                        break;
                    }
                    rem.push(p.terms.pop().unwrap());
                }
            }
        }
        if full {
            rem.reverse();
            p.terms = rem;
        }
        p
    }
}

#[derive(Clone, Debug)]
struct Entry<E> {
    poly: OPoly<E>,
    lead: Monomial,
    mask: u64,
    active: bool,
}

#[derive(Clone, Debug)]
enum Item {
    Input(usize),
    Pair { i: usize, j: usize, lcm: Monomial },
}

#[derive(Clone, Debug)]
struct Queued {
    item: Item,
    sugar: u64,
    key: Monomial,
    seq: usize,
}

/// Reduced Gröbner basis of the ideal generated by `gens`. The result is
/// monic, sorted ascending by leading monomial, and returned as grevlex
/// normal-form polynomials.
pub fn reduced_basis<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    order: &MonomialOrder,
    weights: &[u32],
) -> Vec<Polynomial<F::Elem>> {
    let ctx = Ctx {
        field: ring.field(),
        order,
        weights,
    };
    let inputs: Vec<OPoly<F::Elem>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ctx.to_internal(g))
        .collect();
    if inputs.iter().any(|p| p.lead().is_one()) {
        return vec![ring.one()];
    }
    if inputs.iter().all(|p| p.terms.len() == 1) {
        let leads = minimal_monomials(inputs.iter().map(|p| p.lead().clone()).collect());
        let mut out: Vec<_> = leads
            .into_iter()
            .map(|m| ring.term(m, ring.field().one()))
            .collect();
        sort_by_lead(ring, &mut out, order);
        return out;
    }

    let mut basis: Vec<Entry<F::Elem>> = Vec::new();
    let mut queue: Vec<Queued> = Vec::new();
    let mut seq = 0;
    for (k, p) in inputs.iter().enumerate() {
        queue.push(Queued {
            item: Item::Input(k),
            sugar: p.sugar,
            key: p.lead().clone(),
            seq,
        });
        seq += 1;
    }

    while let Some(pos) = select(&queue, order) {
        let q = queue.swap_remove(pos);
        let spoly = match &q.item {
            Item::Input(k) => inputs[*k].clone(),
            Item::Pair { i, j, lcm } => {
                let (gi, gj) = (&basis[*i].poly, &basis[*j].poly);
                let mi = basis[*i].lead.quotient_of(lcm).unwrap();
                let mj = basis[*j].lead.quotient_of(lcm).unwrap();
                let one = ctx.field.one();
                let a = ctx.sub_mul(&[], &ctx.field.neg(&one), &mi, &gi.terms[..gi.terms.len() - 1]);
                let terms = ctx.sub_mul(&a, &one, &mj, &gj.terms[..gj.terms.len() - 1]);
                OPoly {
                    terms,
                    sugar: q.sugar,
                }
            }
        };
        let mut h = ctx.reduce(spoly, &basis, false);
        if h.terms.is_empty() {
            continue;
        }
        ctx.make_monic(&mut h);
        if h.lead().is_one() {
            return vec![ring.one()];
        }
        let idx = basis.len();
        let lead = h.lead().clone();
        basis.push(Entry {
            mask: lead.support_mask(),
            lead,
            poly: h,
            active: true,
        });
        update(&mut basis, &mut queue, idx, weights, &mut seq);
    }

    // interreduce the surviving elements
    let active: Vec<usize> = (0..basis.len()).filter(|&k| basis[k].active).collect();
    let mut out = Vec::with_capacity(active.len());
    for &k in &active {
        basis[k].active = false;
        let p = basis[k].poly.clone();
        let (lead_term, tail) = p.terms.split_last().unwrap();
        let tail = OPoly {
            terms: tail.to_vec(),
            sugar: p.sugar,
        };
        let mut r = ctx.reduce(tail, &basis, true);
        // the tail of an element cannot be reduced by itself
        basis[k].active = true;
        r.terms.push(lead_term.clone());
        out.push(ctx.to_external(ring, &r));
    }
    sort_by_lead(ring, &mut out, order);
    out
}

fn select(queue: &[Queued], order: &MonomialOrder) -> Option<usize> {
    if queue.is_empty() {
        return None;
    }
    let mut best = 0;
    for k in 1..queue.len() {
        let (a, b) = (&queue[k], &queue[best]);
        let c = a
            .sugar
            .cmp(&b.sugar)
            .then_with(|| order.cmp(&a.key, &b.key))
            .then_with(|| a.seq.cmp(&b.seq));
        if c == Ordering::Less {
            best = k;
        }
    }
    Some(best)
}

fn update<E>(
    basis: &mut [Entry<E>],
    queue: &mut Vec<Queued>,
    h: usize,
    weights: &[u32],
    seq: &mut usize,
) {
    let lh = basis[h].lead.clone();
    let cands: Vec<(usize, Monomial)> = (0..h)
        .filter(|&g| basis[g].active)
        .map(|g| (g, basis[g].lead.lcm(&lh)))
        .collect();

    // chain criterion among the new pairs
    let mut keep = vec![false; cands.len()];
    let mut alive = vec![true; cands.len()];
    for a in 0..cands.len() {
        alive[a] = false;
        let (g1, l1) = &cands[a];
        let coprime = basis[*g1].lead.is_coprime(&lh);
        let dominated = (0..cands.len()).any(|b| (alive[b] || keep[b]) && cands[b].1.divides(l1));
        if coprime || !dominated {
            keep[a] = true;
        }
    }

    // old pairs whose lcm is strictly divisible by the new lead are dropped
    queue.retain(|q| match &q.item {
        Item::Input(_) => true,
        Item::Pair { i, j, lcm } => {
            !lh.divides(lcm)
                || basis[*i].lead.lcm(&lh) == *lcm
                || basis[*j].lead.lcm(&lh) == *lcm
        }
    });

    for (a, (g, lcm)) in cands.into_iter().enumerate() {
        if !keep[a] || basis[g].lead.is_coprime(&lh) {
            continue;
        }
        let sg = basis[g].poly.sugar + basis[g].lead.quotient_of(&lcm).unwrap().weighted_degree(weights);
        let sh = basis[h].poly.sugar + lh.quotient_of(&lcm).unwrap().weighted_degree(weights);
        queue.push(Queued {
            item: Item::Pair { i: g, j: h, lcm: lcm.clone() },
            sugar: sg.max(sh),
            key: lcm,
            seq: *seq,
        });
        *seq += 1;
    }

    for g in 0..h {
        if basis[g].active && lh.divides(&basis[g].lead) {
            basis[g].active = false;
        }
    }
}

/// Minimal generators of a monomial ideal, in the input's relative order.
pub fn minimal_monomials(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by_key(|m| m.degree());
    ms.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(ms.len());
    for m in ms {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn sort_by_lead<F: Field>(ring: &PolyRing<F>, ps: &mut [Polynomial<F::Elem>], order: &MonomialOrder) {
    ps.sort_by(|a, b| {
        let la = ring.leading_term(a, order).unwrap().0;
        let lb = ring.leading_term(b, order).unwrap().0;
        order.cmp(&la, &lb)
    });
}

/// Remainder of `f` modulo a Gröbner basis for `order`.
pub fn normal_form<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    basis: &[Polynomial<F::Elem>],
    order: &MonomialOrder,
) -> Polynomial<F::Elem> {
    let weights = vec![1; ring.nvars()];
    let ctx = Ctx {
        field: ring.field(),
        order,
        weights: &weights,
    };
    let entries: Vec<Entry<F::Elem>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let poly = ctx.to_internal(g);
            let lead = poly.lead().clone();
            Entry {
                mask: lead.support_mask(),
                lead,
                poly,
                active: true,
            }
        })
        .collect();
    let r = ctx.reduce(ctx.to_internal(f), &entries, true);
    ctx.to_external(ring, &r)
}
