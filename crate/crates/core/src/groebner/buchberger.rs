//! Homogeneous Buchberger with Gebauer–Möller pair elimination.
//!
//! Pairs and inputs are processed degree by degree. An input that survives
//! reduction against everything of its degree and below is a minimal
//! generator. With cofactor tracking enabled, every basis element carries its
//! expression in terms of the inputs, and every S-pair that reduces to zero
//! (plus every input that reduces to zero) contributes a syzygy of the inputs;
//! together these generate the full syzygy module.

use std::cmp::Ordering;

use super::vecops::{axpy, mul_term, scale, sort_desc};
use crate::kernel::{ModuleOrder, Monomial, Rational, Term};

pub(crate) struct Elem {
    pub terms: Vec<Term>,
    pub degree: i64,
    /// Expression in terms of the inputs, canonical order. Empty unless tracking.
    pub cof: Vec<Term>,
}

impl Elem {
    fn lead(&self) -> &Term {
        &self.terms[0]
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: usize,
    degree: i64,
}

pub(crate) struct Run {
    pub basis: Vec<Elem>,
    /// Indices of inputs that are part of a minimal generating set.
    pub minimal_inputs: Vec<usize>,
    /// Generators of the syzygy module of the inputs (only when tracking).
    pub syzygies: Vec<Vec<Term>>,
}

pub(crate) struct Input<'a> {
    pub terms: &'a [Term],
    pub degree: i64,
}

/// Compute a (non-reduced) Gröbner basis of the submodule generated by
/// `inputs`, each homogeneous of the stated degree. Terms need not be sorted
/// in `order`.
pub(crate) fn run(inputs: &[Input<'_>], nvars: usize, rank1: bool, order: &ModuleOrder, track: bool) -> Run {
    let cof_order = ModuleOrder::default();
    let mut basis: Vec<Elem> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut syzygies = Vec::new();
    let mut minimal_inputs = Vec::new();

    let mut pending: Vec<usize> = Vec::new();
    for (k, inp) in inputs.iter().enumerate() {
        if inp.terms.is_empty() {
            if track {
                syzygies.push(vec![unit(k, nvars)]);
            }
        } else {
            pending.push(k);
        }
    }
    pending.sort_by_key(|&k| (inputs[k].degree, k));
    let mut next_input = 0;

    loop {
        let pair_deg = pairs.iter().map(|p| p.degree).min();
        let input_deg = pending.get(next_input).map(|&k| inputs[k].degree);
        let d = match (pair_deg, input_deg) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if pair_deg == Some(d) {
            let idx = select_pair(&pairs, d, order);
            let p = pairs.swap_remove(idx);
            let (gi, gj) = (&basis[p.i], &basis[p.j]);
            let mi = gi.lead().mono.quotient_of(&p.lcm);
            let mj = gj.lead().mono.quotient_of(&p.lcm);
            let neg = Rational::from_int(-1);
            let one = Rational::one();
            let mut h = axpy(&mul_term(&gi.terms, &one, &mi), &neg, &mj, &gj.terms, order);
            let mut cof = if track {
                axpy(&mul_term(&gi.cof, &one, &mi), &neg, &mj, &gj.cof, &cof_order)
            } else {
                Vec::new()
            };
            reduce_top(&mut h, &mut cof, &basis, order, track);
            if h.is_empty() {
                if track && !cof.is_empty() {
                    syzygies.push(cof);
                }
            } else {
                insert(&mut basis, &mut pairs, h, cof, d, rank1, track, &mut syzygies);
            }
        } else {
            while let Some(&k) = pending.get(next_input) {
                if inputs[k].degree != d {
                    break;
                }
                next_input += 1;
                let mut h = inputs[k].terms.to_vec();
                sort_desc(&mut h, order);
                let mut cof = if track { vec![unit(k, nvars)] } else { Vec::new() };
                reduce_top(&mut h, &mut cof, &basis, order, track);
                if h.is_empty() {
                    if track {
                        syzygies.push(cof);
                    }
                } else {
                    minimal_inputs.push(k);
                    insert(&mut basis, &mut pairs, h, cof, d, rank1, track, &mut syzygies);
                }
            }
        }
    }
    Run { basis, minimal_inputs, syzygies }
}

fn unit(k: usize, nvars: usize) -> Term {
    Term { mono: Monomial::one(nvars), pos: k, coeff: Rational::one() }
}

fn select_pair(pairs: &[Pair], d: i64, order: &ModuleOrder) -> usize {
    let mut best: Option<usize> = None;
    for (idx, p) in pairs.iter().enumerate() {
        if p.degree != d {
            continue;
        }
        best = match best {
            None => Some(idx),
            Some(b) => {
                let q = &pairs[b];
                let c = order
                    .compare(&p.lcm, p.pos, &q.lcm, q.pos)
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)));
                if c == Ordering::Less {
                    Some(idx)
                } else {
                    Some(b)
                }
            }
        };
    }
    best.expect("a pair of the requested degree")
}

/// Top-reduce `h` (sorted in `order`) by `basis`, updating the cofactor.
pub(crate) fn reduce_top(h: &mut Vec<Term>, cof: &mut Vec<Term>, basis: &[Elem], order: &ModuleOrder, track: bool) {
    let cof_order = ModuleOrder::default();
    while let Some(lt) = h.first() {
        let Some(g) = basis
            .iter()
            .find(|g| g.lead().pos == lt.pos && g.lead().mono.divides(&lt.mono))
        else {
            return;
        };
        let q = g.lead().mono.quotient_of(&lt.mono);
        let c = -&lt.coeff;
        *h = axpy(h, &c, &q, &g.terms, order);
        if track {
            *cof = axpy(cof, &c, &q, &g.cof, &cof_order);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn insert(
    basis: &mut Vec<Elem>,
    pairs: &mut Vec<Pair>,
    mut h: Vec<Term>,
    mut cof: Vec<Term>,
    degree: i64,
    rank1: bool,
    track: bool,
    syzygies: &mut Vec<Vec<Term>>,
) {
    let inv = h[0].coeff.recip();
    if !inv.is_one() {
        scale(&mut h, &inv);
        scale(&mut cof, &inv);
    }
    let new = basis.len();
    basis.push(Elem { terms: h, degree, cof });
    let hl = basis[new].lead().clone();

    // candidate pairs with the new element
    let cands: Vec<(usize, Monomial)> = (0..new)
        .filter(|&g| basis[g].lead().pos == hl.pos)
        .map(|g| (g, basis[g].lead().mono.lcm(&hl.mono)))
        .collect();
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for (idx, (g, l)) in cands.iter().enumerate() {
        let coprime = rank1 && basis[*g].lead().mono.coprime(&hl.mono);
        let dominated = cands[idx + 1..].iter().any(|(_, l2)| l2.divides(l))
            || kept.iter().any(|(_, l2, _)| l2.divides(l));
        if coprime || !dominated {
            kept.push((*g, l.clone(), coprime));
        }
    }

    // chain criterion on existing pairs
    pairs.retain(|p| {
        if p.pos != hl.pos || !hl.mono.divides(&p.lcm) {
            return true;
        }
        let li = basis[p.i].lead().mono.lcm(&hl.mono);
        let lj = basis[p.j].lead().mono.lcm(&hl.mono);
        li == p.lcm || lj == p.lcm
    });

    for (g, l, coprime) in kept {
        if coprime {
            if track {
                syzygies.push(koszul(&basis[new], &basis[g]));
            }
            continue;
        }
        let degree = basis[g].degree + (l.degree() as i64 - basis[g].lead().mono.degree() as i64);
        pairs.push(Pair { i: g, j: new, lcm: l, pos: hl.pos, degree });
    }
}

/// `g * T_h - h * T_g` for rank-one elements with coprime leads.
fn koszul(h: &Elem, g: &Elem) -> Vec<Term> {
    let cof_order = ModuleOrder::default();
    let mut acc: Vec<Term> = Vec::new();
    for t in &g.terms {
        acc = axpy(&acc, &t.coeff, &t.mono, &h.cof, &cof_order);
    }
    for t in &h.terms {
        acc = axpy(&acc, &-&t.coeff, &t.mono, &g.cof, &cof_order);
    }
    acc
}

/// Turn a basis into the reduced Gröbner basis: drop elements with divisible
/// leads, fully reduce tails, normalize to monic. Result sorted ascending by lead.
pub(crate) fn interreduce(elems: Vec<Vec<Term>>, order: &ModuleOrder) -> Vec<Vec<Term>> {
    let mut kept: Vec<Vec<Term>> = Vec::new();
    for (k, e) in elems.iter().enumerate() {
        let l = &e[0];
        let redundant = elems.iter().enumerate().any(|(j, f)| {
            j != k
                && f[0].pos == l.pos
                && f[0].mono.divides(&l.mono)
                && (f[0].mono != l.mono || j < k)
        });
        if !redundant {
            kept.push(e.clone());
        }
    }
    let mut out = Vec::with_capacity(kept.len());
    for (k, e) in kept.iter().enumerate() {
        let others: Vec<&Vec<Term>> = kept.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, f)| f).collect();
        let mut head = vec![e[0].clone()];
        let tail = full_reduce(e[1..].to_vec(), &others, order);
        head.extend(tail);
        let inv = head[0].coeff.recip();
        scale(&mut head, &inv);
        out.push(head);
    }
    out.sort_by(|a, b| order.compare(&a[0].mono, a[0].pos, &b[0].mono, b[0].pos));
    out
}

/// Complete reduction of `h` (sorted) modulo `basis` elements (sorted, any leads).
pub(crate) fn full_reduce(mut h: Vec<Term>, basis: &[&Vec<Term>], order: &ModuleOrder) -> Vec<Term> {
    let mut rest: Vec<Term> = Vec::new();
    while !h.is_empty() {
        let lt = &h[0];
        match basis.iter().find(|g| g[0].pos == lt.pos && g[0].mono.divides(&lt.mono)) {
            Some(g) => {
                let q = g[0].mono.quotient_of(&lt.mono);
                let c = -&(&lt.coeff / &g[0].coeff);
                h = axpy(&h, &c, &q, g, order);
            }
            None => {
                rest.push(h.remove(0));
            }
        }
    }
    rest
}
