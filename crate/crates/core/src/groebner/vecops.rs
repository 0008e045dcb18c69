//! Sorted sparse term vectors under an explicit module order.

use std::cmp::Ordering;

use crate::kernel::{ModuleOrder, Monomial, Rational, Term};

pub(crate) fn sort_desc(terms: &mut [Term], order: &ModuleOrder) {
    terms.sort_by(|a, b| order.compare(&b.mono, b.pos, &a.mono, a.pos));
}

/// `a + c * m * b` with both inputs sorted descending in `order`.
pub(crate) fn axpy(a: &[Term], c: &Rational, m: &Monomial, b: &[Term], order: &ModuleOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<Term> = b.first().map(|t| shifted(t, c, m));
    while i < a.len() {
        let Some(tb) = bj.as_ref() else { break };
        match order.compare(&a[i].mono, a[i].pos, &tb.mono, tb.pos) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(bj.take().unwrap());
                j += 1;
                bj = b.get(j).map(|t| shifted(t, c, m));
            }
            Ordering::Equal => {
                let s = &a[i].coeff + &tb.coeff;
                if !s.is_zero() {
                    out.push(Term { mono: a[i].mono.clone(), pos: a[i].pos, coeff: s });
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| shifted(t, c, m));
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    if let Some(t) = bj {
        out.push(t);
        out.extend(b[j + 1..].iter().map(|t| shifted(t, c, m)));
    }
    out
}

#[inline]
fn shifted(t: &Term, c: &Rational, m: &Monomial) -> Term {
    Term { mono: t.mono.mul(m), pos: t.pos, coeff: &t.coeff * c }
}

pub(crate) fn scale(terms: &mut [Term], c: &Rational) {
    for t in terms {
        t.coeff = &t.coeff * c;
    }
}

pub(crate) fn mul_term(terms: &[Term], c: &Rational, m: &Monomial) -> Vec<Term> {
    terms.iter().map(|t| shifted(t, c, m)).collect()
}
