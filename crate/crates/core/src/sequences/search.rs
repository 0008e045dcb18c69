use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::classify::{sequential_obstruction, SequenceKind};
use super::multiplicity::format_seq;
use super::sequence::{check_sequence, is_part_of_sop, is_sop};
use crate::error::{Error, Result};
use crate::groebner::Submodule;
use crate::homology::PresentedModule;
use crate::kernel::{Monomial, Polynomial, Rational, Ring};

/// Attempts made by [`find_sequence`] before giving up.
pub const DEFAULT_BUDGET: usize = 64;

/// Independent stream number `index` of the generator seeded by `seed`, so
/// parallel samples do not depend on scheduling.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Nonzero linear form with coefficients in `[-3, 3]`; with `sparse` each
/// variable is kept with probability one half.
pub fn random_linear_form(ring: &Arc<Ring>, rng: &mut impl Rng, sparse: bool) -> Polynomial {
    loop {
        let coeffs: Vec<i64> = (0..ring.nvars())
            .map(|_| if sparse && rng.gen_bool(0.5) { 0 } else { rng.gen_range(-3..=3) })
            .collect();
        if coeffs.iter().any(|&c| c != 0) {
            return Polynomial::linear(ring, &coeffs);
        }
    }
}

pub fn random_linear_forms(ring: &Arc<Ring>, rng: &mut impl Rng, count: usize, sparse: bool) -> Vec<Polynomial> {
    (0..count).map(|_| random_linear_form(ring, rng, sparse)).collect()
}

fn monomials_of_degree(n: usize, k: u32) -> Vec<Monomial> {
    fn go(n: usize, k: u32, v: usize, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if v + 1 == n {
            cur[v] = k as u16;
            out.push(Monomial::new(cur));
            cur[v] = 0;
            return;
        }
        for e in (0..=k).rev() {
            cur[v] = e as u16;
            go(n, k - e, v + 1, cur, out);
        }
        cur[v] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    go(n, k, 0, &mut vec![0; n], &mut out);
    out
}

/// Random form of degree `k` with coefficients in `[-3, 3]` (possibly zero).
fn random_form(ring: &Arc<Ring>, rng: &mut impl Rng, k: u32) -> Polynomial {
    let terms = monomials_of_degree(ring.nvars(), k)
        .into_iter()
        .map(|m| (m, Rational::from_int(rng.gen_range(-3..=3))))
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Searches for a sequence of linear forms of the given kind and length
/// which is also part of a system of parameters (a full one when `length`
/// equals `dim M`). Tries `x_1, ..., x_length` first, then seeded random
/// forms; every candidate is checked exactly.
pub fn find_sequence(m: &PresentedModule, kind: SequenceKind, length: usize, seed: u64) -> Result<Vec<Polynomial>> {
    find_sequence_with_budget(m, kind, length, seed, DEFAULT_BUDGET)
}

pub fn find_sequence_with_budget(
    m: &PresentedModule,
    kind: SequenceKind,
    length: usize,
    seed: u64,
    budget: usize,
) -> Result<Vec<Polynomial>> {
    let d = m.dim();
    if length as i64 > d.max(0) {
        return Err(Error::IndexOutOfRange { index: length, max: d.max(0) as usize });
    }
    if length == 0 {
        return Ok(Vec::new());
    }
    if kind == SequenceKind::Sequential {
        if let Some(j) = sequential_obstruction(m)? {
            return Err(Error::NoSequentialElement(j));
        }
    }
    let ring = m.ring();
    let n = ring.nvars();
    for attempt in 0..budget {
        let fs = if attempt == 0 && length <= n {
            (0..length).map(|i| Polynomial::var(ring, i)).collect()
        } else {
            let mut rng = sample_rng(seed, attempt as u64);
            random_linear_forms(ring, &mut rng, length, attempt % 2 == 1)
        };
        let parameters = if length as i64 == d { is_sop(m, &fs)? } else { is_part_of_sop(m, &fs)? };
        if parameters && check_sequence(m, &fs, kind)?.verdict {
            return Ok(fs);
        }
    }
    Err(Error::NotFound { kind: kind.to_string(), length, attempts: budget })
}

fn product_ideal(ring: &Arc<Ring>, a: &[Polynomial], b: &[Polynomial]) -> Result<Submodule> {
    let mut gens = Vec::with_capacity(a.len() * b.len());
    for f in a {
        for g in b {
            gens.push(f * g);
        }
    }
    Ok(Submodule::ideal(ring, &gens)?.minimal_generators())
}

/// `a(M) = Ann K^0(M) ... Ann K^{d-1}(M)`, the product of the annihilators of
/// the local cohomology modules below the dimension.
pub fn a_ideal(m: &PresentedModule) -> Result<Submodule> {
    let ring = m.ring();
    let mut acc = vec![Polynomial::one(ring)];
    if m.is_zero() {
        return Submodule::ideal(ring, &acc);
    }
    let b = m.deficiency_battery()?;
    for i in 0..b.dim() as usize {
        let k = b.module(i)?;
        if k.is_zero() {
            continue;
        }
        acc = product_ideal(ring, &acc, &k.annihilator()?.polynomials())?.polynomials();
    }
    Submodule::ideal(ring, &acc)
}

/// `x_d ∈ a(M)` and `x_i ∈ a(M/(x_{i+1}, ..., x_d)M)` for every `i < d`.
pub fn is_p_standard_sop(m: &PresentedModule, fs: &[Polynomial]) -> Result<bool> {
    if !is_sop(m, fs)? {
        return Err(Error::NotSop(format_seq(fs)));
    }
    for i in (0..fs.len()).rev() {
        let n = m.quotient(&fs[i + 1..])?;
        if !a_ideal(&n)?.contains_poly(&fs[i])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds a p-standard system of parameters from the back, drawing each
/// `x_i` as a random element of `a(M/(x_{i+1}..x_d)M)` of low degree that
/// cuts the dimension by one.
pub fn find_p_standard_sop(m: &PresentedModule, seed: u64) -> Result<Vec<Polynomial>> {
    let d = m.dim();
    if d < 0 {
        return Err(Error::ZeroModule("system of parameters"));
    }
    let ring = m.ring();
    let mut rng = sample_rng(seed, 0);
    let mut tail: Vec<Polynomial> = Vec::new();
    for _ in 0..d {
        let n = m.quotient(&tail)?;
        let a = a_ideal(&n)?.minimal_generators().polynomials();
        let low = a.iter().filter_map(|g| g.degree()).min().unwrap_or(0).max(1);
        let high = a.iter().filter_map(|g| g.degree()).max().unwrap_or(0).max(1) + 2;
        let mut found = None;
        'degrees: for deg in low..=high {
            for _ in 0..8 {
                let mut x = Polynomial::zero(ring);
                for g in &a {
                    let gd = g.degree().unwrap_or(0);
                    if gd <= deg {
                        x = &x + &(g * &random_form(ring, &mut rng, deg - gd));
                    }
                }
                if !x.is_zero() && is_part_of_sop(&n, std::slice::from_ref(&x))? {
                    found = Some(x);
                    break 'degrees;
                }
            }
        }
        let x = found.ok_or(Error::NotFound { kind: "p-standard".into(), length: d as usize, attempts: 8 })?;
        tail.insert(0, x);
    }
    if !is_p_standard_sop(m, &tail)? {
        return Err(Error::Inconsistent("searched system of parameters is not p-standard".into()));
    }
    Ok(tail)
}
