use std::collections::VecDeque;

use rayon::prelude::*;

use super::ideal::MonomialPrime;
use crate::error::{Error, Result};
use crate::groebner::Submodule;
use crate::homology::PresentedModule;
use crate::kernel::Polynomial;

/// Checks that the relations admit a `Z^n`-grading of the generators, i.e.
/// every relation is multihomogeneous for some choice of basis degrees.
pub fn is_multigraded(m: &PresentedModule) -> bool {
    let f = m.target();
    let n = m.ring().nvars();
    let rank = f.rank();
    // edges (j, deg(e_j) - deg(e_i)) out of basis element i
    let mut adj: Vec<Vec<(usize, Vec<i64>)>> = vec![Vec::new(); rank];
    for r in m.relations().generators() {
        let ts = r.terms();
        let Some(first) = ts.first() else { continue };
        for t in &ts[1..] {
            let diff: Vec<i64> = (0..n).map(|v| first.mono.exp(v) as i64 - t.mono.exp(v) as i64).collect();
            if t.pos == first.pos {
                if diff.iter().any(|&d| d != 0) {
                    return false;
                }
                continue;
            }
            adj[t.pos].push((first.pos, diff.iter().map(|d| -d).collect()));
            adj[first.pos].push((t.pos, diff));
        }
    }
    let mut deg: Vec<Option<Vec<i64>>> = vec![None; rank];
    for s in 0..rank {
        if deg[s].is_some() {
            continue;
        }
        deg[s] = Some(vec![0; n]);
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            let di = deg[i].clone().unwrap();
            for (j, diff) in &adj[i] {
                let want: Vec<i64> = di.iter().zip(diff).map(|(a, b)| a + b).collect();
                match &deg[*j] {
                    Some(d) if *d != want => return false,
                    Some(_) => {}
                    None => {
                        deg[*j] = Some(want);
                        queue.push_back(*j);
                    }
                }
            }
        }
    }
    true
}

/// Associated primes of a multigraded module, by testing every monomial
/// prime containing the annihilator.
///
/// `p ∈ Ass(N)` iff `(0 :_N p)` does not vanish after inverting the product
/// of the variables outside `p`.
pub fn ass_multigraded(m: &PresentedModule) -> Result<Vec<MonomialPrime>> {
    if !is_multigraded(m) {
        return Err(Error::NotMonomial(format!("{m:?}")));
    }
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let ring = m.ring();
    let n = ring.nvars();
    let ann = m.annihilator()?.polynomials();
    let v = m.relations();
    let colons: Vec<Submodule> = (0..n)
        .into_par_iter()
        .map(|i| v.colon(&Polynomial::var(ring, i)))
        .collect::<Result<_>>()?;
    let candidates: Vec<MonomialPrime> = (0u64..1 << n)
        .map(|mask| {
            let vars: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            MonomialPrime::new(ring, vars).expect("variables in range")
        })
        .filter(|p| ann.iter().all(|a| p.contains(a)))
        .collect();
    let hits: Vec<Option<MonomialPrime>> = candidates
        .into_par_iter()
        .map(|p| -> Result<Option<MonomialPrime>> {
            let u = p.vars().iter().skip(1).try_fold(
                match p.vars().first() {
                    Some(&i) => colons[i].clone(),
                    None => Submodule::full(v.ambient()),
                },
                |acc, &i| acc.intersect(&colons[i]),
            )?;
            let h = p.complement_product();
            let sat = if h.is_one() { v.clone() } else { v.saturation(&Polynomial::monomial(ring, h))? };
            Ok((!u.is_subset(&sat)?).then_some(p))
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<MonomialPrime> = hits.into_iter().flatten().collect();
    out.sort();
    Ok(out)
}

/// `Att H^i_m(M) = Ass K^i(M)`.
pub fn attached_primes(m: &PresentedModule, i: usize) -> Result<Vec<MonomialPrime>> {
    let b = m.deficiency_battery()?;
    ass_multigraded(b.module(i)?)
}

/// All attached primes `Att H^0 .. Att H^d`.
pub fn attached_primes_all(m: &PresentedModule) -> Result<Vec<Vec<MonomialPrime>>> {
    let b = m.deficiency_battery()?;
    b.modules().par_iter().map(ass_multigraded).collect()
}
