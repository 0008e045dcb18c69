use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homology::PresentedModule;
use crate::monomial::{is_multigraded, largest_small_submodule, DimensionFiltration, MonomialIdeal, MonomialPrime};

/// `p(M) = max_{i <= d-1} dim K^i(M)`, `-1` when all of them vanish.
pub fn polynomial_type(m: &PresentedModule) -> Result<i64> {
    let b = m.deficiency_battery()?;
    Ok(b.dims().into_iter().take(b.dim() as usize).max().unwrap_or(-1).max(-1))
}

/// Both routes to the sequential polynomial type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpBreakdown {
    /// `p(D_{i-1}/D_i)` for `i = 1..t`.
    pub route_def: Vec<i64>,
    /// `D(M) = {dim S/p : p ∈ Ass M}`, descending.
    pub ass_dims: Vec<i64>,
    /// `max_{i ∉ D(M)} dim K^i(M)`.
    pub q1: i64,
    /// `max_{i ∈ D(M)} p(K^i(M))`.
    pub q2: i64,
}

impl SpBreakdown {
    pub fn sp_definition(&self) -> i64 {
        self.route_def.iter().copied().max().unwrap_or(-1)
    }

    pub fn sp_homological(&self) -> i64 {
        self.q1.max(self.q2)
    }

    /// The common value, or `Inconsistent` when the routes differ.
    pub fn sp(&self) -> Result<i64> {
        let (a, b) = (self.sp_definition(), self.sp_homological());
        if a != b {
            return Err(Error::Inconsistent(format!("sp from the filtration is {a}, from Ext it is {b}")));
        }
        Ok(a)
    }
}

/// `p(D_{i-1}/D_i)` along the dimension filtration of `S/I`.
pub fn sp_definition(ideal: &MonomialIdeal) -> Result<Vec<i64>> {
    let f = DimensionFiltration::compute(ideal)?;
    (1..=f.len()).into_par_iter().map(|i| polynomial_type(&f.quotient(i)?)).collect()
}

/// `(D(M), q1, q2)` from the deficiency modules of `S/I`.
pub fn sp_homological(ideal: &MonomialIdeal) -> Result<(Vec<i64>, i64, i64)> {
    let mut ass_dims: Vec<i64> = ideal.associated_primes()?.iter().map(|p| p.dim()).collect();
    ass_dims.sort_unstable_by(|a, b| b.cmp(a));
    ass_dims.dedup();
    let m = ideal.quotient_module();
    let b = m.deficiency_battery()?;
    let parts: Vec<(i64, i64)> = b
        .modules()
        .par_iter()
        .enumerate()
        .map(|(i, k)| -> Result<(i64, i64)> {
            if ass_dims.contains(&(i as i64)) {
                Ok((-1, polynomial_type(k)?))
            } else {
                Ok((k.dim(), -1))
            }
        })
        .collect::<Result<_>>()?;
    let q1 = parts.iter().map(|p| p.0).max().unwrap_or(-1);
    let q2 = parts.iter().map(|p| p.1).max().unwrap_or(-1);
    Ok((ass_dims, q1, q2))
}

pub fn sp_breakdown(ideal: &MonomialIdeal) -> Result<SpBreakdown> {
    let route_def = sp_definition(ideal)?;
    let (ass_dims, q1, q2) = sp_homological(ideal)?;
    Ok(SpBreakdown { route_def, ass_dims, q1, q2 })
}

fn agree(what: &str, a: bool, b: bool) -> Result<bool> {
    if a != b {
        return Err(Error::Inconsistent(format!("{what}: filtration says {a}, deficiency modules say {b}")));
    }
    Ok(a)
}

/// Every filtration quotient is CM, checked against: every nonzero `K^i` is
/// CM of dimension `i`.
pub fn is_sequentially_cm(ideal: &MonomialIdeal) -> Result<bool> {
    let f = DimensionFiltration::compute(ideal)?;
    let mut route_a = true;
    for i in 1..=f.len() {
        route_a &= f.quotient(i)?.is_cohen_macaulay()?;
    }
    let b = ideal.quotient_module().deficiency_battery()?;
    let mut route_b = true;
    for (i, k) in b.modules().iter().enumerate() {
        route_b &= k.is_zero() || (k.dim() == i as i64 && k.is_cohen_macaulay()?);
    }
    agree("sequentially Cohen-Macaulay", route_a, route_b)
}

/// Every filtration quotient is gCM, checked against: every `K^i` has
/// finite length or is gCM of dimension `i`.
pub fn is_sequentially_gcm(ideal: &MonomialIdeal) -> Result<bool> {
    let f = DimensionFiltration::compute(ideal)?;
    let mut route_a = true;
    for i in 1..=f.len() {
        route_a &= f.quotient(i)?.is_generalized_cm()?;
    }
    let b = ideal.quotient_module().deficiency_battery()?;
    let mut route_b = true;
    for (i, k) in b.modules().iter().enumerate() {
        route_b &= k.dim() <= 0 || (k.dim() == i as i64 && k.is_generalized_cm()?);
    }
    agree("sequentially generalized Cohen-Macaulay", route_a, route_b)
}

/// Dimension of the non-CM locus of a multigraded module: the largest
/// `dim S/p` over monomial primes `p ⊇ Ann M` at which more than one
/// `Ext^j(M, S)` survives localization; `-1` when `M` is CM everywhere.
pub fn non_cm_locus_dim(m: &PresentedModule) -> Result<i64> {
    if !is_multigraded(m) {
        return Err(Error::NotMonomial(format!("{m:?}")));
    }
    if m.is_zero() {
        return Ok(-1);
    }
    let ring = m.ring();
    let n = ring.nvars();
    let ann = m.annihilator()?.polynomials();
    let b = m.deficiency_battery()?;
    let ext_anns: Vec<Vec<crate::kernel::Polynomial>> = b
        .modules()
        .par_iter()
        .filter(|k| !k.is_zero())
        .map(|k| k.annihilator().map(|a| a.polynomials()))
        .collect::<Result<_>>()?;
    let mut best = -1;
    for mask in 0u64..1 << n {
        let vars: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let p = MonomialPrime::new(ring, vars)?;
        if p.dim() <= best || !ann.iter().all(|a| p.contains(a)) {
            continue;
        }
        let alive = ext_anns.iter().filter(|a| a.iter().all(|g| p.contains(g))).count();
        if alive > 1 {
            best = p.dim();
        }
    }
    Ok(best)
}

/// `dim U(0)` for `M = S/I`, where `U(0)` is the largest submodule of
/// dimension below `dim M`; `-1` when it vanishes.
pub fn u_zero_dim(ideal: &MonomialIdeal) -> Result<i64> {
    let d = ideal.dim();
    let j = largest_small_submodule(ideal, d - 1)?;
    Ok(PresentedModule::subquotient_dimension(&j.to_submodule(), &ideal.to_submodule()))
}
