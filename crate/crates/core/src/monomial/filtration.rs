use super::ideal::{monomial_intersect, MonomialIdeal, MonomialPrime};
use crate::error::{Error, Result};
use crate::homology::PresentedModule;

/// `H^0_m(M) = D_t ⊂ ... ⊂ D_1 ⊂ D_0 = M` for `M = S/I`, stored through the
/// ideals `J_i` with `D_i = J_i / I` and `J_0 = S`.
#[derive(Clone, Debug)]
pub struct DimensionFiltration {
    ideal: MonomialIdeal,
    components: Vec<(MonomialIdeal, MonomialPrime)>,
    chain: Vec<MonomialIdeal>,
    dims: Vec<i64>,
}

/// Intersection of the primary components whose prime has `dim > e`; its
/// image in `S/I` is the largest submodule of dimension at most `e`.
fn chain_ideal(ideal: &MonomialIdeal, comps: &[(MonomialIdeal, MonomialPrime)], e: i64) -> MonomialIdeal {
    let qs: Vec<MonomialIdeal> = comps.iter().filter(|(_, p)| p.dim() > e).map(|(q, _)| q.clone()).collect();
    monomial_intersect(ideal.ring(), &qs)
}

impl DimensionFiltration {
    pub fn compute(ideal: &MonomialIdeal) -> Result<Self> {
        let components = ideal.primary_decomposition()?;
        let mut levels: Vec<i64> = components.iter().map(|(_, p)| p.dim()).collect();
        levels.sort_unstable_by(|a, b| b.cmp(a));
        levels.dedup();
        let mut chain = vec![MonomialIdeal::unit(ideal.ring())];
        let mut dims = vec![levels[0]];
        for &e in &levels[1..] {
            chain.push(chain_ideal(ideal, &components, e));
            dims.push(e);
        }
        if *levels.last().unwrap() > 0 {
            chain.push(ideal.clone());
            dims.push(-1);
        }
        Ok(DimensionFiltration { ideal: ideal.clone(), components, chain, dims })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn components(&self) -> &[(MonomialIdeal, MonomialPrime)] {
        &self.components
    }

    /// `t`, the number of quotients `D_{i-1}/D_i`.
    pub fn len(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `J_0 = S, J_1, ..., J_t`.
    pub fn chain(&self) -> &[MonomialIdeal] {
        &self.chain
    }

    /// `d_i = dim D_i`, strictly decreasing; `-1` marks `D_t = 0`.
    pub fn dims(&self) -> &[i64] {
        &self.dims
    }

    /// `D_i` as a presented module.
    pub fn submodule(&self, i: usize) -> Result<PresentedModule> {
        let j = self.chain.get(i).ok_or(Error::IndexOutOfRange { index: i, max: self.len() })?;
        PresentedModule::subquotient(&j.to_submodule(), &self.ideal.to_submodule())
    }

    /// `D_{i-1} / D_i = J_{i-1} / J_i` for `1 <= i <= t`.
    pub fn quotient(&self, i: usize) -> Result<PresentedModule> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, max: self.len() });
        }
        PresentedModule::subquotient(&self.chain[i - 1].to_submodule(), &self.chain[i].to_submodule())
    }

    /// Associated primes of `D_{i-1} / D_i`: those of dimension `d_{i-1}`.
    pub fn quotient_primes(&self, i: usize) -> Vec<MonomialPrime> {
        let e = self.dims[i - 1];
        self.components.iter().filter(|(_, p)| p.dim() == e).map(|(_, p)| p.clone()).collect()
    }

    /// The ideal `J_t` with `J_t / I = H^0_m(S/I)`.
    pub fn h0(&self) -> &MonomialIdeal {
        self.chain.last().unwrap()
    }
}

/// `J(e)` with `J(e)/I` the largest submodule of `S/I` of dimension at most
/// `e`; `e = d - 1` gives `U(0)`, `e = 1` gives `M'` and `e = 0` gives `H^0`.
pub fn largest_small_submodule(ideal: &MonomialIdeal, e: i64) -> Result<MonomialIdeal> {
    let comps = ideal.primary_decomposition()?;
    Ok(chain_ideal(ideal, &comps, e))
}
