use std::fmt;
use std::sync::{Arc, OnceLock};

use super::ext::DeficiencyBattery;
use super::resolution::FreeResolution;
use crate::error::{Error, Result};
use crate::groebner::{HilbertSeries, Length, Submodule};
use crate::kernel::{FreeElement, FreeModule, Monomial, Polynomial, Ring, Term};

/// Graded module `coker(φ: F1 -> F0)`, stored as the image of `φ` in `F0`.
#[derive(Clone)]
pub struct PresentedModule {
    relations: Submodule,
    hilbert: OnceLock<HilbertSeries>,
    battery: OnceLock<Arc<DeficiencyBattery>>,
}

impl PresentedModule {
    /// Cokernel of the map whose columns are `columns`.
    pub fn new(target: &Arc<FreeModule>, columns: Vec<FreeElement>) -> Result<Self> {
        Ok(Self::from_relations(Submodule::new(target, columns)?))
    }

    pub fn from_relations(relations: Submodule) -> Self {
        PresentedModule { relations, hilbert: OnceLock::new(), battery: OnceLock::new() }
    }

    /// `S / I` for an ideal `I` of `S`.
    pub fn cyclic(ideal: &Submodule) -> Result<Self> {
        if ideal.ambient().rank() != 1 {
            return Err(Error::AmbientMismatch);
        }
        Ok(Self::from_relations(ideal.clone()))
    }

    /// `⊕ S(-twist_i)`.
    pub fn free(ring: &Arc<Ring>, twists: Vec<i32>) -> Self {
        Self::from_relations(Submodule::zero(&FreeModule::new(ring, twists)))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.relations.ring()
    }

    /// The free module `F0` on the generators.
    pub fn target(&self) -> &Arc<FreeModule> {
        self.relations.ambient()
    }

    pub fn relations(&self) -> &Submodule {
        &self.relations
    }

    pub fn num_generators(&self) -> usize {
        self.target().rank()
    }

    pub fn hilbert_series(&self) -> &HilbertSeries {
        self.hilbert.get_or_init(|| self.relations.quotient_hilbert_series())
    }

    pub fn is_zero(&self) -> bool {
        self.hilbert_series().is_zero()
    }

    /// Krull dimension; `-1` for the zero module.
    pub fn dim(&self) -> i64 {
        self.hilbert_series().dimension()
    }

    pub fn length(&self) -> Length {
        self.hilbert_series().length()
    }

    pub fn annihilator(&self) -> Result<Submodule> {
        self.relations.quotient_annihilator()
    }

    /// `M / (f_1, ..., f_k) M`.
    pub fn quotient(&self, fs: &[Polynomial]) -> Result<PresentedModule> {
        Ok(Self::from_relations(self.relations.add_multiples(fs)?))
    }

    /// The submodule `(V :_F f)` of `F0` whose image in `M` is `(0 :_M f)`.
    pub fn kernel_preimage(&self, f: &Polynomial) -> Result<Submodule> {
        self.relations.colon(f)
    }

    /// `dim (0 :_M f)`, read off Hilbert series.
    pub fn kernel_dimension(&self, f: &Polynomial) -> Result<i64> {
        let u = self.kernel_preimage(f)?;
        Ok(self.hilbert_series().sub(&u.quotient_hilbert_series()).dimension())
    }

    /// `(0 :_M f)` as a presented module.
    pub fn kernel_module(&self, f: &Polynomial) -> Result<PresentedModule> {
        let u = self.kernel_preimage(f)?;
        PresentedModule::subquotient(&u, &self.relations)
    }

    /// `U / V` for submodules `V ⊆ U` of the same free module.
    pub fn subquotient(u: &Submodule, v: &Submodule) -> Result<PresentedModule> {
        FreeModule::check(u.ambient(), v.ambient())?;
        let gens: Vec<FreeElement> = u.minimal_generators().generators().to_vec();
        let ring = u.ring().clone();
        let twists: Vec<i32> = gens.iter().map(|g| g.degree().unwrap() as i32).collect();
        let f0 = FreeModule::new(&ring, twists);
        if gens.is_empty() {
            return Ok(Self::from_relations(Submodule::zero(&f0)));
        }
        let rel = Submodule::projected_relations(&f0, &gens, v.generators(), u.ambient().rank() == 1);
        Ok(Self::from_relations(rel).minimize())
    }

    /// `dim (U / V)` for `V ⊆ U`.
    pub fn subquotient_dimension(u: &Submodule, v: &Submodule) -> i64 {
        v.quotient_hilbert_series().sub(&u.quotient_hilbert_series()).dimension()
    }

    /// Minimal presentation: generators made redundant by a relation with a
    /// unit entry are eliminated, and the relations are minimally generated.
    pub fn minimize(&self) -> PresentedModule {
        let f0 = self.target().clone();
        let mut rels: Vec<FreeElement> = self.relations.generators().to_vec();
        let mut alive = vec![true; f0.rank()];
        loop {
            let found = rels.iter().enumerate().find_map(|(k, r)| {
                r.terms().iter().find(|t| t.mono.is_one()).map(|t| (k, t.pos, t.coeff.clone()))
            });
            let Some((k, p, c)) = found else { break };
            let r = rels.swap_remove(k);
            alive[p] = false;
            for s in rels.iter_mut() {
                let hits: Vec<Term> = s.terms().iter().filter(|t| t.pos == p).cloned().collect();
                if hits.is_empty() {
                    continue;
                }
                let mut terms = s.terms().to_vec();
                for h in hits {
                    let q = -&(&h.coeff / &c);
                    for t in r.terms() {
                        terms.push(Term { mono: t.mono.mul(&h.mono), pos: t.pos, coeff: &t.coeff * &q });
                    }
                }
                *s = FreeElement::from_terms(&f0, terms);
            }
            rels.retain(|s| !s.is_zero());
        }
        let mut index = vec![usize::MAX; f0.rank()];
        let mut twists = Vec::new();
        for (p, a) in alive.iter().enumerate() {
            if *a {
                index[p] = twists.len();
                twists.push(f0.twist(p));
            }
        }
        let g0 = FreeModule::new(f0.ring(), twists);
        let moved: Vec<FreeElement> = rels
            .iter()
            .map(|s| {
                let terms = s
                    .terms()
                    .iter()
                    .map(|t| Term { mono: t.mono.clone(), pos: index[t.pos], coeff: t.coeff.clone() })
                    .collect();
                FreeElement::from_terms(&g0, terms)
            })
            .collect();
        let rel = Submodule::new(&g0, moved).expect("relations stay homogeneous");
        let out = Self::from_relations(rel.minimal_generators());
        if let Some(h) = self.hilbert.get() {
            let _ = out.hilbert.set(h.clone());
        }
        out
    }

    /// True iff the maximal ideal is an associated prime, i.e. `M` has a
    /// nonzero socle.
    pub fn has_socle(&self) -> Result<bool> {
        let n = self.ring().nvars();
        let vars: Vec<Polynomial> =
            (0..n).map(|i| Polynomial::monomial(self.ring(), Monomial::var(n, i))).collect();
        let m = Submodule::ideal(self.ring(), &vars)?;
        let u = self.relations.colon_ideal(&m)?;
        Ok(!u.is_subset(&self.relations)?)
    }

    pub fn resolution(&self) -> FreeResolution {
        FreeResolution::compute(self, true)
    }

    /// Deficiency modules `K^0 .. K^d`, computed once and cached.
    pub fn deficiency_battery(&self) -> Result<Arc<DeficiencyBattery>> {
        if let Some(b) = self.battery.get() {
            return Ok(b.clone());
        }
        let b = Arc::new(DeficiencyBattery::compute(self)?);
        let _ = self.battery.set(b.clone());
        Ok(self.battery.get().cloned().unwrap_or(b))
    }

    /// `(dim, depth)` from the deficiency modules.
    pub fn dim_depth(&self) -> Result<(i64, i64)> {
        let b = self.deficiency_battery()?;
        Ok((b.dim(), b.depth()))
    }

    /// `dim = depth`; the zero module counts as Cohen-Macaulay.
    pub fn is_cohen_macaulay(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(true);
        }
        let b = self.deficiency_battery()?;
        Ok(b.nonzero_indices().len() == 1)
    }

    /// Every `K^i` with `i < d` has finite length.
    pub fn is_generalized_cm(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(true);
        }
        let b = self.deficiency_battery()?;
        Ok((0..b.dim() as usize).all(|i| b.module(i).map(|k| k.dim() <= 0).unwrap_or(true)))
    }
}

impl fmt::Debug for PresentedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coker {:?} -> {:?}", self.relations, self.target())
    }
}
