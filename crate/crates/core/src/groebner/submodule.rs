use std::fmt;
use std::sync::{Arc, OnceLock};

use super::basis::GroebnerBasis;
use super::buchberger::{interreduce, run, Input};
use super::hilbert::{HilbertSeries, Length};
use crate::error::{Error, Result};
use crate::kernel::{FreeElement, FreeModule, ModuleOrder, Monomial, Polynomial, Ring, Term};

/// Homogeneous submodule of a graded free module, with a lazily computed
/// Gröbner basis in term-over-position grevlex.
#[derive(Clone)]
pub struct Submodule {
    ambient: Arc<FreeModule>,
    gens: Vec<FreeElement>,
    gb: OnceLock<GroebnerBasis>,
}

impl Submodule {
    /// Zero generators are dropped; the rest must be homogeneous.
    pub fn new(ambient: &Arc<FreeModule>, gens: Vec<FreeElement>) -> Result<Self> {
        for g in &gens {
            FreeModule::check(ambient, g.ambient())?;
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
        }
        Ok(Self::from_generators_unchecked(ambient, gens))
    }

    pub(crate) fn from_generators_unchecked(ambient: &Arc<FreeModule>, gens: Vec<FreeElement>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Submodule { ambient: ambient.clone(), gens, gb: OnceLock::new() }
    }

    /// Ideal of `S`, viewed in the rank-one free module `S`.
    pub fn ideal(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<Self> {
        let f = FreeModule::new(ring, vec![0]);
        let elems = gens
            .iter()
            .map(|g| FreeElement::from_coords(&f, std::slice::from_ref(g)))
            .collect::<Result<Vec<_>>>()?;
        Submodule::new(&f, elems)
    }

    pub fn zero(ambient: &Arc<FreeModule>) -> Self {
        Self::from_generators_unchecked(ambient, Vec::new())
    }

    /// The whole free module.
    pub fn full(ambient: &Arc<FreeModule>) -> Self {
        let gens = (0..ambient.rank()).map(|i| FreeElement::basis(ambient, i)).collect();
        Self::from_generators_unchecked(ambient, gens)
    }

    pub fn ambient(&self) -> &Arc<FreeModule> {
        &self.ambient
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.ambient.ring()
    }

    pub fn generators(&self) -> &[FreeElement] {
        &self.gens
    }

    /// Generators of a rank-one submodule as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.gens.iter().map(|g| g.coordinate(0)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            GroebnerBasis::compute(&self.ambient, &self.gens, &ModuleOrder::default())
                .expect("generators checked on construction")
        })
    }

    pub fn contains(&self, f: &FreeElement) -> Result<bool> {
        self.groebner_basis().contains(f)
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        let e = FreeElement::from_coords(&self.ambient, std::slice::from_ref(f))?;
        self.contains(&e)
    }

    pub fn is_subset(&self, other: &Submodule) -> Result<bool> {
        FreeModule::check(&self.ambient, &other.ambient)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Submodule) -> Result<bool> {
        Ok(self.is_subset(other)? && other.is_subset(self)?)
    }

    /// True iff the submodule is the whole free module.
    pub fn is_full(&self) -> bool {
        let lt = self.groebner_basis().leading_terms();
        (0..self.ambient.rank()).all(|p| lt.iter().any(|(m, q)| *q == p && m.is_one()))
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        FreeModule::check(&self.ambient, &other.ambient)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Submodule::from_generators_unchecked(&self.ambient, gens))
    }

    /// `self + (f * e_i : all i)`.
    pub fn add_multiples(&self, fs: &[Polynomial]) -> Result<Submodule> {
        let mut gens = self.gens.clone();
        for f in fs {
            Ring::check(f.ring(), self.ring())?;
            if !f.is_homogeneous() {
                return Err(Error::NotHomogeneous(f.to_string()));
            }
            for i in 0..self.ambient.rank() {
                gens.push(FreeElement::basis(&self.ambient, i).mul_poly(f));
            }
        }
        Ok(Submodule::from_generators_unchecked(&self.ambient, gens))
    }

    /// Leading monomials of the Gröbner basis, grouped by position.
    pub fn initial_monomials(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.ambient.rank()];
        for (m, p) in self.groebner_basis().leading_terms() {
            out[p].push(m);
        }
        out
    }

    /// Hilbert series of `F / self`.
    pub fn quotient_hilbert_series(&self) -> HilbertSeries {
        let parts: Vec<(i64, Vec<Monomial>)> = self
            .initial_monomials()
            .into_iter()
            .enumerate()
            .map(|(p, ms)| (self.ambient.twist(p) as i64, ms))
            .collect();
        HilbertSeries::of_quotient(self.ring().nvars(), &parts)
    }

    /// Krull dimension of `F / self`; `-1` if it is zero.
    pub fn quotient_dimension(&self) -> i64 {
        self.quotient_hilbert_series().dimension()
    }

    pub fn quotient_length(&self) -> Length {
        self.quotient_hilbert_series().length()
    }

    /// A minimal homogeneous generating set chosen among the generators.
    pub fn minimal_generators(&self) -> Submodule {
        let (keep, gb) = minimal_subset(&self.ambient, &self.gens);
        let gens = keep.into_iter().map(|k| self.gens[k].clone()).collect();
        let out = Submodule::from_generators_unchecked(&self.ambient, gens);
        let _ = out.gb.set(gb);
        out
    }

    /// Full syzygy module of the generators, in the free module whose twists
    /// are the generator degrees. Minimally generated.
    pub fn syzygies(&self) -> Submodule {
        let twists: Vec<i32> = self.gens.iter().map(|g| g.degree().unwrap_or(0) as i32).collect();
        let source = FreeModule::new(self.ring(), twists);
        relations(&source, &self.gens, self.ambient.rank() == 1)
    }

    /// Kernel of the map `source -> self.ambient` sending `e_i` to `images[i]`.
    pub fn kernel_of_map(source: &Arc<FreeModule>, images: &[FreeElement]) -> Result<Submodule> {
        if images.len() != source.rank() {
            return Err(Error::AmbientMismatch);
        }
        let Some(first) = images.first() else {
            return Ok(Submodule::zero(source));
        };
        let target = first.ambient().clone();
        for (i, v) in images.iter().enumerate() {
            FreeModule::check(&target, v.ambient())?;
            if !v.is_homogeneous() || v.degree().is_some_and(|d| d != source.twist(i) as i64) {
                return Err(Error::NotHomogeneous(format!("image {v} of a generator of degree {}", source.twist(i))));
            }
        }
        Ok(relations(source, images, target.rank() == 1))
    }

    /// First `ambient.rank()` coordinates of the relations among
    /// `head ++ tail`, landing in `ambient`.
    pub(crate) fn projected_relations(
        ambient: &Arc<FreeModule>,
        head: &[FreeElement],
        tail: &[FreeElement],
        rank1: bool,
    ) -> Submodule {
        let mut all = head.to_vec();
        all.extend(tail.iter().cloned());
        let mut twists: Vec<i32> = ambient.twists().to_vec();
        twists.extend(tail.iter().map(|t| t.degree().unwrap_or(0) as i32));
        let source = FreeModule::new(ambient.ring(), twists);
        let syz = relations(&source, &all, rank1);
        let gens: Vec<FreeElement> = syz.gens.iter().map(|s| s.project(0, ambient)).collect();
        Submodule::from_generators_unchecked(ambient, gens).minimal_generators()
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        FreeModule::check(&self.ambient, &other.ambient)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Submodule::zero(&self.ambient));
        }
        let twists: Vec<i32> = self.gens.iter().map(|g| g.degree().unwrap() as i32).collect();
        let head_free = FreeModule::new(self.ring(), twists);
        let coeffs = Self::projected_relations(&head_free, &self.gens, &other.gens, self.ambient.rank() == 1);
        let gens: Vec<FreeElement> = coeffs.gens.iter().map(|c| apply(c, &self.gens, &self.ambient)).collect();
        Ok(Submodule::from_generators_unchecked(&self.ambient, gens).minimal_generators())
    }

    /// `(self :_F g) = { v in F : g v in self }`.
    pub fn colon(&self, g: &Polynomial) -> Result<Submodule> {
        Ring::check(g.ring(), self.ring())?;
        if g.is_zero() {
            return Ok(Submodule::full(&self.ambient));
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
        if g.is_constant() {
            return Ok(self.clone());
        }
        let head: Vec<FreeElement> =
            (0..self.ambient.rank()).map(|i| FreeElement::basis(&self.ambient, i).mul_poly(g)).collect();
        let dg = g.degree().unwrap() as i32;
        let shifted = FreeModule::new(self.ring(), self.ambient.twists().iter().map(|t| t + dg).collect());
        let rel = Self::projected_relations(&shifted, &head, &self.gens, self.ambient.rank() == 1);
        let gens: Vec<FreeElement> = rel.gens.iter().map(|v| v.rehome(&self.ambient)).collect();
        Ok(Submodule::from_generators_unchecked(&self.ambient, gens).minimal_generators())
    }

    /// `(self : J)` for an ideal `J`: intersection of the colons by its generators.
    pub fn colon_ideal(&self, ideal: &Submodule) -> Result<Submodule> {
        let polys = ideal.polynomials();
        let mut acc: Option<Submodule> = None;
        for g in &polys {
            let c = self.colon(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Submodule::full(&self.ambient)))
    }

    /// `{ s in S : s v in self }` as an ideal.
    pub fn colon_vector(&self, v: &FreeElement) -> Result<Submodule> {
        FreeModule::check(&self.ambient, v.ambient())?;
        let s = FreeModule::new(self.ring(), vec![0]);
        if v.is_zero() {
            return Ok(Submodule::full(&s));
        }
        if !v.is_homogeneous() {
            return Err(Error::NotHomogeneous(v.to_string()));
        }
        let vf = FreeModule::new(self.ring(), vec![v.degree().unwrap() as i32]);
        let rel = Self::projected_relations(&vf, std::slice::from_ref(v), &self.gens, self.ambient.rank() == 1);
        let gens: Vec<FreeElement> = rel.gens.iter().map(|c| c.rehome(&s)).collect();
        Ok(Submodule::from_generators_unchecked(&s, gens))
    }

    /// `(self : g^∞)` by iterated colon until the chain stabilizes.
    pub fn saturation(&self, g: &Polynomial) -> Result<Submodule> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(g)?;
            if next.is_subset(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Annihilator of `F / self`: the intersection of `(self : e_i)`.
    pub fn quotient_annihilator(&self) -> Result<Submodule> {
        let mut acc: Option<Submodule> = None;
        for i in 0..self.ambient.rank() {
            let c = self.colon_vector(&FreeElement::basis(&self.ambient, i))?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        match acc {
            Some(a) => Ok(a),
            None => Submodule::ideal(self.ring(), &[Polynomial::one(self.ring())]),
        }
    }

    /// Same generators in another free module of equal rank.
    pub fn rehome(&self, ambient: &Arc<FreeModule>) -> Submodule {
        let gens = self.gens.iter().map(|g| g.rehome(ambient)).collect();
        Submodule::from_generators_unchecked(ambient, gens)
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

impl fmt::Display for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = if self.ambient.rank() == 1 {
            self.gens.iter().map(|g| g.coordinate(0).to_string()).collect()
        } else {
            self.gens.iter().map(|g| g.to_string()).collect()
        };
        write!(f, "({})", parts.join(", "))
    }
}

/// `Σ c_i v_i`.
pub(crate) fn apply(c: &FreeElement, vs: &[FreeElement], target: &Arc<FreeModule>) -> FreeElement {
    let mut terms: Vec<Term> = Vec::new();
    for t in c.terms() {
        for u in vs[t.pos].terms() {
            terms.push(Term { mono: u.mono.mul(&t.mono), pos: u.pos, coeff: &u.coeff * &t.coeff });
        }
    }
    FreeElement::from_terms(target, terms)
}

/// Minimal generators of the relations among `images` (one per basis
/// vector of `source`), as a submodule of `source`.
fn relations(source: &Arc<FreeModule>, images: &[FreeElement], rank1: bool) -> Submodule {
    let order = ModuleOrder::default();
    let nvars = source.ring().nvars();
    let inputs: Vec<Input<'_>> = images
        .iter()
        .enumerate()
        .map(|(i, g)| Input { terms: g.terms(), degree: source.twist(i) as i64 })
        .collect();
    let r = run(&inputs, nvars, rank1, &order, true);
    let syz: Vec<FreeElement> = r.syzygies.into_iter().map(|t| FreeElement::from_any_order(source, t)).collect();
    Submodule::from_generators_unchecked(source, syz).minimal_generators()
}

/// Indices of a minimal generating subset, plus the reduced basis found on the way.
fn minimal_subset(ambient: &Arc<FreeModule>, gens: &[FreeElement]) -> (Vec<usize>, GroebnerBasis) {
    let order = ModuleOrder::default();
    let inputs: Vec<Input<'_>> = gens
        .iter()
        .map(|g| Input { terms: g.terms(), degree: g.degree().unwrap_or(0) })
        .collect();
    let r = run(&inputs, ambient.ring().nvars(), ambient.rank() == 1, &order, false);
    let mut keep = r.minimal_inputs;
    keep.sort_unstable();
    let elements = interreduce(r.basis.into_iter().map(|e| e.terms).collect(), &order);
    (keep, GroebnerBasis::from_reduced(ambient, &order, elements))
}
