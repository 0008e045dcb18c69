use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Submodule;
use crate::homology::PresentedModule;
use crate::kernel::{Monomial, Polynomial, Ring};

/// Prime ideal generated by a subset of the variables; the empty subset is
/// the zero ideal.
#[derive(Clone)]
pub struct MonomialPrime {
    ring: Arc<Ring>,
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(ring: &Arc<Ring>, mut vars: Vec<usize>) -> Result<Self> {
        vars.sort_unstable();
        vars.dedup();
        if let Some(&v) = vars.last() {
            if v >= ring.nvars() {
                return Err(Error::IndexOutOfRange { index: v, max: ring.nvars().saturating_sub(1) });
            }
        }
        Ok(MonomialPrime { ring: ring.clone(), vars })
    }

    pub fn maximal(ring: &Arc<Ring>) -> Self {
        MonomialPrime { ring: ring.clone(), vars: (0..ring.nvars()).collect() }
    }

    /// Parse a list of variable names such as `["x", "y"]`.
    pub fn from_names<S: AsRef<str>>(ring: &Arc<Ring>, names: &[S]) -> Result<Self> {
        let vars = names
            .iter()
            .map(|s| {
                ring.index_of(s.as_ref()).ok_or_else(|| Error::Parse {
                    offset: 0,
                    message: format!("unknown variable `{}`", s.as_ref()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, vars)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    /// `dim S/p`.
    pub fn dim(&self) -> i64 {
        (self.ring.nvars() - self.vars.len()) as i64
    }

    pub fn is_maximal(&self) -> bool {
        self.vars.len() == self.ring.nvars()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.in_monomial_prime(&self.vars)
    }

    pub fn contains_prime(&self, other: &MonomialPrime) -> bool {
        other.vars.iter().all(|v| self.vars.binary_search(v).is_ok())
    }

    /// Product of the variables outside the prime.
    pub fn complement_product(&self) -> Monomial {
        let n = self.ring.nvars();
        let e: Vec<u16> = (0..n).map(|v| u16::from(self.vars.binary_search(&v).is_err())).collect();
        Monomial::new(&e)
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let n = self.ring.nvars();
        MonomialIdeal::new(&self.ring, self.vars.iter().map(|&v| Monomial::var(n, v)).collect())
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|&v| self.ring.name(v).to_string()).collect()
    }
}

impl PartialEq for MonomialPrime {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for MonomialPrime {}

impl Hash for MonomialPrime {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.vars.hash(state);
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars.cmp(&other.vars)
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return f.write_str("(0)");
        }
        write!(f, "({})", self.names().join(","))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monomial ideal stored by its minimal generators.
#[derive(Clone)]
pub struct MonomialIdeal {
    ring: Arc<Ring>,
    gens: Vec<Monomial>,
}

fn canonical(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.exps().cmp(a.exps()))
}

/// Minimal generators of the ideal generated by `gens`, canonically sorted.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(canonical);
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.nvars() == ring.nvars()));
        MonomialIdeal { ring: ring.clone(), gens: minimalize(gens) }
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: vec![Monomial::one(ring.nvars())] }
    }

    /// Fails with `NotMonomial` unless the reduced Gröbner basis consists of
    /// monomials.
    pub fn from_polynomials(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<Self> {
        if gens.iter().all(|g| g.len() <= 1) {
            let ms = gens.iter().filter_map(|g| g.leading().map(|t| t.0.clone())).collect();
            return Ok(Self::new(ring, ms));
        }
        Self::from_submodule(&Submodule::ideal(ring, gens)?)
    }

    pub fn from_submodule(ideal: &Submodule) -> Result<Self> {
        if ideal.ambient().rank() != 1 {
            return Err(Error::AmbientMismatch);
        }
        let gb = ideal.groebner_basis();
        let mut gens = Vec::with_capacity(gb.len());
        for e in gb.raw() {
            if e.len() != 1 {
                return Err(Error::NotMonomial(ideal.to_string()));
            }
            gens.push(e[0].mono.clone());
        }
        Ok(Self::new(ideal.ring(), gens))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.exps().iter().all(|&e| e <= 1))
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Every term of `f` lies in the ideal.
    pub fn contains_poly(&self, f: &Polynomial) -> bool {
        f.terms().iter().all(|(m, _)| self.contains(m))
    }

    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(&self.ring, gens)
    }

    /// Pairwise lcm construction.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::new(&self.ring, gens)
    }

    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        Self::new(&self.ring, self.gens.iter().map(|g| m.quotient_of(&g.lcm(m))).collect())
    }

    /// `I : x_v^∞`.
    pub fn saturate_var(&self, v: usize) -> MonomialIdeal {
        Self::new(&self.ring, self.gens.iter().map(|g| g.with_exp(v, 0)).collect())
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::new(&self.ring, self.gens.iter().map(|g| g.radical()).collect())
    }

    pub fn to_polynomials(&self) -> Vec<Polynomial> {
        self.gens.iter().map(|g| Polynomial::monomial(&self.ring, g.clone())).collect()
    }

    pub fn to_submodule(&self) -> Submodule {
        Submodule::ideal(&self.ring, &self.to_polynomials()).expect("monomials are homogeneous")
    }

    /// `S / I`.
    pub fn quotient_module(&self) -> PresentedModule {
        PresentedModule::cyclic(&self.to_submodule()).expect("ideals live in rank one")
    }

    /// `dim S/I` from a minimum set of variables meeting every generator;
    /// `-1` for the unit ideal.
    pub fn dim(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let supports: Vec<Vec<usize>> = self.gens.iter().map(|g| g.support().collect()).collect();
        let mut chosen = vec![false; self.nvars()];
        let mut best = self.nvars();
        min_cover(&supports, &mut chosen, 0, &mut best);
        (self.nvars() - best) as i64
    }

    /// Irredundant irreducible decomposition: components generated by pure
    /// powers, none containing another.
    pub fn irreducible_components(&self) -> Result<Vec<MonomialIdeal>> {
        if self.is_unit() {
            return Err(Error::UnitIdeal("primary decomposition"));
        }
        let mut out: Vec<Vec<Monomial>> = Vec::new();
        let mut seen: HashSet<Vec<Monomial>> = HashSet::new();
        let mut stack = vec![self.gens.clone()];
        while let Some(gens) = stack.pop() {
            if !seen.insert(gens.clone()) {
                continue;
            }
            match gens.iter().find(|g| g.support().count() > 1) {
                None => out.push(gens),
                Some(g) => {
                    let v = g.support().next().unwrap();
                    let head = Monomial::one(g.nvars()).with_exp(v, g.exp(v));
                    let tail = g.with_exp(v, 0);
                    for part in [head, tail] {
                        let mut next = gens.clone();
                        next.push(part);
                        stack.push(minimalize(next));
                    }
                }
            }
        }
        let comps: Vec<MonomialIdeal> = out.into_iter().map(|g| MonomialIdeal { ring: self.ring.clone(), gens: g }).collect();
        let mut keep: Vec<MonomialIdeal> = Vec::new();
        for (i, c) in comps.iter().enumerate() {
            let redundant = comps.iter().enumerate().any(|(j, o)| {
                j != i && o.is_subset(c) && (!c.is_subset(o) || j < i)
            });
            if !redundant {
                keep.push(c.clone());
            }
        }
        keep.sort_by(|a, b| a.gens.iter().map(|g| g.exps()).cmp(b.gens.iter().map(|g| g.exps())));
        Ok(keep)
    }

    /// Irredundant primary decomposition, sorted by prime.
    pub fn primary_decomposition(&self) -> Result<Vec<(MonomialIdeal, MonomialPrime)>> {
        let mut groups: BTreeMap<MonomialPrime, MonomialIdeal> = BTreeMap::new();
        for c in self.irreducible_components()? {
            let vars: Vec<usize> = c.gens.iter().map(|g| g.support().next().unwrap()).collect();
            let p = MonomialPrime::new(&self.ring, vars)?;
            let q = match groups.remove(&p) {
                Some(q) => q.intersect(&c),
                None => c,
            };
            groups.insert(p, q);
        }
        Ok(groups.into_iter().map(|(p, q)| (q, p)).collect())
    }

    /// `Ass(S/I)`, sorted.
    pub fn associated_primes(&self) -> Result<Vec<MonomialPrime>> {
        Ok(self.primary_decomposition()?.into_iter().map(|(_, p)| p).collect())
    }

    pub fn minimal_primes(&self) -> Result<Vec<MonomialPrime>> {
        let ass = self.associated_primes()?;
        Ok(ass.iter().filter(|p| !ass.iter().any(|q| q != *p && p.contains_prime(q))).cloned().collect())
    }
}

fn min_cover(supports: &[Vec<usize>], chosen: &mut [bool], size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    match supports.iter().find(|s| !s.iter().any(|&v| chosen[v])) {
        None => *best = size,
        Some(s) => {
            for &v in s {
                chosen[v] = true;
                min_cover(supports, chosen, size + 1, best);
                chosen[v] = false;
            }
        }
    }
}

/// Intersection of a list of ideals; the empty list gives the unit ideal.
pub fn monomial_intersect(ring: &Arc<Ring>, ideals: &[MonomialIdeal]) -> MonomialIdeal {
    ideals.iter().fold(MonomialIdeal::unit(ring), |acc, i| acc.intersect(i))
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.display(self.ring.names()).to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
