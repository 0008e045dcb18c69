use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use super::order::ModuleOrder;
use super::poly::Polynomial;
use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Graded free module `⊕ S(-twist_i)`; basis vector `e_i` has degree `twist_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeModule {
    ring: Arc<Ring>,
    twists: Vec<i32>,
}

impl FreeModule {
    pub fn new(ring: &Arc<Ring>, twists: Vec<i32>) -> Arc<FreeModule> {
        Arc::new(FreeModule { ring: ring.clone(), twists })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn twist(&self, i: usize) -> i32 {
        self.twists[i]
    }

    pub(crate) fn same(a: &Arc<FreeModule>, b: &Arc<FreeModule>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }

    pub(crate) fn check(a: &Arc<FreeModule>, b: &Arc<FreeModule>) -> Result<()> {
        if FreeModule::same(a, b) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }
}

impl fmt::Debug for FreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{:?}", self.ring, self.twists)
    }
}

/// A term `coeff * mono * e_pos` of a free-module element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub mono: Monomial,
    pub pos: usize,
    pub coeff: Rational,
}

/// Element of a graded free module, stored sparsely with terms sorted
/// descending in term-over-position grevlex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeElement {
    ambient: Arc<FreeModule>,
    terms: Vec<Term>,
}

impl FreeElement {
    pub fn zero(ambient: &Arc<FreeModule>) -> Self {
        FreeElement { ambient: ambient.clone(), terms: Vec::new() }
    }

    pub fn basis(ambient: &Arc<FreeModule>, i: usize) -> Self {
        let n = ambient.ring().nvars();
        FreeElement {
            ambient: ambient.clone(),
            terms: vec![Term { mono: Monomial::one(n), pos: i, coeff: Rational::one() }],
        }
    }

    /// Build from one polynomial per coordinate.
    pub fn from_coords(ambient: &Arc<FreeModule>, coords: &[Polynomial]) -> Result<Self> {
        if coords.len() != ambient.rank() {
            return Err(Error::AmbientMismatch);
        }
        let mut terms = Vec::new();
        for (pos, c) in coords.iter().enumerate() {
            Ring::check(c.ring(), ambient.ring())?;
            for (m, x) in c.terms() {
                terms.push(Term { mono: m.clone(), pos, coeff: x.clone() });
            }
        }
        Ok(Self::from_terms(ambient, terms))
    }

    /// Combine like terms and sort into canonical order.
    pub fn from_terms(ambient: &Arc<FreeModule>, mut terms: Vec<Term>) -> Self {
        let order = ModuleOrder::default();
        terms.sort_by(|a, b| order.compare(&b.mono, b.pos, &a.mono, a.pos));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.pos == t.pos && last.mono == t.mono => {
                    last.coeff = &last.coeff + &t.coeff;
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        FreeElement { ambient: ambient.clone(), terms: out }
    }

    /// Terms known to be sorted in an arbitrary order: re-sort canonically.
    pub(crate) fn from_any_order(ambient: &Arc<FreeModule>, terms: Vec<Term>) -> Self {
        Self::from_terms(ambient, terms)
    }

    pub fn ambient(&self) -> &Arc<FreeModule> {
        &self.ambient
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.ambient.ring()
    }

    pub fn rank(&self) -> usize {
        self.ambient.rank()
    }

    pub fn twists(&self) -> &[i32] {
        self.ambient.twists()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coordinate(&self, pos: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.pos == pos)
            .map(|t| (t.mono.clone(), t.coeff.clone()))
            .collect();
        Polynomial::from_terms(self.ring(), terms)
    }

    pub fn coordinates(&self) -> Vec<Polynomial> {
        (0..self.rank()).map(|i| self.coordinate(i)).collect()
    }

    /// Twisted degree of a term.
    pub fn term_degree(&self, t: &Term) -> i64 {
        t.mono.degree() as i64 + self.ambient.twist(t.pos) as i64
    }

    /// Homogeneous iff every term has the same twisted degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|t| self.term_degree(t));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Twisted degree of a nonzero homogeneous element.
    pub fn degree(&self) -> Option<i64> {
        self.terms.first().map(|t| self.term_degree(t))
    }

    pub fn add(&self, other: &FreeElement) -> Result<FreeElement> {
        FreeModule::check(&self.ambient, &other.ambient)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(FreeElement::from_terms(&self.ambient, terms))
    }

    pub fn scale(&self, c: &Rational) -> FreeElement {
        if c.is_zero() {
            return FreeElement::zero(&self.ambient);
        }
        FreeElement {
            ambient: self.ambient.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.clone(), pos: t.pos, coeff: &t.coeff * c })
                .collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> FreeElement {
        let mut terms = Vec::with_capacity(self.terms.len() * f.len());
        for (m, c) in f.terms() {
            for t in &self.terms {
                terms.push(Term { mono: t.mono.mul(m), pos: t.pos, coeff: &t.coeff * c });
            }
        }
        FreeElement::from_terms(&self.ambient, terms)
    }

    /// Same coordinates viewed in another free module of equal rank.
    pub fn rehome(&self, ambient: &Arc<FreeModule>) -> FreeElement {
        debug_assert_eq!(ambient.rank(), self.rank());
        FreeElement { ambient: ambient.clone(), terms: self.terms.clone() }
    }

    /// Coordinates `range` re-indexed from zero into `ambient`.
    pub fn project(&self, start: usize, ambient: &Arc<FreeModule>) -> FreeElement {
        let end = start + ambient.rank();
        let terms = self
            .terms
            .iter()
            .filter(|t| t.pos >= start && t.pos < end)
            .map(|t| Term { mono: t.mono.clone(), pos: t.pos - start, coeff: t.coeff.clone() })
            .collect();
        FreeElement::from_terms(ambient, terms)
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coordinates().iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", coords.join(", "))
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homogeneity_uses_twists() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let f = FreeModule::new(&r, vec![0, 1]);
        let x2 = Polynomial::parse(&r, "x^2").unwrap();
        let y = Polynomial::parse(&r, "y").unwrap();
        let v = FreeElement::from_coords(&f, &[x2.clone(), y.clone()]).unwrap();
        assert!(v.is_homogeneous());
        assert_eq!(v.degree(), Some(2));
        let w = FreeElement::from_coords(&f, &[y, x2]).unwrap();
        assert!(!w.is_homogeneous());
        assert_eq!(v.coordinates()[1].to_string(), "y");
        assert!(FreeElement::from_coords(&f, &[Polynomial::zero(&r)]).is_err());
    }
}
