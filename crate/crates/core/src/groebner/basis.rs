use std::sync::Arc;

use super::buchberger::{full_reduce, interreduce, run, Input};
use super::vecops::sort_desc;
use crate::error::{Error, Result};
use crate::kernel::{FreeElement, FreeModule, ModuleOrder, Term};

/// Reduced Gröbner basis of a submodule of a graded free module.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ambient: Arc<FreeModule>,
    order: ModuleOrder,
    /// Monic elements sorted by their leading terms (ascending), each sorted
    /// descending in `order`.
    elements: Vec<Vec<Term>>,
}

impl GroebnerBasis {
    /// Buchberger on homogeneous generators, followed by interreduction.
    pub fn compute(ambient: &Arc<FreeModule>, gens: &[FreeElement], order: &ModuleOrder) -> Result<Self> {
        for g in gens {
            FreeModule::check(ambient, g.ambient())?;
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
        }
        let inputs: Vec<Input<'_>> = gens
            .iter()
            .map(|g| Input { terms: g.terms(), degree: g.degree().unwrap_or(0) })
            .collect();
        let r = run(&inputs, ambient.ring().nvars(), ambient.rank() == 1, order, false);
        let elements = interreduce(r.basis.into_iter().map(|e| e.terms).collect(), order);
        Ok(GroebnerBasis { ambient: ambient.clone(), order: order.clone(), elements })
    }

    pub(crate) fn from_reduced(ambient: &Arc<FreeModule>, order: &ModuleOrder, elements: Vec<Vec<Term>>) -> Self {
        GroebnerBasis { ambient: ambient.clone(), order: order.clone(), elements }
    }

    pub fn ambient(&self) -> &Arc<FreeModule> {
        &self.ambient
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    /// Always true: bases are interreduced on construction.
    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> Vec<FreeElement> {
        self.elements
            .iter()
            .map(|e| FreeElement::from_any_order(&self.ambient, e.clone()))
            .collect()
    }

    pub(crate) fn raw(&self) -> &[Vec<Term>] {
        &self.elements
    }

    /// Leading terms `(monomial, position)` in basis order.
    pub fn leading_terms(&self) -> Vec<(crate::kernel::Monomial, usize)> {
        self.elements.iter().map(|e| (e[0].mono.clone(), e[0].pos)).collect()
    }

    /// Remainder of `f` on division by the basis; zero iff `f` is in the submodule.
    pub fn normal_form(&self, f: &FreeElement) -> Result<FreeElement> {
        FreeModule::check(&self.ambient, f.ambient())?;
        let mut terms = f.terms().to_vec();
        sort_desc(&mut terms, &self.order);
        let refs: Vec<&Vec<Term>> = self.elements.iter().collect();
        let rest = full_reduce(terms, &refs, &self.order);
        Ok(FreeElement::from_any_order(&self.ambient, rest))
    }

    pub fn contains(&self, f: &FreeElement) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// S-pair normal forms of every pair of basis elements sharing a position.
    /// A Gröbner basis has all of them zero.
    pub fn s_pair_remainders(&self) -> Vec<FreeElement> {
        use super::vecops::{axpy, mul_term};
        use crate::kernel::Rational;
        let mut out = Vec::new();
        let refs: Vec<&Vec<Term>> = self.elements.iter().collect();
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let (a, b) = (&self.elements[i], &self.elements[j]);
                if a[0].pos != b[0].pos {
                    continue;
                }
                let l = a[0].mono.lcm(&b[0].mono);
                let ma = a[0].mono.quotient_of(&l);
                let mb = b[0].mono.quotient_of(&l);
                let s = axpy(
                    &mul_term(a, &Rational::one(), &ma),
                    &Rational::from_int(-1),
                    &mb,
                    b,
                    &self.order,
                );
                let r = full_reduce(s, &refs, &self.order);
                out.push(FreeElement::from_any_order(&self.ambient, r));
            }
        }
        out
    }

    /// Syzygies of the basis elements (Schreyer); lives in the free module
    /// whose twists are the degrees of the basis elements.
    pub fn syzygies(&self) -> super::Submodule {
        let gens = self.elements();
        super::Submodule::from_generators_unchecked(&self.ambient, gens).syzygies()
    }
}
