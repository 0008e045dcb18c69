//! Monomial orders and their extensions to free modules.

use std::cmp::Ordering;
use std::sync::Arc;

use super::monomial::Monomial;

/// Order on monomials of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Degree first, ties broken by the smaller power of the last variable.
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
        }
    }
}

#[inline]
pub(crate) fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    let (ea, eb) = (a.exps(), b.exps());
    let da: u32 = ea.iter().map(|&e| e as u32).sum();
    let db: u32 = eb.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..ea.len()).rev() {
        match ea[i].cmp(&eb[i]) {
            Ordering::Equal => {}
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Order on module terms `m * e_i` of a free module.
///
/// Lower basis index counts as larger wherever position decides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    TermOverPosition(MonomialOrder),
    PositionOverTerm(MonomialOrder),
    /// `m e_i > n e_j` iff `m * lead(g_i) > n * lead(g_j)` in the base order,
    /// ties broken by index.
    Schreyer(Arc<SchreyerFrame>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerFrame {
    pub base: ModuleOrder,
    /// Leading term `(monomial, position)` of each generator in the base module.
    pub leads: Vec<(Monomial, usize)>,
}

impl Default for ModuleOrder {
    fn default() -> Self {
        ModuleOrder::TermOverPosition(MonomialOrder::Grevlex)
    }
}

impl ModuleOrder {
    pub fn schreyer(base: ModuleOrder, leads: Vec<(Monomial, usize)>) -> Self {
        ModuleOrder::Schreyer(Arc::new(SchreyerFrame { base, leads }))
    }

    pub fn compare(&self, ma: &Monomial, pa: usize, mb: &Monomial, pb: usize) -> Ordering {
        match self {
            ModuleOrder::TermOverPosition(o) => match o.compare(ma, mb) {
                Ordering::Equal => pb.cmp(&pa),
                r => r,
            },
            ModuleOrder::PositionOverTerm(o) => match pb.cmp(&pa) {
                Ordering::Equal => o.compare(ma, mb),
                r => r,
            },
            ModuleOrder::Schreyer(frame) => {
                let (la, ia) = &frame.leads[pa];
                let (lb, ib) = &frame.leads[pb];
                match frame.base.compare(&ma.mul(la), *ia, &mb.mul(lb), *ib) {
                    Ordering::Equal => pb.cmp(&pa),
                    r => r,
                }
            }
        }
    }

    /// The monomial order used when the module has rank one.
    pub fn monomial_order(&self) -> MonomialOrder {
        match self {
            ModuleOrder::TermOverPosition(o) | ModuleOrder::PositionOverTerm(o) => *o,
            ModuleOrder::Schreyer(frame) => frame.base.monomial_order(),
        }
    }
}
