use std::sync::Arc;

use rayon::prelude::*;

use super::presented::PresentedModule;
use super::resolution::FreeResolution;
use crate::error::{Error, Result};
use crate::groebner::Submodule;
use crate::kernel::{FreeElement, FreeModule, Term};

/// The deficiency modules `K^i(M) = Ext^{n-i}(M, S)` for `0 <= i <= d`.
#[derive(Clone, Debug)]
pub struct DeficiencyBattery {
    n: usize,
    d: i64,
    modules: Vec<PresentedModule>,
}

impl DeficiencyBattery {
    pub fn compute(m: &PresentedModule) -> Result<DeficiencyBattery> {
        if m.is_zero() {
            return Err(Error::ZeroModule("deficiency modules"));
        }
        let n = m.ring().nvars();
        let d = m.dim();
        let res = FreeResolution::compute(m, true);
        let modules: Vec<PresentedModule> =
            (0..=d as usize).into_par_iter().map(|i| ext(&res, n - i)).collect();
        Ok(DeficiencyBattery { n, d, modules })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> i64 {
        self.d
    }

    /// Smallest `i` with `K^i != 0`.
    pub fn depth(&self) -> i64 {
        self.nonzero_indices().first().map(|&i| i as i64).unwrap_or(self.d)
    }

    pub fn module(&self, i: usize) -> Result<&PresentedModule> {
        self.modules.get(i).ok_or(Error::IndexOutOfRange { index: i, max: self.d.max(0) as usize })
    }

    pub fn modules(&self) -> &[PresentedModule] {
        &self.modules
    }

    pub fn nonzero_indices(&self) -> Vec<usize> {
        (0..self.modules.len()).filter(|&i| !self.modules[i].is_zero()).collect()
    }

    /// `dim K^i` for every `i`, `-1` where it vanishes.
    pub fn dims(&self) -> Vec<i64> {
        self.modules.iter().map(|k| k.dim()).collect()
    }
}

fn dual(f: &Arc<FreeModule>) -> Arc<FreeModule> {
    FreeModule::new(f.ring(), f.twists().iter().map(|t| -t).collect())
}

/// Rows of `cols` (a map into `rows_of`) as elements of the dual of its source.
fn transpose(cols: &[FreeElement], source_dual: &Arc<FreeModule>, rows: usize) -> Vec<FreeElement> {
    let mut out: Vec<Vec<Term>> = vec![Vec::new(); rows];
    for (b, c) in cols.iter().enumerate() {
        for t in c.terms() {
            out[t.pos].push(Term { mono: t.mono.clone(), pos: b, coeff: t.coeff.clone() });
        }
    }
    out.into_iter().map(|ts| FreeElement::from_terms(source_dual, ts)).collect()
}

/// `Ext^j(M, S)` as the homology of the dualized resolution at `F_j^*`.
pub(crate) fn ext(res: &FreeResolution, j: usize) -> PresentedModule {
    let Some(fj) = res.module(j) else {
        let ring = res.module(0).unwrap().ring().clone();
        return PresentedModule::free(&ring, Vec::new());
    };
    let fj_dual = dual(fj);
    let kernel = match res.map(j + 1) {
        Some(cols) => {
            let next_dual = dual(res.module(j + 1).unwrap());
            let rows = transpose(cols, &next_dual, fj.rank());
            Submodule::kernel_of_map(&fj_dual, &rows).expect("transposed maps are homogeneous")
        }
        None => Submodule::full(&fj_dual),
    };
    let image = match j.checked_sub(1).and_then(|_| res.map(j)) {
        Some(cols) => {
            let prev = res.module(j - 1).unwrap();
            let gens = transpose(cols, &fj_dual, prev.rank());
            Submodule::new(&fj_dual, gens).expect("transposed maps are homogeneous")
        }
        None => Submodule::zero(&fj_dual),
    };
    PresentedModule::subquotient(&kernel, &image).expect("image lies in the kernel")
}
