use std::sync::Arc;

use super::presented::PresentedModule;
use crate::error::Result;
use crate::groebner::{apply, Submodule};
use crate::kernel::{FreeElement, FreeModule};

/// `0 <- F0 <- F1 <- ... <- FL <- 0`, with `maps[k]` holding the columns of
/// `φ_{k+1}: F_{k+1} -> F_k`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    modules: Vec<Arc<FreeModule>>,
    maps: Vec<Vec<FreeElement>>,
    minimal: bool,
}

impl FreeResolution {
    /// With `minimal`, the presentation is minimized first; every syzygy
    /// step picks minimal generators, so the whole resolution is minimal.
    pub fn compute(m: &PresentedModule, minimal: bool) -> FreeResolution {
        let m = if minimal { m.minimize() } else { m.clone() };
        let mut modules = vec![m.target().clone()];
        let mut maps: Vec<Vec<FreeElement>> = Vec::new();
        let mut cols: Vec<FreeElement> = m.relations().generators().to_vec();
        while !cols.is_empty() {
            let k = modules.len() - 1;
            let image = Submodule::new(&modules[k], cols.clone()).expect("homogeneous columns");
            let twists: Vec<i32> = cols.iter().map(|c| c.degree().unwrap() as i32).collect();
            let next = FreeModule::new(modules[k].ring(), twists);
            let syz = image.syzygies().rehome(&next);
            modules.push(next);
            maps.push(cols);
            cols = syz.generators().to_vec();
        }
        FreeResolution { modules, maps, minimal }
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Number of nonzero maps.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn module(&self, k: usize) -> Option<&Arc<FreeModule>> {
        self.modules.get(k)
    }

    /// Columns of `φ_k`, `1 <= k <= length`.
    pub fn map(&self, k: usize) -> Option<&[FreeElement]> {
        k.checked_sub(1).and_then(|i| self.maps.get(i)).map(|v| v.as_slice())
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.modules.iter().map(|f| f.rank()).collect()
    }

    /// `φ_k ∘ φ_{k+1} = 0` for every `k`.
    pub fn is_complex(&self) -> bool {
        (1..self.maps.len()).all(|k| {
            let outer = &self.maps[k - 1];
            self.maps[k].iter().all(|c| apply(c, outer, &self.modules[k - 1]).is_zero())
        })
    }

    /// `ker φ_k = im φ_{k+1}` for every `k >= 1`, by two-sided membership.
    pub fn is_exact(&self) -> Result<bool> {
        for k in 0..self.maps.len() {
            let ker = Submodule::kernel_of_map(&self.modules[k + 1], &self.maps[k])?;
            let im = match self.maps.get(k + 1) {
                Some(cols) => Submodule::new(&self.modules[k + 1], cols.clone())?,
                None => Submodule::zero(&self.modules[k + 1]),
            };
            if !ker.equals(&im)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// No column of any map has a nonzero constant entry.
    pub fn has_no_unit_entries(&self) -> bool {
        self.maps.iter().flatten().all(|c| c.terms().iter().all(|t| !t.mono.is_one()))
    }
}
