use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homology::PresentedModule;
use crate::kernel::{require_positive_homogeneous, Polynomial, Ring};

/// The five element notions, from strongest to weakest within each family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceKind {
    Regular,
    FElement,
    GeneralizedRegular,
    Sequential,
    SequentialF,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 5] = [
        SequenceKind::Regular,
        SequenceKind::FElement,
        SequenceKind::GeneralizedRegular,
        SequenceKind::Sequential,
        SequenceKind::SequentialF,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Regular => "regular",
            SequenceKind::FElement => "f-element",
            SequenceKind::GeneralizedRegular => "generalized-regular",
            SequenceKind::Sequential => "sequential",
            SequenceKind::SequentialF => "sequential-f",
        }
    }

    /// Whether the test looks at the deficiency modules rather than `M`.
    pub fn needs_battery(self) -> bool {
        matches!(self, SequenceKind::Sequential | SequenceKind::SequentialF)
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "regular" => SequenceKind::Regular,
            "f" | "f-element" | "filter-regular" => SequenceKind::FElement,
            "generalized-regular" | "gr" => SequenceKind::GeneralizedRegular,
            "sequential" => SequenceKind::Sequential,
            "sequential-f" => SequenceKind::SequentialF,
            _ => return Err(Error::Parse { offset: 0, message: format!("unknown sequence kind `{s}`") }),
        })
    }
}

/// Evidence for a failed test: a kernel of multiplication that is too big.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub kind: SequenceKind,
    /// `None` for `(0 :_M f)`, `Some(i)` for `(0 :_{K^i(M)} f)`.
    pub deficiency_index: Option<usize>,
    /// Dimension of the offending kernel.
    pub kernel_dim: i64,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.deficiency_index {
            None => write!(f, "{}: kernel on M has dimension {}", self.kind, self.kernel_dim),
            Some(i) => write!(f, "{}: kernel on K^{i} has dimension {}", self.kind, self.kernel_dim),
        }
    }
}

/// Verdicts of one element against all five notions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementClassification {
    pub is_regular: bool,
    pub is_f_element: bool,
    pub is_generalized_regular: bool,
    pub is_sequential: bool,
    pub is_sequential_f: bool,
    /// `dim (0 :_M f)`.
    pub kernel_dim: i64,
    /// `dim (0 :_{K^i} f)` for `0 <= i <= d`; `-1` when the kernel vanishes.
    pub deficiency_kernel_dims: Vec<i64>,
    pub witnesses: Vec<Failure>,
}

impl ElementClassification {
    pub fn get(&self, kind: SequenceKind) -> bool {
        match kind {
            SequenceKind::Regular => self.is_regular,
            SequenceKind::FElement => self.is_f_element,
            SequenceKind::GeneralizedRegular => self.is_generalized_regular,
            SequenceKind::Sequential => self.is_sequential,
            SequenceKind::SequentialF => self.is_sequential_f,
        }
    }

    /// The implications regular ⇒ f ⇒ generalized regular, sequential ⇒ f and
    /// sequential-f ⇒ generalized regular.
    pub fn respects_hierarchy(&self) -> bool {
        (!self.is_regular || self.is_f_element)
            && (!self.is_f_element || self.is_generalized_regular)
            && (!self.is_sequential || self.is_f_element)
            && (!self.is_sequential_f || self.is_generalized_regular)
    }

    pub fn witness(&self, kind: SequenceKind) -> Option<&Failure> {
        self.witnesses.iter().find(|w| w.kind == kind)
    }
}

pub(crate) fn check_element(m: &PresentedModule, f: &Polynomial) -> Result<()> {
    Ring::check(f.ring(), m.ring())?;
    require_positive_homogeneous(f)
}

fn module_failure(kind: SequenceKind, kd: i64) -> Option<Failure> {
    let bound = match kind {
        SequenceKind::Regular => -1,
        SequenceKind::FElement => 0,
        SequenceKind::GeneralizedRegular => 1,
        _ => unreachable!(),
    };
    (kd > bound).then_some(Failure { kind, deficiency_index: None, kernel_dim: kd })
}

/// First deficiency module violating the sequential (resp. sequential-f)
/// condition, given the kernel dimensions on every `K^i`.
fn battery_failure(kind: SequenceKind, dims: &[i64]) -> Option<Failure> {
    let (start, bound) = match kind {
        SequenceKind::Sequential => (1, -1),
        SequenceKind::SequentialF => (2, 0),
        _ => unreachable!(),
    };
    (start..dims.len())
        .find(|&i| dims[i] > bound)
        .map(|i| Failure { kind, deficiency_index: Some(i), kernel_dim: dims[i] })
}

/// `dim (0 :_{K^i} f)` for every deficiency module.
fn deficiency_kernel_dims(m: &PresentedModule, f: &Polynomial, from: usize) -> Result<Vec<i64>> {
    let b = m.deficiency_battery()?;
    b.modules()
        .par_iter()
        .enumerate()
        .map(|(i, k)| if i < from || k.is_zero() { Ok(-1) } else { k.kernel_dimension(f) })
        .collect()
}

/// Classifies `f` against all five notions. On the zero module every
/// verdict is vacuously true.
pub fn classify_element(m: &PresentedModule, f: &Polynomial) -> Result<ElementClassification> {
    check_element(m, f)?;
    if m.is_zero() {
        return Ok(ElementClassification {
            is_regular: true,
            is_f_element: true,
            is_generalized_regular: true,
            is_sequential: true,
            is_sequential_f: true,
            kernel_dim: -1,
            deficiency_kernel_dims: Vec::new(),
            witnesses: Vec::new(),
        });
    }
    let kd = m.kernel_dimension(f)?;
    let dims = deficiency_kernel_dims(m, f, 0)?;
    let mut witnesses = Vec::new();
    for kind in [SequenceKind::Regular, SequenceKind::FElement, SequenceKind::GeneralizedRegular] {
        witnesses.extend(module_failure(kind, kd));
    }
    for kind in [SequenceKind::Sequential, SequenceKind::SequentialF] {
        witnesses.extend(battery_failure(kind, &dims));
    }
    let ok = |k| !witnesses.iter().any(|w: &Failure| w.kind == k);
    Ok(ElementClassification {
        is_regular: ok(SequenceKind::Regular),
        is_f_element: ok(SequenceKind::FElement),
        is_generalized_regular: ok(SequenceKind::GeneralizedRegular),
        is_sequential: ok(SequenceKind::Sequential),
        is_sequential_f: ok(SequenceKind::SequentialF),
        kernel_dim: kd,
        deficiency_kernel_dims: dims,
        witnesses,
    })
}

/// Tests a single notion, computing only what it needs.
pub fn test_element(m: &PresentedModule, f: &Polynomial, kind: SequenceKind) -> Result<Option<Failure>> {
    check_element(m, f)?;
    if m.is_zero() {
        return Ok(None);
    }
    if kind.needs_battery() {
        let from = if kind == SequenceKind::Sequential { 1 } else { 2 };
        Ok(battery_failure(kind, &deficiency_kernel_dims(m, f, from)?))
    } else {
        Ok(module_failure(kind, m.kernel_dimension(f)?))
    }
}

/// `Some(j)` when the maximal ideal is attached to `H^j` for some `j >= 1`,
/// in which case no element is sequential.
pub fn sequential_obstruction(m: &PresentedModule) -> Result<Option<usize>> {
    if m.is_zero() {
        return Ok(None);
    }
    let b = m.deficiency_battery()?;
    for (j, k) in b.modules().iter().enumerate().skip(1) {
        if !k.is_zero() && k.has_socle()? {
            return Ok(Some(j));
        }
    }
    Ok(None)
}
