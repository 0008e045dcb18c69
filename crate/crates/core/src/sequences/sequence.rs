use std::fmt;

use super::classify::{check_element, test_element, Failure, SequenceKind};
use crate::error::Result;
use crate::homology::PresentedModule;
use crate::kernel::Polynomial;

/// Outcome of checking `x_1, ..., x_t` step by step on `M/(x_1..x_{i-1})M`.
#[derive(Clone, Debug)]
pub struct SequenceReport {
    pub kind: SequenceKind,
    pub elements: Vec<Polynomial>,
    pub verdict: bool,
    /// Index (0-based) of the first element failing on its quotient.
    pub first_failure: Option<(usize, Failure)>,
    /// `M, M/x_1 M, ...` up to the module on which the check stopped.
    pub trail: Vec<PresentedModule>,
}

impl SequenceReport {
    pub fn trail_dims(&self) -> Vec<i64> {
        self.trail.iter().map(|m| m.dim()).collect()
    }
}

impl fmt::Display for SequenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "({}) {} sequence: {}", elems.join(", "), self.kind, self.verdict)?;
        if let Some((i, why)) = &self.first_failure {
            write!(f, " (element {} fails, {why})", i + 1)?;
        }
        Ok(())
    }
}

/// Checks `fs` against `kind` by classifying each element on the successive
/// quotient.
pub fn check_sequence(m: &PresentedModule, fs: &[Polynomial], kind: SequenceKind) -> Result<SequenceReport> {
    for f in fs {
        check_element(m, f)?;
    }
    let mut trail = vec![m.clone()];
    let mut first_failure = None;
    for (i, f) in fs.iter().enumerate() {
        let cur = trail.last().unwrap();
        if let Some(why) = test_element(cur, f, kind)? {
            first_failure = Some((i, why));
            break;
        }
        let next = cur.quotient(std::slice::from_ref(f))?;
        trail.push(next);
    }
    Ok(SequenceReport { kind, elements: fs.to_vec(), verdict: first_failure.is_none(), first_failure, trail })
}

/// `|fs| = dim M` and `M/(fs)M` has finite length.
pub fn is_sop(m: &PresentedModule, fs: &[Polynomial]) -> Result<bool> {
    for f in fs {
        check_element(m, f)?;
    }
    let d = m.dim();
    if d < 0 || fs.len() as i64 != d {
        return Ok(false);
    }
    Ok(m.quotient(fs)?.dim() <= 0)
}

/// `dim M/(fs)M = dim M - |fs|`.
pub fn is_part_of_sop(m: &PresentedModule, fs: &[Polynomial]) -> Result<bool> {
    for f in fs {
        check_element(m, f)?;
    }
    if fs.is_empty() {
        return Ok(true);
    }
    let d = m.dim();
    if fs.len() as i64 > d {
        return Ok(false);
    }
    Ok(m.quotient(fs)?.dim() == d - fs.len() as i64)
}
