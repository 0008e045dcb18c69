use std::sync::Arc;

use super::routes::{is_sequentially_cm, is_sequentially_gcm, non_cm_locus_dim, polynomial_type, sp_breakdown, u_zero_dim, SpBreakdown};
use crate::error::{Error, Result};
use crate::kernel::{Polynomial, Ring};
use crate::monomial::{attached_primes_all, DimensionFiltration, MonomialIdeal, MonomialPrime};
use crate::sequences::{check_sequence, find_sequence, random_linear_forms, sample_rng, sequential_obstruction, is_sop, SequenceKind};

/// One step `D_{i-1}/D_i` of the dimension filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationStep {
    /// `dim D_{i-1}`, which is also the dimension of the quotient.
    pub dim: i64,
    /// `J_{i-1}` with `D_{i-1} = J_{i-1}/I`.
    pub ideal: MonomialIdeal,
    pub primes: Vec<MonomialPrime>,
    pub is_cm: bool,
    pub is_gcm: bool,
    pub p: i64,
}

/// Everything known about `S/I`.
#[derive(Clone, Debug)]
pub struct Profile {
    pub ring: Arc<Ring>,
    pub ideal: MonomialIdeal,
    pub dim: i64,
    pub depth: i64,
    pub ass: Vec<MonomialPrime>,
    /// `Att H^i_m(M)` for `0 <= i <= d`.
    pub att: Vec<Vec<MonomialPrime>>,
    pub filtration: Vec<FiltrationStep>,
    /// `J_t` with `H^0_m(M) = J_t/I`.
    pub h0: MonomialIdeal,
    pub is_cm: bool,
    pub is_gcm: bool,
    pub is_scm: bool,
    pub is_sgcm: bool,
    pub p: i64,
    pub sp: i64,
    pub sp_breakdown: SpBreakdown,
    pub non_cm_locus_dim: i64,
    pub u_zero_dim: i64,
    /// `Some(j)` when the maximal ideal is attached to `H^j`, `j >= 1`.
    pub sequential_obstruction: Option<usize>,
    /// A sequential s.o.p., searched for when `M` is sCM.
    pub sequential_sop: Option<Vec<Polynomial>>,
    /// A sampled s.o.p. that is not sequential, when `M` is not sCM.
    pub non_sequential_sop: Option<Vec<Polynomial>>,
}

impl Profile {
    pub fn compute(ideal: &MonomialIdeal, seed: u64) -> Result<Profile> {
        if ideal.is_unit() {
            return Err(Error::UnitIdeal("profile"));
        }
        let ring = ideal.ring().clone();
        let m = ideal.quotient_module();
        let (dim, depth) = m.dim_depth()?;
        let ass = ideal.associated_primes()?;
        let att = attached_primes_all(&m)?;
        let filt = DimensionFiltration::compute(ideal)?;
        let mut filtration = Vec::with_capacity(filt.len());
        for i in 1..=filt.len() {
            let q = filt.quotient(i)?;
            filtration.push(FiltrationStep {
                dim: filt.dims()[i - 1],
                ideal: filt.chain()[i - 1].clone(),
                primes: filt.quotient_primes(i),
                is_cm: q.is_cohen_macaulay()?,
                is_gcm: q.is_generalized_cm()?,
                p: polynomial_type(&q)?,
            });
        }
        let is_scm = is_sequentially_cm(ideal)?;
        let is_sgcm = is_sequentially_gcm(ideal)?;
        let sp_breakdown = sp_breakdown(ideal)?;
        let sp = sp_breakdown.sp()?;
        let obstruction = sequential_obstruction(&m)?;
        let (sequential_sop, non_sequential_sop) = if is_scm {
            (find_sequence(&m, SequenceKind::Sequential, dim as usize, seed).ok(), None)
        } else {
            (None, first_non_sequential_sop(ideal, seed)?)
        };
        Ok(Profile {
            ring,
            ideal: ideal.clone(),
            dim,
            depth,
            ass,
            att,
            filtration,
            h0: filt.h0().clone(),
            is_cm: m.is_cohen_macaulay()?,
            is_gcm: m.is_generalized_cm()?,
            is_scm,
            is_sgcm,
            p: polynomial_type(&m)?,
            sp,
            sp_breakdown,
            non_cm_locus_dim: non_cm_locus_dim(&m)?,
            u_zero_dim: u_zero_dim(ideal)?,
            sequential_obstruction: obstruction,
            sequential_sop,
            non_sequential_sop,
        })
    }
}

/// First seeded random s.o.p. which is not a sequential sequence.
fn first_non_sequential_sop(ideal: &MonomialIdeal, seed: u64) -> Result<Option<Vec<Polynomial>>> {
    let m = ideal.quotient_module();
    let d = m.dim() as usize;
    for k in 0..16u64 {
        let mut rng = sample_rng(seed, k);
        let fs = random_linear_forms(m.ring(), &mut rng, d, false);
        if is_sop(&m, &fs)? && !check_sequence(&m, &fs, SequenceKind::Sequential)?.verdict {
            return Ok(Some(fs));
        }
    }
    Ok(None)
}
