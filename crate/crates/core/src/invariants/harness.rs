//! Sampled checks of the characterizations of sCM, sgCM, CM and gCM modules
//! by systems of parameters.

use std::fmt;

use rand::Rng;
use rayon::prelude::*;

use super::routes::{is_sequentially_cm, is_sequentially_gcm};
use crate::error::Result;
use crate::homology::PresentedModule;
use crate::kernel::Polynomial;
use crate::monomial::{attached_primes_all, is_multigraded, largest_small_submodule, MonomialIdeal, MonomialPrime};
use crate::sequences::{check_sequence, is_sop, random_linear_forms, sample_rng, SequenceKind};

/// Draws per sample before the sample is counted as not drawn.
const DRAWS_PER_SAMPLE: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    /// sCM iff some s.o.p. is sequential iff every f-sequence s.o.p. is.
    SequentialCm,
    /// sgCM iff every generalized regular s.o.p. is a sequential f-sequence.
    SequentialGcm,
    /// For `d >= 2`: CM iff `H^0 = 0` and every s.o.p. is sequential.
    CohenMacaulay,
    /// For `d >= 2`: gCM iff `M' = H^0` and every s.o.p. is sequential-f.
    GeneralizedCm,
}

impl Clause {
    pub const ALL: [Clause; 4] = [Clause::SequentialCm, Clause::SequentialGcm, Clause::CohenMacaulay, Clause::GeneralizedCm];

    pub fn name(self) -> &'static str {
        match self {
            Clause::SequentialCm => "scm-by-sequential-sop",
            Clause::SequentialGcm => "sgcm-by-sequential-f-sop",
            Clause::CohenMacaulay => "cm-by-sequential-sop",
            Clause::GeneralizedCm => "gcm-by-sequential-f-sop",
        }
    }

    /// Condition a sampled s.o.p. must meet before it is tested.
    fn precondition(self) -> Option<SequenceKind> {
        match self {
            Clause::SequentialCm => Some(SequenceKind::FElement),
            Clause::SequentialGcm => Some(SequenceKind::GeneralizedRegular),
            _ => None,
        }
    }

    /// Property tested on each sampled s.o.p.
    fn tested(self) -> SequenceKind {
        match self {
            Clause::SequentialCm | Clause::CohenMacaulay => SequenceKind::Sequential,
            Clause::SequentialGcm | Clause::GeneralizedCm => SequenceKind::SequentialF,
        }
    }

    fn stream(self) -> u64 {
        (self as u64 + 1) << 32
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Samples are consistent with the verdict.
    Agree,
    /// A sample contradicts the verdict.
    Disagree,
    /// The verdict is negative but no sample exhibited a failure, or no
    /// suitable s.o.p. could be drawn at all.
    Unwitnessed,
    /// The clause needs `d >= 2`.
    NotApplicable,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Agree => "agree",
            Outcome::Disagree => "disagree",
            Outcome::Unwitnessed => "unwitnessed",
            Outcome::NotApplicable => "not-applicable",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct ClauseReport {
    pub clause: Clause,
    /// The module property the clause characterizes.
    pub verdict: bool,
    /// `H^0 = 0` or `M' = H^0` for the corollary clauses.
    pub side_condition: Option<bool>,
    /// Samples for which a suitable s.o.p. was drawn.
    pub drawn: usize,
    /// Drawn samples passing the tested property.
    pub passed: usize,
    pub outcome: Outcome,
    /// First sampled s.o.p. failing the tested property.
    pub failing: Option<Vec<Polynomial>>,
    /// First sampled s.o.p. passing it.
    pub passing: Option<Vec<Polynomial>>,
}

#[derive(Clone, Debug)]
pub struct HarnessReport {
    pub seed: u64,
    pub samples: usize,
    pub clauses: Vec<ClauseReport>,
}

impl HarnessReport {
    pub fn clause(&self, c: Clause) -> &ClauseReport {
        self.clauses.iter().find(|r| r.clause == c).expect("every clause is reported")
    }

    pub fn any_disagreement(&self) -> bool {
        self.clauses.iter().any(|c| c.outcome == Outcome::Disagree)
    }
}

/// Seeded source of systems of parameters. Sample `k` is dense when
/// `k % 3 == 0` and sparse when `k % 3 == 1`; when `k % 3 == 2` its first
/// form lies in a non-maximal attached prime of some `H^j`, `j >= 1`, if
/// there is one. Those samples fall back to dense forms after half of
/// their attempts.
pub struct SopSampler<'a> {
    m: &'a PresentedModule,
    targets: Vec<MonomialPrime>,
}

impl<'a> SopSampler<'a> {
    pub fn new(m: &'a PresentedModule) -> Result<Self> {
        let mut targets = Vec::new();
        if !m.is_zero() && is_multigraded(m) {
            for att in attached_primes_all(m)?.into_iter().skip(1) {
                targets.extend(att.into_iter().filter(|p| !p.is_maximal()));
            }
        }
        targets.sort();
        targets.dedup();
        Ok(SopSampler { m, targets })
    }

    pub fn targets(&self) -> &[MonomialPrime] {
        &self.targets
    }

    fn forms(&self, rng: &mut impl Rng, index: usize, attempt: usize) -> Vec<Polynomial> {
        let d = self.m.dim().max(0) as usize;
        let ring = self.m.ring();
        if index % 3 != 2 || self.targets.is_empty() || d == 0 || attempt >= DRAWS_PER_SAMPLE / 2 {
            return random_linear_forms(ring, rng, d, index % 3 == 1);
        }
        let p = &self.targets[rng.gen_range(0..self.targets.len())];
        let first = loop {
            let mut coeffs = vec![0i64; ring.nvars()];
            for &v in p.vars() {
                coeffs[v] = rng.gen_range(-3..=3);
            }
            if coeffs.iter().any(|&c| c != 0) {
                break Polynomial::linear(ring, &coeffs);
            }
        };
        let mut fs = vec![first];
        fs.extend(random_linear_forms(ring, rng, d - 1, false));
        fs
    }

    /// One s.o.p. meeting the clause's precondition, or `None` when the
    /// draws run out.
    pub fn draw(&self, clause: Clause, seed: u64, index: usize) -> Result<Option<Vec<Polynomial>>> {
        let mut rng = sample_rng(seed, clause.stream() | index as u64);
        for attempt in 0..DRAWS_PER_SAMPLE {
            let fs = self.forms(&mut rng, index, attempt);
            if !is_sop(self.m, &fs)? {
                continue;
            }
            if let Some(pre) = clause.precondition() {
                if !check_sequence(self.m, &fs, pre)?.verdict {
                    continue;
                }
            }
            return Ok(Some(fs));
        }
        Ok(None)
    }
}

fn run_clause(
    m: &PresentedModule,
    clause: Clause,
    verdict: bool,
    side: Option<bool>,
    samples: usize,
    seed: u64,
) -> Result<ClauseReport> {
    let sampler = SopSampler::new(m)?;
    let results: Vec<Option<(Vec<Polynomial>, bool)>> = (0..samples)
        .into_par_iter()
        .map(|k| -> Result<Option<(Vec<Polynomial>, bool)>> {
            let Some(fs) = sampler.draw(clause, seed, k)? else { return Ok(None) };
            let ok = check_sequence(m, &fs, clause.tested())?.verdict;
            Ok(Some((fs, ok)))
        })
        .collect::<Result<_>>()?;
    let drawn = results.iter().flatten().count();
    let passed = results.iter().flatten().filter(|r| r.1).count();
    let failing = results.iter().flatten().find(|r| !r.1).map(|r| r.0.clone());
    let passing = results.iter().flatten().find(|r| r.1).map(|r| r.0.clone());
    let side_ok = side.unwrap_or(true);
    let outcome = match clause {
        _ if drawn == 0 => Outcome::Unwitnessed,
        // Either every s.o.p. is sequential or none is.
        Clause::SequentialCm => match (verdict, failing.is_some(), passing.is_some()) {
            (true, false, _) | (false, _, false) => Outcome::Agree,
            _ => Outcome::Disagree,
        },
        _ => {
            if verdict {
                if side_ok && failing.is_none() {
                    Outcome::Agree
                } else {
                    Outcome::Disagree
                }
            } else if !side_ok || failing.is_some() {
                Outcome::Agree
            } else {
                Outcome::Unwitnessed
            }
        }
    };
    Ok(ClauseReport { clause, verdict, side_condition: side, drawn, passed, outcome, failing, passing })
}

/// Samples `samples` systems of parameters per clause from the seeded
/// generator and compares the outcome with the exact verdicts.
pub fn equivalence_harness(ideal: &MonomialIdeal, samples: usize, seed: u64) -> Result<HarnessReport> {
    let m = ideal.quotient_module();
    let d = m.dim();
    let scm = is_sequentially_cm(ideal)?;
    let sgcm = is_sequentially_gcm(ideal)?;
    let cm = m.is_cohen_macaulay()?;
    let gcm = m.is_generalized_cm()?;
    let h0 = largest_small_submodule(ideal, 0)?;
    let m1 = largest_small_submodule(ideal, 1)?;
    let mut clauses = vec![
        run_clause(&m, Clause::SequentialCm, scm, None, samples, seed)?,
        run_clause(&m, Clause::SequentialGcm, sgcm, None, samples, seed)?,
    ];
    for (clause, verdict, side) in
        [(Clause::CohenMacaulay, cm, h0 == *ideal), (Clause::GeneralizedCm, gcm, m1 == h0)]
    {
        if d >= 2 {
            clauses.push(run_clause(&m, clause, verdict, Some(side), samples, seed)?);
        } else {
            clauses.push(ClauseReport {
                clause,
                verdict,
                side_condition: Some(side),
                drawn: 0,
                passed: 0,
                outcome: Outcome::NotApplicable,
                failing: None,
                passing: None,
            });
        }
    }
    Ok(HarnessReport { seed, samples, clauses })
}
