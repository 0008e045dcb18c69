//! Report documents, their JSON form and a plain-text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use seqcm_core::invariants::{self, equivalence_harness, ClauseReport, HarnessReport};
use seqcm_core::sequences::{check_sequence, classify_element, find_sequence, is_sop, Failure};
use seqcm_core::{Error, MonomialPrime, Polynomial, PresentedModule, Profile, Submodule};

use crate::parse::{Command, Property, SessionInput};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub samples: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 0, samples: 25 }
    }
}

/// Engine failure with the command and ideal it came from.
#[derive(Debug, thiserror::Error)]
#[error("{command} {ideal}: {source}")]
pub struct RunError {
    pub command: &'static str,
    pub ideal: String,
    #[source]
    pub source: Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub engine: String,
    pub seed: u64,
    pub samples: usize,
    pub ring: String,
    pub ideal: IdealEntry,
    pub result: CommandResult,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealEntry {
    pub name: String,
    pub generators: Vec<String>,
    pub monomial: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum CommandResult {
    Profile(ProfileDoc),
    Classify(ClassifyDoc),
    CheckSeq(SequenceDoc),
    FindSeq(FindDoc),
    Decide(DecideDoc),
    Invariants(InvariantsDoc),
    Harness(HarnessDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationStepDoc {
    pub dim: i64,
    pub ideal: String,
    pub primes: Vec<String>,
    pub cm: bool,
    pub gcm: bool,
    pub p: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpDoc {
    pub sp: i64,
    /// `p` of each filtration quotient.
    pub by_definition: Vec<i64>,
    pub ass_dims: Vec<i64>,
    pub q1: i64,
    pub q2: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileDoc {
    pub dim: i64,
    pub depth: i64,
    pub ass: Vec<String>,
    pub att: Vec<Vec<String>>,
    pub filtration: Vec<FiltrationStepDoc>,
    pub h0: String,
    pub cm: bool,
    pub gcm: bool,
    pub scm: bool,
    pub sgcm: bool,
    pub p: i64,
    pub sp: SpDoc,
    pub non_cm_locus_dim: i64,
    pub u0_dim: i64,
    pub sequential_obstruction: Option<usize>,
    pub sequential_sop: Option<Vec<String>>,
    pub non_sequential_sop: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureDoc {
    pub kind: String,
    pub deficiency_index: Option<usize>,
    pub kernel_dim: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDoc {
    pub element: String,
    pub regular: bool,
    pub f_element: bool,
    pub generalized_regular: bool,
    pub sequential: bool,
    pub sequential_f: bool,
    pub kernel_dim: i64,
    pub deficiency_kernel_dims: Vec<i64>,
    pub failures: Vec<FailureDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceFailureDoc {
    pub position: usize,
    pub failure: FailureDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDoc {
    pub kind: String,
    pub elements: Vec<String>,
    pub verdict: bool,
    pub sop: bool,
    pub trail_dims: Vec<i64>,
    pub first_failure: Option<SequenceFailureDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindDoc {
    pub kind: String,
    pub length: usize,
    pub found: bool,
    pub elements: Option<Vec<String>>,
    pub obstruction: Option<usize>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecideDoc {
    pub property: String,
    pub verdict: bool,
    pub dim: i64,
    pub depth: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsDoc {
    pub dim: i64,
    pub depth: i64,
    pub p: i64,
    pub sp: SpDoc,
    pub non_cm_locus_dim: i64,
    pub u0_dim: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseDoc {
    pub clause: String,
    pub verdict: bool,
    pub side_condition: Option<bool>,
    pub drawn: usize,
    pub passed: usize,
    pub outcome: String,
    pub failing: Option<Vec<String>>,
    pub passing: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessDoc {
    /// Always "sampled": a clause that agrees was only not falsified.
    pub check: String,
    pub clauses: Vec<ClauseDoc>,
    pub any_disagreement: bool,
}

impl ReportDocument {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<ReportDocument> {
        serde_json::from_str(s)
    }
}

fn polys(fs: &[Polynomial]) -> Vec<String> {
    fs.iter().map(|f| f.to_string()).collect()
}

fn primes(ps: &[MonomialPrime]) -> Vec<String> {
    let mut ps = ps.to_vec();
    ps.sort();
    ps.iter().map(|p| p.to_string()).collect()
}

fn failure_doc(f: &Failure) -> FailureDoc {
    FailureDoc { kind: f.kind.name().to_string(), deficiency_index: f.deficiency_index, kernel_dim: f.kernel_dim }
}

fn sp_doc(b: &invariants::SpBreakdown) -> Result<SpDoc, Error> {
    Ok(SpDoc { sp: b.sp()?, by_definition: b.route_def.clone(), ass_dims: b.ass_dims.clone(), q1: b.q1, q2: b.q2 })
}

fn profile_doc(p: &Profile) -> Result<ProfileDoc, Error> {
    Ok(ProfileDoc {
        dim: p.dim,
        depth: p.depth,
        ass: primes(&p.ass),
        att: p.att.iter().map(|a| primes(a)).collect(),
        filtration: p
            .filtration
            .iter()
            .map(|s| FiltrationStepDoc {
                dim: s.dim,
                ideal: s.ideal.to_string(),
                primes: primes(&s.primes),
                cm: s.is_cm,
                gcm: s.is_gcm,
                p: s.p,
            })
            .collect(),
        h0: p.h0.to_string(),
        cm: p.is_cm,
        gcm: p.is_gcm,
        scm: p.is_scm,
        sgcm: p.is_sgcm,
        p: p.p,
        sp: sp_doc(&p.sp_breakdown)?,
        non_cm_locus_dim: p.non_cm_locus_dim,
        u0_dim: p.u_zero_dim,
        sequential_obstruction: p.sequential_obstruction,
        sequential_sop: p.sequential_sop.as_deref().map(polys),
        non_sequential_sop: p.non_sequential_sop.as_deref().map(polys),
    })
}

fn clause_doc(c: &ClauseReport) -> ClauseDoc {
    ClauseDoc {
        clause: c.clause.name().to_string(),
        verdict: c.verdict,
        side_condition: c.side_condition,
        drawn: c.drawn,
        passed: c.passed,
        outcome: c.outcome.name().to_string(),
        failing: c.failing.as_deref().map(polys),
        passing: c.passing.as_deref().map(polys),
    }
}

fn harness_doc(h: &HarnessReport) -> HarnessDoc {
    HarnessDoc { check: "sampled".into(), clauses: h.clauses.iter().map(clause_doc).collect(), any_disagreement: h.any_disagreement() }
}

fn execute(session: &SessionInput, opts: RunOptions) -> Result<CommandResult, Error> {
    let decl = session.target();
    let module = || -> Result<PresentedModule, Error> {
        match &decl.monomial {
            Some(m) => Ok(m.quotient_module()),
            None => PresentedModule::cyclic(&Submodule::ideal(&session.ring, &decl.generators)?),
        }
    };
    // the parser guarantees a monomial ideal for these commands
    let monomial = || decl.monomial.as_ref().expect("monomial ideal checked at parse time");
    Ok(match &session.command {
        Command::Profile => CommandResult::Profile(profile_doc(&Profile::compute(monomial(), opts.seed)?)?),
        Command::Classify(f) => {
            let c = classify_element(&module()?, f)?;
            CommandResult::Classify(ClassifyDoc {
                element: f.to_string(),
                regular: c.is_regular,
                f_element: c.is_f_element,
                generalized_regular: c.is_generalized_regular,
                sequential: c.is_sequential,
                sequential_f: c.is_sequential_f,
                kernel_dim: c.kernel_dim,
                deficiency_kernel_dims: c.deficiency_kernel_dims.clone(),
                failures: c.witnesses.iter().map(failure_doc).collect(),
            })
        }
        Command::CheckSeq(kind, fs) => {
            let m = module()?;
            let r = check_sequence(&m, fs, *kind)?;
            CommandResult::CheckSeq(SequenceDoc {
                kind: kind.name().to_string(),
                elements: polys(fs),
                verdict: r.verdict,
                sop: is_sop(&m, fs)?,
                trail_dims: r.trail_dims(),
                first_failure: r
                    .first_failure
                    .as_ref()
                    .map(|(i, f)| SequenceFailureDoc { position: i + 1, failure: failure_doc(f) }),
            })
        }
        Command::FindSeq(kind, length) => {
            let (elements, obstruction, reason) = match find_sequence(&module()?, *kind, *length, opts.seed) {
                Ok(fs) => (Some(polys(&fs)), None, None),
                Err(e @ Error::NoSequentialElement(j)) => (None, Some(j), Some(e.to_string())),
                Err(e @ Error::NotFound { .. }) => (None, None, Some(e.to_string())),
                Err(e) => return Err(e),
            };
            CommandResult::FindSeq(FindDoc {
                kind: kind.name().to_string(),
                length: *length,
                found: elements.is_some(),
                elements,
                obstruction,
                reason,
            })
        }
        Command::Decide(prop) => {
            let m = module()?;
            let (dim, depth) = m.dim_depth()?;
            let verdict = match prop {
                Property::Cm => m.is_cohen_macaulay()?,
                Property::Gcm => m.is_generalized_cm()?,
                Property::Scm => invariants::is_sequentially_cm(monomial())?,
                Property::Sgcm => invariants::is_sequentially_gcm(monomial())?,
            };
            CommandResult::Decide(DecideDoc { property: prop.name().to_string(), verdict, dim, depth })
        }
        Command::Invariants => {
            let ideal = monomial();
            let m = ideal.quotient_module();
            let (dim, depth) = m.dim_depth()?;
            CommandResult::Invariants(InvariantsDoc {
                dim,
                depth,
                p: invariants::polynomial_type(&m)?,
                sp: sp_doc(&invariants::sp_breakdown(ideal)?)?,
                non_cm_locus_dim: invariants::non_cm_locus_dim(&m)?,
                u0_dim: invariants::u_zero_dim(ideal)?,
            })
        }
        Command::Harness => CommandResult::Harness(harness_doc(&equivalence_harness(monomial(), opts.samples, opts.seed)?)),
    })
}

/// Runs the session's command. Deterministic for a fixed seed.
pub fn run_command(session: &SessionInput, opts: RunOptions) -> Result<ReportDocument, RunError> {
    let decl = session.target();
    let result = execute(session, opts).map_err(|source| RunError {
        command: session.command.name(),
        ideal: decl.name.clone(),
        source,
    })?;
    let generators = match &decl.monomial {
        Some(m) => polys(&m.to_polynomials()),
        None => polys(&decl.generators),
    };
    Ok(ReportDocument {
        engine: format!("seqcm {}", env!("CARGO_PKG_VERSION")),
        seed: opts.seed,
        samples: opts.samples,
        ring: session.ring.to_string(),
        ideal: IdealEntry { name: decl.name.clone(), generators, monomial: decl.monomial.is_some() },
        result,
        timing_ms: None,
    })
}

fn set(xs: &[String]) -> String {
    format!("{{{}}}", xs.join(", "))
}

fn seq(xs: &[String]) -> String {
    format!("({})", xs.join(", "))
}

fn opt_seq(xs: &Option<Vec<String>>) -> String {
    xs.as_ref().map_or_else(|| "none".to_string(), |v| seq(v))
}

fn ints(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn sp_lines(out: &mut String, sp: &SpDoc) {
    let _ = writeln!(out, "sp: {}", sp.sp);
    let _ = writeln!(out, "  p of filtration quotients: {}", ints(&sp.by_definition));
    let _ = writeln!(out, "  dims of associated primes: {}, q1 = {}, q2 = {}", ints(&sp.ass_dims), sp.q1, sp.q2);
}

/// Plain-text rendering of a report.
pub fn render_human(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} = {} in {}", doc.ideal.name, seq(&doc.ideal.generators), doc.ring);
    match &doc.result {
        CommandResult::Profile(p) => {
            let _ = writeln!(out, "dim {}, depth {}", p.dim, p.depth);
            let _ = writeln!(out, "Ass: {}", set(&p.ass));
            for (i, a) in p.att.iter().enumerate() {
                let _ = writeln!(out, "Att H^{i}: {}", set(a));
            }
            let _ = writeln!(out, "dimension filtration:");
            for (i, s) in p.filtration.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  D_{i} = {}/I  dim {}  quotient primes {}  CM {}  gCM {}  p {}",
                    s.ideal,
                    s.dim,
                    set(&s.primes),
                    yes(s.cm),
                    yes(s.gcm),
                    s.p
                );
            }
            let _ = writeln!(out, "H^0 = {}/I", p.h0);
            let _ = writeln!(out, "CM {}  gCM {}  sCM {}  sgCM {}", yes(p.cm), yes(p.gcm), yes(p.scm), yes(p.sgcm));
            let _ = writeln!(out, "p: {}", p.p);
            sp_lines(&mut out, &p.sp);
            let _ = writeln!(out, "dim nCM: {}, dim U(0): {}", p.non_cm_locus_dim, p.u0_dim);
            if let Some(j) = p.sequential_obstruction {
                let _ = writeln!(out, "no sequential element: the maximal ideal is attached to H^{j}");
            }
            if p.sequential_sop.is_some() {
                let _ = writeln!(out, "sequential s.o.p.: {}", opt_seq(&p.sequential_sop));
            }
            if p.non_sequential_sop.is_some() {
                let _ = writeln!(out, "non-sequential s.o.p.: {}", opt_seq(&p.non_sequential_sop));
            }
        }
        CommandResult::Classify(c) => {
            let _ = writeln!(out, "element {}", c.element);
            for (name, v) in [
                ("regular", c.regular),
                ("f-element", c.f_element),
                ("generalized-regular", c.generalized_regular),
                ("sequential", c.sequential),
                ("sequential-f", c.sequential_f),
            ] {
                let _ = writeln!(out, "  {name:<20} {}", yes(v));
            }
            let _ = writeln!(out, "dim 0:_M f = {}", c.kernel_dim);
            let _ = writeln!(out, "dim 0:_K^i f = {}", ints(&c.deficiency_kernel_dims));
            for f in &c.failures {
                let at = f.deficiency_index.map_or("M".to_string(), |i| format!("K^{i}"));
                let _ = writeln!(out, "not {}: kernel on {at} has dim {}", f.kind, f.kernel_dim);
            }
        }
        CommandResult::CheckSeq(s) => {
            let _ = writeln!(out, "{} is {}a {} sequence", seq(&s.elements), if s.verdict { "" } else { "not " }, s.kind);
            let _ = writeln!(out, "system of parameters: {}", yes(s.sop));
            let _ = writeln!(out, "dims of successive quotients: {}", ints(&s.trail_dims));
            if let Some(f) = &s.first_failure {
                let at = f.failure.deficiency_index.map_or("the quotient".to_string(), |i| format!("K^{i}"));
                let _ = writeln!(out, "fails at element {}: kernel on {at} has dim {}", f.position, f.failure.kernel_dim);
            }
        }
        CommandResult::FindSeq(f) => match &f.elements {
            Some(es) => {
                let _ = writeln!(out, "{} sequence of length {}: {}", f.kind, f.length, seq(es));
            }
            None => {
                let _ = writeln!(out, "no {} sequence of length {} found", f.kind, f.length);
                if let Some(r) = &f.reason {
                    let _ = writeln!(out, "{r}");
                }
            }
        },
        CommandResult::Decide(d) => {
            let _ = writeln!(out, "{}: {}  (dim {}, depth {})", d.property, d.verdict, d.dim, d.depth);
        }
        CommandResult::Invariants(v) => {
            let _ = writeln!(out, "dim {}, depth {}", v.dim, v.depth);
            let _ = writeln!(out, "p: {}", v.p);
            sp_lines(&mut out, &v.sp);
            let _ = writeln!(out, "dim nCM: {}, dim U(0): {}", v.non_cm_locus_dim, v.u0_dim);
        }
        CommandResult::Harness(h) => {
            let _ = writeln!(out, "sampled check, seed {}, {} samples per clause", doc.seed, doc.samples);
            for c in &h.clauses {
                let side = c.side_condition.map_or(String::new(), |s| format!(", side condition {s}"));
                let _ = writeln!(
                    out,
                    "{:<26} verdict {:<5}{side}  {}/{} pass  {}",
                    c.clause, c.verdict, c.passed, c.drawn, c.outcome
                );
                if let Some(w) = &c.failing {
                    let _ = writeln!(out, "  failing s.o.p.: {}", seq(w));
                }
            }
        }
    }
    if let Some(ms) = doc.timing_ms {
        let _ = writeln!(out, "time: {ms} ms");
    }
    out
}

