//! Acceptance criteria 1-11, one pass/fail line each.

mod common;

use std::collections::BTreeSet;
use std::panic;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use seqcm_cli::{fixtures as bundled, parse_input, run_command, RunOptions};
use seqcm_core::invariants::{
    equivalence_harness, is_sequentially_cm, is_sequentially_gcm, non_cm_locus_dim, polynomial_type, sp_breakdown,
    u_zero_dim, Clause, Outcome,
};
use seqcm_core::monomial::{attached_primes, attached_primes_all};
use seqcm_core::sequences::{
    classify_element, eval_length_formula, find_p_standard_sop, fit_length_formula, is_p_standard_sop, power_length,
    random_linear_form, sample_rng,
};
use seqcm_core::{MonomialIdeal, MonomialPrime, Polynomial, PresentedModule, Rational};

fn names(ps: &[MonomialPrime]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn att(m: &PresentedModule, i: usize) -> Vec<String> {
    names(&attached_primes(m, i).unwrap())
}

fn c1_two_planes_attached_primes() {
    let i = fix_c();
    let m = i.quotient_module();
    let all: Vec<Vec<String>> = attached_primes_all(&m).unwrap().iter().map(|a| names(a)).collect();
    assert_eq!(all, vec![vec![], vec![], vec!["(x,y,z,t)".to_string()], vec!["(x,y)".into(), "(z,t)".into()]]);
    let c = classify_element(&m, &poly(i.ring(), "x + z")).unwrap();
    assert!(c.is_regular);
    assert!(!c.is_sequential_f);
}

fn c2_line_plane() {
    let i = fix_d();
    let m = i.quotient_module();
    assert_eq!(att(&m, 2), vec!["(x)"]);
    assert_eq!(att(&m, 1), vec!["(y,z)"]);
    let c = classify_element(&m, &poly(i.ring(), "x + z")).unwrap();
    assert!(c.is_sequential && !c.is_regular);
    let c = classify_element(&m, &poly(i.ring(), "y")).unwrap();
    assert!(c.is_sequential_f && !c.is_f_element);
}

fn c3_two_planes_modulo_w() {
    let i = fix_c();
    let m = i.quotient_module();
    let w = poly(i.ring(), "w");
    assert!(classify_element(&m, &w).unwrap().is_regular);
    let mw = m.quotient(&[w]).unwrap();
    assert!(mw.is_generalized_cm().unwrap());
    assert!(!is_sequentially_gcm(&i).unwrap());
    // same verdicts through the front end
    let s = parse_input("ring Q[x,y,z,t,w]\nideal I = intersect((x,y); (z,t))\nideal J = I + (w)\ndecide gcm J").unwrap();
    let doc = run_command(&s, RunOptions::default()).unwrap();
    assert!(doc.to_json().contains("\"verdict\": true"));
}

fn c4_embedded_model() {
    let i = fix_e();
    let m = i.quotient_module();
    assert_eq!(m.dim_depth().unwrap(), (3, 2));
    assert_eq!(att(&m, 2), vec!["(x,y)"]);
    let b = m.deficiency_battery().unwrap();
    let k2 = b.module(2).unwrap();
    assert_eq!(k2.dim(), 2);
    assert!(k2.is_cohen_macaulay().unwrap());
    assert!(is_sequentially_cm(&i).unwrap());
    let h = equivalence_harness(&i, 25, 0).unwrap();
    let c = h.clause(Clause::SequentialCm);
    assert_eq!((c.drawn, c.passed), (25, 25));
    assert_eq!(c.outcome, Outcome::Agree);
}

fn assert_sp_routes(i: &MonomialIdeal) -> i64 {
    let b = sp_breakdown(i).unwrap();
    assert_eq!(b.sp_definition(), b.sp_homological(), "{i}: {b:?}");
    b.sp_definition()
}

fn c5_sp_routes() {
    for (name, i, sp) in [("C", fix_c(), 1), ("D", fix_d(), -1), ("E", fix_e(), -1), ("G", fix_g(), 0)] {
        assert_eq!(assert_sp_routes(&i), sp, "fixture {name}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 50 {
        let n = 2 + checked % 3;
        let i = random_monomial_ideal(&mut rng, n, 5, 3);
        if i.is_unit() {
            continue;
        }
        assert_sp_routes(&i);
        checked += 1;
    }
}

fn c6_polynomial_type_identity() {
    for (name, i, p) in [("C", fix_c(), Some(1)), ("D", fix_d(), None), ("E", fix_e(), Some(2)), ("G", fix_g(), Some(0))] {
        let m = i.quotient_module();
        let direct = polynomial_type(&m).unwrap();
        let by_loci = non_cm_locus_dim(&m).unwrap().max(u_zero_dim(&i).unwrap());
        assert_eq!(direct, by_loci, "fixture {name}");
        if let Some(p) = p {
            assert_eq!(direct, p, "fixture {name}");
        }
    }
}

/// 100 forms per fixture; odd indices are sparse so that non-regular
/// elements show up.
fn sampled_forms(i: &MonomialIdeal) -> Vec<Polynomial> {
    (0..100u64)
        .map(|k| random_linear_form(i.ring(), &mut sample_rng(11, k), k % 2 == 1))
        .collect()
}

fn c7_hierarchy() {
    for (name, i) in fixtures() {
        let m = i.quotient_module();
        for f in sampled_forms(&i) {
            let c = classify_element(&m, &f).unwrap();
            assert!(!c.is_regular || c.is_f_element, "{name}: {f}");
            assert!(!c.is_f_element || c.is_generalized_regular, "{name}: {f}");
            assert!(!c.is_sequential || c.is_f_element, "{name}: {f}");
            assert!(!c.is_sequential_f || c.is_generalized_regular, "{name}: {f}");
        }
    }
}

fn c8_kernels_match_prime_avoidance() {
    for (name, i) in fixtures() {
        let m = i.quotient_module();
        let att = attached_primes_all(&m).unwrap();
        let d = att.len() - 1;
        for f in sampled_forms(&i) {
            let c = classify_element(&m, &f).unwrap();
            let sequential = (1..=d).all(|j| att[j].iter().all(|p| !p.contains(&f)));
            let sequential_f = (2..=d).all(|j| att[j].iter().all(|p| p.is_maximal() || !p.contains(&f)));
            assert_eq!(c.is_sequential, sequential, "{name}: {f}");
            assert_eq!(c.is_sequential_f, sequential_f, "{name}: {f}");
        }
    }
}

fn sop_strings(s: &Option<Vec<Polynomial>>) -> Vec<String> {
    s.as_ref().expect("a failing s.o.p. was sampled").iter().map(|f| f.to_string()).collect()
}

fn c9_harness() {
    for (name, i) in fixtures() {
        let h = equivalence_harness(&i, 25, 0).unwrap();
        assert!(!h.any_disagreement(), "fixture {name}: {:?}", h.clauses);
        for c in &h.clauses {
            if !c.verdict && c.outcome != Outcome::NotApplicable {
                assert_eq!(c.outcome, Outcome::Agree, "fixture {name}: {:?}", c);
            }
        }
        let scm = || sop_strings(&h.clause(Clause::SequentialCm).failing);
        match name {
            "C" => {
                assert_eq!(scm(), ["-2*x + 2*y - 3*z - t - 3*w", "-2*x - y - 3*z - 2*t + 3*w", "-2*x + y - 2*t"]);
                let sgcm = sop_strings(&h.clause(Clause::SequentialGcm).failing);
                assert_eq!(sgcm, ["-2*x + y - z - t", "-x + 3*y - 2*z + t", "3*y - 3*z + 3*t - w"]);
            }
            "G" => assert_eq!(scm(), ["-2*x + 2*y - 3*z - t", "-3*x - 2*y - z - 3*t"]),
            _ => {}
        }
    }
}

fn c10_p_standard() {
    let m = fix_e().quotient_module();
    let fs = find_p_standard_sop(&m, 0).unwrap();
    assert!(is_p_standard_sop(&m, &fs).unwrap());
    let lambdas = fit_length_formula(&m, &fs).unwrap();
    for a in 1..=3u32 {
        for b in 1..=3u32 {
            for c in 1..=3u32 {
                let ns = [a, b, c];
                let l = power_length(&m, &fs, &ns).unwrap() as i64;
                assert_eq!(eval_length_formula(&lambdas, &ns), Rational::from_int(l), "n = {ns:?}");
            }
        }
    }
}

fn c11_oracles() {
    let mut modules: Vec<(String, PresentedModule)> = Vec::new();
    for (name, i) in fixtures() {
        let m = i.quotient_module();
        let b = m.deficiency_battery().unwrap();
        for k in 0..=b.dim() as usize {
            modules.push((format!("K^{k}({name})"), b.module(k).unwrap().clone()));
        }
        modules.push((name.to_string(), m));
    }
    let c = fix_c();
    modules.push(("C/wC".into(), c.quotient_module().quotient(&[poly(c.ring(), "w")]).unwrap()));
    for (name, m) in &modules {
        let low = m.target().twists().iter().copied().min().unwrap_or(0).min(0) as i64;
        for t in low..=6 {
            assert_eq!(m.hilbert_series().value(t), dense_hilbert_value(m, t), "{name} in degree {t}");
        }
    }
    for i in [fix_c(), fix_g()] {
        let m = i.quotient_module();
        let engine: Vec<BTreeSet<Vec<usize>>> = attached_primes_all(&m)
            .unwrap()
            .iter()
            .map(|a| a.iter().map(|p| p.vars().to_vec()).collect())
            .collect();
        assert_eq!(engine, hochster_att(&i), "{i}");
    }
}

fn c0_bundled_reports_replay() {
    for f in bundled() {
        let doc = run_command(&parse_input(f.input).unwrap(), RunOptions::default()).unwrap();
        assert_eq!(doc.to_json(), f.expected, "fixture {}", f.name);
    }
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Option<Duration>,
    run: fn(),
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: "1", title: "two planes in 5 variables: Att sets, x+z", limit: secs(10), run: c1_two_planes_attached_primes },
        Criterion { id: "2", title: "line, plane, point: Att sets, x+z and y", limit: secs(5), run: c2_line_plane },
        Criterion { id: "3", title: "w regular, M/wM gCM, M not sgCM", limit: None, run: c3_two_planes_modulo_w },
        Criterion { id: "4", title: "embedded model: sCM, 25 sampled s.o.p.s sequential", limit: secs(30), run: c4_embedded_model },
        Criterion { id: "5", title: "sp by definition = sp by Ass dims (fixtures + 50 random)", limit: secs(300), run: c5_sp_routes },
        Criterion { id: "6", title: "p = max(dim nCM, dim U(0))", limit: None, run: c6_polynomial_type_identity },
        Criterion { id: "7", title: "hierarchy on 100 forms per fixture", limit: None, run: c7_hierarchy },
        Criterion { id: "8", title: "kernel verdicts = attached prime avoidance", limit: None, run: c8_kernels_match_prime_avoidance },
        Criterion { id: "9", title: "s.o.p. harness: no disagreement, witnesses pinned", limit: None, run: c9_harness },
        Criterion { id: "10", title: "p-standard s.o.p. and exact length formula", limit: None, run: c10_p_standard },
        Criterion { id: "11", title: "dense Hilbert function and Hochster oracles", limit: None, run: c11_oracles },
        Criterion { id: "-", title: "bundled fixture reports replay byte for byte", limit: None, run: c0_bundled_reports_replay },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(c.run);
        let elapsed = start.elapsed();
        let late = c.limit.is_some_and(|l| elapsed > l);
        let ok = outcome.is_ok() && !late;
        println!("criterion {:>2}  {}  {:<58} {:>8.2?}", c.id, if ok { "PASS" } else { "FAIL" }, c.title, elapsed);
        if late {
            println!("    over the limit of {:?}", c.limit.unwrap());
        }
        if !ok {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
