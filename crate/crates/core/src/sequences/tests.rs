use std::sync::Arc;

use super::*;
use crate::error::Error;
use crate::homology::PresentedModule;
use crate::kernel::{Polynomial, Rational, Ring};
use crate::monomial::MonomialIdeal;

fn quotient(names: &[&str], gens: &[&str]) -> (Arc<Ring>, PresentedModule) {
    let r = Ring::new(names).unwrap();
    let ps: Vec<Polynomial> = gens.iter().map(|g| Polynomial::parse(&r, g).unwrap()).collect();
    let m = MonomialIdeal::from_polynomials(&r, &ps).unwrap().quotient_module();
    (r, m)
}

fn c5() -> (Arc<Ring>, PresentedModule) {
    quotient(&["x", "y", "z", "t", "w"], &["x*z", "x*t", "y*z", "y*t"])
}

fn d3() -> (Arc<Ring>, PresentedModule) {
    quotient(&["x", "y", "z"], &["x^2*y", "x*y^2", "x*z"])
}

fn e4() -> (Arc<Ring>, PresentedModule) {
    quotient(&["x", "y", "z", "t"], &["x^2*y", "x*y^2"])
}

fn g4() -> (Arc<Ring>, PresentedModule) {
    quotient(&["x", "y", "z", "t"], &["x*z", "x*t", "y*z", "y*t"])
}

fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
    Polynomial::parse(r, s).unwrap()
}

fn ps(r: &Arc<Ring>, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|x| p(r, x)).collect()
}

#[test]
fn x_plus_z_on_two_planes() {
    let (r, m) = c5();
    let c = classify_element(&m, &p(&r, "x + z")).unwrap();
    assert!(c.is_regular);
    assert!(!c.is_sequential_f);
    assert_eq!(c.witness(SequenceKind::SequentialF).unwrap().deficiency_index, Some(2));
    assert!(c.respects_hierarchy());
}

#[test]
fn w_on_two_planes_is_regular() {
    let (r, m) = c5();
    assert!(classify_element(&m, &p(&r, "w")).unwrap().is_regular);
}

#[test]
fn x_plus_z_on_line_plane() {
    let (r, m) = d3();
    let c = classify_element(&m, &p(&r, "x + z")).unwrap();
    assert!(c.is_sequential);
    assert!(!c.is_regular);
    assert_eq!(c.kernel_dim, 0);
    assert!(c.respects_hierarchy());
}

#[test]
fn y_on_line_plane() {
    let (r, m) = d3();
    let c = classify_element(&m, &p(&r, "y")).unwrap();
    assert!(c.is_sequential_f);
    assert!(!c.is_f_element);
    assert!(c.is_generalized_regular);
    assert!(!c.is_sequential);
}

#[test]
fn bad_elements_are_rejected() {
    let (r, m) = d3();
    assert!(matches!(classify_element(&m, &p(&r, "x + y^2")), Err(Error::NotHomogeneous(_))));
    assert!(matches!(classify_element(&m, &p(&r, "3")), Err(Error::DegreeZeroElement(_))));
}

#[test]
fn finite_length_conventions() {
    let (r, m) = quotient(&["x", "y"], &["x^2", "y"]);
    let c = classify_element(&m, &p(&r, "x")).unwrap();
    assert!(!c.is_regular);
    assert!(c.is_f_element && c.is_sequential && c.is_sequential_f);
}

#[test]
fn variables_are_a_regular_sequence_on_a_free_module() {
    let r = Ring::new(&["x", "y", "z"]).unwrap();
    let s = PresentedModule::free(&r, vec![0]);
    let fs = ps(&r, &["x", "y", "z"]);
    let rep = check_sequence(&s, &fs, SequenceKind::Regular).unwrap();
    assert!(rep.verdict);
    assert_eq!(rep.trail_dims(), vec![3, 2, 1, 0]);
    assert_eq!(find_sequence(&s, SequenceKind::Regular, 3, 0).unwrap(), fs);
}

#[test]
fn systems_of_parameters() {
    let (r, m) = c5();
    assert!(is_sop(&m, &ps(&r, &["x + z + w", "y - t + w", "x + y + z + t + w"])).unwrap());
    assert!(!is_sop(&m, &ps(&r, &["x", "y", "z"])).unwrap());
    assert!(is_part_of_sop(&m, &[]).unwrap());
    assert!(is_part_of_sop(&m, &ps(&r, &["w"])).unwrap());
    assert!(!is_part_of_sop(&m, &ps(&r, &["x", "y"])).unwrap());
}

#[test]
fn sequence_failure_is_located() {
    let (r, m) = c5();
    let fs = ps(&r, &["x + z + w", "y - t + w", "x + y + z + t + w"]);
    let rep = check_sequence(&m, &fs, SequenceKind::Sequential).unwrap();
    assert!(!rep.verdict);
    let (i, _) = rep.first_failure.clone().unwrap();
    assert_eq!(rep.trail.len(), i + 1);
}

#[test]
fn witness_search_on_embedded_example() {
    let (_, m) = e4();
    let fs = find_sequence(&m, SequenceKind::Sequential, 3, 0).unwrap();
    assert!(is_sop(&m, &fs).unwrap());
    assert!(check_sequence(&m, &fs, SequenceKind::Sequential).unwrap().verdict);
}

#[test]
fn witness_search_gives_up_on_two_planes() {
    let (_, m) = c5();
    match find_sequence_with_budget(&m, SequenceKind::Sequential, 3, 0, 6) {
        Err(Error::NotFound { attempts, .. }) => assert_eq!(attempts, 6),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn socle_in_a_deficiency_module_blocks_sequential_elements() {
    let (_, m) = quotient(&["x", "y", "z"], &["x*y", "x*z"]);
    assert_eq!(sequential_obstruction(&m).unwrap(), None);
    // two planes meeting in a point: K^1 is the residue field
    let (_, g) = g4();
    assert_eq!(sequential_obstruction(&g).unwrap(), Some(1));
    assert_eq!(find_sequence(&g, SequenceKind::Sequential, 1, 0), Err(Error::NoSequentialElement(1)));
    assert!(find_sequence(&g, SequenceKind::SequentialF, 2, 0).is_ok());
}

#[test]
fn multiplicities() {
    let (r, m) = quotient(&["x", "y"], &["x"]);
    assert_eq!(multiplicity(&m, &ps(&r, &["y"])).unwrap(), 1);
    let (r, m) = g4();
    assert_eq!(multiplicity(&m, &ps(&r, &["x - z", "y - t"])).unwrap(), 2);
    assert_eq!(multiplicity(&m, &ps(&r, &["y - t", "x - z"])).unwrap(), 2);
    // linear s.o.p.: e agrees with the Hilbert series multiplicity
    assert_eq!(m.hilbert_series().multiplicity(), 2);
    assert!(multiplicity(&m, &ps(&r, &["x", "y"])).is_err());
    // degrees multiply
    assert_eq!(multiplicity(&m, &ps(&r, &["x^2 - z^2", "y - t"])).unwrap(), 4);
}

#[test]
fn i_function_on_gcm_example_is_constant() {
    let (r, m) = g4();
    let fs = ps(&r, &["x - z", "y - t"]);
    let base = i_function(&m, &fs, &[1, 1]).unwrap();
    assert_eq!(base, 1);
    for ns in [[2, 1], [1, 3], [2, 2], [3, 2]] {
        assert_eq!(i_function(&m, &fs, &ns).unwrap(), base);
    }
}

#[test]
fn i_function_vanishes_on_cm_modules() {
    let (r, m) = quotient(&["x", "y", "z"], &["x*y"]);
    let fs = ps(&r, &["x - y", "z"]);
    for ns in [[1, 1], [2, 3], [3, 1]] {
        assert_eq!(i_function(&m, &fs, &ns).unwrap(), 0);
    }
}

#[test]
fn p_standard_systems() {
    let (r, m) = quotient(&["x", "y"], &["x*y"]);
    let fs = ps(&r, &["x - y"]);
    assert!(is_p_standard_sop(&m, &fs).unwrap());
    let (_, e) = e4();
    let fs = find_p_standard_sop(&e, 0).unwrap();
    assert!(is_p_standard_sop(&e, &fs).unwrap());
    let lambdas = fit_length_formula(&e, &fs).unwrap();
    assert!(lambdas.iter().all(|l| l.is_integer() && !l.is_negative()));
    for ns in [[1, 2, 3], [3, 3, 3], [2, 1, 3]] {
        let l = power_length(&e, &fs, &ns).unwrap() as i64;
        assert_eq!(eval_length_formula(&lambdas, &ns), Rational::from_int(l));
    }
}

#[test]
fn generic_last_element_is_not_p_standard() {
    let (r, e) = e4();
    let fs = ps(&r, &["x + y + z", "y - z + t", "x + 2*y - z + 3*t"]);
    assert!(is_sop(&e, &fs).unwrap());
    assert!(!is_p_standard_sop(&e, &fs).unwrap());
}
