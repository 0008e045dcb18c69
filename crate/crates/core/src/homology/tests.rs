use std::sync::Arc;

use super::*;
use crate::groebner::{Length, Submodule};
use crate::kernel::{FreeElement, FreeModule, Polynomial, Ring};

fn ring(names: &[&str]) -> Arc<Ring> {
    Ring::new(names).unwrap()
}

fn quotient(r: &Arc<Ring>, gens: &[&str]) -> PresentedModule {
    let ps: Vec<Polynomial> = gens.iter().map(|g| Polynomial::parse(r, g).unwrap()).collect();
    PresentedModule::cyclic(&Submodule::ideal(r, &ps).unwrap()).unwrap()
}

fn planes_5() -> PresentedModule {
    let r = ring(&["x", "y", "z", "t", "w"]);
    quotient(&r, &["x*z", "x*t", "y*z", "y*t"])
}

fn embedded_4() -> PresentedModule {
    let r = ring(&["x", "y", "z", "t"]);
    quotient(&r, &["x^2*y", "x*y^2"])
}

fn planes_4() -> PresentedModule {
    let r = ring(&["x", "y", "z", "t"]);
    quotient(&r, &["x*z", "x*t", "y*z", "y*t"])
}

#[test]
fn koszul_resolution() {
    let r = ring(&["x", "y"]);
    let res = quotient(&r, &["x", "y"]).resolution();
    assert_eq!(res.betti_numbers(), vec![1, 2, 1]);
    assert!(res.is_complex());
    assert!(res.is_exact().unwrap());
    assert!(res.has_no_unit_entries());
}

#[test]
fn hilbert_burch_shape() {
    let res = embedded_4().resolution();
    assert_eq!(res.betti_numbers(), vec![1, 2, 1]);
    assert!(res.is_complex());
    assert!(res.is_exact().unwrap());
}

#[test]
fn free_module_resolution_is_trivial() {
    let r = ring(&["x", "y"]);
    let res = PresentedModule::free(&r, vec![0]).resolution();
    assert_eq!(res.length(), 0);
}

#[test]
fn minimizing_drops_redundant_generators() {
    let r = ring(&["x", "y"]);
    let f = FreeModule::new(&r, vec![0, 1]);
    let p = |s: &str| Polynomial::parse(&r, s).unwrap();
    // e1 = x e0, so M = S/(x^2) after pruning
    let cols = vec![
        FreeElement::from_coords(&f, &[p("x"), p("-1")]).unwrap(),
        FreeElement::from_coords(&f, &[p("0"), p("x")]).unwrap(),
    ];
    let m = PresentedModule::new(&f, cols).unwrap().minimize();
    assert_eq!(m.num_generators(), 1);
    assert_eq!(m.relations().generators().len(), 1);
    assert_eq!(m.relations().generators()[0].coordinate(0), p("x^2"));
}

#[test]
fn battery_of_a_free_module() {
    let r = ring(&["x", "y"]);
    let b = PresentedModule::free(&r, vec![0]).deficiency_battery().unwrap();
    assert_eq!(b.nonzero_indices(), vec![2]);
    assert_eq!(b.module(2).unwrap().dim(), 2);
}

#[test]
fn battery_of_two_planes_in_five_space() {
    let m = planes_5();
    let b = m.deficiency_battery().unwrap();
    assert_eq!(b.nonzero_indices(), vec![2, 3]);
    assert_eq!(m.dim_depth().unwrap(), (3, 2));
    assert_eq!(b.module(2).unwrap().dim(), 1);
    assert!(!m.is_cohen_macaulay().unwrap());
    assert!(!m.is_generalized_cm().unwrap());
}

#[test]
fn battery_of_the_embedded_example() {
    let m = embedded_4();
    let b = m.deficiency_battery().unwrap();
    assert_eq!(b.nonzero_indices(), vec![2, 3]);
    assert_eq!(b.module(2).unwrap().dim(), 2);
    assert_eq!(m.dim_depth().unwrap(), (3, 2));
}

#[test]
fn two_planes_in_four_space_are_gcm() {
    let m = planes_4();
    assert_eq!(m.dim_depth().unwrap(), (2, 1));
    assert!(!m.is_cohen_macaulay().unwrap());
    assert!(m.is_generalized_cm().unwrap());
    let b = m.deficiency_battery().unwrap();
    assert_eq!(b.module(1).unwrap().length(), Length::Finite(1));
}

#[test]
fn cohen_macaulay_examples() {
    let r = ring(&["x", "y"]);
    assert!(quotient(&r, &["x"]).is_cohen_macaulay().unwrap());
    let r3 = ring(&["x", "y", "z"]);
    let free = PresentedModule::free(&r3, vec![0]);
    assert_eq!(free.dim_depth().unwrap(), (3, 3));
    assert!(free.is_generalized_cm().unwrap());
}

#[test]
fn zero_module_conventions() {
    let r = ring(&["x", "y"]);
    let z = quotient(&r, &["1"]);
    assert!(z.is_zero());
    assert_eq!(z.dim(), -1);
    assert!(z.is_cohen_macaulay().unwrap());
    assert!(z.deficiency_battery().is_err());
}

#[test]
fn auslander_buchsbaum() {
    for m in [planes_4(), embedded_4(), planes_5()] {
        let n = m.ring().nvars() as i64;
        let (_, depth) = m.dim_depth().unwrap();
        assert_eq!(depth, n - m.resolution().length() as i64);
    }
}

#[test]
fn deficiency_dimensions_are_bounded() {
    for m in [planes_4(), embedded_4(), planes_5()] {
        let b = m.deficiency_battery().unwrap();
        for (i, d) in b.dims().into_iter().enumerate() {
            assert!(d <= i as i64);
        }
        assert!(!b.module(b.dim() as usize).unwrap().is_zero());
    }
}

#[test]
fn kernels_and_subquotients() {
    let r = ring(&["x", "y", "z"]);
    let m = quotient(&r, &["x^2*y", "x*y^2", "x*z"]);
    let p = |s: &str| Polynomial::parse(&r, s).unwrap();
    assert_eq!(m.kernel_dimension(&p("x + z")).unwrap(), 0);
    let k = m.kernel_module(&p("x + z")).unwrap();
    assert_eq!(k.length(), Length::Finite(1));
    // x^2 spans it, with annihilator (y, z)
    assert_eq!(m.kernel_dimension(&p("y")).unwrap(), 1);
    assert!(m.has_socle().unwrap());
    assert!(!quotient(&r, &["x"]).has_socle().unwrap());
}
