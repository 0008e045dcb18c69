use std::sync::Arc;

use super::*;
use crate::kernel::{Monomial, Polynomial, Ring};

fn ring(names: &[&str]) -> Arc<Ring> {
    Ring::new(names).unwrap()
}

fn mono(r: &Arc<Ring>, s: &str) -> Monomial {
    Polynomial::parse(r, s).unwrap().leading().unwrap().0.clone()
}

fn ideal(r: &Arc<Ring>, gens: &[&str]) -> MonomialIdeal {
    MonomialIdeal::new(r, gens.iter().map(|g| mono(r, g)).collect())
}

fn prime(r: &Arc<Ring>, names: &[&str]) -> MonomialPrime {
    MonomialPrime::from_names(r, names).unwrap()
}

fn c5() -> (Arc<Ring>, MonomialIdeal) {
    let r = ring(&["x", "y", "z", "t", "w"]);
    let i = ideal(&r, &["x*z", "x*t", "y*z", "y*t"]);
    (r, i)
}

fn d3() -> (Arc<Ring>, MonomialIdeal) {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x^2*y", "x*y^2", "x*z"]);
    (r, i)
}

fn e4() -> (Arc<Ring>, MonomialIdeal) {
    let r = ring(&["x", "y", "z", "t"]);
    let i = ideal(&r, &["x^2*y", "x*y^2"]);
    (r, i)
}

#[test]
fn intersections_by_lcm() {
    let r = ring(&["x", "y", "z", "t"]);
    let a = ideal(&r, &["x", "y"]);
    let b = ideal(&r, &["z", "t"]);
    assert_eq!(a.intersect(&b), ideal(&r, &["x*z", "x*t", "y*z", "y*t"]));
    let three = monomial_intersect(&r, &[ideal(&r, &["x"]), ideal(&r, &["y"]), ideal(&r, &["x^2", "y^2"])]);
    assert_eq!(three, ideal(&r, &["x^2*y", "x*y^2"]));
    assert_eq!(a.intersect(&MonomialIdeal::unit(&r)), a);
    assert_eq!(a.to_string(), "(x, y)");
}

#[test]
fn primary_decomposition_of_two_planes() {
    let (r, i) = c5();
    let pd = i.primary_decomposition().unwrap();
    assert_eq!(pd.len(), 2);
    assert_eq!(pd[0].1, prime(&r, &["x", "y"]));
    assert_eq!(pd[1].1, prime(&r, &["z", "t"]));
    assert_eq!(pd[0].0, ideal(&r, &["x", "y"]));
}

#[test]
fn primary_decomposition_with_embedded_component() {
    let (r, i) = d3();
    let ass = i.associated_primes().unwrap();
    assert_eq!(ass, vec![prime(&r, &["x"]), prime(&r, &["x", "y", "z"]), prime(&r, &["y", "z"])]);
    let pd = i.primary_decomposition().unwrap();
    let back = monomial_intersect(&r, &pd.iter().map(|(q, _)| q.clone()).collect::<Vec<_>>());
    assert_eq!(back, i);
    // dropping any component changes the intersection
    for k in 0..pd.len() {
        let rest: Vec<MonomialIdeal> = pd.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, c)| c.0.clone()).collect();
        assert_ne!(monomial_intersect(&r, &rest), i);
    }
    assert_eq!(i.minimal_primes().unwrap(), vec![prime(&r, &["x"]), prime(&r, &["y", "z"])]);
}

#[test]
fn primary_decomposition_of_a_power() {
    let r = ring(&["x", "y"]);
    let pd = ideal(&r, &["x^2"]).primary_decomposition().unwrap();
    assert_eq!(pd.len(), 1);
    assert_eq!(pd[0].0, ideal(&r, &["x^2"]));
    assert_eq!(pd[0].1, prime(&r, &["x"]));
    assert!(MonomialIdeal::unit(&r).primary_decomposition().is_err());
}

#[test]
fn combinatorial_dimension() {
    let (_, c) = c5();
    assert_eq!(c.dim(), 3);
    let (_, d) = d3();
    assert_eq!(d.dim(), 2);
    let r = ring(&["x", "y"]);
    assert_eq!(MonomialIdeal::zero(&r).dim(), 2);
    assert_eq!(MonomialIdeal::unit(&r).dim(), -1);
    assert_eq!(c.dim(), c.quotient_module().dim());
}

#[test]
fn monomial_check_through_groebner_bases() {
    let r = ring(&["x", "y"]);
    let p = |s: &str| Polynomial::parse(&r, s).unwrap();
    let i = MonomialIdeal::from_polynomials(&r, &[p("x + y"), p("x - y")]).unwrap();
    assert_eq!(i, ideal(&r, &["x", "y"]));
    assert!(MonomialIdeal::from_polynomials(&r, &[p("x + y")]).is_err());
}

#[test]
fn ass_of_quotients_matches_decomposition() {
    for (_, i) in [c5(), d3(), e4()] {
        let m = i.quotient_module();
        assert!(is_multigraded(&m));
        assert_eq!(ass_multigraded(&m).unwrap(), i.associated_primes().unwrap());
    }
}

#[test]
fn non_multigraded_input_is_rejected() {
    let r = ring(&["x", "y"]);
    let p = |s: &str| Polynomial::parse(&r, s).unwrap();
    let m = crate::homology::PresentedModule::cyclic(&crate::groebner::Submodule::ideal(&r, &[p("x + y")]).unwrap()).unwrap();
    assert!(!is_multigraded(&m));
    assert!(ass_multigraded(&m).is_err());
}

#[test]
fn attached_primes_of_two_planes() {
    let (r, i) = c5();
    let att = attached_primes_all(&i.quotient_module()).unwrap();
    assert_eq!(att.len(), 4);
    assert!(att[0].is_empty() && att[1].is_empty());
    assert_eq!(att[2], vec![prime(&r, &["x", "y", "z", "t"])]);
    assert_eq!(att[3], vec![prime(&r, &["x", "y"]), prime(&r, &["z", "t"])]);
}

#[test]
fn attached_primes_of_line_plane() {
    let (r, i) = d3();
    let m = i.quotient_module();
    assert_eq!(attached_primes(&m, 1).unwrap(), vec![prime(&r, &["y", "z"])]);
    assert_eq!(attached_primes(&m, 2).unwrap(), vec![prime(&r, &["x"])]);
    assert_eq!(attached_primes(&m, 0).unwrap(), vec![MonomialPrime::maximal(&r)]);
    assert!(attached_primes(&m, 3).is_err());
}

#[test]
fn attached_primes_of_embedded_example() {
    let (r, i) = e4();
    assert_eq!(attached_primes(&i.quotient_module(), 2).unwrap(), vec![prime(&r, &["x", "y"])]);
}

#[test]
fn filtration_of_unmixed_module() {
    let (_, i) = c5();
    let f = DimensionFiltration::compute(&i).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!(f.dims(), &[3, -1]);
    assert_eq!(f.h0(), &i);
}

#[test]
fn filtration_of_line_plane() {
    let (r, i) = d3();
    let f = DimensionFiltration::compute(&i).unwrap();
    assert_eq!(f.dims(), &[2, 1, 0]);
    assert_eq!(f.chain()[1], ideal(&r, &["x"]));
    assert_eq!(f.chain()[2], ideal(&r, &["x*y", "x*z"]));
    assert_eq!(f.submodule(1).unwrap().dim(), 1);
    assert_eq!(f.submodule(2).unwrap().dim(), 0);
    assert_eq!(f.quotient_primes(1), vec![prime(&r, &["x"])]);
    assert_eq!(f.quotient_primes(2), vec![prime(&r, &["y", "z"])]);
    // Ass of each quotient, computed independently
    for k in 1..=f.len() {
        assert_eq!(ass_multigraded(&f.quotient(k).unwrap()).unwrap(), f.quotient_primes(k));
    }
}

#[test]
fn filtration_of_embedded_example() {
    let (r, i) = e4();
    let f = DimensionFiltration::compute(&i).unwrap();
    assert_eq!(f.dims(), &[3, 2, -1]);
    let u0 = largest_small_submodule(&i, 2).unwrap();
    assert_eq!(u0, ideal(&r, &["x*y"]));
    assert_eq!(f.submodule(1).unwrap().dim(), 2);
    assert!(f.submodule(2).unwrap().is_zero());
}

#[test]
fn trivial_filtration_of_hypersurface() {
    let r = ring(&["x", "y"]);
    let f = DimensionFiltration::compute(&ideal(&r, &["x"])).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!(f.dims(), &[1, -1]);
}

#[test]
fn h0_against_saturation() {
    let (_, d) = d3();
    let h0 = largest_small_submodule(&d, 0).unwrap();
    // I : m^inf by iterated colon with the maximal ideal
    let colon_m = |i: &MonomialIdeal| {
        let parts: Vec<MonomialIdeal> = (0..3).map(|v| i.colon(&Monomial::var(3, v))).collect();
        monomial_intersect(i.ring(), &parts)
    };
    let mut s = d.clone();
    loop {
        let next = colon_m(&s);
        if next == s {
            break;
        }
        s = next;
    }
    assert_eq!(h0, s);
    assert_ne!(h0, d);
    let (_, c) = c5();
    assert_eq!(largest_small_submodule(&c, 0).unwrap(), c);
}
