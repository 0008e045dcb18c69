//! Shared inputs for the criterion benches.

use std::sync::Arc;

use seqcm_core::{MonomialIdeal, Polynomial, Ring};

pub fn ring(names: &[&str]) -> Arc<Ring> {
    Ring::new(names).unwrap()
}

pub fn polys(ring: &Arc<Ring>, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter().map(|g| Polynomial::parse(ring, g).unwrap()).collect()
}

pub fn monomial_ideal(names: &[&str], gens: &[&str]) -> MonomialIdeal {
    let r = ring(names);
    MonomialIdeal::from_polynomials(&r, &polys(&r, gens)).unwrap()
}

/// Two planes meeting in a point, in five variables.
pub fn two_planes() -> MonomialIdeal {
    monomial_ideal(&["x", "y", "z", "t", "w"], &["x*z", "x*t", "y*z", "y*t"])
}

/// Two hyperplanes with an embedded plane.
pub fn embedded() -> MonomialIdeal {
    monomial_ideal(&["x", "y", "z", "t"], &["x^2*y", "x*y^2"])
}

/// 2x2 minors of a generic 2x4 matrix.
pub fn minors() -> (Arc<Ring>, Vec<Polynomial>) {
    let r = ring(&["a", "b", "c", "d", "e", "f", "g", "h"]);
    let gens = polys(
        &r,
        &["a*f - b*e", "a*g - c*e", "a*h - d*e", "b*g - c*f", "b*h - d*f", "c*h - d*g"],
    );
    (r, gens)
}
