//! Exact arithmetic substrate: rationals, monomials, orders, polynomials and
//! free-module elements.

mod free;
mod monomial;
mod order;
mod parse;
mod poly;
mod rational;
mod ring;

pub use free::{FreeElement, FreeModule, Term};
pub use monomial::Monomial;
pub use order::{ModuleOrder, MonomialOrder, SchreyerFrame};
pub use poly::{require_positive_homogeneous, ArithOp, Polynomial};
pub use rational::Rational;
pub use ring::Ring;

