//! Monomial ideals, primary decomposition, associated primes of multigraded
//! modules and the dimension filtration of `S/I`.

mod ass;
mod filtration;
mod ideal;

pub use ass::{ass_multigraded, attached_primes, attached_primes_all, is_multigraded};
pub use filtration::{largest_small_submodule, DimensionFiltration};
pub use ideal::{monomial_intersect, MonomialIdeal, MonomialPrime};

#[cfg(test)]
mod tests;
