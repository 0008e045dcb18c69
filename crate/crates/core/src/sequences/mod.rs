//! Regular, filter regular, generalized regular, sequential and sequential-f
//! elements and sequences; systems of parameters and multiplicities.

mod classify;
mod multiplicity;
mod search;
mod sequence;

pub use classify::{
    classify_element, sequential_obstruction, test_element, ElementClassification, Failure, SequenceKind,
};
pub use multiplicity::{eval_length_formula, fit_length_formula, i_function, length, multiplicity, power_length};
pub use search::{
    a_ideal, find_p_standard_sop, find_sequence, find_sequence_with_budget, is_p_standard_sop, random_linear_form,
    random_linear_forms, sample_rng, DEFAULT_BUDGET,
};
pub use sequence::{check_sequence, is_part_of_sop, is_sop, SequenceReport};

#[cfg(test)]
mod tests;
