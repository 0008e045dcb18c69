//! Gröbner bases of graded submodules and everything built directly on them.

mod basis;
pub(crate) mod buchberger;
mod hilbert;
mod submodule;
pub(crate) mod vecops;

pub use basis::GroebnerBasis;
pub use hilbert::{HilbertSeries, Length};
pub use submodule::Submodule;
pub(crate) use submodule::apply;
