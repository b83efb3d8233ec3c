//! Exact symbolic toolkit for Lie super-bialgebras.

pub mod bialgebra;
pub mod cli;
pub mod cocycle_solver;
pub mod cotensor;
pub mod equivalence;
pub mod poissonlie;
pub mod superalgebra;
pub mod superscalar;
