//! 2-dimensional CW complexes and their cellular (co)homology.

mod cohomology;
mod complex;
mod oracle;
mod pi1;

pub use cohomology::{class_of, cohomology, push_class, CohomologyClass};
pub use complex::{ChainData, Cw2Complex, OneCell, TwoCell};
pub use oracle::{brute_force_cohomology, ORACLE_BOUND};
pub use pi1::{pi1_presentation, Pi1Presentation, Pi1Status, Relator};
