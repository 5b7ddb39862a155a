//! Linear constraint systems `Mx = b` over `Z/d` and their hypergraphs.

mod fixtures;
mod realization;
mod system;

pub use fixtures::{builtin_fixture, fixture, Fixture, FixtureName};
pub use realization::{canonical_realization, realization_witness, RealizationMap};
pub use system::{
    classical_value, hypergraph_of, scalar_solution, ClassicalValue, Constraint, Hypergraph,
    LinearConstraintSystem, CLASSICAL_BOUND,
};
