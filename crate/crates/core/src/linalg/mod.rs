//! Exact integer and modular linear algebra.

mod group;
mod matrix;
mod modular;
mod snf;

pub use group::{kernel_mod, quotient_group, subquotient, FinAbGroup, GroupCoordinates};
pub use matrix::IntMatrix;
pub use modular::{coefficient_map, solve_mod, CoefficientMap, ZdVector};
pub use snf::{smith_normal_form, SmithDecomposition};
