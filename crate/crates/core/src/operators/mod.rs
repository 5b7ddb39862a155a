//! Operator solutions: exact Pauli arithmetic, dense unitaries, verification
//! of the three solution conditions, stabilization and determinant cochains.

mod dense;
mod pauli;
mod solution;

pub use dense::{root_of_unity, snap_to_root, DenseUnitary, DEFAULT_TOLERANCE, ROOT_TOLERANCE};
pub use pauli::{PauliElement, DENSE_LIMIT};
pub use solution::{
    det_cochain, det_cochain_with, scalar_solution_to_operator, stabilize, verify_solution, verify_solution_with,
    CommutationVerdict, ConstraintVerdict, Operator, OperatorSolution, Target, Tolerances, TorsionVerdict,
    VerificationReport,
};
