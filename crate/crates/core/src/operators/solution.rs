use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_rational::Ratio;

use super::dense::{root_of_unity, snap_to_root, DenseUnitary, DEFAULT_TOLERANCE, ROOT_TOLERANCE};
use super::pauli::{is_prime, PauliElement};
use crate::lcs::LinearConstraintSystem;
use crate::linalg::ZdVector;
use crate::{Error, Result};

/// Where the operators of a solution live.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// The Pauli group `P_n` over `p`, acting on `p^n` dimensions.
    Pauli { p: u64, n: usize },
    Unitary { m: usize },
}

impl Target {
    /// Matrix dimension, `None` if it does not fit in a `u64`.
    pub fn dimension(&self) -> Option<u64> {
        match *self {
            Target::Pauli { p, n } => p.checked_pow(u32::try_from(n).ok()?),
            Target::Unitary { m } => Some(m as u64),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Operator {
    Pauli(PauliElement),
    Dense(DenseUnitary),
}

impl Operator {
    fn mul(&self, other: &Operator) -> Operator {
        match (self, other) {
            (Operator::Pauli(a), Operator::Pauli(b)) => Operator::Pauli(a.mul(b).expect("shared target")),
            (Operator::Dense(a), Operator::Dense(b)) => Operator::Dense(a.mul(b).expect("shared target")),
            _ => unreachable!("shared target"),
        }
    }

    fn pow(&self, e: u64) -> Operator {
        match self {
            Operator::Pauli(a) => Operator::Pauli(a.pow(e)),
            Operator::Dense(a) => Operator::Dense(a.pow(e)),
        }
    }

    /// Distance to `ω^b·I` with `ω = e^{2πi/d}`; exact (0 or ∞) for Pauli elements.
    fn distance_to_scalar(&self, d: u64, b: u64) -> f64 {
        match self {
            Operator::Pauli(a) => {
                let want = Ratio::new(b % d, d);
                if a.is_scalar() && a.phase_turn() == want {
                    0.0
                } else {
                    f64::INFINITY
                }
            }
            Operator::Dense(a) => {
                a.distance(&DenseUnitary::scalar(a.dimension(), root_of_unity(Ratio::new(b % d, d))))
            }
        }
    }

    fn distance(&self, other: &Operator) -> f64 {
        match (self, other) {
            (Operator::Pauli(a), Operator::Pauli(b)) => {
                if a == b {
                    0.0
                } else {
                    f64::INFINITY
                }
            }
            (Operator::Dense(a), Operator::Dense(b)) => a.distance(b),
            _ => f64::INFINITY,
        }
    }

    fn describe(&self) -> String {
        match self {
            Operator::Pauli(a) => a.to_string(),
            Operator::Dense(a) => alloc::format!("{0}×{0} matrix", a.dimension()),
        }
    }
}

/// An assignment `T : V -> U(m)` of one operator per variable.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorSolution {
    target: Target,
    assignment: BTreeMap<String, Operator>,
}

impl OperatorSolution {
    pub fn new(target: Target, assignment: BTreeMap<String, Operator>) -> Result<Self> {
        match target {
            Target::Pauli { p, .. } if !is_prime(p) => {
                return Err(Error::IncompatibleTarget(alloc::format!("Pauli target over non-prime {p}")))
            }
            Target::Unitary { m: 0 } => return Err(Error::IncompatibleTarget("dimension 0".into())),
            _ => {}
        }
        if target.dimension().is_none() {
            return Err(Error::IncompatibleTarget("dimension does not fit in 64 bits".into()));
        }
        for (name, op) in &assignment {
            let ok = match (op, target) {
                (Operator::Pauli(a), Target::Pauli { p, n }) => a.p() == p && a.n() == n,
                (Operator::Dense(a), Target::Unitary { m }) => a.dimension() == m,
                _ => return Err(Error::MixedTargets),
            };
            if !ok {
                return Err(Error::IncompatibleTarget(alloc::format!("operator for {name} has the wrong shape")));
            }
        }
        Ok(OperatorSolution { target, assignment })
    }

    /// A qubit Pauli solution from labels such as `("XX", "XX")`.
    pub fn from_labels<S: AsRef<str>>(pairs: &[(S, S)]) -> Result<Self> {
        let mut assignment = BTreeMap::new();
        let mut n = None;
        for (var, label) in pairs {
            let a = PauliElement::from_label(label.as_ref())?;
            if *n.get_or_insert(a.n()) != a.n() {
                return Err(Error::MixedTargets);
            }
            assignment.insert(var.as_ref().to_string(), Operator::Pauli(a));
        }
        Self::new(Target::Pauli { p: 2, n: n.unwrap_or(0) }, assignment)
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn assignment(&self) -> &BTreeMap<String, Operator> {
        &self.assignment
    }

    pub fn get(&self, variable: &str) -> Option<&Operator> {
        self.assignment.get(variable)
    }

    pub fn dimension(&self) -> u64 {
        self.target.dimension().expect("checked on construction")
    }

    /// Renders every Pauli element as a dense matrix.
    pub fn to_dense(&self) -> Result<Self> {
        let Target::Pauli { .. } = self.target else {
            return Ok(self.clone());
        };
        let assignment = self
            .assignment
            .iter()
            .map(|(v, op)| match op {
                Operator::Pauli(a) => Ok((v.clone(), Operator::Dense(a.to_matrix()?))),
                Operator::Dense(_) => unreachable!("shared target"),
            })
            .collect::<Result<_>>()?;
        Self::new(Target::Unitary { m: self.dimension() as usize }, assignment)
    }

    fn operators_for(&self, l: &LinearConstraintSystem) -> Result<Vec<&Operator>> {
        for v in self.assignment.keys() {
            if l.variable_index(v).is_none() {
                return Err(Error::IncompatibleTarget(alloc::format!("{v} is not a variable of the system")));
            }
        }
        l.variables()
            .iter()
            .map(|v| self.assignment.get(v).ok_or_else(|| Error::IncompleteAssignment(v.clone())))
            .collect()
    }
}

/// Tolerances used for dense targets.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Entrywise bound on `‖A − B‖_max` for equality checks.
    pub equality: f64,
    /// Distance allowed when snapping determinants to roots of unity.
    pub root: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { equality: DEFAULT_TOLERANCE, root: ROOT_TOLERANCE }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionVerdict {
    pub variable: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationVerdict {
    pub pair: (String, String),
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintVerdict {
    pub row: usize,
    pub passed: bool,
    /// The ascending-order product, or its distance from `ω^b·I` for dense targets.
    pub product: String,
}

/// Per-item outcome of checking conditions (1) to (3) of an operator solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// True for Pauli targets, which are checked in exact arithmetic.
    pub exact: bool,
    pub torsion: Vec<TorsionVerdict>,
    pub commutation: Vec<CommutationVerdict>,
    pub constraint: Vec<ConstraintVerdict>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.torsion.iter().all(|v| v.passed)
            && self.commutation.iter().all(|v| v.passed)
            && self.constraint.iter().all(|v| v.passed)
    }

    pub fn failing_rows(&self) -> Vec<usize> {
        self.constraint.iter().filter(|v| !v.passed).map(|v| v.row).collect()
    }
}

pub fn verify_solution(l: &LinearConstraintSystem, t: &OperatorSolution) -> Result<VerificationReport> {
    verify_solution_with(l, t, &Tolerances::default())
}

/// Checks `A_i^d = I`, `A_iA_j = A_jA_i` for variables sharing a constraint,
/// and `∏_i A_i^{M_ki} = ω^{b_k}·I` with the product in ascending variable order.
///
/// When every pair in a row commutes the row product is also evaluated in
/// descending order and the two results are asserted equal.
pub fn verify_solution_with(
    l: &LinearConstraintSystem,
    t: &OperatorSolution,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    let d = l.modulus();
    if let Target::Pauli { p, .. } = t.target {
        if p != d {
            return Err(Error::IncompatibleTarget(alloc::format!("Pauli group over {p} for a system over Z/{d}")));
        }
    }
    let ops = t.operators_for(l)?;
    let exact = matches!(t.target, Target::Pauli { .. });
    let m = t.dimension();
    let identity = match t.target {
        Target::Pauli { p, n } => Operator::Pauli(PauliElement::identity(p, n)?),
        Target::Unitary { m } => Operator::Dense(DenseUnitary::identity(m)),
    };
    let close = |dist: f64| if exact { dist == 0.0 } else { dist <= tol.equality };
    let vars = l.variables();

    let torsion = ops
        .iter()
        .zip(vars)
        .map(|(a, v)| TorsionVerdict { variable: v.clone(), passed: close(a.pow(d).distance_to_scalar(d, 0)) })
        .collect();

    let mut commuting = BTreeMap::new();
    let commutation = l
        .co_occurring_pairs()
        .into_iter()
        .map(|(i, j)| {
            let passed = close(ops[i].mul(ops[j]).distance(&ops[j].mul(ops[i])));
            commuting.insert((i, j), passed);
            CommutationVerdict { pair: (vars[i].clone(), vars[j].clone()), passed }
        })
        .collect();

    let constraint = l
        .constraints()
        .iter()
        .enumerate()
        .map(|(row, c)| {
            let factors: Vec<Operator> = c.coeffs().iter().map(|(&i, &e)| ops[i].pow(e)).collect();
            let product = factors.iter().fold(identity.clone(), |acc, f| acc.mul(f));
            let keys: Vec<usize> = c.coeffs().keys().copied().collect();
            let all_commute = keys
                .iter()
                .enumerate()
                .all(|(a, &i)| keys[a + 1..].iter().all(|&j| commuting[&(i, j)]));
            if all_commute {
                let reversed = factors.iter().rev().fold(identity.clone(), |acc, f| acc.mul(f));
                let gap = product.distance(&reversed);
                assert!(
                    if exact { gap == 0.0 } else { gap <= tol.equality * (factors.len() as f64 + 1.0) * m as f64 },
                    "row {row}: commuting factors gave an order-dependent product"
                );
            }
            let dist = product.distance_to_scalar(d, c.rhs());
            let product = match &product {
                Operator::Pauli(_) => product.describe(),
                Operator::Dense(_) => alloc::format!("{dist:.3e}"),
            };
            ConstraintVerdict { row, passed: close(dist), product }
        })
        .collect();

    Ok(VerificationReport { exact, torsion, commutation, constraint })
}

/// `T ⊗ I_{p^extra}` for a Pauli solution.
pub fn stabilize(t: &OperatorSolution, extra: usize) -> Result<OperatorSolution> {
    let Target::Pauli { p, n } = t.target else {
        return Err(Error::IncompatibleTarget("only Pauli solutions can be stabilized".into()));
    };
    let assignment = t
        .assignment
        .iter()
        .map(|(v, op)| match op {
            Operator::Pauli(a) => (v.clone(), Operator::Pauli(a.tensor_identity(extra))),
            Operator::Dense(_) => unreachable!("shared target"),
        })
        .collect();
    OperatorSolution::new(Target::Pauli { p, n: n + extra }, assignment)
}

/// The 1-cochain `c(v) = log_ω det T(v)` on the variables, checked against
/// `Mc ≡ m·b (mod d)`, which follows from taking determinants of the
/// constraint products.
pub fn det_cochain(t: &OperatorSolution, l: &LinearConstraintSystem) -> Result<ZdVector> {
    det_cochain_with(t, l, &Tolerances::default())
}

pub fn det_cochain_with(t: &OperatorSolution, l: &LinearConstraintSystem, tol: &Tolerances) -> Result<ZdVector> {
    let d = l.modulus();
    let ops = t.operators_for(l)?;
    let mut c = Vec::with_capacity(ops.len());
    for (op, v) in ops.iter().zip(l.variables()) {
        let not_root = || Error::NotRootOfUnity { variable: v.clone(), d };
        let k = match op {
            Operator::Pauli(a) => {
                let turn = a.det_turn();
                let scaled = turn * Ratio::from_integer(d);
                if !scaled.is_integer() {
                    return Err(not_root());
                }
                scaled.to_integer() % d
            }
            Operator::Dense(a) => snap_to_root(a.determinant(), d, tol.root).ok_or_else(not_root)?,
        };
        c.push(k);
    }
    let c = ZdVector::new(d, c)?;
    let m = t.dimension() % d;
    let lhs = c.apply(&l.matrix())?;
    for (k, (&got, con)) in lhs.coords().iter().zip(l.constraints()).enumerate() {
        let want = (m as u128 * con.rhs() as u128 % d as u128) as u64;
        if got != want {
            return Err(Error::DeterminantIdentity(alloc::format!("row {k}: δc = {got}, m·τ = {want} (mod {d})")));
        }
    }
    Ok(c)
}

/// The one-dimensional solution `A_i = ω^{x_i}`.
pub fn scalar_solution_to_operator(l: &LinearConstraintSystem, x: &ZdVector) -> Result<OperatorSolution> {
    let d = l.modulus();
    if x.modulus() != d || x.len() != l.variables().len() {
        return Err(Error::DimensionMismatch("assignment does not match the system".into()));
    }
    let assignment = l
        .variables()
        .iter()
        .zip(x.coords())
        .map(|(v, &k)| (v.clone(), Operator::Dense(DenseUnitary::scalar(1, root_of_unity(Ratio::new(k, d))))))
        .collect();
    OperatorSolution::new(Target::Unitary { m: 1 }, assignment)
}

