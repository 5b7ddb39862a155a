//! JSON documents for systems, complexes and operator solutions.
//!
//! All emitted documents carry `"torsionk_schema": 1` and sorted keys. On
//! input the schema field is optional.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use torsionk_core::cw::{Cw2Complex, OneCell, TwoCell};
use torsionk_core::lcs::LinearConstraintSystem;
use torsionk_core::operators::{DenseUnitary, Operator, OperatorSolution, PauliElement, Target};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Schema(String),
    #[error(transparent)]
    Invalid(#[from] torsionk_core::Error),
}

type Result<T> = std::result::Result<T, FormatError>;

fn check_schema(v: Option<u32>) -> Result<()> {
    match v {
        None | Some(SCHEMA_VERSION) => Ok(()),
        Some(v) => Err(FormatError::Schema(format!("unsupported torsionk_schema {v}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LcsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsionk_schema: Option<u32>,
    pub d: u64,
    pub variables: Vec<String>,
    pub constraints: Vec<ConstraintDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintDoc {
    pub coeffs: BTreeMap<String, u64>,
    pub rhs: u64,
}

impl LcsDoc {
    pub fn from_system(l: &LinearConstraintSystem) -> Self {
        let vars = l.variables();
        LcsDoc {
            torsionk_schema: Some(SCHEMA_VERSION),
            d: l.modulus(),
            variables: vars.to_vec(),
            constraints: l
                .constraints()
                .iter()
                .map(|c| ConstraintDoc {
                    coeffs: c.coeffs().iter().map(|(&i, &a)| (vars[i].clone(), a)).collect(),
                    rhs: c.rhs(),
                })
                .collect(),
        }
    }

    /// Residues must already be reduced: coefficients in `(0, d)`, right-hand sides in `[0, d)`.
    pub fn to_system(&self) -> Result<LinearConstraintSystem> {
        check_schema(self.torsionk_schema)?;
        let d = self.d;
        let mut rows = Vec::with_capacity(self.constraints.len());
        for (k, c) in self.constraints.iter().enumerate() {
            if let Some((v, a)) = c.coeffs.iter().find(|(_, &a)| a == 0 || a >= d) {
                return Err(FormatError::Schema(format!("constraint {k}: coefficient {a} of {v} is not in (0, {d})")));
            }
            if c.rhs >= d {
                return Err(FormatError::Schema(format!("constraint {k}: rhs {} is not below {d}", c.rhs)));
            }
            let coeffs: Vec<(&str, i64)> = c.coeffs.iter().map(|(v, &a)| (v.as_str(), a as i64)).collect();
            rows.push((coeffs, c.rhs as i64));
        }
        let vars: Vec<&str> = self.variables.iter().map(String::as_str).collect();
        Ok(LinearConstraintSystem::new(d, &vars, &rows)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CwDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsionk_schema: Option<u32>,
    pub zero_cells: Vec<String>,
    pub one_cells: Vec<OneCellDoc>,
    pub two_cells: Vec<TwoCellDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OneCellDoc {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoCellDoc {
    pub name: String,
    pub word: Vec<(String, i64)>,
}

impl CwDoc {
    pub fn from_complex(x: &Cw2Complex) -> Self {
        let zero = x.zero_cells();
        let one = x.one_cells();
        CwDoc {
            torsionk_schema: Some(SCHEMA_VERSION),
            zero_cells: zero.to_vec(),
            one_cells: one
                .iter()
                .map(|c: &OneCell| OneCellDoc {
                    name: c.name.clone(),
                    source: zero[c.source].clone(),
                    target: zero[c.target].clone(),
                })
                .collect(),
            two_cells: x
                .two_cells()
                .iter()
                .map(|c: &TwoCell| TwoCellDoc {
                    name: c.name.clone(),
                    word: c.word.iter().map(|&(e, n)| (one[e].name.clone(), n)).collect(),
                })
                .collect(),
        }
    }

    pub fn to_complex(&self) -> Result<Cw2Complex> {
        check_schema(self.torsionk_schema)?;
        let ones: Vec<(&str, &str, &str)> =
            self.one_cells.iter().map(|c| (c.name.as_str(), c.source.as_str(), c.target.as_str())).collect();
        let twos: Vec<(&str, Vec<(&str, i64)>)> = self
            .two_cells
            .iter()
            .map(|c| (c.name.as_str(), c.word.iter().map(|(e, n)| (e.as_str(), *n)).collect()))
            .collect();
        let zero: Vec<&str> = self.zero_cells.iter().map(String::as_str).collect();
        Ok(Cw2Complex::new(&zero, &ones, &twos)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum TargetDoc {
    Pauli { p: u64, n: usize },
    Unitary { m: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OperatorDoc {
    Pauli(PauliDoc),
    Matrix(MatrixDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PauliDoc {
    pub phase: i64,
    pub x: Vec<i64>,
    pub z: Vec<i64>,
}

/// Rows of `[re, im]` pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsionk_schema: Option<u32>,
    pub target: TargetDoc,
    pub assignment: BTreeMap<String, OperatorDoc>,
}

impl SolutionDoc {
    pub fn from_solution(t: &OperatorSolution) -> Self {
        let target = match t.target() {
            Target::Pauli { p, n } => TargetDoc::Pauli { p, n },
            Target::Unitary { m } => TargetDoc::Unitary { m },
        };
        let assignment = t
            .assignment()
            .iter()
            .map(|(v, op)| {
                let doc = match op {
                    Operator::Pauli(a) => OperatorDoc::Pauli(PauliDoc {
                        phase: a.phase() as i64,
                        x: a.x().iter().map(|&v| v as i64).collect(),
                        z: a.z().iter().map(|&v| v as i64).collect(),
                    }),
                    Operator::Dense(a) => {
                        let m = a.dimension();
                        OperatorDoc::Matrix(MatrixDoc {
                            matrix: (0..m).map(|i| (0..m).map(|j| [a.get(i, j).re, a.get(i, j).im]).collect()).collect(),
                        })
                    }
                };
                (v.clone(), doc)
            })
            .collect();
        SolutionDoc { torsionk_schema: Some(SCHEMA_VERSION), target, assignment }
    }

    pub fn to_solution(&self) -> Result<OperatorSolution> {
        check_schema(self.torsionk_schema)?;
        let target = match self.target {
            TargetDoc::Pauli { p, n } => Target::Pauli { p, n },
            TargetDoc::Unitary { m } => Target::Unitary { m },
        };
        let mut assignment = BTreeMap::new();
        for (v, doc) in &self.assignment {
            let op = match doc {
                OperatorDoc::Pauli(a) => {
                    let TargetDoc::Pauli { p, .. } = self.target else {
                        return Err(torsionk_core::Error::MixedTargets.into());
                    };
                    Operator::Pauli(PauliElement::new(p, a.phase, &a.x, &a.z)?)
                }
                OperatorDoc::Matrix(a) => {
                    let rows: Vec<Vec<Complex64>> =
                        a.matrix.iter().map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect()).collect();
                    Operator::Dense(DenseUnitary::from_rows(&rows)?)
                }
            };
            assignment.insert(v.clone(), op);
        }
        Ok(OperatorSolution::new(target, assignment)?)
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_json<T: Serialize>(doc: &T) -> String {
    // serde_json::Value keeps object keys in a BTreeMap
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}
