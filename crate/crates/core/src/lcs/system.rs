use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::linalg::{solve_mod, IntMatrix, ZdVector};
use crate::{Error, Result};

/// Largest `d^c` that [`classical_value`] will enumerate.
pub const CLASSICAL_BOUND: u128 = 10_000_000;

/// One row `Σ coeffs[i]·x_i = rhs`; coefficients are nonzero residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    coeffs: BTreeMap<usize, u64>,
    rhs: u64,
}

impl Constraint {
    pub fn coeffs(&self) -> &BTreeMap<usize, u64> {
        &self.coeffs
    }

    pub fn rhs(&self) -> u64 {
        self.rhs
    }

    pub fn is_satisfied(&self, x: &[u64], d: u64) -> bool {
        let s: u128 = self.coeffs.iter().map(|(&i, &a)| a as u128 * x[i] as u128).sum();
        (s % d as u128) as u64 == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraintSystem {
    d: u64,
    variables: Vec<String>,
    constraints: Vec<Constraint>,
}

impl LinearConstraintSystem {
    /// Builds a system from named coefficients. Coefficients and right-hand
    /// sides are reduced mod `d`; a coefficient that reduces to zero, a
    /// repeated or unknown variable, and a variable used by no constraint are
    /// all rejected.
    pub fn new<S: AsRef<str>>(d: u64, variables: &[S], constraints: &[(Vec<(S, i64)>, i64)]) -> Result<Self> {
        let variables: Vec<String> = variables.iter().map(|v| String::from(v.as_ref())).collect();
        let mut index = BTreeMap::new();
        for (i, v) in variables.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(Error::InvalidSystem(alloc::format!("duplicate variable {v}")));
            }
        }
        let mut rows = Vec::with_capacity(constraints.len());
        for (k, (coeffs, rhs)) in constraints.iter().enumerate() {
            let mut row = BTreeMap::new();
            for (name, a) in coeffs {
                let i = *index.get(name.as_ref()).ok_or_else(|| {
                    Error::InvalidSystem(alloc::format!("constraint {k} uses unknown variable {}", name.as_ref()))
                })?;
                if row.insert(i, reduce(*a, d)?).is_some() {
                    return Err(Error::InvalidSystem(alloc::format!(
                        "constraint {k} repeats variable {}",
                        name.as_ref()
                    )));
                }
            }
            rows.push((row, reduce(*rhs, d)?));
        }
        Self::from_indexed(d, variables, rows)
    }

    pub fn from_indexed(d: u64, variables: Vec<String>, rows: Vec<(BTreeMap<usize, u64>, u64)>) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidModulus { min: 2, got: d });
        }
        if variables.is_empty() || rows.is_empty() {
            return Err(Error::InvalidSystem("need at least one variable and one constraint".into()));
        }
        let mut used = vec![false; variables.len()];
        let mut constraints = Vec::with_capacity(rows.len());
        for (k, (coeffs, rhs)) in rows.into_iter().enumerate() {
            for (&i, &a) in &coeffs {
                if i >= variables.len() {
                    return Err(Error::InvalidSystem(alloc::format!("constraint {k} uses variable index {i}")));
                }
                if a % d == 0 {
                    return Err(Error::InvalidSystem(alloc::format!(
                        "constraint {k} has a zero coefficient on {}",
                        variables[i]
                    )));
                }
                used[i] = true;
            }
            let coeffs = coeffs.into_iter().map(|(i, a)| (i, a % d)).collect();
            constraints.push(Constraint { coeffs, rhs: rhs % d });
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(Error::InvalidSystem(alloc::format!("variable {} appears in no constraint", variables[i])));
        }
        Ok(LinearConstraintSystem { d, variables, constraints })
    }

    pub fn modulus(&self) -> u64 {
        self.d
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// `M` as an `r × c` integer matrix with entries in `[0, d)`.
    pub fn matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.constraints.len(), self.variables.len());
        for (k, c) in self.constraints.iter().enumerate() {
            for (&i, &a) in &c.coeffs {
                m[(k, i)] = BigInt::from(a);
            }
        }
        m
    }

    pub fn rhs(&self) -> ZdVector {
        ZdVector::new(self.d, self.constraints.iter().map(|c| c.rhs)).expect("d >= 2")
    }

    /// Pairs of distinct variables that share a constraint, ascending, deduplicated.
    pub fn co_occurring_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = alloc::collections::BTreeSet::new();
        for c in &self.constraints {
            let vars: Vec<usize> = c.coeffs.keys().copied().collect();
            for (a, &i) in vars.iter().enumerate() {
                for &j in &vars[a + 1..] {
                    pairs.insert((i, j));
                }
            }
        }
        pairs.into_iter().collect()
    }
}

fn reduce(v: i64, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::InvalidModulus { min: 2, got: 0 });
    }
    Ok((v as i128).rem_euclid(d as i128) as u64)
}

/// The hypergraph `(V, E, ε)`: vertices are variables, edge `k` is the
/// support of row `k` with incidence weights given by its coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    modulus: u64,
    vertices: Vec<String>,
    edges: Vec<BTreeMap<usize, u64>>,
}

impl Hypergraph {
    pub fn new(modulus: u64, vertices: Vec<String>, edges: Vec<BTreeMap<usize, u64>>) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus { min: 2, got: modulus });
        }
        for (k, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::InvalidSystem(alloc::format!("edge {k} is empty")));
            }
            if e.iter().any(|(&v, &w)| v >= vertices.len() || w % modulus == 0) {
                return Err(Error::InvalidSystem(alloc::format!("edge {k} has a bad vertex or zero weight")));
            }
        }
        Ok(Hypergraph { modulus, vertices, edges })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[BTreeMap<usize, u64>] {
        &self.edges
    }

    /// `∂ : Z/d[E] -> Z/d[V]`, `∂[e] = Σ_{v∈e} ε_e(v)[v]`, as a `c × r` matrix.
    pub fn boundary(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.vertices.len(), self.edges.len());
        for (k, e) in self.edges.iter().enumerate() {
            for (&v, &w) in e {
                m[(v, k)] = BigInt::from(w);
            }
        }
        m
    }

    /// Inverse of [`hypergraph_of`].
    pub fn to_system(&self, tau: &ZdVector) -> Result<LinearConstraintSystem> {
        if tau.len() != self.edges.len() || tau.modulus() != self.modulus {
            return Err(Error::DimensionMismatch("τ does not match the edge set".into()));
        }
        let rows = self.edges.iter().cloned().zip(tau.coords().iter().copied()).collect();
        LinearConstraintSystem::from_indexed(self.modulus, self.vertices.clone(), rows)
    }
}

/// `(ℋ, τ)` with `τ(e_k) = b_k`.
pub fn hypergraph_of(l: &LinearConstraintSystem) -> (Hypergraph, ZdVector) {
    let h = Hypergraph {
        modulus: l.d,
        vertices: l.variables.clone(),
        edges: l.constraints.iter().map(|c| c.coeffs.clone()).collect(),
    };
    (h, l.rhs())
}

/// A scalar solution `x` with `Mx ≡ b`, i.e. `A_i = ω^{x_i}`, if one exists.
pub fn scalar_solution(l: &LinearConstraintSystem) -> Option<ZdVector> {
    solve_mod(&l.matrix(), &l.rhs(), l.d).expect("shapes agree by construction")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalValue {
    pub satisfied: usize,
    pub total: usize,
    /// Lexicographically least assignment attaining the maximum.
    pub maximizer: ZdVector,
}

impl ClassicalValue {
    pub fn value(&self) -> Ratio<u64> {
        Ratio::new(self.satisfied as u64, self.total as u64)
    }

    pub fn is_perfect(&self) -> bool {
        self.satisfied == self.total
    }
}

/// Maximum fraction of simultaneously satisfiable constraints, by
/// exhaustive search over `(Z/d)^c` in lexicographic order.
pub fn classical_value(l: &LinearConstraintSystem) -> Result<ClassicalValue> {
    let (d, c, r) = (l.d, l.variables.len(), l.constraints.len());
    let size = (d as u128).checked_pow(c as u32).unwrap_or(u128::MAX);
    if size > CLASSICAL_BOUND {
        return Err(Error::BoundExceeded { size, bound: CLASSICAL_BOUND });
    }
    // constraints touching each variable, for incremental row sums
    let mut touching: Vec<Vec<(usize, u64)>> = vec![Vec::new(); c];
    for (k, row) in l.constraints.iter().enumerate() {
        for (&i, &a) in &row.coeffs {
            touching[i].push((k, a));
        }
    }
    let mut x = vec![0u64; c];
    let mut sums = vec![0u64; r];
    let count = |sums: &[u64]| sums.iter().zip(&l.constraints).filter(|(s, row)| **s == row.rhs).count();
    let mut best = count(&sums);
    let mut best_x = x.clone();
    'search: while best < r {
        // odometer step, last variable fastest
        let mut i = c;
        loop {
            if i == 0 {
                break 'search;
            }
            i -= 1;
            let carry = x[i] + 1 == d;
            let (old, new) = (x[i], if carry { 0 } else { x[i] + 1 });
            x[i] = new;
            for &(k, a) in &touching[i] {
                let delta = (a as u128 * (d + new - old) as u128 % d as u128) as u64;
                sums[k] = (sums[k] + delta) % d;
            }
            if !carry {
                break;
            }
        }
        let now = count(&sums);
        if now > best {
            best = now;
            best_x.clone_from(&x);
        }
    }
    Ok(ClassicalValue { satisfied: best, total: r, maximizer: ZdVector::new(d, best_x)? })
}
