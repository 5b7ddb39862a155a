use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{smith_normal_form, IntMatrix, ZdVector};
use crate::{Error, Result};

/// A finite abelian group `⊕ Z/k_i` in invariant-factor form.
///
/// Groups that arise as subquotients of some `(Z/k)^n` also carry
/// [`GroupCoordinates`]: explicit lifts of the generators and the inverse
/// map taking an element of the ambient subgroup to its coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct FinAbGroup {
    factors: Vec<BigInt>,
    coordinates: Option<GroupCoordinates>,
}

/// Coordinate data of a subquotient `Z/B` of `(Z/k)^n`.
///
/// With `Z̃ ⊆ Z^n` the preimage of `Z`, a basis of `Z̃` is given by the
/// columns of `basis_transform · diag(scale)`. An element `x ∈ Z̃` has basis
/// coordinates `y_j = (basis_inverse·x)_j / scale_j`, and its group
/// coordinates are `(projection·y)_i mod k_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCoordinates {
    modulus: u64,
    ambient_rank: usize,
    generator_lift: IntMatrix,
    basis_inverse: IntMatrix,
    scale: Vec<BigInt>,
    projection: IntMatrix,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup { factors: Vec::new(), coordinates: None }
    }

    pub fn cyclic(k: u64) -> Self {
        Self::from_orders(&[BigInt::from(k)])
    }

    /// Normalizes `⊕ Z/o_i` into invariant-factor form. Orders must be positive.
    pub fn from_orders(orders: &[BigInt]) -> Self {
        assert!(orders.iter().all(|o| *o > BigInt::zero()), "orders must be positive");
        let n = orders.len();
        let snf = smith_normal_form(&IntMatrix::diagonal(n, n, orders));
        let factors = snf.diagonal().into_iter().filter(|s| !s.is_one()).collect();
        FinAbGroup { factors, coordinates: None }
    }

    /// Accepts factors already in invariant-factor form: each at least 2
    /// and dividing the next.
    pub fn from_invariant_factors(factors: Vec<BigInt>) -> Result<Self> {
        let ok = factors.iter().all(|k| *k >= BigInt::from(2))
            && factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero());
        if !ok {
            return Err(Error::ShapeMismatch(alloc::format!("{factors:?} is not an invariant-factor list")));
        }
        Ok(FinAbGroup { factors, coordinates: None })
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn order(&self) -> BigInt {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Minimal number of generators.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let all: Vec<BigInt> = self.factors.iter().chain(&other.factors).cloned().collect();
        Self::from_orders(&all)
    }

    pub fn coordinates_data(&self) -> Option<&GroupCoordinates> {
        self.coordinates.as_ref()
    }

    /// Generator `i` as a vector in the ambient module, one column each.
    pub fn generator_lift(&self) -> Option<&IntMatrix> {
        self.coordinates.as_ref().map(|c| &c.generator_lift)
    }

    pub fn generators(&self) -> Option<Vec<ZdVector>> {
        let c = self.coordinates.as_ref()?;
        Some(
            (0..c.generator_lift.cols())
                .map(|j| ZdVector::from_bigints(c.modulus, &c.generator_lift.column(j)))
                .collect(),
        )
    }

    /// Coordinates of an ambient vector, each reduced into `[0, k_i)`.
    /// Vectors outside the subgroup `Z` are rejected with `ShapeMismatch`.
    pub fn coordinates(&self, x: &ZdVector) -> Result<Vec<BigInt>> {
        let c = self
            .coordinates
            .as_ref()
            .ok_or_else(|| Error::ShapeMismatch("group has no ambient coordinates".into()))?;
        if x.modulus() != c.modulus {
            return Err(Error::ModulusMismatch { expected: c.modulus, got: x.modulus() });
        }
        if x.len() != c.ambient_rank {
            return Err(Error::DimensionMismatch(alloc::format!(
                "vector of length {} in an ambient module of rank {}",
                x.len(),
                c.ambient_rank
            )));
        }
        let raw = c.basis_inverse.mul_vec(&x.lift())?;
        let mut y = Vec::with_capacity(raw.len());
        for (r, s) in raw.iter().zip(&c.scale) {
            let (q, rem) = r.div_mod_floor(s);
            if !rem.is_zero() {
                return Err(Error::ShapeMismatch("vector lies outside the subgroup".into()));
            }
            y.push(q);
        }
        let w = c.projection.mul_vec(&y)?;
        Ok(w.iter().zip(&self.factors).map(|(wi, k)| wi.mod_floor(k)).collect())
    }

    /// Whether `x` lies in the subgroup `Z` whose quotient this group is.
    pub fn contains(&self, x: &ZdVector) -> bool {
        self.coordinates(x).is_ok()
    }
}

impl GroupCoordinates {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinAbGroup({self})")
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        for (i, k) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "Z/{k}")?;
        }
        Ok(())
    }
}

/// The subquotient `Z / B` of `(Z/k)^n`, where `Z = {x : A·x ≡ 0 (mod k)}`
/// (all of `(Z/k)^n` when `cocycle_condition` is `None`) and `B` is spanned
/// by the columns of `boundary_generators`, which must lie in `Z`.
pub fn subquotient(
    n: usize,
    k: u64,
    cocycle_condition: Option<&IntMatrix>,
    boundary_generators: &IntMatrix,
) -> Result<FinAbGroup> {
    if k == 0 {
        return Err(Error::InvalidModulus { min: 1, got: 0 });
    }
    if boundary_generators.rows() != n {
        return Err(Error::DimensionMismatch(alloc::format!(
            "{} generator rows in an ambient module of rank {n}",
            boundary_generators.rows()
        )));
    }
    let kk = BigInt::from(k);

    // basis of the lattice Z̃ = preimage of Z in Z^n
    let (basis_inverse, basis, scale) = match cocycle_condition {
        None => (IntMatrix::identity(n), IntMatrix::identity(n), vec![BigInt::one(); n]),
        Some(a) => {
            if a.cols() != n {
                return Err(Error::DimensionMismatch(alloc::format!(
                    "cocycle condition with {} columns in rank {n}",
                    a.cols()
                )));
            }
            let snf = smith_normal_form(a);
            let diag = snf.diagonal();
            let scale: Vec<BigInt> = (0..n)
                .map(|j| {
                    let s = diag.get(j).cloned().unwrap_or_default();
                    &kk / s.gcd(&kk)
                })
                .collect();
            (snf.v, snf.v_inv, scale)
        }
    };

    // relations in basis coordinates: the boundary generators and k·Z^n
    let q = boundary_generators.cols();
    let mut relations = IntMatrix::zeros(n, q + n);
    for j in 0..q + n {
        let g: Vec<BigInt> = if j < q {
            boundary_generators.column(j)
        } else {
            let mut e = vec![BigInt::zero(); n];
            e[j - q] = kk.clone();
            e
        };
        let raw = basis_inverse.mul_vec(&g)?;
        for (i, (r, s)) in raw.iter().zip(&scale).enumerate() {
            let (y, rem) = r.div_mod_floor(s);
            if !rem.is_zero() {
                return Err(Error::ShapeMismatch(
                    "boundary generator outside the cocycle subgroup".into(),
                ));
            }
            relations[(i, j)] = y;
        }
    }

    let snf = smith_normal_form(&relations);
    let diag = snf.diagonal();
    let kept: Vec<usize> = (0..n).filter(|&i| !diag[i].is_one()).collect();
    debug_assert!(kept.iter().all(|&i| !diag[i].is_zero()), "quotient must be finite");

    let factors: Vec<BigInt> = kept.iter().map(|&i| diag[i].clone()).collect();
    let mut projection = IntMatrix::zeros(kept.len(), n);
    let mut generator_lift = IntMatrix::zeros(n, kept.len());
    for (r, &i) in kept.iter().enumerate() {
        for j in 0..n {
            projection[(r, j)] = snf.u_inv[(i, j)].clone();
        }
        // x = basis · diag(scale) · U[:, i]
        let y: Vec<BigInt> = (0..n).map(|j| &snf.u[(j, i)] * &scale[j]).collect();
        let x = basis.mul_vec(&y)?;
        for (j, xj) in x.iter().enumerate() {
            generator_lift[(j, r)] = xj.mod_floor(&kk);
        }
    }

    Ok(FinAbGroup {
        factors,
        coordinates: Some(GroupCoordinates {
            modulus: k,
            ambient_rank: n,
            generator_lift,
            basis_inverse,
            scale,
            projection,
        }),
    })
}

/// `{x ∈ (Z/d)^c : A·x ≡ 0}` with explicit generators.
pub fn kernel_mod(a: &IntMatrix, d: u64) -> Result<FinAbGroup> {
    subquotient(a.cols(), d, Some(a), &IntMatrix::zeros(a.cols(), 0))
}

/// `(Z/d)^n / ⟨columns of relations⟩`.
pub fn quotient_group(ambient_rank: usize, d: u64, relations: &IntMatrix) -> Result<FinAbGroup> {
    subquotient(ambient_rank, d, None, relations)
}
