use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{smith_normal_form, IntMatrix};
use crate::{Error, Result};

/// A vector over `Z/d` with every coordinate kept in `[0, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZdVector {
    modulus: u64,
    coords: Vec<u64>,
}

impl ZdVector {
    /// Reduces every coordinate. A modulus of 1 is allowed and yields the
    /// zero vector of the trivial module.
    pub fn new(modulus: u64, coords: impl IntoIterator<Item = u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus { min: 1, got: 0 });
        }
        Ok(ZdVector { modulus, coords: coords.into_iter().map(|c| c % modulus).collect() })
    }

    pub fn from_signed(modulus: u64, coords: &[i64]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus { min: 1, got: 0 });
        }
        let m = modulus as i128;
        Ok(ZdVector {
            modulus,
            coords: coords.iter().map(|&c| (c as i128).rem_euclid(m) as u64).collect(),
        })
    }

    pub(crate) fn from_bigints(modulus: u64, coords: &[BigInt]) -> Self {
        let m = BigInt::from(modulus);
        ZdVector {
            modulus,
            coords: coords.iter().map(|c| c.mod_floor(&m).to_u64().expect("reduced")).collect(),
        }
    }

    pub fn zeros(modulus: u64, len: usize) -> Self {
        ZdVector { modulus, coords: vec![0; len] }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn lift(&self) -> Vec<BigInt> {
        self.coords.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// `A·self mod d`.
    pub fn apply(&self, a: &IntMatrix) -> Result<ZdVector> {
        let image = a.mul_vec(&self.lift())?;
        Ok(ZdVector::from_bigints(self.modulus, &image))
    }
}

/// Solves `A·x ≡ b (mod d)` for any modulus `d ≥ 1`, prime or not.
///
/// With `A = U·S·V` the system becomes `S·y ≡ U⁻¹b` for `y = V·x`, which
/// splits into scalar congruences `s_i·y_i ≡ c_i`. Each is solvable iff
/// `gcd(s_i, d) | c_i`. The returned `x` uses the least non-negative root of
/// each congruence and zero on every free direction, so the output is
/// reproducible.
pub fn solve_mod(a: &IntMatrix, b: &ZdVector, d: u64) -> Result<Option<ZdVector>> {
    if d == 0 {
        return Err(Error::InvalidModulus { min: 1, got: 0 });
    }
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "right-hand side of length {} for {} equations",
            b.len(),
            a.rows()
        )));
    }
    if b.modulus() != d {
        return Err(Error::ModulusMismatch { expected: d, got: b.modulus() });
    }
    let snf = smith_normal_form(a);
    let dd = BigInt::from(d);
    let c = snf.u_inv.mul_vec(&b.lift())?;
    let diag = snf.diagonal();
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        let ci = ci.mod_floor(&dd);
        let si = diag.get(i).cloned().unwrap_or_default();
        let g = si.gcd(&dd);
        if !(&ci % &g).is_zero() {
            return Ok(None);
        }
        if ci.is_zero() || i >= a.cols() {
            continue;
        }
        // s/g is a unit modulo d/g
        let dg = &dd / &g;
        let inv = mod_inverse(&(&si / &g), &dg).expect("s/g coprime to d/g");
        y[i] = ((&ci / &g) * inv).mod_floor(&dg);
    }
    let x = snf.v_inv.mul_vec(&y)?;
    Ok(Some(ZdVector::from_bigints(d, &x)))
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m == &BigInt::from(1) {
        return Some(BigInt::zero());
    }
    let e = a.mod_floor(m).extended_gcd(m);
    (e.gcd == BigInt::from(1)).then(|| e.x.mod_floor(m))
}

/// The homomorphism `Z/src -> Z/dst`, `x ↦ multiplier·x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientMap {
    src: u64,
    dst: u64,
    multiplier: u64,
}

/// Checks that `x ↦ multiplier·x` is well defined, i.e. `dst | multiplier·src`.
pub fn coefficient_map(src: u64, dst: u64, multiplier: i64) -> Result<CoefficientMap> {
    if src == 0 || dst == 0 {
        return Err(Error::InvalidModulus { min: 1, got: 0 });
    }
    let well_defined = (multiplier as i128 * src as i128).rem_euclid(dst as i128) == 0;
    if !well_defined {
        return Err(Error::IllDefinedMap { src, dst, multiplier });
    }
    let multiplier = (multiplier as i128).rem_euclid(dst as i128) as u64;
    Ok(CoefficientMap { src, dst, multiplier })
}

impl CoefficientMap {
    pub fn identity(k: u64) -> Result<Self> {
        coefficient_map(k, k, 1)
    }

    /// `i_m : (Z/d)_m -> Z/d`, with `(Z/d)_m ≅ Z/g` via `k ↦ k·(d/g)`.
    pub fn torsion_inclusion(d: u64, m: u64) -> Result<Self> {
        let g = d.gcd(&m);
        coefficient_map(g, d, (d / g) as i64)
    }

    /// `×m : Z/d -> Z/d`.
    pub fn times(d: u64, m: u64) -> Result<Self> {
        coefficient_map(d, d, (m % d) as i64)
    }

    /// `π_m : Z/d -> (Z/d)/m(Z/d)`, with the quotient `≅ Z/g` by reduction.
    pub fn cokernel_projection(d: u64, m: u64) -> Result<Self> {
        coefficient_map(d, d.gcd(&m), 1)
    }

    pub fn src(&self) -> u64 {
        self.src
    }

    pub fn dst(&self) -> u64 {
        self.dst
    }

    pub fn multiplier(&self) -> u64 {
        self.multiplier
    }

    pub fn is_zero(&self) -> bool {
        self.multiplier.is_multiple_of(self.dst)
    }

    pub fn apply_residue(&self, x: u64) -> u64 {
        ((x as u128 * self.multiplier as u128) % self.dst as u128) as u64
    }

    pub fn apply(&self, v: &ZdVector) -> Result<ZdVector> {
        if v.modulus() != self.src {
            return Err(Error::ModulusMismatch { expected: self.src, got: v.modulus() });
        }
        ZdVector::new(self.dst, v.coords().iter().map(|&x| self.apply_residue(x)))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &CoefficientMap) -> Result<CoefficientMap> {
        if first.dst != self.src {
            return Err(Error::ModulusMismatch { expected: self.src, got: first.dst });
        }
        let m = (first.multiplier as u128 * self.multiplier as u128) % self.dst as u128;
        coefficient_map(first.src, self.dst, m as i64)
    }
}
