use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{ChainData, Cw2Complex};
use crate::linalg::{solve_mod, subquotient, CoefficientMap, FinAbGroup, IntMatrix, ZdVector};
use crate::{Error, Result};

/// A cohomology class with its representative cocycle and coordinates in
/// the invariant-factor basis of `H^degree(X, Z/k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub degree: usize,
    pub modulus: u64,
    pub representative: ZdVector,
    pub group: FinAbGroup,
    pub coordinates: Vec<BigInt>,
    pub is_zero: bool,
}

impl ChainData {
    /// `δ^degree : C^degree -> C^{degree+1}` as an integer matrix.
    pub fn coboundary(&self, degree: usize) -> IntMatrix {
        match degree {
            0 => self.d1.transpose(),
            1 => self.d2.transpose(),
            // C^3 = 0
            _ => IntMatrix::zeros(0, self.d2.cols()),
        }
    }
}

/// `H^degree(X, Z/k)` for `degree ∈ {0, 1, 2}` with generator cocycles.
pub fn cohomology(x: &Cw2Complex, k: u64, degree: usize) -> Result<FinAbGroup> {
    cohomology_of_chain(&x.chain_data(), x, k, degree)
}

fn cohomology_of_chain(chain: &ChainData, x: &Cw2Complex, k: u64, degree: usize) -> Result<FinAbGroup> {
    if k == 0 {
        return Err(Error::InvalidModulus { min: 1, got: 0 });
    }
    let n = x.cell_count(degree);
    match degree {
        0 => subquotient(n, k, Some(&chain.coboundary(0)), &IntMatrix::zeros(n, 0)),
        1 => subquotient(n, k, Some(&chain.coboundary(1)), &chain.coboundary(0)),
        2 => subquotient(n, k, None, &chain.coboundary(1)),
        d => Err(Error::InvalidDegree(d)),
    }
}

/// The class of a cochain. Degree-1 input must be a cocycle; in degree 2
/// every cochain on a 2-complex is one.
///
/// `is_zero` is decided by solving `δa = cochain (mod k)`, independently of
/// the coordinate computation.
pub fn class_of(x: &Cw2Complex, k: u64, degree: usize, cochain: &ZdVector) -> Result<CohomologyClass> {
    if !(1..=2).contains(&degree) {
        return Err(Error::InvalidDegree(degree));
    }
    if cochain.modulus() != k {
        return Err(Error::ModulusMismatch { expected: k, got: cochain.modulus() });
    }
    if cochain.len() != x.cell_count(degree) {
        return Err(Error::DimensionMismatch(alloc::format!(
            "{}-cochain of length {} on {} cells",
            degree,
            cochain.len(),
            x.cell_count(degree)
        )));
    }
    let chain = x.chain_data();
    if degree == 1 && !cochain.apply(&chain.coboundary(1))?.is_zero() {
        return Err(Error::NotACocycle { degree });
    }
    let group = cohomology_of_chain(&chain, x, k, degree)?;
    let coordinates = group.coordinates(cochain)?;
    let is_zero = solve_mod(&chain.coboundary(degree - 1), cochain, k)?.is_some();
    debug_assert_eq!(is_zero, coordinates.iter().all(Zero::is_zero));
    Ok(CohomologyClass { degree, modulus: k, representative: cochain.clone(), group, coordinates, is_zero })
}

/// Change of coefficients `h_* : H^n(X, Z/k₁) -> H^n(X, Z/k₂)`.
pub fn push_class(x: &Cw2Complex, class: &CohomologyClass, map: &CoefficientMap) -> Result<CohomologyClass> {
    if map.src() != class.modulus {
        return Err(Error::ModulusMismatch { expected: class.modulus, got: map.src() });
    }
    let image = map.apply(&class.representative)?;
    class_of(x, map.dst(), class.degree, &image)
}
