use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;
use num_rational::Ratio;

use crate::{Error, Result};

/// Default entrywise tolerance for unitarity and equality checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Default distance allowed when snapping to a root of unity.
pub const ROOT_TOLERANCE: f64 = 1e-6;

/// `e^{2πi·t}`, exact on quarter turns.
pub fn root_of_unity(turn: Ratio<u64>) -> Complex64 {
    let (n, d) = (*turn.numer() % *turn.denom(), *turn.denom());
    if (4 * n) % d == 0 {
        let quarter = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)][(4 * n / d) as usize];
        return Complex64::new(quarter.0, quarter.1);
    }
    let a = TAU * n as f64 / d as f64;
    Complex64::new(libm::cos(a), libm::sin(a))
}

pub(crate) fn modulus(z: Complex64) -> f64 {
    libm::hypot(z.re, z.im)
}

/// The `k` in `z ≈ e^{2πik/d}`, if `z` lies within `tolerance` of a `d`-th root of unity.
pub fn snap_to_root(z: Complex64, d: u64, tolerance: f64) -> Option<u64> {
    let turns = libm::atan2(z.im, z.re) / TAU;
    let k = (libm::round(turns * d as f64) as i64).rem_euclid(d as i64) as u64;
    (modulus(z - root_of_unity(Ratio::new(k, d))) <= tolerance).then_some(k)
}

/// A square complex matrix checked to be unitary on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseUnitary {
    m: usize,
    entries: Vec<Complex64>,
}

impl DenseUnitary {
    /// Row-major entries; rejects matrices with `‖A†A − I‖_max > 10⁻⁹`.
    pub fn new(m: usize, entries: Vec<Complex64>) -> Result<Self> {
        Self::with_tolerance(m, entries, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(m: usize, entries: Vec<Complex64>, tolerance: f64) -> Result<Self> {
        if m == 0 || entries.len() != m * m {
            return Err(Error::ShapeMismatch(alloc::format!("{} entries for dimension {m}", entries.len())));
        }
        let a = DenseUnitary { m, entries };
        let err = a.adjoint().mul(&a)?.distance(&Self::identity(m));
        if err.is_nan() || err > tolerance {
            return Err(Error::InvalidOperator(alloc::format!("not unitary: ‖A†A − I‖ = {err:e}")));
        }
        Ok(a)
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::ShapeMismatch("rows of unequal length".into()));
        }
        Self::new(m, rows.concat())
    }

    pub fn identity(m: usize) -> Self {
        Self::scalar(m, Complex64::new(1.0, 0.0))
    }

    pub fn scalar(m: usize, c: Complex64) -> Self {
        let mut entries = vec![Complex64::new(0.0, 0.0); m * m];
        for i in 0..m {
            entries[i * m + i] = c;
        }
        DenseUnitary { m, entries }
    }

    pub fn dimension(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.m + j]
    }

    pub fn adjoint(&self) -> Self {
        let m = self.m;
        let entries = (0..m * m).map(|k| self.entries[(k % m) * m + k / m].conj()).collect();
        DenseUnitary { m, entries }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let m = self.m;
        if other.m != m {
            return Err(Error::ShapeMismatch(alloc::format!("{m}×{m} times {0}×{0}", other.m)));
        }
        let mut entries = vec![Complex64::new(0.0, 0.0); m * m];
        for i in 0..m {
            for k in 0..m {
                let a = self.entries[i * m + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..m {
                    entries[i * m + j] += a * other.entries[k * m + j];
                }
            }
        }
        Ok(DenseUnitary { m, entries })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same shape");
            }
            base = base.mul(&base).expect("same shape");
            e >>= 1;
        }
        acc
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.m, other.m);
        let m = a * b;
        let mut entries = vec![Complex64::new(0.0, 0.0); m * m];
        for i in 0..a {
            for j in 0..a {
                let s = self.entries[i * a + j];
                for k in 0..b {
                    for l in 0..b {
                        entries[(i * b + k) * m + j * b + l] = s * other.entries[k * b + l];
                    }
                }
            }
        }
        DenseUnitary { m, entries }
    }

    /// `‖A − B‖_max`, infinite on a shape mismatch.
    pub fn distance(&self, other: &Self) -> f64 {
        if self.m != other.m {
            return f64::INFINITY;
        }
        self.entries.iter().zip(&other.entries).map(|(&a, &b)| modulus(a - b)).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tolerance: f64) -> bool {
        self.distance(other) <= tolerance
    }

    /// Determinant by LU decomposition with partial pivoting.
    pub fn determinant(&self) -> Complex64 {
        let m = self.m;
        let mut a = self.entries.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..m {
            let pivot = (col..m)
                .max_by(|&i, &j| modulus(a[i * m + col]).total_cmp(&modulus(a[j * m + col])))
                .expect("nonempty range");
            let pv = a[pivot * m + col];
            if pv == Complex64::new(0.0, 0.0) {
                return pv;
            }
            if pivot != col {
                for j in 0..m {
                    a.swap(pivot * m + j, col * m + j);
                }
                det = -det;
            }
            det *= pv;
            for i in col + 1..m {
                let f = a[i * m + col] / pv;
                for j in col..m {
                    let t = a[col * m + j];
                    a[i * m + j] -= f * t;
                }
            }
        }
        det
    }
}
