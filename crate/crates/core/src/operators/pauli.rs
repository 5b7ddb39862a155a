use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use num_rational::Ratio;

use super::dense::{root_of_unity, DenseUnitary};
use crate::{Error, Result};

/// Largest matrix dimension [`PauliElement::to_matrix`] will build.
pub const DENSE_LIMIT: u64 = 1 << 10;

/// `i^phase·X(x)·Z(z)` for `p = 2`, `ω^phase·X(x)·Z(z)` with `ω = e^{2πi/p}`
/// for odd `p`, where `X|j⟩ = |j+1⟩` and `Z|j⟩ = ω^j|j⟩` on each qudit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliElement {
    p: u64,
    phase: u64,
    x: Vec<u64>,
    z: Vec<u64>,
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k))
}

impl PauliElement {
    pub fn new(p: u64, phase: i64, x: &[i64], z: &[i64]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidOperator(alloc::format!("{p} is not prime")));
        }
        if x.len() != z.len() {
            return Err(Error::ShapeMismatch(alloc::format!("x has length {}, z has {}", x.len(), z.len())));
        }
        let r = |v: i64, m: u64| (v as i128).rem_euclid(m as i128) as u64;
        let pm = if p == 2 { 4 } else { p };
        Ok(PauliElement {
            p,
            phase: r(phase, pm),
            x: x.iter().map(|&v| r(v, p)).collect(),
            z: z.iter().map(|&v| r(v, p)).collect(),
        })
    }

    pub fn identity(p: u64, n: usize) -> Result<Self> {
        Self::new(p, 0, &vec![0; n], &vec![0; n])
    }

    /// Parses a qubit label such as `XZ`, `-YY` or `iIX`. Each letter is one
    /// tensor factor, first factor first; `Y = i·XZ`.
    pub fn from_label(label: &str) -> Result<Self> {
        let (mut phase, body) = if let Some(rest) = label.strip_prefix("-i") {
            (3, rest)
        } else if let Some(rest) = label.strip_prefix('-') {
            (2, rest)
        } else if let Some(rest) = label.strip_prefix('i') {
            (1, rest)
        } else {
            (0, label)
        };
        let (mut x, mut z) = (Vec::new(), Vec::new());
        for ch in body.chars() {
            let (a, b) = match ch {
                'I' => (0, 0),
                'X' => (1, 0),
                'Z' => (0, 1),
                'Y' => {
                    phase += 1;
                    (1, 1)
                }
                _ => return Err(Error::InvalidOperator(alloc::format!("bad Pauli label {label:?}"))),
            };
            x.push(a);
            z.push(b);
        }
        Self::new(2, phase, &x, &z)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn phase(&self) -> u64 {
        self.phase
    }

    pub fn x(&self) -> &[u64] {
        &self.x
    }

    pub fn z(&self) -> &[u64] {
        &self.z
    }

    /// 4 for qubits, `p` otherwise.
    pub fn phase_modulus(&self) -> u64 {
        if self.p == 2 {
            4
        } else {
            self.p
        }
    }

    /// The scalar in front as a fraction of a full turn.
    pub fn phase_turn(&self) -> Ratio<u64> {
        Ratio::new(self.phase, self.phase_modulus())
    }

    /// True for `ω^k·I`.
    pub fn is_scalar(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.phase == 0
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.n() != other.n() {
            return Err(Error::ShapeMismatch(alloc::format!(
                "P_{} over p = {} against P_{} over p = {}",
                self.n(),
                self.p,
                other.n(),
                other.p
            )));
        }
        Ok(())
    }

    fn dot(a: &[u64], b: &[u64], m: u64) -> u64 {
        a.iter().zip(b).fold(0, |s, (&u, &v)| (s + u * v) % m)
    }

    /// Product using `Z^z X^x = ω^{z·x} X^x Z^z`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let p = self.p;
        let twist = Self::dot(&self.z, &other.x, p);
        let pm = self.phase_modulus();
        let phase = (self.phase + other.phase + if p == 2 { 2 * twist } else { twist }) % pm;
        let add = |a: &[u64], b: &[u64]| a.iter().zip(b).map(|(&u, &v)| (u + v) % p).collect();
        Ok(PauliElement { p, phase, x: add(&self.x, &other.x), z: add(&self.z, &other.z) })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.p, self.n()).expect("p already checked");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same shape");
            }
            base = base.mul(&base).expect("same shape");
            e >>= 1;
        }
        acc
    }

    /// Symplectic test `x_a·z_b − z_a·x_b ≡ 0 (mod p)`.
    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.check_shape(other)?;
        let p = self.p;
        Ok(Self::dot(&self.x, &other.z, p) == Self::dot(&self.z, &other.x, p))
    }

    /// Whether `self^d` is the identity, phase included.
    pub fn order_divides(&self, d: u64) -> bool {
        self.pow(d).is_identity()
    }

    /// `self ⊗ I_{p^extra}`.
    pub fn tensor_identity(&self, extra: usize) -> Self {
        let mut out = self.clone();
        out.x.extend(core::iter::repeat_n(0, extra));
        out.z.extend(core::iter::repeat_n(0, extra));
        out
    }

    pub fn dimension(&self) -> Option<u64> {
        self.p.checked_pow(u32::try_from(self.n()).ok()?)
    }

    /// `det` as a fraction of a full turn. For odd `p` every element has
    /// determinant 1; for `p = 2`, `det(i^a ⊗_j P_j) = i^{a·2^n} ∏_j (−1)^{(x_j+z_j)·2^{n−1}}`.
    pub fn det_turn(&self) -> Ratio<u64> {
        if self.p != 2 {
            return Ratio::new(0, 1);
        }
        // for n >= 2 both exponents are multiples of the full turn
        let weight: u64 = self.x.iter().chain(&self.z).sum();
        let t = match self.n() {
            0 => Ratio::new(self.phase, 4),
            1 => Ratio::new((self.phase + weight) % 2, 2),
            _ => Ratio::new(0, 1),
        };
        Ratio::new(t.numer() % t.denom(), *t.denom())
    }

    /// Dense matrix with the first tensor factor most significant.
    pub fn to_matrix(&self) -> Result<DenseUnitary> {
        let dim = self.dimension().filter(|&m| m <= DENSE_LIMIT).ok_or(Error::BoundExceeded {
            size: (self.p as u128).saturating_pow(self.n() as u32),
            bound: DENSE_LIMIT as u128,
        })? as usize;
        let p = self.p as usize;
        let scalar = root_of_unity(self.phase_turn());
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        let mut digits = vec![0usize; self.n()];
        for col in 0..dim {
            // digits of col, most significant first
            let mut rest = col;
            for k in (0..self.n()).rev() {
                digits[k] = rest % p;
                rest /= p;
            }
            let mut row = 0;
            let mut zj = 0u64;
            for ((&dk, &xk), &zk) in digits.iter().zip(&self.x).zip(&self.z) {
                row = row * p + (dk + xk as usize) % p;
                zj += zk * dk as u64;
            }
            let omega = root_of_unity(Ratio::new(zj % self.p, self.p));
            entries[row * dim + col] = scalar * omega;
        }
        DenseUnitary::new(dim, entries)
    }
}

impl fmt::Debug for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PauliElement {
    /// Qubit elements print as labels (`-iXY`), others as `ω^a X(x) Z(z)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 2 {
            let ys = self.x.iter().zip(&self.z).filter(|(&a, &b)| a == 1 && b == 1).count() as u64;
            let prefix = ["", "i", "-", "-i"][((self.phase + 4 - ys % 4) % 4) as usize];
            let body: String = self
                .x
                .iter()
                .zip(&self.z)
                .map(|(&a, &b)| match (a, b) {
                    (0, 0) => 'I',
                    (1, 0) => 'X',
                    (0, 1) => 'Z',
                    _ => 'Y',
                })
                .collect();
            write!(f, "{prefix}{body}")
        } else {
            write!(f, "w^{} X{:?} Z{:?} (p = {})", self.phase, self.x, self.z, self.p)
        }
    }
}
