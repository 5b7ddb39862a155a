use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::linalg::{kernel_mod, quotient_group, FinAbGroup, IntMatrix};
use crate::{Error, Result};

/// Largest degree answered for `ko_sym`.
pub const KOSYM_MAX_DEGREE: u32 = 1023;

/// The spectra whose low homotopy groups are tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpectrumId {
    /// `kμ_d`.
    KMuD(u64),
    /// `C(d, m)`.
    Cdm(u64, u64),
    /// Real symmetric K-theory `ko ∧ Bμ_2`.
    KoSym,
    /// `C_ℝ(2, m)`; zero in degrees 1 and 2 for odd `m`.
    CReal(u64),
}

impl fmt::Display for SpectrumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumId::KMuD(d) => write!(f, "kmu_{d}"),
            SpectrumId::Cdm(d, m) => write!(f, "C({d},{m})"),
            SpectrumId::KoSym => f.write_str("ko_sym"),
            SpectrumId::CReal(m) => write!(f, "C_R(2,{m})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomotopyGroupResult {
    Exact(FinAbGroup),
    /// Only an extension `0 -> A -> π -> B -> 0` is known.
    UpToExtension {
        order: BigInt,
        /// The subgroup and quotient `A`, `B`.
        factors: Vec<FinAbGroup>,
        /// Every group compatible with the extension.
        candidates: Vec<FinAbGroup>,
    },
}

impl HomotopyGroupResult {
    pub fn order(&self) -> BigInt {
        match self {
            HomotopyGroupResult::Exact(g) => g.order(),
            HomotopyGroupResult::UpToExtension { order, .. } => order.clone(),
        }
    }

    pub fn exact(&self) -> Option<&FinAbGroup> {
        match self {
            HomotopyGroupResult::Exact(g) => Some(g),
            HomotopyGroupResult::UpToExtension { .. } => None,
        }
    }
}

/// `×m : Z/d -> Z/d` as a 1×1 matrix.
fn times(m: u64) -> IntMatrix {
    IntMatrix::from_rows(&[[m as i64]])
}

/// `π_r` of a spectrum.
///
/// For `C(d, m)` the groups come from `0 -> π₂ -> Z/d -×m-> Z/d -> π₁ -> 0`
/// and are computed as the kernel and cokernel of `×m`.
pub fn homotopy_group(s: SpectrumId, r: u32) -> Result<HomotopyGroupResult> {
    let unsupported = || Error::UnsupportedDegree { spectrum: alloc::format!("{s}"), degree: r };
    let exact = |g| Ok(HomotopyGroupResult::Exact(g));
    match s {
        SpectrumId::KMuD(d) | SpectrumId::Cdm(d, _) if d < 2 => Err(Error::InvalidModulus { min: 2, got: d }),
        SpectrumId::Cdm(_, 0) | SpectrumId::CReal(0) => Err(Error::InvalidModulus { min: 1, got: 0 }),
        SpectrumId::KMuD(d) => match r {
            0 | 2 => exact(FinAbGroup::trivial()),
            1 => exact(FinAbGroup::cyclic(d)),
            _ => Err(unsupported()),
        },
        SpectrumId::Cdm(d, m) => match r {
            0 => exact(FinAbGroup::trivial()),
            1 => exact(quotient_group(1, d, &times(m))?),
            2 => exact(kernel_mod(&times(m), d)?),
            _ => Err(unsupported()),
        },
        SpectrumId::KoSym => {
            if r > KOSYM_MAX_DEGREE {
                return Err(unsupported());
            }
            let k = r / 8;
            let two_power = |e: u32| FinAbGroup::from_orders(&[BigInt::one() << e]);
            exact(match r % 8 {
                1 | 2 => FinAbGroup::cyclic(2),
                3 => two_power(4 * k + 3),
                7 => two_power(4 * k + 4),
                _ => FinAbGroup::trivial(),
            })
        }
        SpectrumId::CReal(m) => match r {
            1 | 2 if m % 2 == 1 => exact(FinAbGroup::trivial()),
            1 => exact(FinAbGroup::cyclic(2)),
            2 => Ok(HomotopyGroupResult::UpToExtension {
                order: BigInt::from(4),
                factors: vec![FinAbGroup::cyclic(2), FinAbGroup::cyclic(2)],
                candidates: vec![FinAbGroup::cyclic(4), FinAbGroup::cyclic(2).direct_sum(&FinAbGroup::cyclic(2))],
            }),
            _ => Err(unsupported()),
        },
    }
}
