use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use super::cdm::{cdm_group, CdmTotal};
use crate::cw::{class_of, cohomology, pi1_presentation, Cw2Complex, Pi1Status};
use crate::lcs::{realization_witness, scalar_solution, LinearConstraintSystem};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    /// (a) `H²(X, Z/gcd(d,m)) = 0`: an operator solution over `U(m)` forces a scalar one.
    VanishingH2,
    /// (b) `gcd(d, m) = 1`: `C(d,m)(X) = 0`, so (a) applies.
    Coprime,
    /// (c) `π₁(X) = 1` and `[τ] ≠ 0`: no operator solution over any `U(m)`.
    SimplyConnected,
}

impl CertificateKind {
    pub fn label(self) -> &'static str {
        match self {
            CertificateKind::VanishingH2 => "a",
            CertificateKind::Coprime => "b",
            CertificateKind::SimplyConnected => "c",
        }
    }
}

/// One premise or consequence, and whether it was computed here or only cited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub statement: String,
    pub holds: bool,
    pub machine_checked: bool,
}

impl Fact {
    fn checked(statement: String, holds: bool) -> Self {
        Fact { statement, holds, machine_checked: true }
    }

    fn cited(statement: String) -> Self {
        Fact { statement, holds: true, machine_checked: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub conclusion: String,
    pub facts: Vec<Fact>,
}

/// Every certificate whose premises hold for `l` realized by `x` and target
/// dimension `m`. Nothing fires if `x` does not realize `l`.
pub fn certificates(x: &Cw2Complex, l: &LinearConstraintSystem, m: u64) -> Result<Vec<Certificate>> {
    let d = l.modulus();
    let realizes = Fact::checked(alloc::format!("X realizes the system over Z/{d}"), realization_witness(x, l).is_ok());
    if !realizes.holds {
        return Ok(Vec::new());
    }
    let g = d.gcd(&m);
    let has_scalar = scalar_solution(l).is_some();
    let scalar_fact = Fact::checked(String::from("the system has a scalar solution"), has_scalar);
    let mut out = Vec::new();

    let h2 = cohomology(x, g, 2)?;
    let h2_vanishes = Fact::checked(alloc::format!("H^2(X, Z/{g}) = {h2}"), h2.is_trivial());
    if h2_vanishes.holds {
        out.push(Certificate {
            kind: CertificateKind::VanishingH2,
            conclusion: alloc::format!("any operator solution over U({m}) implies a scalar solution"),
            facts: alloc::vec![
                realizes.clone(),
                h2_vanishes,
                Fact::cited(String::from("cl(f) lies in the image of H^2(X, (Z/d)_m)")),
                scalar_fact.clone(),
            ],
        });
    }

    if g == 1 {
        let total = cdm_group(x, d, m)?.total;
        let collapses = matches!(total, CdmTotal::Exact(ref t) if t.is_trivial());
        out.push(Certificate {
            kind: CertificateKind::Coprime,
            conclusion: alloc::format!("C({d},{m})(X) = 0, so an operator solution over U({m}) implies a scalar solution"),
            facts: alloc::vec![
                realizes.clone(),
                Fact::checked(alloc::format!("gcd({d}, {m}) = 1"), true),
                Fact::checked(alloc::format!("C({d},{m})(X) = 0"), collapses),
                scalar_fact.clone(),
            ],
        });
    }

    let pi1 = pi1_presentation(x);
    let tau = class_of(x, d, 2, &l.rhs())?;
    if pi1.status == Pi1Status::Trivial && !tau.is_zero {
        out.push(Certificate {
            kind: CertificateKind::SimplyConnected,
            conclusion: String::from("no operator solution over U(m) for any m >= 1"),
            facts: alloc::vec![
                realizes,
                Fact::checked(String::from("pi_1(X) presentation collapses to the trivial group"), true),
                Fact::checked(String::from("[tau] != 0 in H^2(X, Z/d)"), true),
                scalar_fact,
            ],
        });
    }
    Ok(out)
}
