//! Invariants of systems and their realizations: homotopy groups of the
//! spectra involved, `C(d,m)`-cohomology groups and classes of operator
//! solutions, and the resulting no-go certificates.

mod cdm;
mod certificates;
mod spectrum;

pub use cdm::{cdm_group, class_of_solution, CdmClass, CdmGroup, CdmTotal};
pub use certificates::{certificates, Certificate, CertificateKind, Fact};
pub use spectrum::{homotopy_group, HomotopyGroupResult, SpectrumId, KOSYM_MAX_DEGREE};
