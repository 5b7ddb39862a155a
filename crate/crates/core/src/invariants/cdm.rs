use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::cw::{class_of, cohomology, CohomologyClass, Cw2Complex};
use crate::lcs::{realization_witness, LinearConstraintSystem};
use crate::linalg::{CoefficientMap, FinAbGroup, ZdVector};
use crate::operators::{det_cochain, verify_solution, OperatorSolution};
use crate::{Error, Result};

/// The group `C(d,m)(X)` when it is determined, otherwise just its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CdmTotal {
    Exact(FinAbGroup),
    /// `d ∤ m` and `gcd(d, m) > 1`: the extension of the H¹ piece by the H²
    /// piece is not resolved.
    OrderOnly(BigInt),
}

/// The two graded pieces of `C(d,m)(X)` for a 2-complex `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdmGroup {
    pub d: u64,
    pub m: u64,
    pub g: u64,
    /// `H²(X, (Z/d)_m) ≅ H²(X, Z/g)`.
    pub h2_piece: FinAbGroup,
    /// `H¹(X, (Z/d)/m) ≅ H¹(X, Z/g)`.
    pub h1_piece: FinAbGroup,
    pub total: CdmTotal,
}

impl CdmGroup {
    pub fn order(&self) -> BigInt {
        self.h1_piece.order() * self.h2_piece.order()
    }
}

fn check_dm(d: u64, m: u64) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidModulus { min: 2, got: d });
    }
    if m < 1 {
        return Err(Error::InvalidModulus { min: 1, got: m });
    }
    Ok(())
}

/// `C(d,m)(X)` from `0 -> H²(X, (Z/d)_m) -> C(d,m)(X) -> H¹(X, (Z/d)/m) -> 0`,
/// which splits when `d | m`.
pub fn cdm_group(x: &Cw2Complex, d: u64, m: u64) -> Result<CdmGroup> {
    check_dm(d, m)?;
    let g = d.gcd(&m);
    let h2_piece = cohomology(x, g, 2)?;
    let h1_piece = cohomology(x, g, 1)?;
    let total = if m.is_multiple_of(d) || g == 1 {
        CdmTotal::Exact(h1_piece.direct_sum(&h2_piece))
    } else {
        CdmTotal::OrderOnly(h1_piece.order() * h2_piece.order())
    };
    Ok(CdmGroup { d, m, g, h2_piece, h1_piece, total })
}

/// The class `(φ₁; φ₂)` of an operator solution in `C(d,m)(X)`.
///
/// `h2` is `[τ] ∈ H²(X, Z/d)`; `h1` is the class of `π_m ∘ c` in
/// `H¹(X, Z/g)`, where `c` is the determinant cochain of the solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdmClass {
    pub d: u64,
    pub m: u64,
    pub g: u64,
    pub h1: CohomologyClass,
    pub h2: CohomologyClass,
}

impl CdmClass {
    pub fn coordinates(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        (self.h1.coordinates.clone(), self.h2.coordinates.clone())
    }
}

impl fmt::Display for CdmClass {
    /// `(a,b;c)`: H¹ coordinates, then H² coordinates.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| v.iter().map(|c| alloc::format!("{c}")).collect::<Vec<String>>().join(",");
        write!(f, "({};{})", join(&self.h1.coordinates), join(&self.h2.coordinates))
    }
}

fn trivial_class(degree: usize, len: usize) -> CohomologyClass {
    CohomologyClass {
        degree,
        modulus: 1,
        representative: ZdVector::zeros(1, len),
        group: FinAbGroup::trivial(),
        coordinates: Vec::new(),
        is_zero: true,
    }
}

/// Class of a verified solution `t` of `l` over `U(m)`, on a complex `x`
/// realizing `l`.
pub fn class_of_solution(
    x: &Cw2Complex,
    l: &LinearConstraintSystem,
    t: &OperatorSolution,
    m: u64,
) -> Result<CdmClass> {
    let d = l.modulus();
    check_dm(d, m)?;
    if t.dimension() != m {
        return Err(Error::IncompatibleTarget(alloc::format!(
            "solution acts on dimension {}, not {m}",
            t.dimension()
        )));
    }
    if !verify_solution(l, t)?.passed() {
        return Err(Error::UnverifiedSolution);
    }
    let map = realization_witness(x, l)?;
    let g = d.gcd(&m);
    let h2 = class_of(x, d, 2, &l.rhs())?;
    let c = map.vertex_cochain(&det_cochain(t, l)?);
    let h1 = if g == 1 {
        trivial_class(1, c.len())
    } else {
        class_of(x, g, 1, &CoefficientMap::cokernel_projection(d, m)?.apply(&c)?)?
    };
    Ok(CdmClass { d, m, g, h1, h2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcs::{canonical_realization, fixture, hypergraph_of, scalar_solution, FixtureName};
    use crate::operators::{scalar_solution_to_operator, stabilize};
    use alloc::string::ToString;

    #[test]
    fn torus_groups() {
        let t = Cw2Complex::standard_torus();
        let g = cdm_group(&t, 2, 4).unwrap();
        assert_eq!(g.total, CdmTotal::Exact(g.h1_piece.direct_sum(&g.h2_piece)));
        assert_eq!(g.order(), BigInt::from(8));
        assert!(matches!(cdm_group(&t, 3, 4).unwrap().total, CdmTotal::Exact(ref z) if z.is_trivial()));
        let g = cdm_group(&t, 4, 2).unwrap();
        assert_eq!(g.total, CdmTotal::OrderOnly(BigInt::from(8)));
        let s = cdm_group(&Cw2Complex::sphere(), 2, 2).unwrap();
        assert_eq!(s.order(), BigInt::from(2));
    }

    #[test]
    fn mermin_class() {
        let fx = fixture(FixtureName::MerminSquare);
        for n in 2..=4 {
            let t = stabilize(&fx.solution, n - 2).unwrap();
            let class = class_of_solution(&fx.torus, &fx.system, &t, 1 << n).unwrap();
            assert_eq!(class.to_string(), "(0,0;1)");
            assert!(class.h1.is_zero && !class.h2.is_zero);
        }
        assert!(matches!(
            class_of_solution(&fx.torus, &fx.system, &fx.solution, 8),
            Err(Error::IncompatibleTarget(_))
        ));
    }

    #[test]
    fn scalar_class_vanishes() {
        let l = LinearConstraintSystem::new(3, &["a", "b"], &[(alloc::vec![("a", 1), ("b", 1)], 2)]).unwrap();
        let x = canonical_realization(&hypergraph_of(&l).0);
        let t = scalar_solution_to_operator(&l, &scalar_solution(&l).unwrap()).unwrap();
        let class = class_of_solution(&x, &l, &t, 1).unwrap();
        assert!(class.h2.is_zero);
        assert_eq!(class.g, 1);
    }
}
