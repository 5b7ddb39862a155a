use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use torsionk_core::linalg::{
    coefficient_map, kernel_mod, quotient_group, smith_normal_form, solve_mod, CoefficientMap, IntMatrix, ZdVector,
};

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            IntMatrix::from_data(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

/// All vectors of `(Z/d)^n`, first coordinate slowest.
fn all_vectors(d: u64, n: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (0..d).map(move |a| [v.clone(), vec![a]].concat())).collect();
    }
    out
}

fn times_mod(a: &IntMatrix, x: &[u64], d: u64) -> Vec<u64> {
    let dd = BigInt::from(d);
    (0..a.rows())
        .map(|i| {
            let s: BigInt = a.row(i).iter().zip(x).map(|(e, &v)| e * BigInt::from(v)).sum();
            u64::try_from(s.mod_floor(&dd)).unwrap()
        })
        .collect()
}

fn small_system() -> impl Strategy<Value = (IntMatrix, u64, Vec<u64>)> {
    (2u64..=6, 1usize..=4, 0usize..=4).prop_flat_map(|(d, r, c)| {
        (
            proptest::collection::vec(-8i64..=8, r * c),
            proptest::collection::vec(0..d, r),
        )
            .prop_map(move |(a, b)| {
                (IntMatrix::from_data(r, c, a.into_iter().map(BigInt::from).collect()).unwrap(), d, b)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1200))]

    #[test]
    fn smith_decomposition(a in matrix(8, 20)) {
        let snf = smith_normal_form(&a);
        prop_assert_eq!(snf.u.mul(&snf.s).unwrap().mul(&snf.v).unwrap(), a.clone());
        prop_assert!(snf.u.determinant().unwrap().abs().is_one());
        prop_assert!(snf.v.determinant().unwrap().abs().is_one());
        prop_assert_eq!(snf.u.mul(&snf.u_inv).unwrap(), IntMatrix::identity(a.rows()));
        prop_assert_eq!(snf.v.mul(&snf.v_inv).unwrap(), IntMatrix::identity(a.cols()));
        let diag = snf.diagonal();
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j {
                    prop_assert!(snf.s[(i, j)].is_zero());
                }
            }
        }
        prop_assert!(diag.iter().all(|s| !s.is_negative()));
        for w in diag.windows(2) {
            // s_i | s_{i+1}, which also forces zeros to come last
            let divides = if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
            prop_assert!(divides);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solve_mod_matches_enumeration((a, d, b) in small_system()) {
        let rhs = ZdVector::new(d, b.clone()).unwrap();
        let solutions: Vec<Vec<u64>> =
            all_vectors(d, a.cols()).into_iter().filter(|x| times_mod(&a, x, d) == b).collect();
        match solve_mod(&a, &rhs, d).unwrap() {
            Some(x) => prop_assert!(solutions.contains(&x.coords().to_vec())),
            None => prop_assert!(solutions.is_empty()),
        }
    }

    #[test]
    fn kernel_order_matches_enumeration((a, d, _) in small_system()) {
        let count = all_vectors(d, a.cols()).into_iter().filter(|x| times_mod(&a, x, d).iter().all(|&v| v == 0)).count();
        let g = kernel_mod(&a, d).unwrap();
        prop_assert_eq!(g.order(), BigInt::from(count));
        for gen in g.generators().unwrap() {
            prop_assert!(gen.apply(&a).unwrap().is_zero());
        }
    }

    #[test]
    fn quotient_order_matches_enumeration((a, d, _) in small_system()) {
        // image of the columns in (Z/d)^rows
        let images: std::collections::BTreeSet<Vec<u64>> =
            all_vectors(d, a.cols()).into_iter().map(|x| times_mod(&a, &x, d)).collect();
        let total = (d as usize).pow(a.rows() as u32);
        let g = quotient_group(a.rows(), d, &a).unwrap();
        prop_assert_eq!(g.order(), BigInt::from(total / images.len()));
    }
}

#[test]
fn spec_examples() {
    let a = IntMatrix::from_rows(&[[2, 4], [6, 8]]);
    let diag = smith_normal_form(&a).diagonal();
    assert_eq!(diag, [BigInt::from(2), BigInt::from(4)]);
    assert!(solve_mod(&IntMatrix::from_rows(&[[2]]), &ZdVector::new(4, [1]).unwrap(), 4).unwrap().is_none());
    let g = quotient_group(1, 4, &IntMatrix::from_rows(&[[2]])).unwrap();
    assert_eq!(g.invariant_factors(), [BigInt::from(2)]);
    assert_eq!(quotient_group(2, 3, &IntMatrix::zeros(2, 0)).unwrap().to_string(), "Z/3 + Z/3");
    assert!(quotient_group(0, 3, &IntMatrix::zeros(0, 0)).unwrap().is_trivial());
}

#[test]
fn four_term_sequence_is_exact() {
    for d in 2..=24u64 {
        for m in 1..=24u64 {
            let g = d.gcd(&m);
            let times = CoefficientMap::times(d, m).unwrap();
            assert!(CoefficientMap::cokernel_projection(d, m).unwrap().after(&times).unwrap().is_zero());
            assert!(times.after(&CoefficientMap::torsion_inclusion(d, m).unwrap()).unwrap().is_zero());
            assert_eq!(CoefficientMap::torsion_inclusion(d, m).unwrap().src(), g);
        }
    }
    assert!(coefficient_map(2, 4, 1).is_err());
    assert_eq!(coefficient_map(4, 2, 1).unwrap().apply_residue(3), 1);
}
