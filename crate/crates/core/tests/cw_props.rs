use proptest::prelude::*;
use torsionk_core::cw::{brute_force_cohomology, class_of, cohomology, pi1_presentation, Cw2Complex, OneCell, Pi1Status, TwoCell};
use torsionk_core::lcs::{fixture, FixtureName};
use torsionk_core::linalg::ZdVector;
use torsionk_core::Error;

/// A connected complex: a random spanning tree plus extra edges, and faces
/// glued along random closed walks.
#[derive(Clone, Debug)]
struct Blueprint {
    parents: Vec<usize>,
    extra: Vec<(usize, usize)>,
    walks: Vec<Vec<usize>>,
}

fn blueprint() -> impl Strategy<Value = Blueprint> {
    (1usize..=3).prop_flat_map(|n0| {
        let parents = (1..n0).map(|i| 0..i).collect::<Vec<_>>();
        (
            parents,
            proptest::collection::vec((0..n0, 0..n0), 0..=3),
            proptest::collection::vec(proptest::collection::vec(0usize..64, 0..=5), 0..=3),
        )
            .prop_map(|(parents, extra, walks)| Blueprint { parents, extra, walks })
    })
}

fn build(s: &Blueprint) -> Cw2Complex {
    let n0 = s.parents.len() + 1;
    let zero: Vec<String> = (0..n0).map(|i| format!("v{i}")).collect();
    let mut ones = Vec::new();
    for (i, &p) in s.parents.iter().enumerate() {
        ones.push(OneCell { name: format!("t{}", i + 1), source: p, target: i + 1 });
    }
    for (j, &(a, b)) in s.extra.iter().enumerate() {
        ones.push(OneCell { name: format!("e{j}"), source: a, target: b });
    }
    let mut twos = Vec::new();
    for (f, walk) in s.walks.iter().enumerate() {
        // random walk from v0 using the choices, then back to v0 along the tree
        let mut at = 0;
        let mut word = Vec::new();
        for &choice in walk {
            let incident: Vec<(usize, i64, usize)> = ones
                .iter()
                .enumerate()
                .flat_map(|(e, c)| {
                    let mut v = Vec::new();
                    if c.source == at {
                        v.push((e, 1, c.target));
                    }
                    if c.target == at {
                        v.push((e, -1, c.source));
                    }
                    v
                })
                .collect();
            if incident.is_empty() {
                break;
            }
            let (e, n, to) = incident[choice % incident.len()];
            word.push((e, n));
            at = to;
        }
        while at != 0 {
            word.push((at - 1, -1));
            at = s.parents[at - 1];
        }
        twos.push(TwoCell { name: format!("f{f}"), word });
    }
    Cw2Complex::from_indexed(zero, ones, twos).unwrap()
}

fn factors(x: &Cw2Complex, k: u64, deg: usize) -> Vec<String> {
    let g = cohomology(x, k, deg).unwrap();
    g.invariant_factors().iter().map(|f| f.to_string()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn boundary_of_boundary(s in blueprint()) {
        let c = build(&s).chain_data();
        prop_assert!(c.d1.mul(&c.d2).unwrap().is_zero());
    }

    #[test]
    fn cohomology_matches_oracle(s in blueprint(), k in prop::sample::select(vec![2u64, 3, 4, 6])) {
        let x = build(&s);
        for deg in 1..=2 {
            match brute_force_cohomology(&x, k, deg) {
                Ok(g) => {
                    let h = cohomology(&x, k, deg).unwrap();
                    prop_assert_eq!(g.invariant_factors(), h.invariant_factors());
                }
                Err(Error::BoundExceeded { .. }) => {}
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            }
        }
    }

    #[test]
    fn coboundaries_die(s in blueprint(), k in 2u64..=6, seed in proptest::collection::vec(0u64..64, 16)) {
        let x = build(&s);
        let chain = x.chain_data();
        for deg in 1..=2 {
            let n = x.cell_count(deg - 1);
            let a = ZdVector::new(k, seed.iter().cycle().take(n).map(|v| v % k)).unwrap();
            let image = a.apply(&chain.coboundary(deg - 1)).unwrap();
            let class = class_of(&x, k, deg, &image).unwrap();
            prop_assert!(class.is_zero);
            prop_assert!(class.coordinates.iter().all(|c| c == &0.into()));
        }
    }

    #[test]
    fn abelianization_matches_h1(s in blueprint()) {
        // H¹(X; Z/p) = 0 for every p exactly when the abelianization is trivial
        let x = build(&s);
        let p = pi1_presentation(&x);
        let h1_vanishes = [2u64, 3, 5, 7].iter().all(|&k| cohomology(&x, k, 1).unwrap().is_trivial());
        if p.abelianization_trivial() {
            prop_assert!(h1_vanishes);
        }
        if p.status == Pi1Status::Trivial {
            prop_assert!(p.abelianization_trivial());
        }
    }
}

#[test]
fn published_tori_agree() {
    let tori = [
        Cw2Complex::standard_torus(),
        fixture(FixtureName::MerminSquare).torus,
        fixture(FixtureName::MerminStar).torus,
        fixture(FixtureName::MerminRefined).torus,
    ];
    for k in [2, 3, 4, 6] {
        for deg in 1..=2 {
            let want = factors(&tori[0], k, deg);
            for t in &tori[1..] {
                assert_eq!(factors(t, k, deg), want, "k = {k}, degree {deg}");
            }
        }
    }
}

#[test]
fn oracle_on_fixtures() {
    let mut checked = 0;
    for name in FixtureName::ALL {
        let x = fixture(name).torus;
        for k in [2, 3] {
            for deg in 1..=2 {
                match brute_force_cohomology(&x, k, deg) {
                    Ok(g) => {
                        assert_eq!(g.invariant_factors(), cohomology(&x, k, deg).unwrap().invariant_factors());
                        checked += 1;
                    }
                    Err(Error::BoundExceeded { .. }) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    assert!(checked >= 4);
}

#[test]
fn square_torus_column_face() {
    let fx = fixture(FixtureName::MerminSquare);
    let d2 = fx.torus.chain_data().d2;
    let col = fx.torus.two_cells().iter().position(|c| c.name == "c3").unwrap();
    for (e, cell) in fx.torus.one_cells().iter().enumerate() {
        let want = match cell.name.as_str() {
            "YY" | "ZZ" => 1,
            "XX" => -1,
            _ => 0,
        };
        assert_eq!(d2[(e, col)], want.into(), "{}", cell.name);
    }
}
