use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{hypergraph_of, realization_witness, Hypergraph, LinearConstraintSystem};
use crate::cw::Cw2Complex;
use crate::linalg::ZdVector;
use crate::operators::OperatorSolution;
use crate::{Error, Result};

/// The three published examples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FixtureName {
    MerminSquare,
    MerminStar,
    MerminRefined,
}

impl FixtureName {
    pub const ALL: [FixtureName; 3] = [FixtureName::MerminSquare, FixtureName::MerminStar, FixtureName::MerminRefined];

    pub fn as_str(self) -> &'static str {
        match self {
            FixtureName::MerminSquare => "mermin_square",
            FixtureName::MerminStar => "mermin_star",
            FixtureName::MerminRefined => "mermin_refined",
        }
    }
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FixtureName {
    type Err = Error;

    /// Accepts `mermin_square` and `mermin-square` alike.
    fn from_str(s: &str) -> Result<Self> {
        let canon = s.replace('-', "_");
        FixtureName::ALL
            .into_iter()
            .find(|f| f.as_str() == canon)
            .ok_or_else(|| Error::UnknownFixture(s.into()))
    }
}

/// A system with its hypergraph, `τ`, a torus realizing it and a Pauli
/// operator solution.
#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub name: FixtureName,
    pub system: LinearConstraintSystem,
    pub hypergraph: Hypergraph,
    pub tau: ZdVector,
    pub torus: Cw2Complex,
    pub solution: OperatorSolution,
}

pub fn builtin_fixture(name: &str) -> Result<Fixture> {
    Ok(fixture(name.parse()?))
}

pub fn fixture(name: FixtureName) -> Fixture {
    let (constraints, zero_cells, one_cells, two_cells) = match name {
        FixtureName::MerminSquare => (SQUARE, SQUARE_ZERO, SQUARE_ONE, SQUARE_TWO),
        FixtureName::MerminStar => (STAR, STAR_ZERO, STAR_ONE, STAR_TWO),
        FixtureName::MerminRefined => (REFINED, REFINED_ZERO, REFINED_ONE, REFINED_TWO),
    };
    // every variable is named by its operator, and the torus 1-cells by variable
    let variables: Vec<&str> = one_cells.iter().map(|c| c.0).collect();
    let rows: Vec<(Vec<(&str, i64)>, i64)> =
        constraints.iter().map(|(vars, rhs)| (vars.iter().map(|&v| (v, 1)).collect(), *rhs)).collect();
    let system = LinearConstraintSystem::new(2, &variables, &rows).expect("fixture system is valid");
    let (hypergraph, tau) = hypergraph_of(&system);
    let faces: Vec<(&str, Vec<(&str, i64)>)> = two_cells.iter().map(|(n, w)| (*n, w.to_vec())).collect();
    let torus = Cw2Complex::new(zero_cells, one_cells, &faces).expect("fixture torus is valid");
    realization_witness(&torus, &system).expect("fixture torus realizes its system");
    let labels: Vec<(&str, &str)> = variables.iter().map(|&v| (v, v)).collect();
    let solution = OperatorSolution::from_labels(&labels).expect("fixture labels parse");
    Fixture { name, system, hypergraph, tau, torus, solution }
}

type Rows = &'static [(&'static [&'static str], i64)];
type Edges = &'static [(&'static str, &'static str, &'static str)];
type Faces = &'static [(&'static str, &'static [(&'static str, i64)])];

// Rows of the square first, then columns; only the right-most column has product −I.
const SQUARE: Rows = &[
    (&["XI", "IX", "XX"], 0),
    (&["IZ", "ZI", "ZZ"], 0),
    (&["XZ", "ZX", "YY"], 0),
    (&["XI", "IZ", "XZ"], 0),
    (&["IX", "ZI", "ZX"], 0),
    (&["XX", "ZZ", "YY"], 1),
];
const SQUARE_ZERO: &[&str] = &["o", "p", "q"];
const SQUARE_ONE: Edges = &[
    ("XI", "o", "o"),
    ("IX", "o", "p"),
    ("XX", "p", "o"),
    ("IZ", "q", "o"),
    ("ZI", "o", "o"),
    ("ZZ", "q", "o"),
    ("XZ", "o", "q"),
    ("ZX", "o", "p"),
    ("YY", "p", "q"),
];
const SQUARE_TWO: Faces = &[
    ("r1", &[("IX", 1), ("XX", 1), ("XI", -1)]),
    ("r2", &[("IZ", 1), ("ZI", 1), ("ZZ", -1)]),
    ("r3", &[("XZ", 1), ("YY", -1), ("ZX", -1)]),
    ("c1", &[("XI", 1), ("IZ", -1), ("XZ", -1)]),
    ("c2", &[("ZX", 1), ("IX", -1), ("ZI", -1)]),
    ("c3", &[("YY", 1), ("ZZ", 1), ("XX", -1)]),
];

// Four outer lines of the star, then the horizontal line with product −I.
const STAR: Rows = &[
    (&["IYI", "XII", "XYY", "IIY"], 0),
    (&["IXI", "YII", "YXY", "IIY"], 0),
    (&["IYI", "IIX", "YII", "YYX"], 0),
    (&["IXI", "IIX", "XII", "XXX"], 0),
    (&["XXX", "XYY", "YXY", "YYX"], 1),
];
const STAR_ZERO: &[&str] = &["o", "a", "b", "c", "d"];
const STAR_ONE: Edges = &[
    ("IYI", "o", "o"),
    ("IXI", "o", "o"),
    ("XXX", "d", "c"),
    ("YYX", "b", "c"),
    ("XYY", "a", "d"),
    ("YXY", "a", "b"),
    ("XII", "o", "d"),
    ("YII", "o", "b"),
    ("IIY", "o", "a"),
    ("IIX", "o", "c"),
];
const STAR_TWO: Faces = &[
    ("left", &[("IYI", -1), ("IIY", 1), ("XYY", 1), ("XII", -1)]),
    ("bottom", &[("IXI", 1), ("YII", 1), ("YXY", -1), ("IIY", -1)]),
    ("right", &[("IYI", 1), ("IIX", 1), ("YYX", -1), ("YII", -1)]),
    ("top", &[("IXI", -1), ("XII", 1), ("XXX", 1), ("IIX", -1)]),
    ("inner", &[("YXY", 1), ("YYX", 1), ("XXX", -1), ("XYY", -1)]),
];

// Each face of the refined torus is a constraint on the operators along its boundary.
const REFINED: Rows = &[
    (&["YXY", "ZZI", "XYY"], 0),
    (&["YYX", "XXX", "ZZI"], 1),
    (&["XYI", "XII", "IYI"], 0),
    (&["IIY", "XYY", "XYI"], 0),
    (&["IXI", "YII", "YXI"], 0),
    (&["YXI", "YXY", "IIY"], 0),
    (&["XII", "XXI", "IXI"], 0),
    (&["XXX", "IIX", "XXI"], 0),
    (&["IYI", "YYI", "YII"], 0),
    (&["YYI", "IIX", "YYX"], 0),
];
const REFINED_ZERO: &[&str] = STAR_ZERO;
const REFINED_ONE: Edges = &[
    ("IXI", "o", "o"),
    ("IYI", "o", "o"),
    ("XII", "o", "d"),
    ("YII", "o", "b"),
    ("IIX", "o", "c"),
    ("IIY", "o", "a"),
    ("XYI", "o", "d"),
    ("YXI", "o", "b"),
    ("YXY", "a", "b"),
    ("YYX", "b", "c"),
    ("XXX", "d", "c"),
    ("XYY", "a", "d"),
    ("ZZI", "d", "b"),
    ("XXI", "d", "o"),
    ("YYI", "b", "o"),
];
const REFINED_TWO: Faces = &[
    ("f1", &[("YXY", 1), ("ZZI", -1), ("XYY", -1)]),
    ("f2", &[("YYX", 1), ("XXX", -1), ("ZZI", 1)]),
    ("f3", &[("XYI", 1), ("XII", -1), ("IYI", -1)]),
    ("f4", &[("IIY", 1), ("XYY", 1), ("XYI", -1)]),
    ("f5", &[("IXI", 1), ("YII", 1), ("YXI", -1)]),
    ("f6", &[("YXI", 1), ("YXY", -1), ("IIY", -1)]),
    ("f7", &[("XII", 1), ("XXI", 1), ("IXI", -1)]),
    ("f8", &[("XXX", 1), ("IIX", -1), ("XXI", -1)]),
    ("f9", &[("IYI", 1), ("YYI", -1), ("YII", -1)]),
    ("f10", &[("YYI", 1), ("IIX", 1), ("YYX", -1)]),
];
