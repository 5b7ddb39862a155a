use alloc::string::String;
use alloc::vec::Vec;

use super::{Hypergraph, LinearConstraintSystem};
use crate::cw::{Cw2Complex, OneCell, TwoCell};
use crate::linalg::ZdVector;
use crate::{Error, Result};

/// The canonical realization: one 0-cell, a loop per vertex, and a disk per
/// edge attached along `∏ v^{ε_e(v)}` in ascending vertex order.
pub fn canonical_realization(h: &Hypergraph) -> Cw2Complex {
    let ones = h
        .vertices()
        .iter()
        .map(|v| OneCell { name: v.clone(), source: 0, target: 0 })
        .collect();
    let twos = h
        .edges()
        .iter()
        .enumerate()
        .map(|(k, e)| TwoCell {
            name: alloc::format!("e{k}"),
            word: e.iter().map(|(&v, &w)| (v, w as i64)).collect(),
        })
        .collect();
    let x = Cw2Complex::from_indexed(alloc::vec![String::from("o")], ones, twos).expect("loops at one point");
    let d = h.modulus();
    assert_eq!(x.chain_data().d2.reduce_mod(d), h.boundary().reduce_mod(d), "realization witness failed");
    x
}

/// How a complex realizes a system: 1-cells are matched to variables by
/// name and 2-cells to constraints by position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationMap {
    /// `variable_cell[i]` is the 1-cell carrying variable `i`.
    pub variable_cell: Vec<usize>,
}

impl RealizationMap {
    /// Moves a cochain on the variables onto the 1-cells of the complex.
    pub fn vertex_cochain(&self, c: &ZdVector) -> ZdVector {
        let mut out = alloc::vec![0; c.len()];
        for (i, &cell) in self.variable_cell.iter().enumerate() {
            out[cell] = c.coords()[i];
        }
        ZdVector::new(c.modulus(), out).expect("modulus already valid")
    }
}

/// Checks that `x` is a topological realization of `l`: the cellular `∂₂`
/// reduced mod `d` equals the hypergraph boundary once 1-cells are matched
/// to variables by name and 2-cells to constraints by position.
pub fn realization_witness(x: &Cw2Complex, l: &LinearConstraintSystem) -> Result<RealizationMap> {
    let (c, r, d) = (l.variables().len(), l.constraints().len(), l.modulus());
    if x.cell_count(1) != c || x.cell_count(2) != r {
        return Err(Error::RealizationMismatch(alloc::format!(
            "complex has {} 1-cells and {} 2-cells, system has {c} variables and {r} constraints",
            x.cell_count(1),
            x.cell_count(2)
        )));
    }
    let variable_cell = l
        .variables()
        .iter()
        .map(|v| {
            x.one_cell_index(v)
                .ok_or_else(|| Error::RealizationMismatch(alloc::format!("no 1-cell named {v}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let d2 = x.chain_data().d2.reduce_mod(d);
    let m = l.matrix();
    for k in 0..r {
        for (i, &cell) in variable_cell.iter().enumerate() {
            if d2[(cell, k)] != m[(k, i)] {
                return Err(Error::RealizationMismatch(alloc::format!(
                    "2-cell {} and constraint {k} disagree on {}",
                    x.two_cells()[k].name,
                    l.variables()[i]
                )));
            }
        }
    }
    Ok(RealizationMap { variable_cell })
}
