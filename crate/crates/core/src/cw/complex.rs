use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::linalg::IntMatrix;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneCell {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A 2-cell glued along a closed edge loop `∏ e_i^{n_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCell {
    pub name: String,
    pub word: Vec<(usize, i64)>,
}

/// A connected 2-dimensional CW complex given combinatorially.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cw2Complex {
    zero_cells: Vec<String>,
    one_cells: Vec<OneCell>,
    two_cells: Vec<TwoCell>,
}

/// Cellular boundary matrices `C_2 -∂₂-> C_1 -∂₁-> C_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainData {
    /// One column per 2-cell: exponent sum of each 1-cell in the attaching word.
    pub d2: IntMatrix,
    /// One column per 1-cell: `target - source`.
    pub d1: IntMatrix,
}

impl Cw2Complex {
    /// Builds a complex from named cells, checking that every reference
    /// resolves, every attaching word is a closed loop, and the 1-skeleton
    /// is connected.
    pub fn new<S: AsRef<str>>(
        zero_cells: &[S],
        one_cells: &[(S, S, S)],
        two_cells: &[(S, Vec<(S, i64)>)],
    ) -> Result<Self> {
        let zero: Vec<String> = zero_cells.iter().map(|s| s.as_ref().to_string()).collect();
        let zero_index = index_names(&zero, "0-cell")?;
        let mut ones = Vec::with_capacity(one_cells.len());
        for (name, src, tgt) in one_cells {
            let lookup = |v: &S| {
                zero_index.get(v.as_ref()).copied().ok_or_else(|| {
                    Error::InvalidComplex(alloc::format!(
                        "1-cell {} references unknown 0-cell {}",
                        name.as_ref(),
                        v.as_ref()
                    ))
                })
            };
            ones.push(OneCell { name: name.as_ref().to_string(), source: lookup(src)?, target: lookup(tgt)? });
        }
        let one_names: Vec<String> = ones.iter().map(|c| c.name.clone()).collect();
        let one_index = index_names(&one_names, "1-cell")?;
        let mut twos = Vec::with_capacity(two_cells.len());
        for (name, word) in two_cells {
            let mut w = Vec::with_capacity(word.len());
            for (e, n) in word {
                let idx = one_index.get(e.as_ref()).copied().ok_or_else(|| {
                    Error::InvalidComplex(alloc::format!(
                        "2-cell {} references unknown 1-cell {}",
                        name.as_ref(),
                        e.as_ref()
                    ))
                })?;
                w.push((idx, *n));
            }
            twos.push(TwoCell { name: name.as_ref().to_string(), word: w });
        }
        Self::from_indexed(zero, ones, twos)
    }

    /// Same checks as [`Cw2Complex::new`] on index-based cells.
    pub fn from_indexed(
        zero_cells: Vec<String>,
        one_cells: Vec<OneCell>,
        two_cells: Vec<TwoCell>,
    ) -> Result<Self> {
        if zero_cells.is_empty() {
            return Err(Error::InvalidComplex("at least one 0-cell is required".into()));
        }
        index_names(&zero_cells, "0-cell")?;
        let names: Vec<String> = one_cells.iter().map(|c| c.name.clone()).collect();
        index_names(&names, "1-cell")?;
        let names: Vec<String> = two_cells.iter().map(|c| c.name.clone()).collect();
        index_names(&names, "2-cell")?;
        for c in &one_cells {
            if c.source >= zero_cells.len() || c.target >= zero_cells.len() {
                return Err(Error::InvalidComplex(alloc::format!("1-cell {} has a dangling endpoint", c.name)));
            }
        }
        let x = Cw2Complex { zero_cells, one_cells, two_cells };
        for cell in &x.two_cells {
            x.check_closed(cell)?;
        }
        if !x.is_connected() {
            return Err(Error::InvalidComplex("complex is not connected".into()));
        }
        Ok(x)
    }

    fn check_closed(&self, cell: &TwoCell) -> Result<()> {
        let err = |why: &str| Err(Error::InvalidComplex(alloc::format!("attaching word of {}: {why}", cell.name)));
        let mut start = None;
        let mut at = None;
        for &(e, n) in &cell.word {
            let Some(one) = self.one_cells.get(e) else {
                return err("unknown 1-cell");
            };
            if n == 0 {
                continue;
            }
            if n.unsigned_abs() > 1 && one.source != one.target {
                return err("a power above 1 of a non-loop is not a path");
            }
            let (from, to) = if n > 0 { (one.source, one.target) } else { (one.target, one.source) };
            match at {
                Some(v) if v != from => return err("consecutive 1-cells do not chain"),
                None => start = Some(from),
                _ => {}
            }
            at = Some(to);
        }
        if start != at {
            return err("loop is not closed");
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.zero_cells.len()];
        let adj = self.adjacency();
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(_, w) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Undirected adjacency `vertex -> [(1-cell, neighbour)]` in cell order.
    pub(crate) fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.zero_cells.len()];
        for (i, c) in self.one_cells.iter().enumerate() {
            adj[c.source].push((i, c.target));
            if c.source != c.target {
                adj[c.target].push((i, c.source));
            }
        }
        adj
    }

    pub fn zero_cells(&self) -> &[String] {
        &self.zero_cells
    }

    pub fn one_cells(&self) -> &[OneCell] {
        &self.one_cells
    }

    pub fn two_cells(&self) -> &[TwoCell] {
        &self.two_cells
    }

    /// Number of cells in degree 0, 1 or 2.
    pub fn cell_count(&self, degree: usize) -> usize {
        match degree {
            0 => self.zero_cells.len(),
            1 => self.one_cells.len(),
            2 => self.two_cells.len(),
            _ => 0,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.zero_cells.len() as i64 - self.one_cells.len() as i64 + self.two_cells.len() as i64
    }

    pub fn one_cell_index(&self, name: &str) -> Option<usize> {
        self.one_cells.iter().position(|c| c.name == name)
    }

    pub fn chain_data(&self) -> ChainData {
        let (n0, n1, n2) = (self.zero_cells.len(), self.one_cells.len(), self.two_cells.len());
        let mut d2 = IntMatrix::zeros(n1, n2);
        for (j, cell) in self.two_cells.iter().enumerate() {
            for &(e, n) in &cell.word {
                d2[(e, j)] += BigInt::from(n);
            }
        }
        let mut d1 = IntMatrix::zeros(n0, n1);
        for (j, c) in self.one_cells.iter().enumerate() {
            d1[(c.target, j)] += 1;
            d1[(c.source, j)] -= 1;
        }
        let chain = ChainData { d2, d1 };
        debug_assert!(chain.d1.mul(&chain.d2).unwrap().is_zero());
        chain
    }

    // Standard small complexes used throughout tests and fixtures.

    /// One 0-cell, 1-cells `x`, `z`, one 2-cell `x z x⁻¹ z⁻¹`.
    pub fn standard_torus() -> Self {
        Self::new(&["o"], &[("x", "o", "o"), ("z", "o", "o")], &[(
            "t",
            vec![("x", 1), ("z", 1), ("x", -1), ("z", -1)],
        )])
        .expect("torus is valid")
    }

    /// One 0-cell and one 2-cell with the empty attaching word.
    pub fn sphere() -> Self {
        Self::new::<&str>(&["o"], &[], &[("s", vec![])]).expect("sphere is valid")
    }

    /// `n` circles at one point, no 2-cells.
    pub fn bouquet(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| alloc::format!("a{i}")).collect();
        let ones: Vec<(&str, &str, &str)> = names.iter().map(|s| (s.as_str(), "o", "o")).collect();
        Self::new(&["o"], &ones, &[]).expect("bouquet is valid")
    }
}

fn index_names(names: &[String], kind: &str) -> Result<BTreeMap<String, usize>> {
    let mut idx = BTreeMap::new();
    for (i, n) in names.iter().enumerate() {
        if idx.insert(n.clone(), i).is_some() {
            return Err(Error::InvalidComplex(alloc::format!("duplicate {kind} name {n}")));
        }
    }
    Ok(idx)
}
