use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `A = U·S·V` with `U`, `V` unimodular and `S` diagonal in Smith form.
///
/// The inverses of both transforms are kept as well; every consumer in this
/// crate needs at least one of them and recovering them afterwards would mean
/// inverting over the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries `s_1 | s_2 | ...`, length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|v| !v.is_zero()).count()
    }
}

/// Smith normal form over `Z`.
///
/// Pivots are chosen as the entry of least absolute value in the active
/// block; row and column reductions by truncated division then strictly
/// shrink the pivot until it divides its row, its column and finally the
/// whole remaining block.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut s = a.clone();
    // P·A·Q = S, tracked together with P^-1 and Q^-1.
    let mut p = IntMatrix::identity(rows);
    let mut p_inv = IntMatrix::identity(rows);
    let mut q = IntMatrix::identity(cols);
    let mut q_inv = IntMatrix::identity(cols);

    let row_add = |s: &mut IntMatrix, p: &mut IntMatrix, p_inv: &mut IntMatrix, dst, src, c: &BigInt| {
        s.add_row_multiple(dst, src, c);
        p.add_row_multiple(dst, src, c);
        p_inv.add_col_multiple(src, dst, &-c);
    };
    let col_add = |s: &mut IntMatrix, q: &mut IntMatrix, q_inv: &mut IntMatrix, dst, src, c: &BigInt| {
        s.add_col_multiple(dst, src, c);
        q.add_col_multiple(dst, src, c);
        q_inv.add_row_multiple(src, dst, &-c);
    };

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_abs_entry(&s, t) else {
                // active block is zero; remaining diagonal stays zero
                return finish(s, p, p_inv, q, q_inv);
            };
            s.swap_rows(t, pi);
            p.swap_rows(t, pi);
            p_inv.swap_cols(t, pi);
            s.swap_cols(t, pj);
            q.swap_cols(t, pj);
            q_inv.swap_rows(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let f = &s[(i, t)] / &s[(t, t)];
                row_add(&mut s, &mut p, &mut p_inv, i, t, &-f);
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let f = &s[(t, j)] / &s[(t, t)];
                col_add(&mut s, &mut q, &mut q_inv, j, t, &-f);
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !(&s[(i, j)] % &s[(t, t)]).is_zero()));
            match offender {
                Some(i) => row_add(&mut s, &mut p, &mut p_inv, t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            p.negate_row(t);
            p_inv.negate_col(t);
        }
    }
    finish(s, p, p_inv, q, q_inv)
}

fn finish(
    s: IntMatrix,
    p: IntMatrix,
    p_inv: IntMatrix,
    q: IntMatrix,
    q_inv: IntMatrix,
) -> SmithDecomposition {
    SmithDecomposition { u: p_inv, s, v: q_inv, u_inv: p, v_inv: q }
}

fn min_abs_entry(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let v = &s[(i, j)];
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.as_ref().is_none_or(|(_, b)| a < *b) {
                best = Some(((i, j), a));
            }
        }
    }
    best.map(|(ij, _)| ij)
}
