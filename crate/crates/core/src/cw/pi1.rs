use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Cw2Complex;
use crate::linalg::{smith_normal_form, IntMatrix};

/// A word in the generators: `(generator index, nonzero exponent)` with no
/// two adjacent letters on the same generator.
pub type Relator = Vec<(usize, i64)>;

/// What can be decided about `π₁` from the presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pi1Status {
    /// Tietze moves eliminate every generator, so `π₁ = 1`.
    Trivial,
    /// The abelianization vanishes but the presentation did not collapse;
    /// triviality of `π₁` itself is unknown.
    AbelianizationTrivial,
    /// `H₁ ≠ 0`, so `π₁ ≠ 1`.
    NonTrivial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi1Presentation {
    /// 1-cells outside the spanning tree.
    pub generators: Vec<String>,
    /// Attaching words with tree edges deleted, freely and cyclically
    /// reduced; empty relators are dropped.
    pub relators: Vec<Relator>,
    /// 1-cells in the spanning tree, in discovery order.
    pub tree: Vec<String>,
    pub abelianization_free_rank: usize,
    pub abelianization_torsion: Vec<BigInt>,
    pub status: Pi1Status,
}

impl Pi1Presentation {
    pub fn abelianization_trivial(&self) -> bool {
        self.abelianization_free_rank == 0 && self.abelianization_torsion.is_empty()
    }
}

/// Presentation of `π₁(X)` read off a breadth-first spanning tree rooted at
/// the lexicographically least 0-cell.
pub fn pi1_presentation(x: &Cw2Complex) -> Pi1Presentation {
    let tree = spanning_tree(x);
    let mut gen_of = vec![None; x.one_cells().len()];
    let mut generators = Vec::new();
    for (i, c) in x.one_cells().iter().enumerate() {
        if !tree[i] {
            gen_of[i] = Some(generators.len());
            generators.push(c.name.clone());
        }
    }
    let relators: Vec<Relator> = x
        .two_cells()
        .iter()
        .map(|cell| {
            let w = cell.word.iter().filter_map(|&(e, n)| gen_of[e].map(|g| (g, n)));
            cyclically_reduce(reduce(w))
        })
        .filter(|r| !r.is_empty())
        .collect();

    let mut exps = IntMatrix::zeros(generators.len(), relators.len());
    for (j, r) in relators.iter().enumerate() {
        for &(g, n) in r {
            exps[(g, j)] += BigInt::from(n);
        }
    }
    let diag = smith_normal_form(&exps).diagonal();
    let rank = diag.iter().filter(|s| !s.is_zero()).count();
    let abelianization_free_rank = generators.len() - rank;
    let abelianization_torsion: Vec<BigInt> =
        diag.into_iter().filter(|s| !s.is_zero() && !s.is_one()).collect();

    let status = if abelianization_free_rank > 0 || !abelianization_torsion.is_empty() {
        Pi1Status::NonTrivial
    } else if collapses(generators.len(), relators.clone()) {
        Pi1Status::Trivial
    } else {
        Pi1Status::AbelianizationTrivial
    };

    let tree_names = x
        .one_cells()
        .iter()
        .zip(&tree)
        .filter(|(_, &t)| t)
        .map(|(c, _)| c.name.clone())
        .collect();
    Pi1Presentation {
        generators,
        relators,
        tree: tree_names,
        abelianization_free_rank,
        abelianization_torsion,
        status,
    }
}

fn spanning_tree(x: &Cw2Complex) -> Vec<bool> {
    let mut in_tree = vec![false; x.one_cells().len()];
    let root = (0..x.zero_cells().len())
        .min_by(|&a, &b| x.zero_cells()[a].cmp(&x.zero_cells()[b]))
        .expect("at least one 0-cell");
    let adj = x.adjacency();
    let mut seen = vec![false; x.zero_cells().len()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &(e, w) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                in_tree[e] = true;
                queue.push_back(w);
            }
        }
    }
    in_tree
}

fn reduce(word: impl IntoIterator<Item = (usize, i64)>) -> Relator {
    let mut out: Relator = Vec::new();
    for (g, n) in word {
        if n == 0 {
            continue;
        }
        match out.last_mut() {
            Some((h, m)) if *h == g => {
                *m += n;
                if *m == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, n)),
        }
    }
    out
}

fn cyclically_reduce(mut w: Relator) -> Relator {
    while w.len() > 1 && w[0].0 == w[w.len() - 1].0 {
        let (_, n) = w.pop().expect("nonempty");
        w[0].1 += n;
        if w[0].1 == 0 {
            w.remove(0);
        }
    }
    w
}

fn inverse(w: &[(usize, i64)]) -> Relator {
    w.iter().rev().map(|&(g, n)| (g, -n)).collect()
}

// Past this length substitution is abandoned and the status stays unknown.
const MAX_WORD_LEN: usize = 4096;

/// Greedy Tietze elimination: a generator occurring exactly once, with
/// exponent ±1, in some relator is solved for and substituted away.
fn collapses(mut live: usize, mut relators: Vec<Relator>) -> bool {
    while live > 0 {
        let mut step = None;
        'search: for (ri, r) in relators.iter().enumerate() {
            for (pos, &(g, n)) in r.iter().enumerate() {
                if n.abs() == 1 && r.iter().filter(|&&(h, _)| h == g).count() == 1 {
                    step = Some((ri, pos));
                    break 'search;
                }
            }
        }
        let Some((ri, pos)) = step else {
            return false;
        };
        let r = relators.swap_remove(ri);
        let (g, eps) = r[pos];
        // rotate so that r = g^eps · rest, hence g = rest^{-eps}
        let rest: Relator = r[pos + 1..].iter().chain(&r[..pos]).copied().collect();
        let value = if eps == 1 { inverse(&rest) } else { rest };
        let mut next = Vec::with_capacity(relators.len());
        for other in relators {
            let mut w = Vec::new();
            for (h, n) in other {
                if h != g {
                    w.push((h, n));
                    continue;
                }
                let piece = if n > 0 { value.clone() } else { inverse(&value) };
                for _ in 0..n.unsigned_abs() {
                    w.extend_from_slice(&piece);
                }
            }
            let w = cyclically_reduce(reduce(w));
            if w.len() > MAX_WORD_LEN {
                return false;
            }
            if !w.is_empty() {
                next.push(w);
            }
        }
        relators = next;
        live -= 1;
    }
    true
}
