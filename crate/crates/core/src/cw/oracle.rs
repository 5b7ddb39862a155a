//! Cohomology by exhaustive enumeration, for cross-checking the Smith-form
//! route on small complexes.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::Cw2Complex;
use crate::linalg::FinAbGroup;
use crate::{Error, Result};

/// Largest `k^(n_deg + n_{deg-1})` the oracle accepts.
pub const ORACLE_BOUND: u128 = 1_000_000;

/// `H^degree(X, Z/k)` computed without any matrix normal form.
///
/// Cocycles and coboundaries are enumerated outright. The isomorphism type
/// is then recovered from the sizes of the `p^j`-torsion subgroups
/// `|G[p^j]| = #{z : p^j·z ∈ B} / |B|`, which determine the multiset of
/// primary cyclic factors.
pub fn brute_force_cohomology(x: &Cw2Complex, k: u64, degree: usize) -> Result<FinAbGroup> {
    if k == 0 {
        return Err(Error::InvalidModulus { min: 1, got: 0 });
    }
    if !(1..=2).contains(&degree) {
        return Err(Error::InvalidDegree(degree));
    }
    let n = x.cell_count(degree);
    let n_prev = x.cell_count(degree - 1);
    let size = (k as u128).checked_pow((n + n_prev) as u32).unwrap_or(u128::MAX);
    if size > ORACLE_BOUND {
        return Err(Error::BoundExceeded { size, bound: ORACLE_BOUND });
    }

    let chain = x.chain_data();
    let to_small = |m: &crate::linalg::IntMatrix| -> Vec<Vec<i64>> {
        (0..m.rows()).map(|i| m.row(i).iter().map(|v| v.to_i64().expect("small")).collect()).collect()
    };
    // δ^{degree-1} and δ^degree as small integer matrices
    let (prev, next) = match degree {
        1 => (to_small(&chain.d1.transpose()), to_small(&chain.d2.transpose())),
        _ => (to_small(&chain.d2.transpose()), Vec::new()),
    };

    let space = (k as usize).pow(n as u32);
    let mut boundary = vec![false; space];
    let mut b_count = 0usize;
    for a in Cochains::new(k, n_prev) {
        let img = apply(&prev, &a, k);
        let code = encode(&img, k);
        if !boundary[code] {
            boundary[code] = true;
            b_count += 1;
        }
    }
    let cocycles: Vec<Vec<u64>> =
        Cochains::new(k, n).filter(|z| next.iter().all(|row| dot(row, z, k) == 0)).collect();

    let order = cocycles.len() / b_count;
    debug_assert_eq!(order * b_count, cocycles.len());

    let torsion_count = |e: u64| -> usize {
        cocycles
            .iter()
            .filter(|z| {
                let scaled: Vec<u64> = z.iter().map(|&c| ((c as u128 * e as u128) % k as u128) as u64).collect();
                boundary[encode(&scaled, k)]
            })
            .count()
            / b_count
    };

    // exponents of the p-primary cyclic factors, largest first
    let mut primary: Vec<(u64, Vec<u32>)> = Vec::new();
    for (p, a) in factorize(order as u64) {
        let mut at_least = Vec::new(); // at_least[j-1] = #factors with exponent >= j
        let mut prev_log = 0u32;
        let mut j = 1u32;
        while prev_log < a {
            let log = ilog(torsion_count(p.pow(j)) as u64, p);
            at_least.push(log - prev_log);
            prev_log = log;
            j += 1;
        }
        let count = at_least[0] as usize;
        let exps: Vec<u32> =
            (0..count).map(|i| at_least.iter().filter(|&&c| c as usize > i).count() as u32).collect();
        primary.push((p, exps));
    }

    let len = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors: Vec<BigInt> = (0..len)
        .map(|i| {
            primary
                .iter()
                .map(|(p, e)| BigInt::from(*p).pow(e.get(i).copied().unwrap_or(0)))
                .product()
        })
        .collect();
    factors.reverse();
    FinAbGroup::from_invariant_factors(factors)
}

struct Cochains {
    k: u64,
    current: Option<Vec<u64>>,
}

impl Cochains {
    fn new(k: u64, n: usize) -> Self {
        Cochains { k, current: Some(vec![0; n]) }
    }
}

impl Iterator for Cochains {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked");
        let mut i = 0;
        loop {
            if i == cur.len() {
                self.current = None;
                break;
            }
            cur[i] += 1;
            if cur[i] < self.k {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
        Some(out)
    }
}

fn dot(row: &[i64], v: &[u64], k: u64) -> u64 {
    let s: i128 = row.iter().zip(v).map(|(&a, &b)| a as i128 * b as i128).sum();
    s.rem_euclid(k as i128) as u64
}

fn apply(m: &[Vec<i64>], v: &[u64], k: u64) -> Vec<u64> {
    m.iter().map(|row| dot(row, v, k)).collect()
}

fn encode(v: &[u64], k: u64) -> usize {
    v.iter().rev().fold(0usize, |acc, &c| acc * k as usize + c as usize)
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut a = 0;
        while n.is_multiple_of(p) {
            n /= p;
            a += 1;
        }
        if a > 0 {
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn ilog(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0);
        n /= p;
        e += 1;
    }
    e
}
