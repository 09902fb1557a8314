use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Smith normal form `U·M·V = D` with unimodular `U`, `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.dim()).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Diagonal entries greater than one.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| *d > BigInt::from(1)).collect()
    }
}

/// Smith normal form by elementary row/column operations.
///
/// The pivot is always the nonzero entry of least absolute value in the
/// remaining block, first in row-major order, so the output is a
/// deterministic function of the input.
pub fn smith_normal_form(m: &IntMatrix) -> SnfDecomposition {
    let k = m.dim();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(k);
    let mut v = IntMatrix::identity(k);

    for t in 0..k {
        loop {
            let Some((pi, pj)) = smallest_entry(&d, t) else {
                return finish(u, d, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d[(t, t)].clone();
            for i in t + 1..k {
                let q = -(&d[(i, t)] / &pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
            }
            for j in t + 1..k {
                let q = -(&d[(t, j)] / &pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
            }

            let clean = (t + 1..k).all(|i| d[(i, t)].is_zero() && d[(t, i)].is_zero());
            if !clean {
                continue;
            }
            let offender = (t + 1..k)
                .flat_map(|i| (t + 1..k).map(move |j| (i, j)))
                .find(|&(i, j)| !d[(i, j)].is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(u, d, v)
}

fn finish(u: IntMatrix, d: IntMatrix, v: IntMatrix) -> SnfDecomposition {
    SnfDecomposition { u, d, v }
}

fn smallest_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let k = d.dim();
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..k {
        for j in t..k {
            let a = d[(i, j)].abs();
            if a.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}
