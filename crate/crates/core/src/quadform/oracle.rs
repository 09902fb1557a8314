use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{FiniteAbelianGroup, QuadformError};
use crate::exactmat::{IntSymMatrix, Rational};

/// Per-class minima over a finite box: class index → (value, witness).
pub type PartialTable = BTreeMap<u64, (Rational, Vec<BigInt>)>;

/// Naive scan of every characteristic `ξ` with `|ξ_i| ≤ radius`.
///
/// No pruning and no certification. Classes are identified without the
/// Smith form: `ξ ≡ i·g₀ (mod Q·Zᵏ)` iff `adj(Q)·ξ ≡ i·adj(Q)·g₀ (mod p)`.
pub fn mq_bruteforce(q: &IntSymMatrix, g: &FiniteAbelianGroup, radius: u64) -> Result<PartialTable, QuadformError> {
    let Some(gen) = g.generator.as_ref() else {
        return Err(QuadformError::NonCyclic(g.invariant_factors.clone()));
    };
    let k = q.dim();
    let p = g.order.clone();
    let det = q.determinant();
    let adj = q.adjugate();
    let adj = adj.as_matrix();

    let residue = |x: &[BigInt]| -> Vec<BigInt> { adj.mul_vec(x).into_iter().map(|c| c.mod_floor(&p)).collect() };
    let gen_image = adj.mul_vec(gen);
    let mut lookup: HashMap<Vec<BigInt>, u64> = HashMap::new();
    let mut i = 0u64;
    while BigInt::from(i) < p {
        let key = gen_image.iter().map(|c| (c * i).mod_floor(&p)).collect();
        lookup.insert(key, i);
        i += 1;
    }

    let r = radius as i64;
    // smallest value ≥ -r with the right parity
    let start: Vec<i64> = (0..k)
        .map(|i| {
            let odd = q[(i, i)].is_odd();
            let lo = -r;
            if (lo.rem_euclid(2) == 1) == odd {
                lo
            } else {
                lo + 1
            }
        })
        .collect();

    let mut out = PartialTable::new();
    let mut xi = start.clone();
    if start.iter().any(|&s| s > r) {
        return Ok(out);
    }
    let kk = BigInt::from(k);
    loop {
        let v: Vec<BigInt> = xi.iter().map(|&x| BigInt::from(x)).collect();
        let idx = if p.is_one() { 0 } else { lookup[&residue(&v)] };
        let norm = adj.quadratic_form(&v);
        let value = Rational::new(norm - &kk * &det, &det * 4);
        let better = match out.get(&idx) {
            None => true,
            Some((best, w)) => value < *best || (value == *best && v < *w),
        };
        if better {
            out.insert(idx, (value, v));
        }
        // odometer over the parity-restricted box
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(out);
            }
            xi[pos] += 2;
            if xi[pos] <= r {
                break;
            }
            xi[pos] = start[pos];
            pos += 1;
        }
    }
}
