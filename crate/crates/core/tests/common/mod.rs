#![allow(dead_code)]

use h2unknot::exactmat::{IntMatrix, IntSymMatrix, Rational};
use h2unknot::quadform::MqTable;
use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random positive-definite symmetric matrix with `k ≤ 3`, odd determinant
/// at most `max_det` and entries bounded by 12.
pub fn random_pd(rng: &mut ChaCha8Rng, max_det: i64) -> IntSymMatrix {
    loop {
        let k = rng.gen_range(1..=3usize);
        let mut rows = vec![vec![0i64; k]; k];
        for i in 0..k {
            rows[i][i] = rng.gen_range(1..=12);
            for j in 0..i {
                let v = rng.gen_range(-6..=6);
                rows[i][j] = v;
                rows[j][i] = v;
            }
        }
        let q = IntSymMatrix::from_rows(&rows).unwrap();
        if !q.is_positive_definite() {
            continue;
        }
        let d = q.determinant();
        if d.is_odd() && d <= BigInt::from(max_det) {
            return q;
        }
    }
}

/// Random matrix in `GL(k, Z)`, built from a few elementary moves.
pub fn random_unimodular(rng: &mut ChaCha8Rng, k: usize) -> IntMatrix {
    let mut w = IntMatrix::identity(k);
    for _ in 0..4 {
        if k == 1 {
            if rng.gen_bool(0.5) {
                w.negate_row(0);
            }
            continue;
        }
        let a = rng.gen_range(0..k);
        let mut b = rng.gen_range(0..k);
        while b == a {
            b = rng.gen_range(0..k);
        }
        match rng.gen_range(0..3) {
            0 => w.swap_rows(a, b),
            1 => w.negate_row(a),
            _ => w.add_row_multiple(a, b, &BigInt::from(rng.gen_range(-2..=2))),
        }
    }
    w
}

/// `(t² − p)/(4p)` with `t = (i even ? p : 0) − i`, computed directly.
pub fn rank1_value(p: u64, i: u64) -> Rational {
    let t = if i.is_multiple_of(2) { p as i128 - i as i128 } else { -(i as i128) };
    Rational::new(BigInt::from(t * t - p as i128), BigInt::from(4 * p as i128))
}

/// Straight-line replay of all `p` conditions for one `(ε, a)`.
pub fn replay(table: &MqTable, epsilon: i8, a: u64) -> bool {
    let p = table.p;
    (0..p).all(|i| {
        let m = &table.values[((a as u128 * i as u128) % p as u128) as usize];
        let signed = if epsilon > 0 { m.clone() } else { -m.clone() };
        let value = signed - rank1_value(p, i);
        match value.to_integer() {
            Some(n) => n.is_even() && n <= BigInt::from(0),
            None => false,
        }
    })
}

pub fn units(p: u64) -> Vec<u64> {
    (1..p.max(2)).filter(|a| a.gcd(&p) == 1).collect()
}
