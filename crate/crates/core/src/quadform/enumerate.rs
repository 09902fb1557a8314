use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::group::class_index;
use super::{FiniteAbelianGroup, MqTable, QuadformError, MAX_TABULATED_ORDER};
use crate::exactmat::{isqrt, IntSymMatrix, Rational};

/// Certified exact `M_Q` table.
pub fn mq_table(q: &IntSymMatrix, g: &FiniteAbelianGroup) -> Result<MqTable, QuadformError> {
    mq_table_bounded(q, g, None)
}

/// As [`mq_table`], failing with `EnumerationLimit` once the radius
/// schedule would pass `max_radius`.
///
/// All characteristic `ξ` with `ξᵗQ⁻¹ξ ≤ B` are enumerated for
/// `B = max(tr Q, k, 1)·2ʲ` until every class has a representative inside
/// the ellipsoid. Within a complete radius-`B` enumeration the per-class
/// minima found are the true minima.
pub fn mq_table_bounded(
    q: &IntSymMatrix,
    g: &FiniteAbelianGroup,
    max_radius: Option<&BigInt>,
) -> Result<MqTable, QuadformError> {
    if !q.is_positive_definite() {
        return Err(QuadformError::NotPositiveDefinite);
    }
    if !g.is_cyclic() {
        return Err(QuadformError::NonCyclic(g.invariant_factors.clone()));
    }
    let p = g.order_u64()?;
    if p > MAX_TABULATED_ORDER {
        return Err(QuadformError::GroupTooLarge(g.order.clone()));
    }
    let generator = g.generator.clone().expect("cyclic group has a generator");

    let k = q.dim();
    let det = q.determinant();
    let adj = q.adjugate();
    let ellipsoid = Ellipsoid::new(q, &adj);

    let mut radius = q.as_matrix().trace().max(BigInt::from(k)).max(BigInt::one());
    loop {
        if let Some(limit) = max_radius {
            if radius > *limit {
                return Err(QuadformError::EnumerationLimit { radius });
            }
        }
        let mut best: Vec<Option<(BigInt, Vec<BigInt>)>> = vec![None; p as usize];
        ellipsoid.for_each(&(&radius * &det), &radius, |xi, norm| {
            let idx = class_index(xi, g).expect("cyclic") as usize;
            let better = match &best[idx] {
                None => true,
                Some((n, w)) => norm < *n || (norm == *n && xi < w.as_slice()),
            };
            if better {
                best[idx] = Some((norm, xi.to_vec()));
            }
        });
        if best.iter().all(Option::is_some) {
            let kk = BigInt::from(k);
            let (values, witnesses) = best
                .into_iter()
                .map(|b| {
                    let (norm, w) = b.expect("checked");
                    (Rational::new(norm - &kk * &det, &det * 4), w)
                })
                .unzip();
            return Ok(MqTable { p, generator, values, witnesses, certified_radius: Rational::from_int(radius) });
        }
        radius *= 2;
    }
}

/// Largest coordinate bound `floor(sqrt(B·Q_ii))` of the enumeration box
/// at the table's certified radius.
pub fn certified_box_radius(q: &IntSymMatrix, table: &MqTable) -> BigInt {
    let b = table.certified_radius.ceil();
    (0..q.dim()).map(|i| isqrt(&(&b * &q[(i, i)]))).max().unwrap_or_default()
}

/// Depth-first enumeration of characteristic vectors in
/// `{ξ : ξᵗ·adj(Q)·ξ ≤ N}`, using the exact decomposition
/// `ξᵗAξ = Σ_j d_j (ξ_j + Σ_{l>j} m_jl ξ_l)²` of `A = adj(Q)` to prune
/// coordinates from the last one down.
struct Ellipsoid<'a> {
    adj: &'a IntSymMatrix,
    diag: Vec<Rational>,
    mult: Vec<Vec<Rational>>,
    q_diag: Vec<BigInt>,
    odd: Vec<bool>,
}

impl<'a> Ellipsoid<'a> {
    fn new(q: &IntSymMatrix, adj: &'a IntSymMatrix) -> Self {
        let k = q.dim();
        let mut a: Vec<Vec<Rational>> =
            (0..k).map(|i| (0..k).map(|j| Rational::from_int(adj[(i, j)].clone())).collect()).collect();
        let mut diag = Vec::with_capacity(k);
        let mut mult = vec![vec![Rational::zero(); k]; k];
        for j in 0..k {
            let d = a[j][j].clone();
            assert!(d.is_positive(), "adjugate of a positive-definite matrix is positive definite");
            for l in j + 1..k {
                mult[j][l] = a[j][l].clone() / d.clone();
            }
            for r in j + 1..k {
                for c in j + 1..k {
                    let v = &a[r][j] * &mult[j][c];
                    a[r][c] = &a[r][c] - &v;
                }
            }
            diag.push(d);
        }
        let q_diag = (0..k).map(|i| q[(i, i)].clone()).collect::<Vec<_>>();
        let odd = q_diag.iter().map(|d| d.is_odd()).collect();
        Ellipsoid { adj, diag, mult, q_diag, odd }
    }

    /// Calls `f(ξ, ξᵗ·adj·ξ)` for every characteristic `ξ` with
    /// `ξᵗ·adj·ξ ≤ limit`, where `limit = B·det`.
    fn for_each<F: FnMut(&[BigInt], BigInt)>(&self, limit: &BigInt, radius: &BigInt, mut f: F) {
        let k = self.diag.len();
        let boxes: Vec<BigInt> = self.q_diag.iter().map(|d| isqrt(&(radius * d))).collect();
        let mut xi = vec![BigInt::zero(); k];
        let limit = Rational::from_int(limit.clone());
        self.descend(k, &mut xi, &Rational::zero(), &limit, &boxes, &mut f);
    }

    fn descend<F: FnMut(&[BigInt], BigInt)>(
        &self,
        level: usize,
        xi: &mut Vec<BigInt>,
        partial: &Rational,
        limit: &Rational,
        boxes: &[BigInt],
        f: &mut F,
    ) {
        if level == 0 {
            let norm = self.adj.as_matrix().quadratic_form(xi);
            f(xi, norm);
            return;
        }
        let j = level - 1;
        let k = xi.len();
        let center = -(j + 1..k)
            .map(|l| &self.mult[j][l] * &Rational::from_int(xi[l].clone()))
            .fold(Rational::zero(), |acc, t| acc + t);
        let room = limit - partial;
        if room.is_negative() {
            return;
        }
        let spread = isqrt(&(room / self.diag[j].clone()).floor()) + 1;
        let floor: BigInt = center.floor() - &spread;
        let mut lo = floor.max(-&boxes[j]);
        let ceil: BigInt = center.ceil() + &spread;
        let hi = ceil.min(boxes[j].clone());
        if lo.is_odd() != self.odd[j] {
            lo += 1;
        }
        let two = BigInt::from(2);
        while lo <= hi {
            let diff = Rational::from_int(lo.clone()) - center.clone();
            let next = partial + &(&self.diag[j] * &(&diff * &diff));
            if next <= *limit {
                xi[j] = lo.clone();
                self.descend(j, xi, &next, limit, boxes, f);
            }
            lo += &two;
        }
        xi[j] = BigInt::zero();
    }
}
