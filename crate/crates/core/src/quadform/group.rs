use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::QuadformError;
use crate::exactmat::{smith_normal_form, IntSymMatrix, SnfDecomposition};

/// `Zᵏ / Q·Zᵏ`, read off the Smith normal form of `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    pub invariant_factors: Vec<BigInt>,
    pub order: BigInt,
    pub snf: SnfDecomposition,
    /// Vector whose class generates the group; present iff cyclic.
    pub generator: Option<Vec<BigInt>>,
    /// Last row of `U`: `x ↦ row·x mod p` is an isomorphism onto `Z/p` when cyclic.
    class_row: Vec<BigInt>,
    /// Inverse mod `p` of the generator's coordinate under `class_row`.
    generator_coord_inv: BigInt,
}

impl FiniteAbelianGroup {
    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }

    pub fn order_u64(&self) -> Result<u64, QuadformError> {
        self.order.to_u64().ok_or_else(|| QuadformError::GroupTooLarge(self.order.clone()))
    }

    pub fn dim(&self) -> usize {
        self.snf.d.dim()
    }
}

/// Group presented by `Q`.
///
/// When cyclic, the generator is the highest-index standard basis vector
/// whose class generates; if none does, it is the preimage of the SNF basis
/// vector carrying the invariant factor.
pub fn group_of(q: &IntSymMatrix) -> Result<FiniteAbelianGroup, QuadformError> {
    let det = q.determinant();
    if det.is_even() {
        return Err(QuadformError::EvenDeterminant(det));
    }
    let k = q.dim();
    let snf = smith_normal_form(q.as_matrix());
    let invariant_factors = snf.invariant_factors();
    let order = det.abs();

    if invariant_factors.len() > 1 {
        return Ok(FiniteAbelianGroup {
            invariant_factors,
            order,
            snf,
            generator: None,
            class_row: Vec::new(),
            generator_coord_inv: BigInt::zero(),
        });
    }
    if order.is_one() {
        return Ok(FiniteAbelianGroup {
            invariant_factors,
            order,
            snf,
            generator: Some(vec![BigInt::zero(); k]),
            class_row: vec![BigInt::zero(); k],
            generator_coord_inv: BigInt::zero(),
        });
    }

    let class_row: Vec<BigInt> = snf.u.row(k - 1).iter().map(|x| x.mod_floor(&order)).collect();
    let basis_choice = (0..k).rev().find(|&j| class_row[j].gcd(&order).is_one());
    let (generator, coord) = match basis_choice {
        Some(j) => {
            let mut e = vec![BigInt::zero(); k];
            e[j] = BigInt::one();
            (e, class_row[j].clone())
        }
        None => {
            // U⁻¹·e_last; U is unimodular so U⁻¹ = det(U)·adj(U).
            let u_det = snf.u.determinant();
            let adj = snf.u.adjugate();
            let g = (0..k).map(|i| &adj[(i, k - 1)] * &u_det).collect();
            (g, BigInt::one())
        }
    };
    let generator_coord_inv = mod_inverse(&coord, &order).expect("generator coordinate is a unit");

    Ok(FiniteAbelianGroup { invariant_factors, order, snf, generator: Some(generator), class_row, generator_coord_inv })
}

/// Index `i ∈ [0, p)` with `x ≡ i·g₀ (mod Q·Zᵏ)`.
pub fn class_index(x: &[BigInt], g: &FiniteAbelianGroup) -> Result<u64, QuadformError> {
    if !g.is_cyclic() {
        return Err(QuadformError::NonCyclic(g.invariant_factors.clone()));
    }
    if x.len() != g.dim() {
        return Err(QuadformError::DimensionMismatch { expected: g.dim(), found: x.len() });
    }
    if g.order.is_one() {
        return Ok(0);
    }
    let coord: BigInt = g.class_row.iter().zip(x).map(|(a, b)| a * b).sum();
    let idx = (coord * &g.generator_coord_inv).mod_floor(&g.order);
    Ok(idx.to_u64().expect("class index below group order"))
}

/// `ξ_i ≡ Q_ii (mod 2)` for every `i`.
pub fn is_characteristic(q: &IntSymMatrix, xi: &[BigInt]) -> bool {
    xi.len() == q.dim() && xi.iter().enumerate().all(|(i, x)| x.is_odd() == q[(i, i)].is_odd())
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}
