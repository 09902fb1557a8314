use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::exactmat::{IntSymMatrix, Rational};
use crate::quadform::FiniteAbelianGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LickorishVerdict {
    Obstructed,
    NotObstructed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LickorishReport {
    pub verdict: LickorishVerdict,
    pub cyclic: bool,
    /// `λ(g₀, g₀)` in `[0, 1)`.
    pub lambda: Option<Rational>,
    /// Smallest `x ∈ [0, p)` with `λ(x·g₀, x·g₀) = ±1/p`.
    pub x: Option<u64>,
    /// `λ(x·g₀, x·g₀)` in `[0, 1)`, i.e. `1/p` or `(p−1)/p`.
    pub lambda_at_x: Option<Rational>,
}

impl LickorishReport {
    pub fn is_obstructed(&self) -> bool {
        self.verdict == LickorishVerdict::Obstructed
    }
}

/// Linking-form test: a knot with `u₂ = 1` has cyclic `H₁` of the double
/// branched cover with a generator `g` such that `λ(g,g) = ±1/p`.
///
/// `λ` is represented by `Q⁻¹`, so `λ(g₀,g₀) = g₀ᵗQ⁻¹g₀ mod 1 = q/p`, and
/// the search is for `x` with `q·x² ≡ ±1 (mod p)`.
pub fn lickorish_check(q: &IntSymMatrix, g: &FiniteAbelianGroup) -> LickorishReport {
    let Some(gen) = g.generator.as_ref().filter(|_| g.is_cyclic()) else {
        return LickorishReport {
            verdict: LickorishVerdict::Obstructed,
            cyclic: false,
            lambda: None,
            x: None,
            lambda_at_x: None,
        };
    };
    let lambda = q.eval_inverse_form(gen).expect("odd determinant is nonzero").fract_mod_one();
    let p = g.order.clone();
    // lambda = num/den with den | p
    let scaled = lambda.numer() * (&p / lambda.denom());
    let x = solve_unit_square(&scaled, &p);
    let lambda_at_x = x.map(|x| Rational::new((&scaled * x * x).mod_floor(&p), p.clone()));
    LickorishReport {
        verdict: if x.is_some() { LickorishVerdict::NotObstructed } else { LickorishVerdict::Obstructed },
        cyclic: true,
        lambda: Some(lambda),
        x,
        lambda_at_x,
    }
}

/// Smallest `x ∈ [0, p)` with `q·x² ≡ ±1 (mod p)`, by exhaustive scan.
fn solve_unit_square(q: &BigInt, p: &BigInt) -> Option<u64> {
    let p = p.to_u64().expect("group order fits in 64 bits");
    let q = q.mod_floor(&BigInt::from(p)).to_u64().expect("reduced mod p") as u128;
    let p128 = p as u128;
    (0..p).find(|&x| {
        let r = q * ((x as u128 * x as u128) % p128) % p128;
        r == 1 % p128 || r == p128 - 1
    })
}
