use super::QuadformError;
use crate::exactmat::Rational;

/// `M_A(i)` for the rank-one form `A = (p)`:
/// `¼·( ((p + (−1)^i·p)/2 − i)² / p − 1 )`, with `i` read in `{0, …, p−1}`.
pub fn closed_form_rank1(p: u64, i: u64) -> Result<Rational, QuadformError> {
    if p.is_multiple_of(2) {
        return Err(QuadformError::EvenModulus(p));
    }
    if i >= p {
        return Err(QuadformError::OutOfRange { p, i });
    }
    let p = p as i128;
    let i = i as i128;
    let shift = if i % 2 == 0 { p } else { 0 };
    let t = shift - i;
    Ok(Rational::new(t * t - p, 4 * p))
}
