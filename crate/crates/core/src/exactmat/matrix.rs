use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{MatrixError, Rational};

/// Dense square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    k: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(k: usize) -> Self {
        IntMatrix { k, data: vec![BigInt::zero(); k * k] }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k);
        for i in 0..k {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, MatrixError> {
        let k = rows.len();
        let mut data = Vec::with_capacity(k * k);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(MatrixError::NotSquare { row: i, len: row.len(), expected: k });
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { k, data })
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.k..(i + 1) * self.k]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.k).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.k);
        for i in 0..self.k {
            for j in 0..self.k {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.k).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.k).all(|i| (0..self.k).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.k);
        (0..self.k).map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix { k: self.k, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// Leading principal `m×m` submatrix.
    pub fn leading(&self, m: usize) -> IntMatrix {
        let mut out = Self::zeros(m);
        for i in 0..m {
            for j in 0..m {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Matrix with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> IntMatrix {
        let k = self.k - 1;
        let mut out = Self::zeros(k);
        for (oi, i) in (0..self.k).filter(|&i| i != r).enumerate() {
            for (oj, j) in (0..self.k).filter(|&j| j != c).enumerate() {
                out[(oi, oj)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        (0..self.k).map(|i| &self[(i, i)]).sum()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.k {
                self.data.swap(a * self.k + j, b * self.k + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.k {
                self.data.swap(i * self.k + a, i * self.k + b);
            }
        }
    }

    /// `row[dst] += c * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.k {
            let v = &self[(src, j)] * c;
            self[(dst, j)] += v;
        }
    }

    /// `col[dst] += c * col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.k {
            let v = &self[(i, src)] * c;
            self[(i, dst)] += v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.k {
            let v = -std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = v;
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.k;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for p in 0..n - 1 {
            if a[(p, p)].is_zero() {
                match (p + 1..n).find(|&r| !a[(r, p)].is_zero()) {
                    Some(r) => {
                        a.swap_rows(p, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in p + 1..n {
                for j in p + 1..n {
                    let v = (&a[(i, j)] * &a[(p, p)] - &a[(i, p)] * &a[(p, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(p, p)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    /// Adjugate (transposed cofactor matrix), so that `M·adj(M) = det(M)·I`.
    pub fn adjugate(&self) -> IntMatrix {
        let n = self.k;
        if n == 0 {
            return Self::zeros(0);
        }
        if n == 1 {
            return Self::identity(1);
        }
        let mut adj = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).determinant();
                adj[(j, i)] = if (i + j) % 2 == 0 { c } else { -c };
            }
        }
        adj
    }

    /// Sylvester's criterion: every leading principal minor is positive.
    pub fn is_positive_definite(&self) -> bool {
        self.is_symmetric() && (1..=self.k).all(|m| self.leading(m).determinant().is_positive())
    }

    /// `xᵗ·M·x`
    pub fn quadratic_form(&self, x: &[BigInt]) -> BigInt {
        self.mul_vec(x).iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// `xᵗ·M⁻¹·x` as an exact rational, computed as `xᵗ·adj(M)·x / det(M)`.
    pub fn eval_inverse_form(&self, x: &[BigInt]) -> Result<Rational, MatrixError> {
        if x.len() != self.k {
            return Err(MatrixError::DimensionMismatch { expected: self.k, found: x.len() });
        }
        let det = self.determinant();
        if det.is_zero() {
            return Err(MatrixError::Singular);
        }
        Ok(Rational::new(self.adjugate().quadratic_form(x), det))
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.k).map(|i| self.row(i).iter().map(|v| v.to_i64()).collect()).collect()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.k + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.k + j]
    }
}

impl<'a> Mul<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &'a IntMatrix) -> IntMatrix {
        assert_eq!(self.k, rhs.k);
        let n = self.k;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                if self[(i, l)].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = &self[(i, l)] * &rhs[(l, j)];
                    out[(i, j)] += v;
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.k {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows = self.to_i64_rows().ok_or_else(|| serde::ser::Error::custom("matrix entry exceeds 64-bit range"))?;
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        IntMatrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// Square symmetric integer matrix. Symmetry is checked at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntSymMatrix(IntMatrix);

impl IntSymMatrix {
    pub fn new(m: IntMatrix) -> Result<Self, MatrixError> {
        if !m.is_symmetric() {
            return Err(MatrixError::NotSymmetric);
        }
        Ok(IntSymMatrix(m))
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, MatrixError> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    pub fn empty() -> Self {
        IntSymMatrix(IntMatrix::zeros(0))
    }

    pub fn identity(k: usize) -> Self {
        IntSymMatrix(IntMatrix::identity(k))
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(diag: &[T]) -> Self {
        let mut m = IntMatrix::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone().into();
        }
        IntSymMatrix(m)
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn negated(&self) -> IntSymMatrix {
        IntSymMatrix(self.0.scale(&BigInt::from(-1)))
    }

    /// `Wᵗ·M·W`
    pub fn congruent(&self, w: &IntMatrix) -> IntSymMatrix {
        let wt = w.transpose();
        IntSymMatrix(&(&wt * &self.0) * w)
    }

    pub fn determinant(&self) -> BigInt {
        self.0.determinant()
    }

    pub fn adjugate(&self) -> IntSymMatrix {
        IntSymMatrix(self.0.adjugate())
    }

    pub fn is_positive_definite(&self) -> bool {
        self.0.is_positive_definite()
    }

    pub fn eval_inverse_form(&self, x: &[BigInt]) -> Result<Rational, MatrixError> {
        self.0.eval_inverse_form(x)
    }
}

impl Index<(usize, usize)> for IntSymMatrix {
    type Output = BigInt;
    fn index(&self, ij: (usize, usize)) -> &BigInt {
        &self.0[ij]
    }
}

impl fmt::Display for IntSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for IntSymMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntSymMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        IntSymMatrix::new(IntMatrix::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
