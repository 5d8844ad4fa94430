//! Exact dense integer matrices and diagonal bilinear forms.
//!
//! Every matrix in the crate lives here: generator realizations, word
//! matrices, projectors and reconstructed operators. Entries are
//! arbitrary-precision so that no composition can overflow silently.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// Column vector with exact integer entries.
pub type IntVector = Vec<BigInt>;

/// Builds an [`IntVector`] from small integers.
pub fn int_vector(values: &[i64]) -> IntVector {
    values.iter().map(|&x| BigInt::from(x)).collect()
}

/// Dense rectangular integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix must be at least 1x1");
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Diagonal matrix of a form's signs.
    pub fn diagonal(form: &DiagonalForm) -> Self {
        let n = form.len();
        let mut m = Self::zeros(n, n);
        for (i, &s) in form.signs().iter().enumerate() {
            m.data[i * n + i] = BigInt::from(s);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::Dimension("matrix must be at least 1x1".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[IntVector]) -> Result<Self> {
        let c = columns.len();
        let r = columns.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::Dimension("matrix must be at least 1x1".into()));
        }
        if columns.iter().any(|col| col.len() != r) {
            return Err(Error::Dimension("columns of unequal length".into()));
        }
        let mut m = Self::zeros(r, c);
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.data[i * c + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> IntVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(
                "cannot add matrices of different shape".into(),
            ));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: i64) -> IntMatrix {
        let f = BigInt::from(factor);
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * &f).collect(),
        }
    }

    pub fn apply(&self, x: &[BigInt]) -> Result<IntVector> {
        if x.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for (j, xj) in x.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !xj.is_zero() {
                        acc += a * xj;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Rows as small integers; panics if an entry does not fit in `i64`.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| i64::try_from(self.get(i, j)).expect("matrix entry exceeds i64"))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_i64_rows().serialize(serializer)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        self.scale(-1)
    }
}

/// Non-degenerate diagonal bilinear form with entries ±1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DiagonalForm(Vec<i8>);

impl DiagonalForm {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::Dimension("form must have positive length".into()));
        }
        if let Some(bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::Dimension(format!("form entry {bad} is not ±1")));
        }
        Ok(DiagonalForm(signs))
    }

    /// `positive` copies of +1 followed by `negative` copies of −1.
    pub fn with_signature(positive: usize, negative: usize) -> Result<Self> {
        let mut signs = vec![1i8; positive];
        signs.extend(std::iter::repeat_n(-1i8, negative));
        Self::new(signs)
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Counts of (+1, −1) entries.
    pub fn signature(&self) -> (usize, usize) {
        let p = self.0.iter().filter(|&&s| s > 0).count();
        (p, self.0.len() - p)
    }
}

/// ⟨x, y⟩ = Σ f_i x_i y_i.
pub fn form_pair(x: &[BigInt], y: &[BigInt], f: &DiagonalForm) -> Result<BigInt> {
    if x.len() != f.len() || y.len() != f.len() {
        return Err(Error::Dimension(format!(
            "pairing vectors of length {} and {} under a form of length {}",
            x.len(),
            y.len(),
            f.len()
        )));
    }
    let mut acc = BigInt::zero();
    for ((xi, yi), &s) in x.iter().zip(y).zip(f.signs()) {
        if xi.is_zero() || yi.is_zero() {
            continue;
        }
        let p = xi * yi;
        if s > 0 {
            acc += p;
        } else {
            acc -= p;
        }
    }
    Ok(acc)
}

/// The adjoint m* with ⟨m x, y⟩ = ⟨x, m* y⟩, i.e. f⁻¹ mᵀ f. Since f = f⁻¹
/// entrywise this is (m*)_{ij} = f_i m_{ji} f_j.
pub fn metric_adjoint(m: &IntMatrix, f: &DiagonalForm) -> Result<IntMatrix> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "adjoint of non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    if m.rows() != f.len() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix against form of length {}",
            m.rows(),
            m.cols(),
            f.len()
        )));
    }
    let n = m.rows();
    let s = f.signs();
    let mut out = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = m.get(j, i);
            if v.is_zero() {
                continue;
            }
            out.set(i, j, if s[i] * s[j] > 0 { v.clone() } else { -v });
        }
    }
    Ok(out)
}

/// True iff every row and column holds exactly one nonzero entry, equal to ±1.
pub fn is_signed_permutation(m: &IntMatrix) -> bool {
    if !m.is_square() {
        return false;
    }
    let n = m.rows();
    let mut col_seen = vec![false; n];
    for i in 0..n {
        let mut found = false;
        for (j, seen) in col_seen.iter_mut().enumerate() {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            if found || *seen || !v.abs().is_one() {
                return false;
            }
            found = true;
            *seen = true;
        }
        if !found {
            return false;
        }
    }
    true
}

/// Exact column reduction: a basis of the column space of `m` as primitive
/// integer vectors, in column-echelon form.
///
/// Fraction-free elimination over ℤ; each output vector is divided by the
/// gcd of its entries and normalized so that its pivot is positive.
pub fn column_space_basis(m: &IntMatrix) -> Vec<IntVector> {
    let mut cols: Vec<IntVector> = (0..m.cols()).map(|j| m.column(j)).collect();
    let mut basis: Vec<IntVector> = Vec::new();
    let mut row = 0;
    while row < m.rows() && !cols.is_empty() {
        let Some(p) = cols.iter().position(|c| !c[row].is_zero()) else {
            row += 1;
            continue;
        };
        let pivot = normalize_primitive(cols.swap_remove(p), row);
        for c in cols.iter_mut() {
            if c[row].is_zero() {
                continue;
            }
            let a = pivot[row].clone();
            let b = c[row].clone();
            for (ci, pi) in c.iter_mut().zip(&pivot) {
                *ci = &*ci * &a - pi * &b;
            }
            let g = vector_gcd(c);
            if !g.is_zero() && !g.is_one() {
                for ci in c.iter_mut() {
                    *ci = &*ci / &g;
                }
            }
        }
        cols.retain(|c| c.iter().any(|x| !x.is_zero()));
        basis.push(pivot);
        row += 1;
    }
    basis
}

/// Rank of an integer matrix.
pub fn rank(m: &IntMatrix) -> usize {
    column_space_basis(m).len()
}

fn vector_gcd(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn normalize_primitive(mut v: IntVector, pivot_row: usize) -> IntVector {
    let g = vector_gcd(&v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    if v[pivot_row].is_negative() {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
    v
}
