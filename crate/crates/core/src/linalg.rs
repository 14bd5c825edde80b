//! Exact determinants, ranks and small dense matrices.
//!
//! Over the rationals every column is first scaled to an integer vector and
//! the integer matrix is eliminated fraction-free (Bareiss), so intermediate
//! entries are minors of the input and never need a gcd. Over F_p plain
//! Gaussian elimination on residues is used.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{clear_denominators, FieldSpec, Scalar};

/// Determinant of the square matrix whose columns are `cols`.
///
/// Panics if the columns are not all of length `cols.len()` or mix fields;
/// callers validate shapes first.
pub fn determinant(field: FieldSpec, cols: &[&[Scalar]]) -> Scalar {
    let n = cols.len();
    assert!(cols.iter().all(|c| c.len() == n), "determinant needs a square matrix");
    if n == 0 {
        return field.one();
    }
    match field {
        FieldSpec::Rationals => {
            let mut scale = BigInt::one();
            let mut int_cols = Vec::with_capacity(n);
            for c in cols {
                let (ints, l) = clear_denominators(c).expect("rational column");
                scale *= l;
                int_cols.push(ints);
            }
            let det = integer_determinant(int_cols);
            Scalar::Rational(BigRational::new(det, scale))
        }
        FieldSpec::Prime { p } => {
            let m = cols.iter().map(|c| residues(c, p)).collect();
            Scalar::Mod { value: mod_determinant(m, p), p }
        }
    }
}

/// Determinant of an integer matrix given as columns.
pub fn integer_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    match n {
        0 => return BigInt::one(),
        1 => return m[0][0].clone(),
        2 => return &m[0][0] * &m[1][1] - &m[1][0] * &m[0][1],
        3 => {
            let (a, b, c) = (&m[0], &m[1], &m[2]);
            return &a[0] * (&b[1] * &c[2] - &c[1] * &b[2]) - &b[0] * (&a[1] * &c[2] - &c[1] * &a[2])
                + &c[0] * (&a[1] * &b[2] - &b[1] * &a[2]);
        }
        _ => {}
    }
    // Bareiss on the transpose (determinant is unchanged): m[i] is treated as row i.
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

pub(crate) fn residues(c: &[Scalar], p: u64) -> Vec<u64> {
    c.iter()
        .map(|s| match s {
            Scalar::Mod { value, p: q } if *q == p => *value,
            _ => panic!("field mismatch: expected residues mod {p}"),
        })
        .collect()
}

fn inv_mod(a: u64, p: u64) -> u64 {
    Scalar::Mod { value: a, p }.inv().map(|s| match s {
        Scalar::Mod { value, .. } => value,
        Scalar::Rational(_) => unreachable!(),
    })
    .expect("nonzero pivot")
}

pub(crate) fn mod_determinant(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut det = 1u64;
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| m[r][k] != 0) else {
            return 0;
        };
        if r != k {
            m.swap(k, r);
            det = (p - det) % p;
        }
        det = mul(det, m[k][k]);
        let inv = inv_mod(m[k][k], p);
        for i in k + 1..n {
            let f = mul(m[i][k], inv);
            if f == 0 {
                continue;
            }
            let (top, rest) = m.split_at_mut(i);
            for (x, &y) in rest[0][k..].iter_mut().zip(&top[k][k..]) {
                *x = (*x + p - mul(f, y)) % p;
            }
        }
    }
    det
}

/// Rank of the matrix whose columns are `cols` (all of equal length).
pub fn rank(field: FieldSpec, cols: &[&[Scalar]]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    match field {
        FieldSpec::Rationals => {
            let m: Vec<Vec<BigInt>> = cols
                .iter()
                .map(|c| clear_denominators(c).expect("rational column").0)
                .collect();
            integer_rank(m)
        }
        FieldSpec::Prime { p } => {
            let m = cols.iter().map(|c| residues(c, p)).collect();
            mod_rank(m, p)
        }
    }
}

/// Fraction-free rank: rows of `m` are eliminated against each other with the
/// Bareiss update, dividing by the previous pivot.
fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[i][j] * &m[r][c] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

fn mod_rank(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for i in r + 1..rows {
            let f = mul(m[i][c], inv);
            if f == 0 {
                continue;
            }
            let (top, rest) = m.split_at_mut(i);
            for (x, &y) in rest[0][c..].iter_mut().zip(&top[r][c..]) {
                *x = (*x + p - mul(f, y)) % p;
            }
        }
        r += 1;
    }
    r
}

/// A small dense square or rectangular matrix over one exact field, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Matrix {
    rows: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != width) {
            return Err(Error::DimensionMismatch { expected: width, found: bad.len() });
        }
        Ok(Matrix { rows })
    }

    /// Matrix with the given vectors as columns.
    pub fn from_columns(cols: &[&[Scalar]]) -> Result<Self> {
        let h = cols.first().map_or(0, |c| c.len());
        if let Some(bad) = cols.iter().find(|c| c.len() != h) {
            return Err(Error::DimensionMismatch { expected: h, found: bad.len() });
        }
        let rows = (0..h).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        Ok(Matrix { rows })
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        Matrix { rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.ncols(), v.len(), "matrix-vector shape mismatch");
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(None::<Scalar>, |acc, (a, b)| {
                        let t = a * b;
                        Some(match acc {
                            Some(s) => s + t,
                            None => t,
                        })
                    })
                    .expect("non-empty row")
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..other.ncols()).map(|j| self.mul_vec(&other.column(j))).collect();
        let refs: Vec<&[Scalar]> = cols.iter().map(Vec::as_slice).collect();
        Matrix::from_columns(&refs).expect("consistent shapes")
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.ncols()).map(|j| self.column(j)).collect();
        Matrix { rows }
    }

    /// Inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.nrows();
        assert_eq!(n, self.ncols(), "inverse needs a square matrix");
        let field = self.rows.first()?.first()?.field();
        let mut a = self.rows.clone();
        let mut inv = Matrix::identity(field, n).rows;
        for k in 0..n {
            let piv = (k..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(k, piv);
            inv.swap(k, piv);
            let s = a[k][k].inv()?;
            for j in 0..n {
                a[k][j] = &a[k][j] * &s;
                inv[k][j] = &inv[k][j] * &s;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..n {
                    a[i][j] = &a[i][j] - &(&f * &a[k][j]);
                    inv[i][j] = &inv[i][j] - &(&f * &inv[k][j]);
                }
            }
        }
        Some(Matrix { rows: inv })
    }

    /// Solves `self * x = rhs` for square invertible `self`.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        Some(self.inverse()?.mul_vec(rhs))
    }

    pub fn determinant(&self) -> Scalar {
        let field = self.rows[0][0].field();
        let cols: Vec<Vec<Scalar>> = (0..self.ncols()).map(|j| self.column(j)).collect();
        let refs: Vec<&[Scalar]> = cols.iter().map(Vec::as_slice).collect();
        determinant(field, &refs)
    }
}
