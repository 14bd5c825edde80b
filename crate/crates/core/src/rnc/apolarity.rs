//! Binary forms in `x0, x1`, constant-coefficient differential operators in
//! `d0, d1`, and the apolarity action of the latter on the former.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Homogeneous polynomial `sum_i c_i x0^(deg-i) x1^i`. The zero form is allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Scalar>,
}

/// Operator `sum_i c_i d0^(deg-i) d1^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffOperator {
    coeffs: Vec<Scalar>,
}

fn check_coeffs(coeffs: &[Scalar]) -> Result<()> {
    let first = coeffs.first().ok_or_else(|| Error::Invalid("need at least one coefficient".into()))?;
    coeffs.iter().try_for_each(|c| first.same_field(c))
}

fn convolve(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let field = a[0].field();
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn power(base: &[Scalar], exp: usize) -> Vec<Scalar> {
    let mut acc = vec![base[0].field().one()];
    for _ in 0..exp {
        acc = convolve(&acc, base);
    }
    acc
}

fn falling(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i))
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self> {
        check_coeffs(&coeffs)?;
        Ok(BinaryForm { coeffs })
    }

    /// `L = a x0 + b x1`.
    pub fn linear(a: Scalar, b: Scalar) -> Result<Self> {
        Self::new(vec![a, b])
    }

    /// The monomial `x0^(deg-i) x1^i`.
    pub fn monomial(field: FieldSpec, deg: usize, i: usize) -> Self {
        let coeffs = (0..=deg).map(|j| if j == i { field.one() } else { field.zero() }).collect();
        BinaryForm { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn field(&self) -> FieldSpec {
        self.coeffs[0].field()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &BinaryForm) -> Result<BinaryForm> {
        self.coeffs[0].same_field(&other.coeffs[0])?;
        Ok(BinaryForm { coeffs: convolve(&self.coeffs, &other.coeffs) })
    }

    pub fn pow(&self, exp: usize) -> BinaryForm {
        BinaryForm { coeffs: power(&self.coeffs, exp) }
    }
}

impl DiffOperator {
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self> {
        check_coeffs(&coeffs)?;
        Ok(DiffOperator { coeffs })
    }

    /// `d0^(deg-i) d1^i`.
    pub fn monomial(field: FieldSpec, deg: usize, i: usize) -> Self {
        let coeffs = (0..=deg).map(|j| if j == i { field.one() } else { field.zero() }).collect();
        DiffOperator { coeffs }
    }

    /// `d_L = b d0 - a d1` for `L = a x0 + b x1`; it kills `L`.
    pub fn annihilator(l: &BinaryForm) -> Result<Self> {
        if l.degree() != 1 {
            return Err(Error::Invalid(format!("expected a linear form, got degree {}", l.degree())));
        }
        Ok(DiffOperator { coeffs: vec![l.coeffs[1].clone(), -&l.coeffs[0]] })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn pow(&self, exp: usize) -> DiffOperator {
        DiffOperator { coeffs: power(&self.coeffs, exp) }
    }
}

/// Applies `op` to `f` by formal differentiation. The result has degree
/// `f.degree() - op.degree()`.
pub fn apolarity_apply(op: &DiffOperator, f: &BinaryForm) -> Result<BinaryForm> {
    let (e, n) = (op.degree(), f.degree());
    if e > n {
        return Err(Error::DegreeTooHigh { op: e, form: n });
    }
    op.coeffs[0].same_field(&f.coeffs[0])?;
    let field = f.field();
    let mut out = vec![field.zero(); n - e + 1];
    for (i, c) in op.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // c * d0^(e-i) d1^i applied to x0^(n-k) x1^k
        for (k, g) in f.coeffs.iter().enumerate() {
            if g.is_zero() || k < i || n - k < e - i {
                continue;
            }
            let weight = field.from_bigint(&(falling(n - k, e - i) * falling(k, i)));
            let idx = k - i;
            out[idx] = &out[idx] + &(&(c * g) * &weight);
        }
    }
    Ok(BinaryForm { coeffs: out })
}

/// The scalar `op o f` for operators and forms of the same degree.
pub fn apolarity_pairing(op: &DiffOperator, f: &BinaryForm) -> Result<Scalar> {
    if op.degree() != f.degree() {
        return Err(Error::Invalid(format!(
            "pairing needs equal degrees, got {} and {}",
            op.degree(),
            f.degree()
        )));
    }
    Ok(apolarity_apply(op, f)?.coeffs[0].clone())
}
