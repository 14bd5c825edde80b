//! The standard rational normal curve in P^d and its osculating hyperplanes.
//!
//! The curve is `[a:b] -> [... : C(d,i) a^(d-i) b^i : ...]`. The binomial
//! weights make the osculating hyperplane at `[a0:b0]` the simple form
//! `sum_i (-1)^i a0^i b0^(d-i) X_i = 0`, whose restriction to the curve is a
//! constant times `(a0 b - b0 a)^d`.

mod apolarity;
mod castelnuovo;

pub use apolarity::{apolarity_apply, apolarity_pairing, BinaryForm, DiffOperator};
pub use castelnuovo::{curve_contains, curve_point, fit_rnc, RncModel};

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::projective::{Hyperplane, ProjectivePoint};
use crate::scalar::{FieldSpec, Scalar};

/// A point `[a:b]` of P^1, canonicalized so the first nonzero entry is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamPoint {
    a: Scalar,
    b: Scalar,
}

impl ParamPoint {
    pub fn new(a: Scalar, b: Scalar) -> Result<Self> {
        a.same_field(&b)?;
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(Error::ZeroVector);
        };
        let inv = lead.inv().expect("nonzero");
        Ok(ParamPoint { a: &a * &inv, b: &b * &inv })
    }

    /// The affine parameter `t`, i.e. `[t:1]`.
    pub fn affine(t: Scalar) -> Self {
        let one = t.field().one();
        ParamPoint::new(t, one).expect("b = 1 is nonzero")
    }

    /// `[1:0]`.
    pub fn infinity(field: FieldSpec) -> Self {
        ParamPoint { a: field.one(), b: field.zero() }
    }

    pub fn from_i64s(field: FieldSpec, a: i64, b: i64) -> Result<Self> {
        Self::new(field.from_i64(a), field.from_i64(b))
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn field(&self) -> FieldSpec {
        self.a.field()
    }

    /// `|self other| = a_self b_other - a_other b_self`.
    pub fn two_bracket(&self, other: &ParamPoint) -> Scalar {
        &(&self.a * &other.b) - &(&other.a * &self.b)
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.a, self.b)
    }
}

impl Serialize for ParamPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [&self.a, &self.b].serialize(s)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Point of the standard rational normal curve of degree `d` at `q`.
pub fn veronese_embed(q: &ParamPoint, d: usize) -> Result<ProjectivePoint> {
    check_degree(q.field(), d)?;
    let f = q.field();
    let coords = (0..=d)
        .map(|i| &(&f.from_bigint(&binomial(d, i)) * &q.a.pow((d - i) as u32)) * &q.b.pow(i as u32))
        .collect();
    ProjectivePoint::new(coords)
}

/// Osculating hyperplane of the standard curve at `q`:
/// coefficients `((-1)^i a^i b^(d-i))_i`.
pub fn osculating_hyperplane(q: &ParamPoint, d: usize) -> Result<Hyperplane> {
    check_degree(q.field(), d)?;
    let coeffs = (0..=d)
        .map(|i| {
            let c = &q.a.pow(i as u32) * &q.b.pow((d - i) as u32);
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    Hyperplane::new(coeffs)
}

/// Raw coordinates `r_k = sum_{|I| = d-k} a_I b_([d] \ I)` of the common
/// point of the osculating hyperplanes at the `d` points `qs`.
///
/// `r_k` is the coefficient of `x^(d-k)` in `prod_j (a_j x + b_j)`.
pub fn simplex_vertex_coords(qs: &[ParamPoint]) -> Result<Vec<Scalar>> {
    let first = qs.first().ok_or(Error::PointCount { expected: ">= 1".into(), found: 0 })?;
    let field = first.field();
    let d = qs.len();
    check_degree(field, d)?;
    for (i, q) in qs.iter().enumerate() {
        first.a.same_field(&q.a)?;
        if let Some(j) = qs[..i].iter().position(|r| r == q) {
            return Err(Error::RepeatedParameter(j, i));
        }
    }
    // poly[m] = coefficient of x^m
    let mut poly = vec![field.one()];
    for q in qs {
        let mut next = vec![field.zero(); poly.len() + 1];
        for (m, c) in poly.iter().enumerate() {
            next[m + 1] = &next[m + 1] + &(c * &q.a);
            next[m] = &next[m] + &(c * &q.b);
        }
        poly = next;
    }
    Ok((0..=d).map(|k| poly[d - k].clone()).collect())
}

/// The point where the osculating hyperplanes at the `d` distinct points
/// `qs` meet.
pub fn simplex_vertex(qs: &[ParamPoint]) -> Result<ProjectivePoint> {
    ProjectivePoint::new(simplex_vertex_coords(qs)?)
}

fn check_degree(field: FieldSpec, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::Invalid("degree must be at least 1".into()));
    }
    field.require_characteristic_above(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn pp(a: i64, b: i64) -> ParamPoint {
        ParamPoint::from_i64s(Q, a, b).unwrap()
    }

    fn pt(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_i64s(Q, c).unwrap()
    }

    /// Pascal-triangle expansion of (a x0 + b x1)^d, independent of `binomial`.
    fn expand_power(a: i64, b: i64, d: usize) -> Vec<i64> {
        let mut row = vec![1i64];
        for _ in 0..d {
            let mut next = vec![0; row.len() + 1];
            for (i, c) in row.iter().enumerate() {
                next[i] += c * a;
                next[i + 1] += c * b;
            }
            row = next;
        }
        row
    }

    #[test]
    fn veronese_examples() {
        assert_eq!(veronese_embed(&pp(1, 0), 3).unwrap(), pt(&[1, 0, 0, 0]));
        assert_eq!(veronese_embed(&pp(1, 1), 2).unwrap(), pt(&[1, 2, 1]));
        assert_eq!(veronese_embed(&pp(2, 1), 3).unwrap(), pt(&expand_power(2, 1, 3)));
        assert_eq!(veronese_embed(&pp(2, 1), 3).unwrap(), pt(&[8, 12, 6, 1]));
    }

    #[test]
    fn veronese_rejects_small_characteristic() {
        let f = FieldSpec::prime(3).unwrap();
        let q = ParamPoint::from_i64s(f, 1, 1).unwrap();
        assert!(veronese_embed(&q, 2).is_ok());
        assert!(matches!(veronese_embed(&q, 3), Err(Error::CharacteristicTooSmall { .. })));
        assert!(osculating_hyperplane(&q, 4).is_err());
    }

    #[test]
    fn osculating_examples() {
        let h = osculating_hyperplane(&pp(0, 1), 3).unwrap();
        assert_eq!(h.to_string(), "[1:0:0:0]");
        let h = osculating_hyperplane(&pp(1, 0), 3).unwrap();
        assert_eq!(h.to_string(), "[0:0:0:1]");
        let h = osculating_hyperplane(&pp(1, 1), 2).unwrap();
        assert_eq!(h.to_string(), "[1:-1:1]");
        // H(iota([a:b])) = (b - a)^2 on a few parameters
        for (a, b) in [(0, 1), (1, 0), (3, 2), (-2, 5)] {
            let v = h.evaluate(veronese_embed(&pp(a, b), 2).unwrap().coords()).unwrap();
            let scale = if a != 0 { a } else { b };
            let expected = Q.parse(&format!("{}/{}", (b - a) * (b - a), scale * scale)).unwrap();
            assert_eq!(v, expected);
        }
    }

    #[test]
    fn osculating_contact_only_at_its_point() {
        for d in 1..=5 {
            for t0 in -3..=3 {
                let h = osculating_hyperplane(&pp(t0, 1), d).unwrap();
                for t in -4..=4 {
                    let on = h.contains(&veronese_embed(&pp(t, 1), d).unwrap()).unwrap();
                    assert_eq!(on, t == t0, "d={d} t0={t0} t={t}");
                }
                assert!(!h.contains(&veronese_embed(&pp(1, 0), d).unwrap()).unwrap());
            }
        }
    }

    /// Elementary symmetric sums by subset enumeration.
    fn vertex_oracle(qs: &[(i64, i64)]) -> Vec<i64> {
        let d = qs.len();
        (0..=d)
            .map(|k| {
                (0..d)
                    .combinations(d - k)
                    .map(|s| (0..d).map(|j| if s.contains(&j) { qs[j].0 } else { qs[j].1 }).product::<i64>())
                    .sum()
            })
            .collect()
    }

    #[test]
    fn simplex_vertex_examples() {
        assert_eq!(simplex_vertex(&[pp(0, 1), pp(1, 0)]).unwrap(), pt(&[0, 1, 0]));
        assert_eq!(simplex_vertex(&[pp(0, 1), pp(1, 1), pp(2, 1)]).unwrap(), pt(&[0, 2, 3, 1]));
        let (a1, a2) = (4, -7);
        assert_eq!(simplex_vertex(&[pp(a1, 1), pp(a2, 1)]).unwrap(), pt(&[a1 * a2, a1 + a2, 1]));
        let qs = [(2, 1), (-1, 3), (5, 2), (0, 1)];
        let params: Vec<_> = qs.iter().map(|&(a, b)| pp(a, b)).collect();
        let raw: Vec<String> = simplex_vertex_coords(&params).unwrap().iter().map(|s| s.to_string()).collect();
        // ParamPoint canonicalization rescales each [a:b]; compare projectively
        let expected = pt(&vertex_oracle(&qs));
        assert_eq!(simplex_vertex(&params).unwrap(), expected, "{raw:?}");
    }

    #[test]
    fn simplex_vertex_on_its_hyperplanes_only() {
        let params: Vec<_> = [-2, 0, 1, 3, 7].iter().map(|&t| pp(t, 1)).collect();
        let d = 4;
        let r = simplex_vertex(&params[..d]).unwrap();
        for q in &params[..d] {
            assert!(osculating_hyperplane(q, d).unwrap().contains(&r).unwrap());
        }
        assert!(!osculating_hyperplane(&params[d], d).unwrap().contains(&r).unwrap());
    }

    #[test]
    fn simplex_vertex_rejects_repeats() {
        let err = simplex_vertex(&[pp(1, 2), pp(0, 1), pp(2, 4)]).unwrap_err();
        assert_eq!(err, Error::RepeatedParameter(0, 2));
    }

    #[test]
    fn param_point_canonical() {
        assert_eq!(pp(2, 4), pp(1, 2));
        assert_eq!(pp(0, -3), pp(0, 1));
        assert!(ParamPoint::from_i64s(Q, 0, 0).is_err());
        assert_eq!(pp(1, 2).two_bracket(&pp(1, 3)).to_string(), "1");
        assert_eq!(serde_json::to_string(&pp(2, 3)).unwrap(), r#"["1","3/2"]"#);
    }
}
