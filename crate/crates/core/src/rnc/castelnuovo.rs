//! Fitting the unique rational normal curve through d+3 points in general
//! linear position.
//!
//! The first d+2 points are sent to the standard frame `e_0, ..., e_d,
//! [1:...:1]` by a projectivity `A`. In those coordinates the curves through
//! the frame are exactly `t -> [prod_{j != i} (t - alpha_j)]_i` with distinct
//! `alpha`s, passing through `e_i` at `t = alpha_i` and through `[1:...:1]` at
//! infinity. Passing through the last point `q = A p` at `t = 0` forces
//! `alpha_i = -1/q_i`.

use serde::{Deserialize, Serialize};

use super::ParamPoint;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::projective::{Configuration, CoordsJson, ProjectivePoint};
use crate::scalar::{FieldSpec, Scalar};

/// A rational normal curve in P^d given by a frame map and d+1 distinct
/// parameters.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(try_from = "RncModelJson")]
pub struct RncModel {
    field: FieldSpec,
    dim: usize,
    frame_map: Matrix,
    frame_inverse: Matrix,
    alphas: Vec<Scalar>,
}

impl RncModel {
    pub fn new(frame_map: Matrix, alphas: Vec<Scalar>) -> Result<Self> {
        let n = alphas.len();
        if n < 2 {
            return Err(Error::Invalid("need at least 2 parameters".into()));
        }
        if frame_map.nrows() != n || frame_map.ncols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: frame_map.nrows() });
        }
        let field = alphas[0].field();
        for a in &alphas {
            alphas[0].same_field(a)?;
        }
        for row in frame_map.rows() {
            for x in row {
                alphas[0].same_field(x)?;
            }
        }
        for i in 0..n {
            for j in 0..i {
                if alphas[i] == alphas[j] {
                    return Err(Error::Invalid(format!("alphas {j} and {i} coincide")));
                }
            }
        }
        let frame_inverse = frame_map
            .inverse()
            .ok_or_else(|| Error::Invalid("frame map is singular".into()))?;
        Ok(RncModel { field, dim: n - 1, frame_map, frame_inverse, alphas })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn frame_map(&self) -> &Matrix {
        &self.frame_map
    }

    pub fn alphas(&self) -> &[Scalar] {
        &self.alphas
    }
}

#[derive(Serialize)]
struct RncModelOut<'a> {
    field: FieldSpec,
    dim: usize,
    frame_map: &'a Matrix,
    alphas: &'a [Scalar],
}

impl Serialize for RncModel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RncModelOut { field: self.field, dim: self.dim, frame_map: &self.frame_map, alphas: &self.alphas }
            .serialize(s)
    }
}

#[derive(Deserialize)]
struct RncModelJson {
    #[serde(default = "rationals")]
    field: FieldSpec,
    dim: usize,
    frame_map: Vec<CoordsJson>,
    alphas: CoordsJson,
}

fn rationals() -> FieldSpec {
    FieldSpec::Rationals
}

impl TryFrom<RncModelJson> for RncModel {
    type Error = Error;

    fn try_from(raw: RncModelJson) -> Result<Self> {
        let rows = raw.frame_map.iter().map(|r| r.to_scalars(raw.field)).collect::<Result<Vec<_>>>()?;
        let model = RncModel::new(Matrix::from_rows(rows)?, raw.alphas.to_scalars(raw.field)?)?;
        if model.dim != raw.dim {
            return Err(Error::DimensionMismatch { expected: raw.dim, found: model.dim });
        }
        Ok(model)
    }
}

fn not_glp(msg: impl Into<String>) -> Error {
    Error::NotGeneralPosition(msg.into())
}

/// The unique rational normal curve through `d + 3` points in general linear
/// position.
pub fn fit_rnc(points: &Configuration) -> Result<RncModel> {
    let d = points.dim();
    if points.len() != d + 3 {
        return Err(Error::PointCount { expected: (d + 3).to_string(), found: points.len() });
    }
    let pts = points.points();
    let frame_cols: Vec<&[Scalar]> = pts[..=d].iter().map(|p| p.coords()).collect();
    let m = Matrix::from_columns(&frame_cols)?;
    let m_inv = m.inverse().ok_or_else(|| not_glp("the first d+1 points are dependent"))?;
    let lambdas = m_inv.mul_vec(pts[d + 1].coords());
    if let Some(i) = lambdas.iter().position(Scalar::is_zero) {
        return Err(not_glp(format!("point {} lies on a coordinate hyperplane of the frame ({i})", d + 2)));
    }
    // A = (M diag(lambda))^-1 = diag(1/lambda) M^-1
    let rows = m_inv
        .rows()
        .iter()
        .zip(&lambdas)
        .map(|(row, l)| {
            let inv = l.inv().expect("nonzero");
            row.iter().map(|x| x * &inv).collect()
        })
        .collect();
    let a = Matrix::from_rows(rows)?;
    let q = a.mul_vec(pts[d + 2].coords());
    if let Some(i) = q.iter().position(Scalar::is_zero) {
        return Err(not_glp(format!("last point has zero frame coordinate {i}")));
    }
    for i in 0..=d {
        for j in 0..i {
            if q[i] == q[j] {
                return Err(not_glp(format!("last point has equal frame coordinates {j} and {i}")));
            }
        }
    }
    let alphas = q.iter().map(|x| -x.inv().expect("nonzero")).collect();
    RncModel::new(a, alphas)
}

/// Frame coordinates `(prod_{j != i} (u - alpha_j v))_i` of parameter `[u:v]`.
fn frame_coords(model: &RncModel, t: &ParamPoint) -> Vec<Scalar> {
    let factors: Vec<Scalar> = model.alphas.iter().map(|a| t.a() - &(a * t.b())).collect();
    (0..factors.len())
        .map(|i| {
            factors
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(model.field.one(), |acc, (_, f)| &acc * f)
        })
        .collect()
}

/// The point of the curve at parameter `t`.
pub fn curve_point(model: &RncModel, t: &ParamPoint) -> Result<ProjectivePoint> {
    if t.field() != model.field {
        return Err(Error::FieldMismatch(model.field.name(), t.field().name()));
    }
    ProjectivePoint::new(model.frame_inverse.mul_vec(&frame_coords(model, t)))
}

/// The parameter of `p` on the curve, if `p` lies on it.
pub fn curve_contains(model: &RncModel, p: &ProjectivePoint) -> Result<Option<ParamPoint>> {
    if p.dim() != model.dim {
        return Err(Error::DimensionMismatch { expected: model.dim, found: p.dim() });
    }
    if p.field() != model.field {
        return Err(Error::FieldMismatch(model.field.name(), p.field().name()));
    }
    let x = model.frame_map.mul_vec(p.coords());
    let nonzero: Vec<usize> = (0..x.len()).filter(|&i| !x[i].is_zero()).collect();
    let candidate = if nonzero.len() < x.len() {
        // Only the frame points e_i have a vanishing frame coordinate.
        match nonzero.as_slice() {
            [i] => ParamPoint::affine(model.alphas[*i].clone()),
            _ => return Ok(None),
        }
    } else {
        // x_i (u - alpha_i v) = x_j (u - alpha_j v) for every pair i, j.
        let (xi, xj) = (&x[0], &x[1]);
        let (ai, aj) = (&model.alphas[0], &model.alphas[1]);
        ParamPoint::new(&(xi * ai) - &(xj * aj), xi - xj)?
    };
    Ok((curve_point(model, &candidate)? == *p).then_some(candidate))
}
