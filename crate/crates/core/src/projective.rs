//! Points, hyperplanes and point configurations in P^d, with the bracket
//! (maximal-minor) machinery built on them.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, integer_determinant, mod_determinant};
use crate::scalar::{clear_denominators, FieldSpec, Scalar};

/// Scales `coords` so the first nonzero entry is 1.
fn canonicalize(coords: Vec<Scalar>) -> Result<(FieldSpec, Vec<Scalar>)> {
    let first = coords.first().ok_or(Error::ZeroVector)?;
    let field = first.field();
    for c in &coords {
        first.same_field(c)?;
    }
    let lead = coords.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroVector)?;
    let inv = lead.inv().expect("nonzero");
    let scaled = coords.iter().map(|c| c * &inv).collect();
    Ok((field, scaled))
}

fn write_coords(f: &mut fmt::Formatter<'_>, coords: &[Scalar]) -> fmt::Result {
    write!(f, "[{}]", coords.iter().join(":"))
}

/// A point of P^d stored by its canonical homogeneous coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    field: FieldSpec,
    coords: Vec<Scalar>,
}

impl ProjectivePoint {
    /// Builds a point from homogeneous coordinates (not all zero, one field).
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::Invalid("a projective point needs at least 2 coordinates".into()));
        }
        let (field, coords) = canonicalize(coords)?;
        Ok(ProjectivePoint { field, coords })
    }

    pub fn from_i64s(field: FieldSpec, coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// Parses each coordinate with [`FieldSpec::parse`].
    pub fn parse(field: FieldSpec, coords: &[&str]) -> Result<Self> {
        Self::new(coords.iter().map(|c| field.parse(c)).collect::<Result<_>>()?)
    }

    /// The i-th standard basis point e_i of P^d.
    pub fn basis(field: FieldSpec, dim: usize, i: usize) -> Self {
        let coords = (0..=dim).map(|j| if i == j { field.one() } else { field.zero() }).collect();
        ProjectivePoint { field, coords }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Reduction modulo `p` of a rational point, compared projectively: the
    /// coordinates are scaled to a primitive integer vector first.
    pub fn reduce_mod(&self, p: u64) -> Option<ProjectivePoint> {
        let (ints, _) = clear_denominators(&self.coords)?;
        let g = ints.iter().fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
        let f = FieldSpec::Prime { p };
        ProjectivePoint::new(ints.iter().map(|x| f.from_bigint(&(x / &g))).collect()).ok()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.coords)
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

/// A hyperplane of P^d given by its (canonical) coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Hyperplane {
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Invalid("a hyperplane needs at least 2 coefficients".into()));
        }
        let (field, coeffs) = canonicalize(coeffs)?;
        Ok(Hyperplane { field, coeffs })
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Evaluates the linear form at a coordinate vector.
    pub fn evaluate(&self, coords: &[Scalar]) -> Result<Scalar> {
        if coords.len() != self.coeffs.len() {
            return Err(Error::DimensionMismatch { expected: self.coeffs.len(), found: coords.len() });
        }
        let mut acc = self.field.zero();
        for (a, x) in self.coeffs.iter().zip(coords) {
            a.same_field(x)?;
            acc = acc + a * x;
        }
        Ok(acc)
    }

    pub fn contains(&self, p: &ProjectivePoint) -> Result<bool> {
        Ok(self.evaluate(p.coords())?.is_zero())
    }

    /// The same coefficient vector read as a point of the dual space.
    pub fn to_dual_point(&self) -> ProjectivePoint {
        ProjectivePoint { field: self.field, coords: self.coeffs.clone() }
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.coeffs)
    }
}

impl Serialize for Hyperplane {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

/// An ordered tuple of `n >= 1` points of P^d over one field.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(try_from = "ConfigurationJson")]
pub struct Configuration {
    field: FieldSpec,
    dim: usize,
    points: Vec<ProjectivePoint>,
}

impl Configuration {
    pub fn new(field: FieldSpec, dim: usize, points: Vec<ProjectivePoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::PointCount { expected: ">= 1".into(), found: 0 });
        }
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
            }
            if p.field() != field {
                return Err(Error::FieldMismatch(field.name(), p.field().name()));
            }
        }
        Ok(Configuration { field, dim, points })
    }

    /// Infers field and dimension from the first point.
    pub fn from_points(points: Vec<ProjectivePoint>) -> Result<Self> {
        let first = points.first().ok_or(Error::PointCount { expected: ">= 1".into(), found: 0 })?;
        Self::new(first.field(), first.dim(), points)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn into_points(self) -> Vec<ProjectivePoint> {
        self.points
    }

    /// Copy with point `i` (0-based) replaced.
    pub fn with_point(&self, i: usize, p: ProjectivePoint) -> Result<Self> {
        let mut points = self.points.clone();
        *points.get_mut(i).ok_or_else(|| Error::InvalidIndex(format!("point {i}")))? = p;
        Self::new(self.field, self.dim, points)
    }

    /// Bracket of the points at the given 0-based positions, in that order.
    pub fn bracket_at(&self, idx: &[usize]) -> Result<Scalar> {
        let pts = idx
            .iter()
            .map(|&i| self.points.get(i).ok_or_else(|| Error::InvalidIndex(format!("point {i}"))))
            .collect::<Result<Vec<_>>>()?;
        bracket(pts)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarJson {
    Text(String),
    Int(i64),
}

impl ScalarJson {
    fn to_scalar(&self, field: FieldSpec) -> Result<Scalar> {
        match self {
            ScalarJson::Text(t) => field.parse(t),
            ScalarJson::Int(v) => Ok(field.from_i64(*v)),
        }
    }
}

/// Raw coordinates as they appear in JSON (strings or integers).
#[derive(Deserialize)]
#[serde(transparent)]
pub(crate) struct CoordsJson(Vec<ScalarJson>);

impl CoordsJson {
    pub(crate) fn to_scalars(&self, field: FieldSpec) -> Result<Vec<Scalar>> {
        self.0.iter().map(|s| s.to_scalar(field)).collect()
    }
}

#[derive(Deserialize)]
struct ConfigurationJson {
    field: FieldSpec,
    dim: usize,
    points: Vec<CoordsJson>,
}

impl TryFrom<ConfigurationJson> for Configuration {
    type Error = Error;

    fn try_from(raw: ConfigurationJson) -> Result<Self> {
        if let FieldSpec::Prime { p } = raw.field {
            FieldSpec::prime(p)?;
        }
        let points = raw
            .points
            .iter()
            .map(|c| ProjectivePoint::new(c.to_scalars(raw.field)?))
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(raw.field, raw.dim, points)
    }
}

impl Serialize for Configuration {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            field: FieldSpec,
            dim: usize,
            points: &'a [ProjectivePoint],
        }
        Out { field: self.field, dim: self.dim, points: &self.points }.serialize(s)
    }
}

/// Determinant of the matrix whose j-th column holds the canonical
/// coordinates of the j-th point. Needs exactly `d + 1` points of P^d.
pub fn bracket<'a>(points: impl IntoIterator<Item = &'a ProjectivePoint>) -> Result<Scalar> {
    let points: Vec<&ProjectivePoint> = points.into_iter().collect();
    let first = points.first().ok_or(Error::PointCount { expected: "d+1".into(), found: 0 })?;
    let (field, dim) = (first.field(), first.dim());
    for p in &points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
        }
        if p.field() != field {
            return Err(Error::FieldMismatch(field.name(), p.field().name()));
        }
    }
    if points.len() != dim + 1 {
        return Err(Error::PointCount { expected: (dim + 1).to_string(), found: points.len() });
    }
    let cols: Vec<&[Scalar]> = points.iter().map(|p| p.coords()).collect();
    Ok(linalg::determinant(field, &cols))
}

/// Bracket of raw (not canonicalized) coordinate columns.
pub fn bracket_raw(field: FieldSpec, columns: &[Vec<Scalar>]) -> Result<Scalar> {
    let n = columns.len();
    for c in columns {
        if c.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: c.len() });
        }
        for s in c {
            if s.field() != field {
                return Err(Error::FieldMismatch(field.name(), s.field().name()));
            }
        }
    }
    let cols: Vec<&[Scalar]> = columns.iter().map(Vec::as_slice).collect();
    Ok(linalg::determinant(field, &cols))
}

/// Rank of the (d+1) x n coordinate matrix.
pub fn rank(config: &Configuration) -> usize {
    let cols: Vec<&[Scalar]> = config.points.iter().map(|p| p.coords()).collect();
    linalg::rank(config.field, &cols)
}

/// Every subset X of the points spans a space of dimension
/// `min(d + 1, |X|) - 1`.
pub fn is_general_linear_position(config: &Configuration) -> bool {
    let d = config.dim;
    let n = config.len();
    if n <= d + 1 {
        return rank(config) == n;
    }
    let cache = ColumnCache::new(config);
    (0..n).combinations(d + 1).all(|k| !cache.det_is_zero(&k))
}

/// All points lie on a common hyperplane. Needs `n >= d + 1`.
pub fn is_degenerate(config: &Configuration) -> Result<bool> {
    if config.len() < config.dim + 1 {
        return Err(Error::PointCount { expected: format!(">= {}", config.dim + 1), found: config.len() });
    }
    Ok(rank(config) <= config.dim)
}

/// Integer (or residue) columns for repeated bracket evaluation on a fixed
/// configuration. For rationals, canonical point `i` equals
/// `ints[i] / scale[i]`.
pub(crate) enum ColumnCache {
    Integer { cols: Vec<Vec<BigInt>>, scales: Vec<BigInt> },
    Residue { cols: Vec<Vec<u64>>, p: u64 },
}

impl ColumnCache {
    pub(crate) fn new(config: &Configuration) -> Self {
        match config.field {
            FieldSpec::Rationals => {
                let (cols, scales) = config
                    .points
                    .iter()
                    .map(|p| clear_denominators(p.coords()).expect("rational point"))
                    .unzip();
                ColumnCache::Integer { cols, scales }
            }
            FieldSpec::Prime { p } => ColumnCache::Residue {
                cols: config.points.iter().map(|pt| linalg::residues(pt.coords(), p)).collect(),
                p,
            },
        }
    }

    /// Bracket of the (0-based) columns `idx`, in the given order.
    pub(crate) fn det(&self, idx: &[usize]) -> Scalar {
        match self {
            ColumnCache::Integer { cols, scales } => {
                let m = idx.iter().map(|&i| cols[i].clone()).collect();
                let det = integer_determinant(m);
                if det.is_zero() {
                    return Scalar::Rational(BigRational::zero());
                }
                let scale = idx.iter().fold(BigInt::one(), |acc, &i| acc * &scales[i]);
                Scalar::Rational(BigRational::new(det, scale))
            }
            ColumnCache::Residue { cols, p } => {
                let m = idx.iter().map(|&i| cols[i].clone()).collect();
                Scalar::Mod { value: mod_determinant(m, *p), p: *p }
            }
        }
    }

    pub(crate) fn det_is_zero(&self, idx: &[usize]) -> bool {
        match self {
            ColumnCache::Integer { cols, .. } => {
                integer_determinant(idx.iter().map(|&i| cols[i].clone()).collect()).is_zero()
            }
            ColumnCache::Residue { .. } => self.det(idx).is_zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn pt(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_i64s(Q, c).unwrap()
    }

    fn conic(ts: &[i64]) -> Configuration {
        Configuration::from_points(ts.iter().map(|&t| pt(&[1, 2 * t, t * t])).collect()).unwrap()
    }

    #[test]
    fn canonical_form() {
        let p = pt(&[0, 3, 6]);
        assert_eq!(p.to_string(), "[0:1:2]");
        assert_eq!(p, pt(&[0, -1, -2]));
        assert_eq!(ProjectivePoint::from_i64s(Q, &[0, 0]), Err(Error::ZeroVector));
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(ProjectivePoint::from_i64s(f, &[0, 3, 1]).unwrap().to_string(), "[0:1:5]");
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket([&pt(&[1, 0, 0]), &pt(&[0, 1, 0]), &pt(&[0, 0, 1])]).unwrap().to_string(), "1");
        assert!(bracket([&pt(&[1, 0, 0]), &pt(&[1, 0, 0]), &pt(&[0, 0, 1])]).unwrap().is_zero());
        // Vandermonde: (3-2)(5-2)(5-3) = 6
        let v = bracket([&pt(&[1, 2, 4]), &pt(&[1, 3, 9]), &pt(&[1, 5, 25])]).unwrap();
        assert_eq!(v.to_string(), "6");
    }

    #[test]
    fn bracket_errors() {
        let err = bracket([&pt(&[1, 0, 0]), &pt(&[0, 1])]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        let f = FieldSpec::prime(7).unwrap();
        let mixed = ProjectivePoint::from_i64s(f, &[0, 1]).unwrap();
        assert!(matches!(bracket([&pt(&[1, 0]), &mixed]), Err(Error::FieldMismatch(..))));
        assert!(matches!(bracket([&pt(&[1, 0])]), Err(Error::PointCount { .. })));
    }

    #[test]
    fn rank_examples() {
        let frame: Vec<_> = (0..4).map(|i| ProjectivePoint::basis(Q, 3, i)).collect();
        assert_eq!(rank(&Configuration::from_points(frame).unwrap()), 4);
        let line = Configuration::from_points(vec![pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[1, 1, 0])]).unwrap();
        assert_eq!(rank(&line), 2);
        assert_eq!(rank(&conic(&[0, 1, 2])), 3);
    }

    #[test]
    fn general_position_examples() {
        assert!(is_general_linear_position(&conic(&[0, 1, 2, 3, 4, 5])));
        assert!(!is_general_linear_position(&conic(&[0, 1, 2, 2, 4, 5])));
        let mut frame: Vec<_> = (0..4).map(|i| ProjectivePoint::basis(Q, 3, i)).collect();
        frame.push(pt(&[1, 1, 1, 1]));
        assert!(is_general_linear_position(&Configuration::from_points(frame).unwrap()));
        // fewer than d+1 points: just independence
        assert!(is_general_linear_position(&conic(&[0, 1])));
        let repeated = Configuration::from_points(vec![pt(&[1, 0, 0]), pt(&[2, 0, 0])]).unwrap();
        assert!(!is_general_linear_position(&repeated));
    }

    #[test]
    fn degeneracy_examples() {
        let line = Configuration::from_points(
            [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0]].iter().map(|c| pt(c)).collect(),
        )
        .unwrap();
        assert!(is_degenerate(&line).unwrap());
        assert!(!is_degenerate(&conic(&[0, 1, 2, 3, 4, 5])).unwrap());
        let plane = Configuration::from_points(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 0], [1, 2, 3, 0]]
                .iter()
                .map(|c| pt(c))
                .collect(),
        )
        .unwrap();
        assert!(is_degenerate(&plane).unwrap());
        assert!(is_degenerate(&conic(&[0, 1])).is_err());
    }

    #[test]
    fn hyperplane_incidence() {
        let h = Hyperplane::new(vec![Q.from_i64(1), Q.from_i64(-1), Q.from_i64(1)]).unwrap();
        assert!(h.contains(&pt(&[1, 1, 0])).unwrap());
        assert!(!h.contains(&pt(&[1, 0, 0])).unwrap());
        assert!(h.contains(&pt(&[1, 0, 0, 0])).is_err());
    }

    #[test]
    fn configuration_json_round_trip() {
        let text = r#"{"field":{"kind":"rationals"},"dim":2,"points":[["1","1/2",3],[0,"-2","4"]]}"#;
        let c: Configuration = serde_json::from_str(text).unwrap();
        assert_eq!(c.points()[0].to_string(), "[1:1/2:3]");
        assert_eq!(c.points()[1].to_string(), "[0:1:-2]");
        let out = serde_json::to_string(&c).unwrap();
        assert_eq!(
            out,
            r#"{"field":{"kind":"rationals"},"dim":2,"points":[["1","1/2","3"],["0","1","-2"]]}"#
        );
        let back: Configuration = serde_json::from_str(&out).unwrap();
        assert_eq!(back, c);

        let bad_dim = r#"{"field":{"kind":"rationals"},"dim":3,"points":[["1","0","0"]]}"#;
        assert!(serde_json::from_str::<Configuration>(bad_dim).is_err());
        let not_prime = r#"{"field":{"kind":"prime","p":9},"dim":1,"points":[["1","0"]]}"#;
        assert!(serde_json::from_str::<Configuration>(not_prime).is_err());
    }

    #[test]
    fn column_cache_matches_bracket() {
        let c = Configuration::from_points(vec![
            ProjectivePoint::parse(Q, &["1/2", "3", "1/3"]).unwrap(),
            ProjectivePoint::parse(Q, &["2", "-1/5", "7"]).unwrap(),
            ProjectivePoint::parse(Q, &["0", "4/9", "1"]).unwrap(),
        ])
        .unwrap();
        let cache = ColumnCache::new(&c);
        for perm in [[0, 1, 2], [2, 0, 1], [1, 0, 2]] {
            assert_eq!(cache.det(&perm), c.bracket_at(&perm).unwrap());
        }
    }
}
