//! Two osculating simplices of a rational normal curve and the certificate
//! that their 2d+2 vertices lie on another rational normal curve.
//!
//! Points `1..=d+1` form the first group and `d+2..=2d+2` the second. Vertex
//! `R_i` is the common point of the osculating hyperplanes at the other
//! points of the same group.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::projective::{is_general_linear_position, Configuration, CoordsJson, Hyperplane, ProjectivePoint};
use crate::rnc::{curve_contains, fit_rnc, osculating_hyperplane, simplex_vertex, veronese_embed, ParamPoint};
use crate::scalar::{FieldSpec, Scalar};
use crate::wdn::{failing_indices, selected_indices, BracketTable, PsiIndex, WdnOptions};

pub const CERT_SCHEMA: &str = "vonstaudt-cert/1";
pub const DEFAULT_HEIGHT: u64 = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VonStaudtInstance {
    d: usize,
    field: FieldSpec,
    seed: Option<u64>,
    q: Vec<ParamPoint>,
    p: Vec<ProjectivePoint>,
    planes: Vec<Hyperplane>,
    r: Configuration,
}

impl VonStaudtInstance {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn params(&self) -> &[ParamPoint] {
        &self.q
    }

    pub fn curve_points(&self) -> &[ProjectivePoint] {
        &self.p
    }

    pub fn planes(&self) -> &[Hyperplane] {
        &self.planes
    }

    /// The 2d+2 vertices, first group then second.
    pub fn vertices(&self) -> &Configuration {
        &self.r
    }

    /// Copy with vertex `i` (0-based) replaced; everything else unchanged.
    pub fn replace_vertex(&self, i: usize, point: ProjectivePoint) -> Result<Self> {
        Ok(VonStaudtInstance { r: self.r.with_point(i, point)?, ..self.clone() })
    }

    /// 0-based indices of the hyperplanes through vertex `i`.
    pub fn planes_through(&self, i: usize) -> Result<Vec<usize>> {
        let v = self.r.points().get(i).ok_or_else(|| Error::InvalidIndex(format!("vertex {i}")))?;
        let mut out = Vec::new();
        for (j, h) in self.planes.iter().enumerate() {
            if h.contains(v)? {
                out.push(j);
            }
        }
        Ok(out)
    }

    /// Reduces the parameters mod `p` and rebuilds the instance over F_p.
    /// Fails if a parameter has a denominator divisible by `p` or two
    /// parameters collide.
    pub fn reduce_mod(&self, p: u64) -> Result<Self> {
        let field = FieldSpec::prime(p)?;
        if self.field != FieldSpec::Rationals {
            return Err(Error::FieldMismatch("rationals".into(), self.field.name()));
        }
        let q = self
            .q
            .iter()
            .map(|t| {
                let a = t.a().reduce_mod(p);
                let b = t.b().reduce_mod(p);
                match (a, b) {
                    (Some(a), Some(b)) => ParamPoint::new(a, b),
                    _ => Err(Error::DivisionByZero),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let mut inst = build_instance(self.d, q, field)?;
        inst.seed = self.seed;
        Ok(inst)
    }
}

fn group_of(d: usize, i: usize) -> std::ops::Range<usize> {
    if i <= d {
        0..d + 1
    } else {
        d + 1..2 * d + 2
    }
}

/// All derived data for the 2d+2 parameters `q` (first group first).
pub fn build_instance(d: usize, q: Vec<ParamPoint>, field: FieldSpec) -> Result<VonStaudtInstance> {
    if d < 2 {
        return Err(Error::Invalid(format!("d = {d} < 2")));
    }
    field.require_characteristic_above(d)?;
    if q.len() != 2 * d + 2 {
        return Err(Error::PointCount { expected: (2 * d + 2).to_string(), found: q.len() });
    }
    for (i, t) in q.iter().enumerate() {
        if t.field() != field {
            return Err(Error::FieldMismatch(field.name(), t.field().name()));
        }
        if let Some(j) = q[..i].iter().position(|s| s == t) {
            return Err(Error::RepeatedParameter(j, i));
        }
    }
    let p = q.iter().map(|t| veronese_embed(t, d)).collect::<Result<Vec<_>>>()?;
    let planes = q.iter().map(|t| osculating_hyperplane(t, d)).collect::<Result<Vec<_>>>()?;
    let r = (0..2 * d + 2)
        .map(|i| {
            let others: Vec<ParamPoint> = group_of(d, i).filter(|&j| j != i).map(|j| q[j].clone()).collect();
            simplex_vertex(&others)
        })
        .collect::<Result<Vec<_>>>()?;
    let r = Configuration::new(field, d, r)?;
    Ok(VonStaudtInstance { d, field, seed: None, q, p, planes, r })
}

/// Seeded random parameters: rationals `num/den` with `|num| <= height` and
/// `1 <= den <= height` (`den = 1` when `integral`), or distinct residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleOptions {
    pub height: u64,
    pub integral: bool,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { height: DEFAULT_HEIGHT, integral: false }
    }
}

pub fn sample_params(d: usize, field: FieldSpec, seed: u64, opts: &SampleOptions) -> Result<Vec<ParamPoint>> {
    sample_distinct_params(2 * d + 2, field, seed, opts)
}

/// `n` pairwise distinct affine parameters, drawn as for `sample_params`.
pub fn sample_distinct_params(n: usize, field: FieldSpec, seed: u64, opts: &SampleOptions) -> Result<Vec<ParamPoint>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match field {
        FieldSpec::Prime { p } => {
            if p <= n as u64 {
                return Err(Error::CharacteristicTooSmall { p, bound: n });
            }
            let picks = index::sample(&mut rng, p as usize, n);
            Ok(picks.iter().map(|t| ParamPoint::affine(field.from_i64(t as i64))).collect())
        }
        FieldSpec::Rationals => {
            let h = opts.height as i64;
            let available = if opts.integral { 2 * h + 1 } else { 2 * h * h + 1 };
            if h < 1 || available < n as i64 {
                return Err(Error::Invalid(format!("height {h} cannot give {n} distinct parameters")));
            }
            let mut out: Vec<ParamPoint> = Vec::with_capacity(n);
            while out.len() < n {
                let num = rng.gen_range(-h..=h);
                let den = if opts.integral { 1 } else { rng.gen_range(1..=h) };
                let t = ParamPoint::affine(field.parse(&format!("{num}/{den}"))?);
                if !out.contains(&t) {
                    out.push(t);
                }
            }
            Ok(out)
        }
    }
}

/// `sample_instance_with` at the default height.
pub fn sample_instance(d: usize, field: FieldSpec, seed: u64) -> Result<VonStaudtInstance> {
    sample_instance_with(d, field, seed, &SampleOptions::default())
}

/// A seeded instance. A vertex set that is not in general linear position
/// is reported as an error, never resampled.
pub fn sample_instance_with(d: usize, field: FieldSpec, seed: u64, opts: &SampleOptions) -> Result<VonStaudtInstance> {
    field.require_characteristic_above(d)?;
    let q = sample_params(d, field, seed, opts)?;
    let mut inst = build_instance(d, q, field)?;
    inst.seed = Some(seed);
    if !is_general_linear_position(&inst.r) {
        return Err(Error::DegenerateSample {
            seed: Some(seed),
            detail: "vertices are not in general linear position".into(),
        });
    }
    Ok(inst)
}

/// The osculating hyperplanes read as 2d+2 points of the dual space.
pub fn dual_configuration(inst: &VonStaudtInstance) -> Configuration {
    let pts = inst.planes.iter().map(Hyperplane::to_dual_point).collect();
    Configuration::new(inst.field, inst.d, pts).expect("planes share field and dimension")
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub castelnuovo: bool,
    pub wdn: WdnOptions,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleInfo {
    pub k: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub schema: &'static str,
    pub d: usize,
    pub field: FieldSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampled: Option<SampleInfo>,
    pub glp_ok: bool,
    pub psi_total: usize,
    pub psi_zero: usize,
    pub psi_failures: Vec<PsiIndex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub castelnuovo_ok: Option<bool>,
    pub verdict: bool,
}

/// General position of the vertices plus every (or a sample of) `psi`.
pub fn verify_instance(inst: &VonStaudtInstance, with_castelnuovo: bool) -> Certificate {
    verify_instance_with(inst, &VerifyOptions { castelnuovo: with_castelnuovo, ..Default::default() })
}

pub fn verify_instance_with(inst: &VonStaudtInstance, opts: &VerifyOptions) -> Certificate {
    let (d, n) = (inst.d, 2 * inst.d + 2);
    let table = BracketTable::full(&inst.r, opts.wdn.parallel);
    let glp_ok = table.all_nonzero();
    let indices = selected_indices(d, n, &opts.wdn).expect("n = 2d+2 >= d+4");
    let psi_failures = failing_indices(&table, &indices, opts.wdn.parallel).expect("table covers all brackets");
    let castelnuovo_ok = opts.castelnuovo.then(|| castelnuovo_check(&inst.r));
    let psi_total = indices.len();
    let psi_zero = psi_total - psi_failures.len();
    let verdict = glp_ok && psi_failures.is_empty() && castelnuovo_ok.unwrap_or(true);
    Certificate {
        schema: CERT_SCHEMA,
        d,
        field: inst.field,
        seed: inst.seed,
        sampled: opts.wdn.sample.map(|(k, seed)| SampleInfo { k, seed }),
        glp_ok,
        psi_total,
        psi_zero,
        psi_failures,
        castelnuovo_ok,
        verdict,
    }
}

/// Fits the curve through the first d+3 points and checks the rest.
pub fn castelnuovo_check(config: &Configuration) -> bool {
    let d = config.dim();
    let Ok(head) = Configuration::new(config.field(), d, config.points()[..d + 3].to_vec()) else { return false };
    let Ok(model) = fit_rnc(&head) else { return false };
    config.points()[d + 3..].iter().all(|p| matches!(curve_contains(&model, p), Ok(Some(_))))
}

/// A random point that keeps the vertices in general linear position and
/// is off the curve through the other vertices, put in place of vertex `i`.
/// Coordinates are integers in `[-height, height]` (residues over F_p).
pub fn perturb_vertex(inst: &VonStaudtInstance, i: usize, seed: u64, height: u64) -> Result<VonStaudtInstance> {
    let (d, field) = (inst.d, inst.field);
    if i >= inst.r.len() {
        return Err(Error::InvalidIndex(format!("vertex {i}")));
    }
    let others: Vec<ProjectivePoint> =
        inst.r.points().iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).take(d + 3).collect();
    let model = fit_rnc(&Configuration::new(field, d, others)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = height.max(1) as i64;
    for _ in 0..10_000 {
        let coords: Vec<Scalar> = (0..=d).map(|_| field.from_i64(rng.gen_range(-h..=h))).collect();
        let Ok(point) = ProjectivePoint::new(coords) else { continue };
        if curve_contains(&model, &point)?.is_some() {
            continue;
        }
        let candidate = inst.replace_vertex(i, point)?;
        if is_general_linear_position(&candidate.r) {
            return Ok(VonStaudtInstance { seed: None, ..candidate });
        }
    }
    Err(Error::DegenerateSample { seed: Some(seed), detail: format!("no usable replacement for vertex {i}") })
}

#[derive(Serialize)]
struct InstanceOut<'a> {
    d: usize,
    field: FieldSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(rename = "Q")]
    q: &'a [ParamPoint],
    #[serde(rename = "P")]
    p: &'a [ProjectivePoint],
    planes: &'a [Hyperplane],
    #[serde(rename = "R")]
    r: &'a [ProjectivePoint],
}

impl Serialize for VonStaudtInstance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        InstanceOut {
            d: self.d,
            field: self.field,
            seed: self.seed,
            q: &self.q,
            p: &self.p,
            planes: &self.planes,
            r: self.r.points(),
        }
        .serialize(s)
    }
}

#[derive(Deserialize)]
struct InstanceJson {
    d: usize,
    field: FieldSpec,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(rename = "Q")]
    q: Vec<CoordsJson>,
    #[serde(rename = "P", default)]
    p: Option<Vec<CoordsJson>>,
    #[serde(default)]
    planes: Option<Vec<CoordsJson>>,
    #[serde(rename = "R", default)]
    r: Option<Vec<CoordsJson>>,
}

impl<'de> Deserialize<'de> for VonStaudtInstance {
    /// `Q` is required; `P` and `planes` must match it when present; `R` is
    /// taken as given (so edited vertices can be checked) and derived when
    /// absent.
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = InstanceJson::deserialize(de)?;
        from_json(raw).map_err(serde::de::Error::custom)
    }
}

fn from_json(raw: InstanceJson) -> Result<VonStaudtInstance> {
    if let FieldSpec::Prime { p } = raw.field {
        FieldSpec::prime(p)?;
    }
    let field = raw.field;
    let points = |rows: &[CoordsJson]| -> Result<Vec<ProjectivePoint>> {
        rows.iter().map(|c| ProjectivePoint::new(c.to_scalars(field)?)).collect()
    };
    let q = raw
        .q
        .iter()
        .map(|c| match c.to_scalars(field)?.as_slice() {
            [a, b] => ParamPoint::new(a.clone(), b.clone()),
            other => Err(Error::DimensionMismatch { expected: 1, found: other.len().saturating_sub(1) }),
        })
        .collect::<Result<Vec<_>>>()?;
    let mut inst = build_instance(raw.d, q, field)?;
    inst.seed = raw.seed;
    if let Some(p) = raw.p {
        if points(&p)? != inst.p {
            return Err(Error::Invalid("P does not match the curve points of Q".into()));
        }
    }
    if let Some(planes) = raw.planes {
        let given = planes
            .iter()
            .map(|c| Hyperplane::new(c.to_scalars(field)?))
            .collect::<Result<Vec<_>>>()?;
        if given != inst.planes {
            return Err(Error::Invalid("planes do not match the osculating hyperplanes of Q".into()));
        }
    }
    if let Some(r) = raw.r {
        inst.r = Configuration::new(field, raw.d, points(&r)?)?;
        if inst.r.len() != 2 * raw.d + 2 {
            return Err(Error::PointCount { expected: (2 * raw.d + 2).to_string(), found: inst.r.len() });
        }
    }
    Ok(inst)
}
