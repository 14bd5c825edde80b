//! The bracket equations `psi_{I,J}` cutting out `W_{d,n}`, their exact
//! evaluation on point configurations, and the rational-normal-curve test for
//! configurations in general linear position.
//!
//! For `J` a `(d+4)`-subset of `[n]`, `I = {i1 < ... < i6}` a 6-subset of `J`
//! and `J \ I = {j1 < ... < j_(d-2)}`:
//!
//! ```text
//! psi = |i4 i5 i6 j..| |i2 i3 i6 j..| |i1 i3 i5 j..| |i1 i2 i4 j..|
//!     - |i3 i5 i6 j..| |i2 i4 i6 j..| |i1 i4 i5 j..| |i1 i2 i3 j..|
//! ```
//!
//! Indices are 1-based throughout this module, as in the formula.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::inversion_parity;
use crate::error::{Error, Result};
use crate::linalg::{integer_determinant, mod_determinant};
use crate::projective::{ColumnCache, Configuration};
use crate::scalar::Scalar;

/// Positions (1-based, into `I`) of the three `I`-entries of each bracket of
/// the first monomial.
pub const FIRST_MONOMIAL: [[usize; 3]; 4] = [[4, 5, 6], [2, 3, 6], [1, 3, 5], [1, 2, 4]];
/// Same for the second monomial.
pub const SECOND_MONOMIAL: [[usize; 3]; 4] = [[3, 5, 6], [2, 4, 6], [1, 4, 5], [1, 2, 3]];

/// One equation `psi_{I,J}` of `W_{d,n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PsiIndex {
    d: usize,
    n: usize,
    j: Vec<usize>,
    i: Vec<usize>,
    complement: Vec<usize>,
}

impl PsiIndex {
    /// Validates `J` (size d+4, within 1..=n) and `I` (size 6, inside `J`).
    /// Both are sorted on the way in.
    pub fn new(d: usize, n: usize, mut j: Vec<usize>, mut i: Vec<usize>) -> Result<Self> {
        j.sort_unstable();
        i.sort_unstable();
        let bad = |m: String| Error::InvalidIndex(m);
        if d < 2 {
            return Err(bad(format!("d = {d} < 2")));
        }
        if j.len() != d + 4 || j.windows(2).any(|w| w[0] == w[1]) {
            return Err(bad(format!("J must be {} distinct indices, got {j:?}", d + 4)));
        }
        if j.first() == Some(&0) || j.last().is_some_and(|&x| x > n) {
            return Err(bad(format!("J = {j:?} not within 1..={n}")));
        }
        if i.len() != 6 || i.windows(2).any(|w| w[0] == w[1]) || !i.iter().all(|x| j.contains(x)) {
            return Err(bad(format!("I = {i:?} must be 6 distinct elements of J")));
        }
        let complement = j.iter().copied().filter(|x| !i.contains(x)).collect();
        Ok(PsiIndex { d, n, j, i, complement })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn j(&self) -> &[usize] {
        &self.j
    }

    pub fn i(&self) -> &[usize] {
        &self.i
    }

    /// `J \ I` in increasing order.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    fn columns(&self, triple: &[usize; 3]) -> Vec<usize> {
        triple.iter().map(|&t| self.i[t - 1]).chain(self.complement.iter().copied()).collect()
    }

    /// Column lists (1-based, in formula order) of the four brackets of each
    /// monomial.
    pub fn bracket_columns(&self) -> [Vec<Vec<usize>>; 2] {
        [
            FIRST_MONOMIAL.iter().map(|t| self.columns(t)).collect(),
            SECOND_MONOMIAL.iter().map(|t| self.columns(t)).collect(),
        ]
    }
}

impl Serialize for PsiIndex {
    /// `{"J": [...], "I": [...]}`
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(rename = "J")]
            j: &'a [usize],
            #[serde(rename = "I")]
            i: &'a [usize],
        }
        Out { j: &self.j, i: &self.i }.serialize(s)
    }
}

fn bracket_label(cols: &[usize]) -> String {
    if cols.iter().all(|&c| c < 10) {
        format!("|{}|", cols.iter().join(""))
    } else {
        format!("|{}|", cols.iter().join(" "))
    }
}

impl fmt::Display for PsiIndex {
    /// The equation in bracket notation, e.g. `|4567||2367||1357||1247| - |3567||2467||1457||1237|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [m1, m2] = self.bracket_columns();
        let side = |m: &[Vec<usize>]| m.iter().map(|c| bracket_label(c)).join("");
        write!(f, "{} - {}", side(&m1), side(&m2))
    }
}

/// Every `psi_{I,J}` for `n` points in P^d, ordered lexicographically by `J`
/// and then by `I`.
pub fn enumerate_psi_indices(d: usize, n: usize) -> Result<Vec<PsiIndex>> {
    if d < 2 {
        return Err(Error::Invalid(format!("d = {d} < 2")));
    }
    if n < d + 4 {
        return Err(Error::PointCount { expected: format!(">= {}", d + 4), found: n });
    }
    let mut out = Vec::new();
    for j in (1..=n).combinations(d + 4) {
        for i in j.iter().copied().combinations(6) {
            let complement = j.iter().copied().filter(|x| !i.contains(x)).collect();
            out.push(PsiIndex { d, n, j: j.clone(), i, complement });
        }
    }
    Ok(out)
}

/// `k` indices drawn uniformly without replacement (seeded), returned in
/// enumeration order. Returns all of them when `k` is at least the total.
pub fn sample_psi_indices(d: usize, n: usize, k: usize, seed: u64) -> Result<Vec<PsiIndex>> {
    let all = enumerate_psi_indices(d, n)?;
    if k >= all.len() {
        return Ok(all);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picks = index::sample(&mut rng, all.len(), k).into_vec();
    picks.sort_unstable();
    Ok(picks.into_iter().map(|p| all[p].clone()).collect())
}

/// Value of one equation on one configuration, with both monomials kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiReport {
    pub index: PsiIndex,
    pub m1: Scalar,
    pub m2: Scalar,
    pub value: Scalar,
}

impl PsiReport {
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl Serialize for PsiReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(rename = "J")]
            j: &'a [usize],
            #[serde(rename = "I")]
            i: &'a [usize],
            m1: &'a Scalar,
            m2: &'a Scalar,
            value: &'a Scalar,
        }
        Out { j: &self.index.j, i: &self.index.i, m1: &self.m1, m2: &self.m2, value: &self.value }.serialize(s)
    }
}

fn check_matches(config: &Configuration, d: usize, n: usize) -> Result<()> {
    if config.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: config.dim() });
    }
    if config.len() != n {
        return Err(Error::PointCount { expected: n.to_string(), found: config.len() });
    }
    Ok(())
}

/// Product of brackets, stopping at the first zero factor.
fn monomial(config_one: Scalar, mut factors: impl Iterator<Item = Scalar>) -> Scalar {
    let mut acc = config_one;
    for f in factors.by_ref() {
        if f.is_zero() {
            return f;
        }
        acc = &acc * &f;
    }
    acc
}

/// Evaluates `psi_{I,J}` on the canonical coordinates of `config`.
pub fn psi_eval(config: &Configuration, idx: &PsiIndex) -> Result<PsiReport> {
    check_matches(config, idx.d, idx.n)?;
    let [c1, c2] = idx.bracket_columns();
    let one = config.field().one();
    let zero_based = |c: &Vec<usize>| c.iter().map(|x| x - 1).collect::<Vec<_>>();
    let mut factor = |c: &Vec<usize>| config.bracket_at(&zero_based(c)).expect("validated configuration");
    let m1 = monomial(one.clone(), c1.iter().map(&mut factor));
    let m2 = monomial(one, c2.iter().map(&mut factor));
    let value = &m1 - &m2;
    Ok(PsiReport { index: idx.clone(), m1, m2, value })
}

fn subset_key(cols: &[usize]) -> u64 {
    cols.iter().fold(0u64, |k, &c| k | (1u64 << c))
}

enum Entries {
    /// Integer determinants of the primitive columns; the true bracket is the
    /// determinant divided by the product of the column scales.
    Integer { dets: HashMap<u64, BigInt>, scales: Vec<BigInt> },
    Residue { dets: HashMap<u64, u64>, p: u64 },
}

/// Brackets of sorted `(d+1)`-subsets of one configuration, computed once
/// and shared by every equation and by the general-position test. At most
/// 64 points.
pub struct BracketTable {
    entries: Entries,
}

impl BracketTable {
    /// Brackets for the given 0-based subsets (sorted or not).
    pub fn compute(config: &Configuration, subsets: Vec<Vec<usize>>, parallel: bool) -> Self {
        assert!(config.len() <= 64, "bracket tables hold at most 64 points");
        fn build<T: Send>(subsets: Vec<Vec<usize>>, parallel: bool, f: impl Fn(&[usize]) -> T + Sync) -> HashMap<u64, T> {
            let one = |mut k: Vec<usize>| {
                k.sort_unstable();
                (subset_key(&k), f(&k))
            };
            if parallel {
                subsets.into_par_iter().map(one).collect()
            } else {
                subsets.into_iter().map(one).collect()
            }
        }
        let entries = match ColumnCache::new(config) {
            ColumnCache::Integer { cols, scales } => {
                let dets = build(subsets, parallel, |k| integer_determinant(k.iter().map(|&i| cols[i].clone()).collect()));
                Entries::Integer { dets, scales }
            }
            ColumnCache::Residue { cols, p } => {
                let dets = build(subsets, parallel, |k| mod_determinant(k.iter().map(|&i| cols[i].clone()).collect(), p));
                Entries::Residue { dets, p }
            }
        };
        BracketTable { entries }
    }

    /// All `C(n, d+1)` brackets.
    pub fn full(config: &Configuration, parallel: bool) -> Self {
        let subsets = (0..config.len()).combinations(config.dim() + 1).collect();
        Self::compute(config, subsets, parallel)
    }

    /// Brackets needed by the listed equations.
    pub fn for_indices(config: &Configuration, indices: &[PsiIndex], parallel: bool) -> Self {
        let mut subsets: Vec<Vec<usize>> = indices
            .iter()
            .flat_map(|idx| {
                let [a, b] = idx.bracket_columns();
                a.into_iter().chain(b)
            })
            .map(|mut c| {
                c.sort_unstable();
                c.iter().map(|x| x - 1).collect()
            })
            .collect();
        subsets.sort_unstable();
        subsets.dedup();
        Self::compute(config, subsets, parallel)
    }

    /// Bracket of the 0-based `cols` in the given order.
    pub fn get(&self, cols: &[usize]) -> Option<Scalar> {
        let key = subset_key(cols);
        let odd = inversion_parity(cols) == 1;
        Some(match &self.entries {
            Entries::Integer { dets, scales } => {
                let det = dets.get(&key)?;
                if det.is_zero() {
                    return Some(Scalar::Rational(BigRational::zero()));
                }
                let scale = cols.iter().fold(BigInt::one(), |acc, &i| acc * &scales[i]);
                let v = BigRational::new(if odd { -det } else { det.clone() }, scale);
                Scalar::Rational(v)
            }
            Entries::Residue { dets, p } => {
                let v = *dets.get(&key)?;
                let v = if odd && v != 0 { p - v } else { v };
                Scalar::Mod { value: v, p: *p }
            }
        })
    }

    /// Whether `psi` vanishes, without forming exact bracket values. Each
    /// point occurs equally often in both monomials, so the column scales
    /// cancel and integer determinants suffice.
    pub fn psi_is_zero(&self, idx: &PsiIndex) -> Option<bool> {
        let [c1, c2] = idx.bracket_columns();
        let zero_based = |c: &Vec<usize>| -> Vec<usize> { c.iter().map(|x| x - 1).collect() };
        match &self.entries {
            Entries::Integer { dets, .. } => {
                let side = |cols: &[Vec<usize>]| -> Option<BigInt> {
                    let mut acc = BigInt::one();
                    for c in cols {
                        let c = zero_based(c);
                        let v = dets.get(&subset_key(&c))?;
                        if v.is_zero() {
                            return Some(BigInt::zero());
                        }
                        acc *= v;
                        if inversion_parity(&c) == 1 {
                            acc = -acc;
                        }
                    }
                    Some(acc)
                };
                Some(side(&c1)? == side(&c2)?)
            }
            Entries::Residue { dets, p } => {
                let side = |cols: &[Vec<usize>]| -> Option<u64> {
                    let mut acc = 1u128;
                    for c in cols {
                        let c = zero_based(c);
                        let mut v = *dets.get(&subset_key(&c))? as u128;
                        if inversion_parity(&c) == 1 {
                            v = (*p as u128 - v) % *p as u128;
                        }
                        acc = acc * v % *p as u128;
                    }
                    Some(acc as u64)
                };
                Some(side(&c1)? == side(&c2)?)
            }
        }
    }

    /// True when every stored bracket is nonzero.
    pub fn all_nonzero(&self) -> bool {
        match &self.entries {
            Entries::Integer { dets, .. } => dets.values().all(|v| !v.is_zero()),
            Entries::Residue { dets, .. } => dets.values().all(|&v| v != 0),
        }
    }

    pub fn len(&self) -> usize {
        match &self.entries {
            Entries::Integer { dets, .. } => dets.len(),
            Entries::Residue { dets, .. } => dets.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `psi_eval` against a precomputed table.
pub fn psi_eval_cached(table: &BracketTable, one: &Scalar, idx: &PsiIndex) -> Result<PsiReport> {
    let [c1, c2] = idx.bracket_columns();
    let lookup = |c: &Vec<usize>| {
        let zb: Vec<usize> = c.iter().map(|x| x - 1).collect();
        table.get(&zb).ok_or_else(|| Error::InvalidIndex(format!("bracket {c:?} not in table")))
    };
    let f1 = c1.iter().map(lookup).collect::<Result<Vec<_>>>()?;
    let f2 = c2.iter().map(lookup).collect::<Result<Vec<_>>>()?;
    let m1 = monomial(one.clone(), f1.into_iter());
    let m2 = monomial(one.clone(), f2.into_iter());
    let value = &m1 - &m2;
    Ok(PsiReport { index: idx.clone(), m1, m2, value })
}

/// Indices (from `indices`, in order) of the equations that do not vanish.
pub fn failing_indices(table: &BracketTable, indices: &[PsiIndex], parallel: bool) -> Result<Vec<PsiIndex>> {
    let check = |idx: &PsiIndex| -> Result<Option<PsiIndex>> {
        let zero = table
            .psi_is_zero(idx)
            .ok_or_else(|| Error::InvalidIndex(format!("brackets of {idx} not in table")))?;
        Ok((!zero).then(|| idx.clone()))
    };
    let found: Vec<Option<PsiIndex>> = if parallel {
        indices.par_iter().map(check).collect::<Result<_>>()?
    } else {
        indices.iter().map(check).collect::<Result<_>>()?
    };
    Ok(found.into_iter().flatten().collect())
}

/// Which equations to evaluate and whether to use the rayon pool.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WdnOptions {
    /// `(k, seed)`: evaluate a seeded uniform sample of `k` equations.
    pub sample: Option<(usize, u64)>,
    pub parallel: bool,
}

/// Outcome of evaluating the equations of `W_{d,n}` on a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub reports: Vec<PsiReport>,
}

impl Membership {
    pub fn failures(&self) -> impl Iterator<Item = &PsiReport> {
        self.reports.iter().filter(|r| !r.is_zero())
    }
}

pub(crate) fn selected_indices(d: usize, n: usize, opts: &WdnOptions) -> Result<Vec<PsiIndex>> {
    match opts.sample {
        Some((k, seed)) => sample_psi_indices(d, n, k, seed),
        None => enumerate_psi_indices(d, n),
    }
}

/// Evaluates `indices` on `config` using `table`; output order follows `indices`.
pub fn evaluate_with_table(
    config: &Configuration,
    table: &BracketTable,
    indices: &[PsiIndex],
    parallel: bool,
) -> Result<Membership> {
    let one = config.field().one();
    let reports: Vec<PsiReport> = if parallel {
        indices.par_iter().map(|idx| psi_eval_cached(table, &one, idx)).collect::<Result<_>>()?
    } else {
        indices.iter().map(|idx| psi_eval_cached(table, &one, idx)).collect::<Result<_>>()?
    };
    let member = reports.iter().all(PsiReport::is_zero);
    Ok(Membership { member, reports })
}

/// Evaluates every equation of `W_{d,n}` (all of them, serially).
pub fn wdn_membership(config: &Configuration) -> Result<Membership> {
    wdn_membership_with(config, &WdnOptions::default())
}

pub fn wdn_membership_with(config: &Configuration, opts: &WdnOptions) -> Result<Membership> {
    let indices = selected_indices(config.dim(), config.len(), opts)?;
    let table = BracketTable::for_indices(config, &indices, opts.parallel);
    evaluate_with_table(config, &table, &indices, opts.parallel)
}

/// General linear position plus membership in `W_{d,n}`: for `n >= d + 4`
/// this certifies that the points lie on a rational normal curve.
pub fn lies_on_rnc(config: &Configuration) -> Result<bool> {
    lies_on_rnc_with(config, &WdnOptions::default())
}

pub fn lies_on_rnc_with(config: &Configuration, opts: &WdnOptions) -> Result<bool> {
    let (d, n) = (config.dim(), config.len());
    if n < d + 4 {
        return Err(Error::PointCount { expected: format!(">= {}", d + 4), found: n });
    }
    let table = BracketTable::full(config, opts.parallel);
    if !table.all_nonzero() {
        return Ok(false);
    }
    let indices = selected_indices(d, n, opts)?;
    Ok(failing_indices(&table, &indices, opts.parallel)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::ProjectivePoint;
    use crate::rnc::{veronese_embed, ParamPoint};
    use crate::scalar::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn pt(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_i64s(Q, c).unwrap()
    }

    fn on_curve(d: usize, ts: &[i64]) -> Configuration {
        let pts = ts.iter().map(|&t| veronese_embed(&ParamPoint::from_i64s(Q, t, 1).unwrap(), d).unwrap()).collect();
        Configuration::from_points(pts).unwrap()
    }

    #[test]
    fn census() {
        assert_eq!(enumerate_psi_indices(3, 8).unwrap().len(), 56);
        let one = enumerate_psi_indices(2, 6).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].j(), [1, 2, 3, 4, 5, 6]);
        assert_eq!(one[0].i(), [1, 2, 3, 4, 5, 6]);
        assert_eq!(enumerate_psi_indices(4, 10).unwrap().len(), 1260);
        assert!(enumerate_psi_indices(3, 6).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all = enumerate_psi_indices(3, 8).unwrap();
        for w in all.windows(2) {
            assert!((w[0].j(), w[0].i()) < (w[1].j(), w[1].i()));
        }
    }

    #[test]
    fn displayed_equation() {
        let idx = PsiIndex::new(3, 8, (1..=7).collect(), (1..=6).collect()).unwrap();
        assert_eq!(idx.to_string(), "|4567||2367||1357||1247| - |3567||2467||1457||1237|");
        assert_eq!(idx.complement(), [7]);
    }

    #[test]
    fn invalid_indices() {
        assert!(PsiIndex::new(3, 8, vec![1, 2, 3, 4, 5, 6, 9], (1..=6).collect()).is_err());
        assert!(PsiIndex::new(3, 8, (1..=7).collect(), vec![1, 2, 3, 4, 5, 8]).is_err());
        assert!(PsiIndex::new(3, 8, (1..=6).collect(), (1..=6).collect()).is_err());
    }

    #[test]
    fn conic_equation_vanishes() {
        let c = on_curve(2, &[0, 1, 2, 3, 4, 5]);
        let idx = &enumerate_psi_indices(2, 6).unwrap()[0];
        let r = psi_eval(&c, idx).unwrap();
        assert!(r.is_zero());
        assert!(!r.m1.is_zero());
        assert_eq!(r.m1, r.m2);
    }

    #[test]
    fn off_conic_point_breaks_equation() {
        let c = on_curve(2, &[0, 1, 2, 3, 4, 5]).with_point(5, pt(&[1, 3, -2])).unwrap();
        assert!(crate::projective::is_general_linear_position(&c));
        let idx = &enumerate_psi_indices(2, 6).unwrap()[0];
        assert!(!psi_eval(&c, idx).unwrap().is_zero());
    }

    #[test]
    fn cached_matches_direct() {
        let c = on_curve(3, &[0, 1, 2, 3, 4, 5, 6, 7]).with_point(7, pt(&[1, 3, -2, 5])).unwrap();
        let indices = enumerate_psi_indices(3, 8).unwrap();
        let table = BracketTable::for_indices(&c, &indices, false);
        let one = Q.one();
        for idx in &indices {
            assert_eq!(psi_eval_cached(&table, &one, idx).unwrap(), psi_eval(&c, idx).unwrap());
        }
    }

    #[test]
    fn twisted_cubic_membership() {
        let c = on_curve(3, &[-3, -1, 0, 1, 2, 4, 5, 9]);
        let m = wdn_membership(&c).unwrap();
        assert!(m.member);
        assert_eq!(m.reports.len(), 56);
        assert!(lies_on_rnc(&c).unwrap());

        let bad = c.with_point(2, pt(&[1, 2, -1, 3])).unwrap();
        assert!(crate::projective::is_general_linear_position(&bad));
        assert!(!wdn_membership(&bad).unwrap().member);
        assert!(!lies_on_rnc(&bad).unwrap());
    }

    #[test]
    fn degenerate_configurations_are_members() {
        let line: Vec<_> = (0..6).map(|t| pt(&[1, t, 0])).collect();
        let c = Configuration::from_points(line).unwrap();
        assert!(wdn_membership(&c).unwrap().member);
        assert!(!lies_on_rnc(&c).unwrap());
    }

    #[test]
    fn sampling_is_seeded_and_ordered() {
        let a = sample_psi_indices(4, 10, 50, 7).unwrap();
        let b = sample_psi_indices(4, 10, 50, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 50);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert_ne!(a, sample_psi_indices(4, 10, 50, 8).unwrap());
        assert_eq!(sample_psi_indices(2, 6, 10, 1).unwrap().len(), 1);
    }

    #[test]
    fn parallel_matches_serial() {
        let c = on_curve(4, &[0, 1, 2, 3, 4, 5, 6, 7, 8, 10]).with_point(9, pt(&[1, 2, 3, 5, 8])).unwrap();
        let serial = wdn_membership_with(&c, &WdnOptions { sample: Some((200, 3)), parallel: false }).unwrap();
        let par = wdn_membership_with(&c, &WdnOptions { sample: Some((200, 3)), parallel: true }).unwrap();
        assert_eq!(serial, par);
        assert!(!serial.member);
    }

    #[test]
    fn report_json() {
        let c = on_curve(2, &[0, 1, 2, 3, 4, 5]);
        let idx = &enumerate_psi_indices(2, 6).unwrap()[0];
        let r = psi_eval(&c, idx).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.starts_with(r#"{"J":[1,2,3,4,5,6],"I":[1,2,3,4,5,6],"m1":""#));
        assert!(text.ends_with(r#","value":"0"}"#));
    }
}
