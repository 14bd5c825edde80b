//! Symbolic simplex vertices and the factorization of their brackets into
//! `2x2` brackets `|Q_i Q_j|`.
//!
//! Points `1..=d+1` form the first group `T1` and `d+2..=2d+2` the second
//! group `T2`. The vertex `R_k` is the common point of the osculating
//! hyperplanes at the other points of its own group.

use itertools::Itertools;
use serde::Serialize;

use super::poly::MultiPoly;
use crate::combinatorics::choose2_parity;
use crate::error::{Error, Result};

/// `|Q_i Q_j| = a_i b_j - a_j b_i`.
pub fn two_bracket(i: usize, j: usize) -> MultiPoly {
    &(&MultiPoly::a(i) * &MultiPoly::b(j)) - &(&MultiPoly::a(j) * &MultiPoly::b(i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    T1,
    T2,
}

impl Side {
    /// The group of point `k` for degree `d`.
    pub fn of(d: usize, k: usize) -> Side {
        if k <= d + 1 {
            Side::T1
        } else {
            Side::T2
        }
    }

    pub fn members(self, d: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            Side::T1 => 1..=d + 1,
            Side::T2 => d + 2..=2 * d + 2,
        }
    }
}

/// A sorted `(d+1)`-subset `K` of `1..=2d+2`, split by group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubsetSplit {
    d: usize,
    k: Vec<usize>,
    #[serde(skip)]
    k1: Vec<usize>,
    #[serde(skip)]
    k2: Vec<usize>,
}

impl SubsetSplit {
    pub fn new(d: usize, mut k: Vec<usize>) -> Result<Self> {
        k.sort_unstable();
        if d < 1 {
            return Err(Error::Invalid("d must be at least 1".into()));
        }
        if k.len() != d + 1 || k.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidIndex(format!("K must be {} distinct indices, got {k:?}", d + 1)));
        }
        if k[0] == 0 || k[d] > 2 * d + 2 {
            return Err(Error::InvalidIndex(format!("K = {k:?} not within 1..={}", 2 * d + 2)));
        }
        let (k1, k2) = k.iter().partition(|&&x| x <= d + 1);
        Ok(SubsetSplit { d, k, k1, k2 })
    }

    /// All `C(2d+2, d+1)` splits in lexicographic order.
    pub fn all(d: usize) -> Vec<SubsetSplit> {
        (1..=2 * d + 2)
            .combinations(d + 1)
            .map(|k| SubsetSplit::new(d, k).expect("valid subset"))
            .collect()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> &[usize] {
        &self.k
    }

    pub fn k1(&self) -> &[usize] {
        &self.k1
    }

    pub fn k2(&self) -> &[usize] {
        &self.k2
    }
}

/// Coordinates of `R_omit`: `r_k = sum over (d-k)-subsets I of S of a_I b_(S\I)`,
/// with `S` the group of `omit` minus `omit` itself.
pub fn sym_vertex(d: usize, omit: usize, side: Side) -> Result<Vec<MultiPoly>> {
    if !side.members(d).contains(&omit) {
        return Err(Error::InvalidIndex(format!("{omit} is not in {side:?} for d = {d}")));
    }
    // coefficients of prod_{j in S} (a_j x + b_j), lowest power first
    let mut poly = vec![MultiPoly::one()];
    for j in side.members(d).filter(|&j| j != omit) {
        let mut next = vec![MultiPoly::zero(); poly.len() + 1];
        for (m, c) in poly.iter().enumerate() {
            next[m + 1] = &next[m + 1] + &(c * &MultiPoly::a(j));
            next[m] = &next[m] + &(c * &MultiPoly::b(j));
        }
        poly = next;
    }
    Ok((0..=d).map(|k| poly[d - k].clone()).collect())
}

/// Determinant of a square matrix given by columns, by expansion over row
/// subsets built one column at a time.
pub fn sym_determinant(cols: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = cols.len();
    assert!(n <= 16 && cols.iter().all(|c| c.len() == n), "square matrix of size <= 16");
    let mut minors: Vec<Option<MultiPoly>> = vec![None; 1 << n];
    minors[0] = Some(MultiPoly::one());
    for (c, col) in cols.iter().enumerate() {
        let mut next: Vec<Option<MultiPoly>> = vec![None; 1 << n];
        for mask in (0usize..1 << n).filter(|m| m.count_ones() as usize == c) {
            let Some(minor) = &minors[mask] else { continue };
            for r in (0..n).filter(|r| mask & (1 << r) == 0) {
                if col[r].is_zero() {
                    continue;
                }
                let mut term = &col[r] * minor;
                // inversions added by placing row r after the rows in mask
                if (mask >> (r + 1)).count_ones() % 2 == 1 {
                    term = -term;
                }
                let slot = &mut next[mask | (1 << r)];
                *slot = Some(match slot.take() {
                    Some(acc) => &acc + &term,
                    None => term,
                });
            }
        }
        minors = next;
    }
    minors[(1 << n) - 1].take().unwrap_or_default()
}

/// The columns `R_k` for `k` in `cols` (any order, 1-based).
pub fn sym_vertices(d: usize, cols: &[usize]) -> Result<Vec<Vec<MultiPoly>>> {
    cols.iter().map(|&k| sym_vertex(d, k, Side::of(d, k))).collect()
}

/// `|R_k1 ... R_k(d+1)|`, fully expanded.
#[allow(non_snake_case)]
pub fn sym_bracket_R(split: &SubsetSplit) -> MultiPoly {
    let cols = sym_vertices(split.d, &split.k).expect("valid split");
    sym_determinant(&cols)
}

/// `(-1)^(C(|K1|,2) + C(|K2|,2))`.
pub fn bracket_sign(split: &SubsetSplit) -> i8 {
    let parity = choose2_parity(split.k1.len() as i64) + choose2_parity(split.k2.len() as i64);
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A signed product of `2x2` brackets `|Q_e Q_f|` with `e < f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BracketFactorization {
    pub sign: i8,
    pub factors: Vec<(usize, usize)>,
}

impl BracketFactorization {
    pub fn to_poly(&self) -> MultiPoly {
        let prod = self.factors.iter().fold(MultiPoly::one(), |acc, &(e, f)| &acc * &two_bracket(e, f));
        if self.sign < 0 {
            -prod
        } else {
            prod
        }
    }

    /// `-|Q5Q6||Q5Q7|...`
    pub fn label(&self) -> String {
        let body: String = self.factors.iter().map(|(e, f)| format!("|Q{e}Q{f}|")).collect();
        if self.sign < 0 {
            format!("-{body}")
        } else {
            body
        }
    }
}

/// The predicted factorization of `|R_K|`: the sign times the brackets of
/// pairs inside `K1`, inside `K2`, and across the complements `T1\K1`, `T2\K2`.
pub fn factorization(split: &SubsetSplit) -> BracketFactorization {
    let d = split.d;
    let mut factors: Vec<(usize, usize)> = Vec::new();
    factors.extend(split.k1.iter().copied().tuple_combinations::<(usize, usize)>());
    factors.extend(split.k2.iter().copied().tuple_combinations::<(usize, usize)>());
    let rest1 = Side::T1.members(d).filter(|i| !split.k1.contains(i));
    let rest2: Vec<usize> = Side::T2.members(d).filter(|j| !split.k2.contains(j)).collect();
    for i in rest1 {
        factors.extend(rest2.iter().map(|&j| (i, j)));
    }
    BracketFactorization { sign: bracket_sign(split), factors }
}

/// `factorization(split)` expanded.
pub fn factorization_rhs(split: &SubsetSplit) -> MultiPoly {
    factorization(split).to_poly()
}

/// Expands both sides and compares.
pub fn verify_factorization(split: &SubsetSplit) -> bool {
    (&sym_bracket_R(split) - &factorization_rhs(split)).is_zero()
}

/// `|R_K|` at the given parameters; same as evaluating the factorization.
pub fn eval_factorization(f: &BracketFactorization, params: &[crate::rnc::ParamPoint]) -> Result<crate::Scalar> {
    let field = params.first().map(|p| p.field()).unwrap_or(crate::FieldSpec::Rationals);
    let mut acc = field.from_i64(f.sign as i64);
    for &(e, g) in &f.factors {
        let (pe, pg) = (params.get(e - 1), params.get(g - 1));
        let (Some(pe), Some(pg)) = (pe, pg) else {
            return Err(Error::InvalidIndex(format!("no parameter for |Q{e}Q{g}|")));
        };
        acc = &acc * &pe.two_bracket(pg);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::poly::Var;

    fn split(d: usize, k: &[usize]) -> SubsetSplit {
        SubsetSplit::new(d, k.to_vec()).unwrap()
    }

    #[test]
    fn two_bracket_basics() {
        assert!(two_bracket(3, 3).is_zero());
        assert_eq!(two_bracket(1, 2).to_string(), "a1*b2 - b1*a2");
        assert_eq!(two_bracket(2, 1), -two_bracket(1, 2));
    }

    #[test]
    fn vertex_for_conic() {
        let r = sym_vertex(2, 3, Side::T1).unwrap();
        let (a1, a2, b1, b2) = (MultiPoly::a(1), MultiPoly::a(2), MultiPoly::b(1), MultiPoly::b(2));
        assert_eq!(r[0], &a1 * &a2);
        assert_eq!(r[1], &(&a1 * &b2) + &(&a2 * &b1));
        assert_eq!(r[2], &b1 * &b2);
        let one = MultiPoly::one();
        let affine: Vec<_> = r.iter().map(|c| c.substitute(Var::B(1), &one).substitute(Var::B(2), &one)).collect();
        assert_eq!(affine, vec![&a1 * &a2, &a1 + &a2, one]);
        assert!(r.iter().all(|c| c.is_homogeneous(2)));
        assert!(sym_vertex(2, 4, Side::T1).is_err());
    }

    #[test]
    fn determinant_matches_small_formula() {
        let x = |i| MultiPoly::a(i);
        let cols = vec![vec![x(1), x(2)], vec![x(3), x(4)]];
        assert_eq!(sym_determinant(&cols), &(&x(1) * &x(4)) - &(&x(2) * &x(3)));
        let id: Vec<Vec<MultiPoly>> = (0..4)
            .map(|c| (0..4).map(|r| if r == c { MultiPoly::one() } else { MultiPoly::zero() }).collect())
            .collect();
        assert_eq!(sym_determinant(&id), MultiPoly::one());
        let mut swapped = id.clone();
        swapped.swap(0, 3);
        assert_eq!(sym_determinant(&swapped), MultiPoly::from_i64(-1));
    }

    #[test]
    fn bracket_degree_and_repeat() {
        let s = split(2, &[1, 2, 3]);
        let r = sym_bracket_R(&s);
        assert_eq!(r.degree(), Some(6));
        assert!(r.is_homogeneous(6));
        let same = r.substitute(Var::A(2), &MultiPoly::a(1)).substitute(Var::B(2), &MultiPoly::b(1));
        assert!(same.is_zero());
    }

    #[test]
    fn signs() {
        assert_eq!(bracket_sign(&split(3, &[4, 5, 6, 7])), -1);
        assert_eq!(bracket_sign(&split(3, &[2, 3, 6, 7])), 1);
        // |K1| = 0: (-1)^C(d+1,2)
        assert_eq!(bracket_sign(&split(3, &[5, 6, 7, 8])), 1);
        assert_eq!(bracket_sign(&split(2, &[4, 5, 6])), -1);
    }

    #[test]
    fn first_example_line() {
        let s = split(3, &[4, 5, 6, 7]);
        let f = factorization(&s);
        assert_eq!(f.label(), "-|Q5Q6||Q5Q7||Q6Q7||Q1Q8||Q2Q8||Q3Q8|");
        assert!(verify_factorization(&s));
    }

    #[test]
    fn factorization_degree() {
        for d in 1..=4 {
            for s in SubsetSplit::all(d) {
                let f = factorization(&s);
                assert_eq!(f.factors.len(), d * (d + 1) / 2, "{s:?}");
                assert!(f.factors.iter().all(|(e, g)| e < g));
            }
        }
    }

    #[test]
    fn conic_factorizations() {
        assert!(SubsetSplit::all(2).iter().all(verify_factorization));
    }

    #[test]
    fn wrong_sign_is_detected() {
        let s = split(2, &[1, 2, 4]);
        let good = factorization(&s);
        let bad = BracketFactorization { sign: -good.sign, ..good.clone() };
        assert!(!(&sym_bracket_R(&s) - &bad.to_poly()).is_zero());
    }
}
