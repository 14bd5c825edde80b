//! The equations `psi_{I,J}` on the symbolic vertices `R_1..R_(2d+2)`.
//!
//! Each bracket `|i_a i_b i_c j_1 ... j_(d-2)|` is `(-1)^q` times the bracket
//! of the sorted columns `H_abc`, and the sorted bracket factors into `2x2`
//! brackets. So `psi` vanishes exactly when both monomials carry the same
//! multiset of `2x2` factors and the same total sign.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::brackets::{factorization, sym_determinant, sym_vertices, verify_factorization, BracketFactorization, SubsetSplit};
use super::poly::MultiPoly;
use crate::combinatorics::{choose2_parity, inversion_parity};
use crate::error::{Error, Result};
use crate::wdn::{PsiIndex, FIRST_MONOMIAL, SECOND_MONOMIAL};

/// Parity of the adjacent transpositions sorting `(triple, rest)`.
pub fn transposition_parity(triple: [usize; 3], rest: &[usize]) -> Result<u8> {
    let seq: Vec<usize> = triple.iter().chain(rest).copied().collect();
    let mut sorted = seq.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidIndex(format!("repeated index in {seq:?}")));
    }
    Ok(inversion_parity(&seq))
}

/// Factorizations already checked by full expansion, keyed by sorted `K`.
#[derive(Debug, Default)]
pub struct FactorizationCache {
    verified: HashMap<Vec<usize>, Option<BracketFactorization>>,
}

impl FactorizationCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Checks the given splits (optionally in parallel) and stores the results.
    pub fn prefill(&mut self, splits: &[SubsetSplit], parallel: bool) {
        let todo: Vec<&SubsetSplit> = splits.iter().filter(|s| !self.verified.contains_key(s.k())).collect();
        let check = |s: &&SubsetSplit| (s.k().to_vec(), verify_factorization(s).then(|| factorization(s)));
        let done: Vec<_> = if parallel { todo.par_iter().map(check).collect() } else { todo.iter().map(check).collect() };
        self.verified.extend(done);
    }

    /// The factorization of `|R_K|`, or `None` if it failed to verify.
    pub fn get(&mut self, split: &SubsetSplit) -> Option<BracketFactorization> {
        if !self.verified.contains_key(split.k()) {
            self.prefill(std::slice::from_ref(split), false);
        }
        self.verified[split.k()].clone()
    }

    pub fn len(&self) -> usize {
        self.verified.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verified.is_empty()
    }
}

fn check_symbolic_index(d: usize, idx: &PsiIndex) -> Result<()> {
    if idx.d() != d || idx.n() != 2 * d + 2 {
        return Err(Error::InvalidIndex(format!(
            "index for (d, n) = ({}, {}), expected ({d}, {})",
            idx.d(),
            idx.n(),
            2 * d + 2
        )));
    }
    Ok(())
}

fn triple_of(idx: &PsiIndex, t: &[usize; 3]) -> [usize; 3] {
    t.map(|p| idx.i()[p - 1])
}

/// The sorted column set `H_abc` of one bracket of `psi_{I,J}`.
pub fn h_split(idx: &PsiIndex, t: &[usize; 3]) -> SubsetSplit {
    let cols = triple_of(idx, t).into_iter().chain(idx.complement().iter().copied()).collect();
    SubsetSplit::new(idx.d(), cols).expect("columns of a valid index")
}

/// `s(H_abc)`.
pub fn h_sign(idx: &PsiIndex, t: &[usize; 3]) -> i8 {
    super::brackets::bracket_sign(&h_split(idx, t))
}

/// Every sorted `K` used by the given indices.
pub fn splits_for(indices: &[PsiIndex]) -> Vec<SubsetSplit> {
    let mut out: Vec<SubsetSplit> = indices
        .iter()
        .flat_map(|idx| FIRST_MONOMIAL.iter().chain(&SECOND_MONOMIAL).map(move |t| h_split(idx, t)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Multiset of `2x2` factors and total sign of one monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactoredMonomial {
    pub sign: i8,
    pub factors: BTreeMap<(usize, usize), usize>,
}

fn factored_monomial(
    idx: &PsiIndex,
    triples: &[[usize; 3]; 4],
    cache: &mut FactorizationCache,
) -> Result<Option<FactoredMonomial>> {
    let mut sign = 1i8;
    let mut factors = BTreeMap::new();
    for t in triples {
        let split = h_split(idx, t);
        let Some(f) = cache.get(&split) else { return Ok(None) };
        let q = transposition_parity(triple_of(idx, t), idx.complement())?;
        sign *= f.sign * if q == 1 { -1 } else { 1 };
        for pair in f.factors {
            *factors.entry(pair).or_insert(0) += 1;
        }
    }
    Ok(Some(FactoredMonomial { sign, factors }))
}

/// Both monomials of `psi_{I,J}` on the symbolic vertices, factored. `None`
/// when a needed bracket factorization fails to verify.
pub fn factored_monomials(
    d: usize,
    idx: &PsiIndex,
    cache: &mut FactorizationCache,
) -> Result<Option<[FactoredMonomial; 2]>> {
    check_symbolic_index(d, idx)?;
    let m1 = factored_monomial(idx, &FIRST_MONOMIAL, cache)?;
    let m2 = factored_monomial(idx, &SECOND_MONOMIAL, cache)?;
    Ok(m1.zip(m2).map(|(a, b)| [a, b]))
}

/// Expands `psi_{I,J}` on the symbolic vertices directly from the
/// determinants, without using any factorization.
pub fn psi_full_expansion(d: usize, idx: &PsiIndex) -> Result<MultiPoly> {
    check_symbolic_index(d, idx)?;
    let [c1, c2] = idx.bracket_columns();
    let monomial = |cols: &[Vec<usize>]| -> Result<MultiPoly> {
        let mut acc = MultiPoly::one();
        for c in cols {
            acc = &acc * &sym_determinant(&sym_vertices(d, c)?);
        }
        Ok(acc)
    };
    Ok(&monomial(&c1)? - &monomial(&c2)?)
}

/// How `verify_psi_identity_with` decides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiStrategy {
    /// Compare factor multisets and signs using verified factorizations.
    FactorMultiset,
    /// Expand both monomials completely.
    FullExpansion,
}

/// `psi_{I,J}` vanishes identically on the symbolic vertices. Uses factor
/// multisets; for `d = 2` a full expansion must agree as well.
pub fn verify_psi_identity(d: usize, idx: &PsiIndex) -> Result<bool> {
    let mut cache = FactorizationCache::new();
    let by_factors = verify_psi_identity_with(d, idx, PsiStrategy::FactorMultiset, &mut cache)?;
    if d == 2 {
        let expanded = verify_psi_identity_with(d, idx, PsiStrategy::FullExpansion, &mut cache)?;
        return Ok(by_factors && expanded);
    }
    Ok(by_factors)
}

pub fn verify_psi_identity_with(
    d: usize,
    idx: &PsiIndex,
    strategy: PsiStrategy,
    cache: &mut FactorizationCache,
) -> Result<bool> {
    match strategy {
        PsiStrategy::FullExpansion => Ok(psi_full_expansion(d, idx)?.is_zero()),
        PsiStrategy::FactorMultiset => Ok(match factored_monomials(d, idx, cache)? {
            Some([m1, m2]) => m1 == m2,
            None => false,
        }),
    }
}

/// The two parity sums of `q` over each monomial's triples, mod 2.
pub fn step_two_parities(idx: &PsiIndex) -> [u8; 2] {
    let sum = |triples: &[[usize; 3]; 4]| {
        triples
            .iter()
            .map(|t| transposition_parity(triple_of(idx, t), idx.complement()).expect("distinct"))
            .sum::<u8>()
            % 2
    };
    [sum(&FIRST_MONOMIAL), sum(&SECOND_MONOMIAL)]
}

/// `C(l, 2) + C(l + 2, 2)` is odd.
pub fn shifted_binomial_parity(l: i64) -> u8 {
    (choose2_parity(l) + choose2_parity(l + 2)) % 2
}

/// The two exponents compared when three elements of `I` lie in `T1`, with
/// `p = |(J\I) ∩ T1|`; the claim is that they agree mod 2.
pub fn three_in_t1_exponents(d: usize, p: usize) -> (u8, u8) {
    let (d, p) = (d as i64, p as i64);
    let c = choose2_parity;
    let a = c(p) + c(d + 1 - p) + 3 * (c(p + 2) + c(d - 1 - p));
    let b = 3 * (c(p + 1) + c(d - p)) + c(p + 3) + c(d - 2 - p);
    (a % 2, b % 2)
}

fn sign_from_parity(parity: u8) -> i8 {
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Checks the sign bookkeeping case that applies to `idx`: all eight signs
/// equal when `I` lies in one group; the four pairwise equalities when
/// `|I ∩ T1|` is 1, 2, 4 or 5; the closed forms and the exponent congruence
/// when it is 3.
pub fn sign_case_holds(idx: &PsiIndex) -> bool {
    let d = idx.d();
    let in_t1 = idx.i().iter().filter(|&&i| i <= d + 1).count();
    let s = |t: [usize; 3]| h_sign(idx, &t);
    match in_t1 {
        0 | 6 => {
            let first = s(FIRST_MONOMIAL[0]);
            FIRST_MONOMIAL.iter().chain(&SECOND_MONOMIAL).all(|&t| s(t) == first)
        }
        1 | 2 | 4 | 5 => FIRST_MONOMIAL.iter().zip(&SECOND_MONOMIAL).all(|(&a, &b)| s(a) == s(b)),
        3 => {
            let p = idx.complement().iter().filter(|&&j| j <= d + 1).count() as i64;
            let d = d as i64;
            let form = |x: i64, y: i64| sign_from_parity(choose2_parity(x) + choose2_parity(y));
            let closed = s([4, 5, 6]) == form(p, d + 1 - p)
                && [[2, 3, 6], [1, 3, 5], [1, 2, 4]].iter().all(|&t| s(t) == form(p + 2, d - 1 - p))
                && [[3, 5, 6], [2, 4, 6], [1, 4, 5]].iter().all(|&t| s(t) == form(p + 1, d - p))
                && s([1, 2, 3]) == form(p + 3, d - 2 - p);
            let (a, b) = three_in_t1_exponents(d as usize, p as usize);
            closed && a == b
        }
        _ => unreachable!("I has six elements"),
    }
}
