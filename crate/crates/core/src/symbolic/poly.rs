//! Sparse polynomials with rational coefficients in `a_1, b_1, a_2, b_2, ...`.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rnc::ParamPoint;
use crate::scalar::{FieldSpec, Scalar};

/// One of the variables `a_i` or `b_i` (1-based `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A(usize),
    B(usize),
}

impl Var {
    fn slot(self) -> usize {
        match self {
            Var::A(i) => 2 * (i - 1),
            Var::B(i) => 2 * (i - 1) + 1,
        }
    }

    fn from_slot(s: usize) -> Var {
        if s.is_multiple_of(2) {
            Var::A(s / 2 + 1)
        } else {
            Var::B(s / 2 + 1)
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::A(i) => write!(f, "a{i}"),
            Var::B(i) => write!(f, "b{i}"),
        }
    }
}

/// Exponent vector over `a1, b1, a2, b2, ...` with trailing zeros trimmed.
/// The derived order is graded lexicographic with `a1 > b1 > a2 > ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    deg: u32,
    exps: Vec<u16>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        let mut exps = vec![0; v.slot() + 1];
        exps[v.slot()] = 1;
        Monomial { deg: 1, exps }
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.exps.get(v.slot()).copied().unwrap_or(0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() { (self, other) } else { (other, self) };
        let mut exps = long.exps.clone();
        for (e, s) in exps.iter_mut().zip(&short.exps) {
            *e += s;
        }
        Monomial { deg: self.deg + other.deg, exps }
    }

    /// `(variable, exponent)` pairs with nonzero exponent, in variable order.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(s, &e)| (Var::from_slot(s), e))
    }

    fn without(&self, v: Var) -> (Monomial, u16) {
        let e = self.exponent(v);
        let mut exps = self.exps.clone();
        if e > 0 {
            exps[v.slot()] = 0;
            while exps.last() == Some(&0) {
                exps.pop();
            }
        }
        (Monomial { deg: self.deg - e as u32, exps }, e)
    }
}

/// A polynomial in `a_i, b_i` over Q. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly { terms: BTreeMap::from([(Monomial::var(v), BigRational::one())]) }
    }

    pub fn a(i: usize) -> Self {
        Self::var(Var::A(i))
    }

    pub fn b(i: usize) -> Self {
        Self::var(Var::B(i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Every term has total degree `deg`.
    pub fn is_homogeneous(&self, deg: u32) -> bool {
        self.terms.keys().all(|m| m.deg == deg)
    }

    /// Every term has degree `deg` in the pair `a_i, b_i` jointly.
    pub fn is_homogeneous_in(&self, i: usize, deg: u32) -> bool {
        self.terms.keys().all(|m| (m.exponent(Var::A(i)) + m.exponent(Var::B(i))) as u32 == deg)
    }

    fn from_map(map: HashMap<Monomial, BigRational>) -> Self {
        MultiPoly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Replaces `v` by `value` everywhere.
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Self {
        let mut powers = vec![MultiPoly::one()];
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.without(v);
            while powers.len() <= e as usize {
                let next = powers.last().expect("nonempty") * value;
                powers.push(next);
            }
            let term = MultiPoly { terms: BTreeMap::from([(rest, c.clone())]) };
            out = &out + &(&term * &powers[e as usize]);
        }
        out
    }

    /// Value at `a_i = params[i-1].a()`, `b_i = params[i-1].b()`.
    pub fn eval(&self, params: &[ParamPoint]) -> Result<Scalar> {
        let field = params.first().map(ParamPoint::field).unwrap_or(FieldSpec::Rationals);
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = field.from_ratio(c.numer(), c.denom())?;
            for (v, e) in m.factors() {
                let (i, is_a) = match v {
                    Var::A(i) => (i, true),
                    Var::B(i) => (i, false),
                };
                let p = params
                    .get(i - 1)
                    .ok_or_else(|| Error::InvalidIndex(format!("no value for {v}")))?;
                let x = if is_a { p.a() } else { p.b() };
                t = &t * &x.pow(e as u32);
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        MultiPoly { terms }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        MultiPoly::from_map(acc)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for MultiPoly {
    /// `3*a1^2*b2 - 1/2*a2 + 4`; terms in decreasing graded-lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let vars: Vec<String> = m
                .factors()
                .map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
