//! Sparse Laurent polynomials in the torus variables `t1, t2, t3` and the
//! color variables `u1..ur`, with exact integer coefficients.
//!
//! A [`LaurentPoly`] is the character of a virtual representation of the
//! torus `(C*)^3 x (C*)^r`. Exponent vectors have length `3 + r`: the first
//! three entries are the powers of `t1, t2, t3`, the rest the powers of the
//! color variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a monomial, `t`-part first, then colors.
pub type Exponent = Vec<i64>;

/// Number of torus variables `t1, t2, t3`.
pub const TORUS_DIM: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; TORUS_DIM + rank], 1).expect("well-formed exponent")
    }

    /// `coeff * x^exponent`; the rank is inferred from the exponent length.
    pub fn monomial(exponent: Exponent, coeff: impl Into<BigInt>) -> Result<Self> {
        if exponent.len() < TORUS_DIM {
            return Err(Error::ExponentLength { expected: TORUS_DIM, got: exponent.len() });
        }
        let rank = exponent.len() - TORUS_DIM;
        let mut p = Self::zero(rank);
        p.add_term(exponent, coeff.into());
        Ok(p)
    }

    /// Monomial in the torus variables only, padded with zero color exponents.
    pub fn torus_monomial(t: [i64; 3], rank: usize) -> Self {
        let mut e = t.to_vec();
        e.resize(TORUS_DIM + rank, 0);
        let mut p = Self::zero(rank);
        p.add_term(e, BigInt::one());
        p
    }

    /// Collects `(exponent, coefficient)` pairs, summing repeats and pruning zeros.
    pub fn from_terms<I, C>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            if e.len() != TORUS_DIM + rank {
                return Err(Error::ExponentLength { expected: TORUS_DIM + rank, got: e.len() });
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    fn add_term(&mut self, exponent: Exponent, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponent) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_vars(&self) -> usize {
        TORUS_DIM + self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &[i64]) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    /// Coefficient of the trivial character.
    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&vec![0; self.num_vars()])
    }

    /// Value at all variables equal to one.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The bar involution `x -> x^{-1}`.
    pub fn dual(&self) -> Self {
        Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    /// Product in the Laurent ring.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplication by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.num_vars(), "shift length");
        Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(x, y)| x + y).collect(), c.clone()))
                .collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

// Operator forms panic on rank mismatch; use the `try_*` methods when the
// ranks are not known to agree.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("rank mismatch in Laurent addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("rank mismatch in Laurent subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("rank mismatch in Laurent multiplication")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono = format_monomial(e);
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mag.is_one(), mono.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (true, false) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// Renders `t1^a*t2^b*u1^c...`, omitting zero exponents.
pub fn format_monomial(e: &[i64]) -> String {
    let mut parts = Vec::new();
    for (i, &x) in e.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let name = if i < TORUS_DIM {
            format!("t{}", i + 1)
        } else {
            format!("u{}", i - TORUS_DIM + 1)
        };
        if x == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{x}"));
        }
    }
    parts.join("*")
}

/// Integer parameter point standing in for the equivariant parameters:
/// `s` for the three-dimensional torus, `v` for the color torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EquivParams {
    pub s: [i64; 3],
    pub v: Vec<i64>,
}

impl EquivParams {
    pub fn new(s: [i64; 3], v: Vec<i64>) -> Self {
        Self { s, v }
    }

    pub fn rank(&self) -> usize {
        self.v.len()
    }

    /// Multiplies every parameter by `k`.
    pub fn scaled(&self, k: i64) -> Self {
        Self { s: self.s.map(|x| x * k), v: self.v.iter().map(|x| x * k).collect() }
    }

    pub(crate) fn weight_int(&self, exponent: &[i64]) -> BigInt {
        assert_eq!(exponent.len(), TORUS_DIM + self.v.len(), "exponent length");
        let acc: i128 = exponent
            .iter()
            .zip(self.s.iter().chain(self.v.iter()))
            .map(|(&e, &p)| i128::from(e) * i128::from(p))
            .sum();
        BigInt::from(acc)
    }
}

/// The linear form `sum e_i s_i + sum e_{3+j} v_j` of a monomial at a
/// parameter point. Zero means the monomial is fixed at that point.
///
/// Panics if the exponent length is not `3 + params.rank()`.
pub fn weight_form(exponent: &[i64], params: &EquivParams) -> BigRational {
    BigRational::from_integer(params.weight_int(exponent))
}
