//! Small graded intersection rings with an integration functional, enough to
//! compute Chern numbers of 3-folds and of bundles on them.
//!
//! A ring is `Z[g_1, ..., g_k]` modulo monomial truncations `g^e = 0`, at most
//! one quadratic relation `xi^2 = rhs` (for projective bundles) and
//! everything above the dimension. Integration is a table on the degree-`dim`
//! monomials left after reduction.

mod cobordism;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;

pub use cobordism::{
    basis_matrix, builtin_dpr, chern_number_labels, decompose, determinant, dpr_check, mixed_chern_vector,
    phi_class, phi_from_parts, reconstruct, DprReport, DprSide, BUILTIN_DPRS,
};

type Mono = Vec<u32>;

/// A cohomology class: an integer polynomial in the ring generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Class {
    terms: BTreeMap<Mono, BigInt>,
}

impl Class {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(ngens: usize, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(vec![0; ngens], c.into());
        out
    }

    pub fn monomial(exps: Vec<u32>, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(exps, c.into());
        out
    }

    fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * &k);
        }
        out
    }

    fn raw_mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

/// Sign convention for `P(O + L)`: the relation is `xi^2 + xi l = 0`
/// (`Sub`) or `xi^2 - xi l = 0` (`Quotient`), while the tangent class is
/// always `c(T_base)(1 + xi)(1 + xi + l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BundleConvention {
    Sub,
    Quotient,
}

/// Pinned by requiring `int c3(T) = 2 chi(base)` for `P(O + L)`.
pub const CALIBRATED_BUNDLE_CONVENTION: BundleConvention = BundleConvention::Sub;

#[derive(Clone, Debug, PartialEq, Eq)]
struct QuadraticRelation {
    generator: usize,
    rhs: Class,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernRing {
    pub name: String,
    gens: Vec<String>,
    dim: u32,
    truncation: Vec<Option<u32>>,
    relation: Option<QuadraticRelation>,
    integrals: BTreeMap<Mono, BigInt>,
    tangent: Class,
}

/// Names accepted by [`ChernRing::builtin`].
pub const BUILTIN_RINGS: &[&str] =
    &["p3", "p2xp1", "p1cubed", "quadric", "pbundle-p2-o1", "pbundle-p1p1-o", "blowup-p3-conic"];

impl ChernRing {
    /// `P^{l_1} x ... x P^{l_k}`: `Z[h_1..h_k]/(h_i^{l_i + 1})` with
    /// `int prod h_i^{l_i} = 1` and `c(T) = prod (1 + h_i)^{l_i + 1}`.
    pub fn projective_product(parts: &[u32]) -> Self {
        let k = parts.len();
        let dim: u32 = parts.iter().sum();
        let gens = if k == 1 { vec!["H".to_string()] } else { (1..=k).map(|i| format!("h{i}")).collect() };
        let mut integrals = BTreeMap::new();
        integrals.insert(parts.to_vec(), BigInt::one());
        let mut ring = Self {
            name: product_name(parts),
            gens,
            dim,
            truncation: parts.iter().map(|&l| Some(l + 1)).collect(),
            relation: None,
            integrals,
            tangent: Class::zero(),
        };
        let mut c = ring.one();
        for (i, &l) in parts.iter().enumerate() {
            let factor = ring.one().add(&ring.generator(i));
            for _ in 0..=l {
                c = ring.mul(&c, &factor);
            }
        }
        ring.tangent = c;
        ring
    }

    /// `P^lambda` for a partition of 3.
    pub fn of_projective_product(lambda: &Partition) -> Result<Self> {
        if lambda.size() != 3 {
            return Err(Error::Dimension { expected: 3, got: lambda.size() as usize });
        }
        Ok(Self::projective_product(lambda.parts()))
    }

    /// `P(O + L)` over a surface, with the calibrated sign convention.
    pub fn projective_bundle(base: &ChernRing, line: &Class) -> Result<Self> {
        Self::projective_bundle_with(base, line, CALIBRATED_BUNDLE_CONVENTION)
    }

    pub fn projective_bundle_with(base: &ChernRing, line: &Class, convention: BundleConvention) -> Result<Self> {
        if base.dim != 2 {
            return Err(Error::Dimension { expected: 2, got: base.dim as usize });
        }
        if base.relation.is_some() {
            return Err(Error::InvalidBundle("base ring already carries a quadratic relation".into()));
        }
        let k = base.gens.len();
        let extend = |c: &Class| {
            let mut out = Class::zero();
            for (m, v) in c.terms() {
                let mut m = m.clone();
                m.push(0);
                out.add_term(m, v.clone());
            }
            out
        };
        let l = extend(line);
        let mut gens = base.gens.clone();
        gens.push("xi".into());
        let mut truncation = base.truncation.clone();
        truncation.push(None);
        let mut xi_mono = vec![0; k + 1];
        xi_mono[k] = 1;
        let xi = Class::monomial(xi_mono, 1);
        let sign = match convention {
            BundleConvention::Sub => -1,
            BundleConvention::Quotient => 1,
        };
        let rhs = l.raw_mul(&xi).scale(sign);
        let mut integrals = BTreeMap::new();
        for (m, v) in &base.integrals {
            let mut m = m.clone();
            m.push(1);
            integrals.insert(m, v.clone());
        }
        let mut ring = Self {
            name: format!("P(O+L) over {}", base.name),
            gens,
            dim: 3,
            truncation,
            relation: Some(QuadraticRelation { generator: k, rhs }),
            integrals,
            tangent: Class::zero(),
        };
        let one = ring.one();
        let rel = ring.mul(&one.add(&xi), &one.add(&xi).add(&l));
        ring.tangent = ring.mul(&extend(&base.tangent), &rel);
        Ok(ring)
    }

    /// Smooth quadric 3-fold: `Z[H]/(H^4)`, `int H^3 = 2`,
    /// `c(T) = (1 + H)^5 / (1 + 2H)`.
    pub fn quadric() -> Self {
        let mut integrals = BTreeMap::new();
        integrals.insert(vec![3], BigInt::from(2));
        let mut ring = Self {
            name: "quadric".into(),
            gens: vec!["H".into()],
            dim: 3,
            truncation: vec![Some(4)],
            relation: None,
            integrals,
            tangent: Class::zero(),
        };
        let h = ring.generator(0);
        let mut num = ring.one();
        for _ in 0..5 {
            num = ring.mul(&num, &ring.one().add(&h));
        }
        // (1 + 2H)^{-1} = sum (-2H)^k
        let mut inv = ring.one();
        let mut pow = ring.one();
        for _ in 0..3 {
            pow = ring.mul(&pow, &h.scale(-2));
            inv = inv.add(&pow);
        }
        ring.tangent = ring.mul(&num, &inv);
        ring
    }

    /// `P^3` blown up along a smooth conic `C`: generators `H` (pullback of
    /// the hyperplane) and `E` (exceptional divisor) with `H^3 = 1`,
    /// `H^2 E = 0`, `H E^2 = -deg C = -2`, `E^3 = -deg N_C = -6`, and
    /// `c(T) = 1 + (4H - E) + (8H^2 - 4HE) + 6H^3`.
    pub fn blowup_p3_along_conic() -> Self {
        let mut integrals = BTreeMap::new();
        for (m, v) in [([3, 0], 1), ([2, 1], 0), ([1, 2], -2), ([0, 3], -6)] {
            integrals.insert(m.to_vec(), BigInt::from(v));
        }
        let terms = [([0, 0], 1), ([1, 0], 4), ([0, 1], -1), ([2, 0], 8), ([1, 1], -4), ([3, 0], 6)];
        let mut tangent = Class::zero();
        for (m, v) in terms {
            tangent.add_term(m.to_vec(), BigInt::from(v));
        }
        Self {
            name: "blowup-p3-conic".into(),
            gens: vec!["H".into(), "E".into()],
            dim: 3,
            truncation: vec![None, None],
            relation: None,
            integrals,
            tangent,
        }
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "p3" => Ok(Self::projective_product(&[3])),
            "p2xp1" => Ok(Self::projective_product(&[2, 1])),
            "p1cubed" => Ok(Self::projective_product(&[1, 1, 1])),
            "quadric" => Ok(Self::quadric()),
            "pbundle-p2-o1" => {
                let p2 = Self::projective_product(&[2]);
                let h = p2.generator(0);
                let mut ring = Self::projective_bundle(&p2, &h)?;
                ring.name = name.into();
                Ok(ring)
            }
            "pbundle-p1p1-o" => {
                let base = Self::projective_product(&[1, 1]);
                let mut ring = Self::projective_bundle(&base, &Class::zero())?;
                ring.name = name.into();
                Ok(ring)
            }
            "blowup-p3-conic" => Ok(Self::blowup_p3_along_conic()),
            _ => Err(Error::UnknownSpace(name.to_string())),
        }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn generators(&self) -> &[String] {
        &self.gens
    }

    pub fn one(&self) -> Class {
        Class::constant(self.gens.len(), 1)
    }

    pub fn generator(&self, i: usize) -> Class {
        let mut m = vec![0; self.gens.len()];
        m[i] = 1;
        Class::monomial(m, 1)
    }

    /// `sum c_i g_i`.
    pub fn linear_class(&self, coeffs: &[i64]) -> Result<Class> {
        if coeffs.len() != self.gens.len() {
            return Err(Error::InvalidBundle(format!(
                "ring `{}` has {} generators, got {} coefficients",
                self.name,
                self.gens.len(),
                coeffs.len()
            )));
        }
        Ok(coeffs.iter().enumerate().fold(Class::zero(), |acc, (i, &c)| acc.add(&self.generator(i).scale(c))))
    }

    /// Total Chern class of the tangent bundle.
    pub fn tangent(&self) -> &Class {
        &self.tangent
    }

    /// `c_j(T)`.
    pub fn tangent_chern(&self, j: u32) -> Class {
        self.degree_part(&self.tangent, j)
    }

    pub fn degree_part(&self, c: &Class, d: u32) -> Class {
        let mut out = Class::zero();
        for (m, v) in c.terms() {
            if m.iter().sum::<u32>() == d {
                out.add_term(m.clone(), v.clone());
            }
        }
        out
    }

    /// Normal form: drops degrees above `dim`, applies truncations and
    /// rewrites `xi^2` with the quadratic relation.
    pub fn reduce(&self, c: &Class) -> Class {
        let mut work: Vec<(Mono, BigInt)> = c.terms().map(|(m, v)| (m.clone(), v.clone())).collect();
        let mut out = Class::zero();
        while let Some((m, v)) = work.pop() {
            if m.iter().sum::<u32>() > self.dim {
                continue;
            }
            if m.iter().zip(&self.truncation).any(|(e, t)| t.is_some_and(|t| *e >= t)) {
                continue;
            }
            if let Some(rel) = &self.relation {
                if m[rel.generator] >= 2 {
                    let mut rest = m.clone();
                    rest[rel.generator] -= 2;
                    for (rm, rv) in rel.rhs.terms() {
                        let nm = rest.iter().zip(rm).map(|(x, y)| x + y).collect();
                        work.push((nm, &v * rv));
                    }
                    continue;
                }
            }
            out.add_term(m, v);
        }
        out
    }

    pub fn mul(&self, a: &Class, b: &Class) -> Class {
        self.reduce(&a.raw_mul(b))
    }

    pub fn product(&self, factors: &[&Class]) -> Class {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// Degree of the top-degree part.
    pub fn integrate(&self, c: &Class) -> BigInt {
        self.reduce(c)
            .terms()
            .filter(|(m, _)| m.iter().sum::<u32>() == self.dim)
            .map(|(m, v)| v * self.integrals.get(m).cloned().unwrap_or_default())
            .sum()
    }

    /// Normal-form monomials of degree `d`.
    pub fn monomial_basis(&self, d: u32) -> Vec<Vec<u32>> {
        let k = self.gens.len();
        let mut out = Vec::new();
        let mut cur = vec![0u32; k];
        fn go(i: usize, rem: u32, cur: &mut Vec<u32>, ring: &ChernRing, out: &mut Vec<Vec<u32>>) {
            if i == cur.len() {
                if rem == 0 {
                    let c = Class::monomial(cur.clone(), 1);
                    if ring.reduce(&c) == c {
                        out.push(cur.clone());
                    }
                }
                return;
            }
            for e in (0..=rem).rev() {
                cur[i] = e;
                go(i + 1, rem - e, cur, ring, out);
            }
            cur[i] = 0;
        }
        go(0, d, &mut cur, self, &mut out);
        out
    }

    /// `int c_3(T)`, the topological Euler characteristic.
    pub fn euler_characteristic(&self) -> BigInt {
        self.integrate(&self.tangent_chern(self.dim))
    }

    /// `int (c_3(T) - c_1(T) c_2(T))`.
    pub fn c3_minus_c1c2(&self) -> Result<BigInt> {
        self.require_dim3()?;
        let c1 = self.tangent_chern(1);
        let c2 = self.tangent_chern(2);
        let c3 = self.tangent_chern(3);
        Ok(self.integrate(&c3.sub(&self.mul(&c1, &c2))))
    }

    pub(crate) fn require_dim3(&self) -> Result<()> {
        if self.dim != 3 {
            return Err(Error::Dimension { expected: 3, got: self.dim as usize });
        }
        Ok(())
    }

    /// `int c_3(T (x) omega)`, computed from the twist formula with
    /// `L = det T^vee`.
    pub fn c3_t_omega(&self) -> Result<BigInt> {
        self.require_dim3()?;
        let tangent = BundleClass { rank: 3, total: self.tangent.clone() };
        let omega = self.tangent_chern(1).scale(-1);
        Ok(self.integrate(&self.twist_c3(&tangent, &omega)?))
    }

    /// `c_3(E (x) L) = c_3 + c_2 l + c_1 l^2 + l^3` for `E` of rank 3.
    pub fn twist_c3(&self, e: &BundleClass, l: &Class) -> Result<Class> {
        if e.rank != 3 {
            return Err(Error::RankMismatch { left: e.rank, right: 3 });
        }
        let l2 = self.mul(l, l);
        let l3 = self.mul(&l2, l);
        Ok(e.chern(self, 3)
            .add(&self.mul(&e.chern(self, 2), l))
            .add(&self.mul(&e.chern(self, 1), &l2))
            .add(&l3))
    }

    pub fn format_class(&self, c: &Class) -> String {
        if c.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, v)) in c.terms().rev().enumerate() {
            let mono: Vec<String> = m
                .iter()
                .zip(&self.gens)
                .filter(|(e, _)| **e > 0)
                .map(|(e, g)| if *e == 1 { g.clone() } else { format!("{g}^{e}") })
                .collect();
            let mono = mono.join("*");
            let mag = v.abs();
            if i > 0 {
                s.push_str(if v.is_negative() { " - " } else { " + " });
            } else if v.is_negative() {
                s.push('-');
            }
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => s.push_str(&mag.to_string()),
                (false, true) => s.push_str(&mono),
                (false, false) => s.push_str(&format!("{mag}*{mono}")),
            }
        }
        s
    }
}

fn product_name(parts: &[u32]) -> String {
    parts.iter().map(|p| format!("P{p}")).collect::<Vec<_>>().join("x")
}

impl fmt::Display for ChernRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [c(T) = {}]", self.name, self.format_class(&self.tangent))
    }
}

/// A vector bundle recorded by its rank and total Chern class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleClass {
    pub rank: usize,
    total: Class,
}

impl BundleClass {
    pub fn trivial(ring: &ChernRing, rank: usize) -> Self {
        Self { rank, total: ring.one() }
    }

    /// `L_1 + ... + L_r` from the first Chern classes of the summands.
    pub fn split(ring: &ChernRing, lines: &[Class]) -> Self {
        let total = lines.iter().fold(ring.one(), |acc, l| ring.mul(&acc, &ring.one().add(l)));
        Self { rank: lines.len(), total }
    }

    /// `c_j`, zero for `j > rank`.
    pub fn chern(&self, ring: &ChernRing, j: u32) -> Class {
        if j as usize > self.rank {
            return Class::zero();
        }
        ring.degree_part(&self.total, j)
    }

    pub fn total(&self) -> &Class {
        &self.total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn projective_products() {
        let p3 = ChernRing::projective_product(&[3]);
        let h = p3.generator(0);
        assert_eq!(p3.integrate(&p3.product(&[&h, &h, &h])), int(1));
        assert_eq!(p3.format_class(p3.tangent()), "4*H^3 + 6*H^2 + 4*H + 1");
        let p21 = ChernRing::projective_product(&[2, 1]);
        let (h1, h2) = (p21.generator(0), p21.generator(1));
        assert_eq!(p21.integrate(&p21.product(&[&h1, &h1, &h2])), int(1));
        assert_eq!(p21.integrate(&p21.product(&[&h1, &h1, &h1])), int(0));
        let p111 = ChernRing::projective_product(&[1, 1, 1]);
        assert_eq!(p111.euler_characteristic(), int(8));
        assert!(ChernRing::of_projective_product(&Partition::new(vec![2, 2]).unwrap()).is_err());
    }

    #[test]
    fn euler_characteristic_is_product_of_factors() {
        for parts in [vec![3], vec![2, 1], vec![1, 1, 1]] {
            let expected: u32 = parts.iter().map(|l| l + 1).product();
            assert_eq!(ChernRing::projective_product(&parts).euler_characteristic(), int(expected.into()));
        }
    }

    #[test]
    fn projective_bundles() {
        let p2 = ChernRing::projective_product(&[2]);
        let trivial = ChernRing::projective_bundle(&p2, &Class::zero()).unwrap();
        assert_eq!(trivial.euler_characteristic(), int(6));
        let product = ChernRing::projective_product(&[2, 1]);
        assert_eq!(trivial.c3_t_omega().unwrap(), product.c3_t_omega().unwrap());
        let twisted = ChernRing::projective_bundle(&p2, &p2.generator(0)).unwrap();
        assert_eq!(twisted.euler_characteristic(), int(6));
        let p1p1 = ChernRing::projective_product(&[1, 1]);
        assert_eq!(ChernRing::projective_bundle(&p1p1, &Class::zero()).unwrap().euler_characteristic(), int(8));
        assert!(ChernRing::projective_bundle(&product, &Class::zero()).is_err());
    }

    #[test]
    fn bundle_convention_calibration() {
        // Any P^1-bundle over a surface S has chi = 2 chi(S). The trivial
        // bundle cannot tell the conventions apart; O(1) over P^2 can.
        let p2 = ChernRing::projective_product(&[2]);
        let h = p2.generator(0);
        for conv in [BundleConvention::Sub, BundleConvention::Quotient] {
            let r = ChernRing::projective_bundle_with(&p2, &Class::zero(), conv).unwrap();
            assert_eq!(r.euler_characteristic(), int(6));
        }
        let sub = ChernRing::projective_bundle_with(&p2, &h, BundleConvention::Sub).unwrap();
        let quot = ChernRing::projective_bundle_with(&p2, &h, BundleConvention::Quotient).unwrap();
        assert_eq!(sub.euler_characteristic(), int(6));
        assert_ne!(quot.euler_characteristic(), int(6));
        assert_eq!(CALIBRATED_BUNDLE_CONVENTION, BundleConvention::Sub);
    }

    #[test]
    fn c3_t_omega_examples() {
        assert_eq!(ChernRing::builtin("p3").unwrap().c3_t_omega().unwrap(), int(-20));
        assert_eq!(ChernRing::builtin("p2xp1").unwrap().c3_t_omega().unwrap(), int(-18));
        assert_eq!(ChernRing::builtin("p1cubed").unwrap().c3_t_omega().unwrap(), int(-16));
        let q = ChernRing::quadric();
        assert_eq!(q.euler_characteristic(), int(4));
        assert_eq!(q.format_class(q.tangent()), "2*H^3 + 4*H^2 + 3*H + 1");
        assert_eq!(q.c3_t_omega().unwrap(), int(-20));
    }

    #[test]
    fn twist_route_matches_direct_route() {
        for name in BUILTIN_RINGS {
            let ring = ChernRing::builtin(name).unwrap();
            assert_eq!(ring.c3_t_omega().unwrap(), ring.c3_minus_c1c2().unwrap(), "{name}");
        }
    }

    #[test]
    fn rational_threefolds_have_c1c2_24() {
        // Todd: chi(O) = c1 c2 / 24 = 1
        for name in BUILTIN_RINGS {
            let ring = ChernRing::builtin(name).unwrap();
            let c = ring.mul(&ring.tangent_chern(1), &ring.tangent_chern(2));
            assert_eq!(ring.integrate(&c), int(24), "{name}");
        }
    }

    #[test]
    fn point_blowup_has_exponent_minus_18() {
        let ring = ChernRing::builtin("pbundle-p2-o1").unwrap();
        assert_eq!(ring.euler_characteristic(), int(6));
        assert_eq!(ring.c3_t_omega().unwrap(), int(-18));
        let c1 = ring.tangent_chern(1);
        assert_eq!(ring.integrate(&ring.product(&[&c1, &c1, &c1])), int(56));
    }

    #[test]
    fn conic_blowup_numbers() {
        let ring = ChernRing::blowup_p3_along_conic();
        assert_eq!(ring.euler_characteristic(), int(6));
        let c1 = ring.tangent_chern(1);
        // (-K)^3 = 64 - 2(-K.C) + 2g - 2 = 46
        assert_eq!(ring.integrate(&ring.product(&[&c1, &c1, &c1])), int(46));
    }

    #[test]
    fn twist_formula_matches_chern_roots() {
        let p3 = ChernRing::projective_product(&[3]);
        let h = p3.generator(0);
        for (degrees, l) in [([0, 0, 0], 1), ([1, 2, 3], -2), ([-1, 0, 4], 3), ([2, 2, -5], 0), ([3, -3, 1], -1)] {
            let lines: Vec<Class> = degrees.iter().map(|&d| h.scale(d)).collect();
            let e = BundleClass::split(&p3, &lines);
            let twist = h.scale(l);
            let via_formula = p3.twist_c3(&e, &twist).unwrap();
            let roots: Vec<Class> = lines.iter().map(|a| p3.one().add(a).add(&twist)).collect();
            let direct = p3.degree_part(&p3.product(&roots.iter().collect::<Vec<_>>()), 3);
            assert_eq!(via_formula, direct, "{degrees:?} {l}");
        }
    }

    #[test]
    fn multiplication_is_associative_on_basis() {
        let ring = ChernRing::builtin("pbundle-p2-o1").unwrap();
        let basis: Vec<Class> = ring.monomial_basis(1).into_iter().map(|m| Class::monomial(m, 1)).collect();
        for a in &basis {
            for b in &basis {
                assert_eq!(ring.mul(a, b), ring.mul(b, a));
                for c in &basis {
                    assert_eq!(ring.mul(&ring.mul(a, b), c), ring.mul(a, &ring.mul(b, c)));
                }
            }
        }
        assert_eq!(ring.monomial_basis(3), vec![vec![2, 1]]);
    }

    #[test]
    fn unknown_ring() {
        assert!(matches!(ChernRing::builtin("k3"), Err(Error::UnknownSpace(_))));
    }
}
