//! Chern numbers of pairs `[Y, E]` in dimension three, the `phi(lambda, mu)`
//! basis of the rational cobordism group, and double point relations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{BundleClass, ChernRing, Class};
use crate::error::{Error, Result};
use crate::partitions::{enum_partition_pairs, Partition, PartitionPair};

/// Exponents of `(c1, c2, c3, f1, f2, f3)`.
type ChernMonomial = [u32; 6];

const WEIGHTS: [u32; 6] = [1, 2, 3, 1, 2, 3];

/// Weighted-degree-3 monomials in `c_i(T)` and `c_j(F)` (`j <= min(r, 3)`),
/// ordered by `F`-degree, then by the number of `T` factors, then with more
/// `F` factors first.
fn chern_monomials(r: usize) -> Vec<ChernMonomial> {
    let fmax = r.min(3);
    let mut out = Vec::new();
    let mut cur = [0u32; 6];
    fn go(i: usize, rem: u32, fmax: usize, cur: &mut ChernMonomial, out: &mut Vec<ChernMonomial>) {
        if i == 6 {
            if rem == 0 {
                out.push(*cur);
            }
            return;
        }
        if i >= 3 && i - 3 >= fmax {
            cur[i] = 0;
            go(i + 1, rem, fmax, cur, out);
            return;
        }
        for e in 0..=rem / WEIGHTS[i] {
            cur[i] = e;
            go(i + 1, rem - e * WEIGHTS[i], fmax, cur, out);
        }
        cur[i] = 0;
    }
    go(0, 3, fmax, &mut cur, &mut out);
    let key = |m: &ChernMonomial| {
        let f_degree: u32 = (3..6).map(|i| m[i] * WEIGHTS[i]).sum();
        let t_factors: u32 = m[..3].iter().sum();
        let f_factors: u32 = m[3..].iter().sum();
        (f_degree, t_factors, std::cmp::Reverse(f_factors), std::cmp::Reverse(*m))
    };
    out.sort_by_key(key);
    out
}

/// Labels for the entries of [`mixed_chern_vector`], e.g. `c1*c2` or `c2*f1`.
pub fn chern_number_labels(r: usize) -> Vec<String> {
    let names = ["c1", "c2", "c3", "f1", "f2", "f3"];
    chern_monomials(r)
        .iter()
        .map(|m| {
            let parts: Vec<String> = m
                .iter()
                .zip(names)
                .filter(|(e, _)| **e > 0)
                .map(|(e, n)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
                .collect();
            parts.join("*")
        })
        .collect()
}

/// All Chern numbers of `(Y, F)`: integrals of the degree-3 monomials in
/// `c(T_Y)` and `c(F)`, in the order of [`chern_number_labels`].
pub fn mixed_chern_vector(ring: &ChernRing, f: &BundleClass) -> Result<Vec<BigRational>> {
    ring.require_dim3()?;
    let classes: Vec<Class> = (1..=3)
        .map(|j| ring.tangent_chern(j))
        .chain((1..=3).map(|j| f.chern(ring, j)))
        .collect();
    Ok(chern_monomials(f.rank)
        .iter()
        .map(|m| {
            let mut acc = ring.one();
            for (e, c) in m.iter().zip(&classes) {
                for _ in 0..*e {
                    acc = ring.mul(&acc, c);
                }
            }
            BigRational::from_integer(ring.integrate(&acc))
        })
        .collect())
}

/// `[P^lambda, O^{r - l(mu)} + sum_{m in mu} L_m]`, where `L_m` is pulled
/// back from `O_{P^m}(1)` along the projection to a factor of size `m`.
/// Equal parts of `mu` use distinct factors of `lambda`.
pub fn phi_class(pair: &PartitionPair, r: usize) -> Result<(ChernRing, BundleClass)> {
    let pair = PartitionPair::new(pair.lambda.clone(), pair.mu.clone(), r)?;
    let ring = ChernRing::of_projective_product(&pair.lambda)?;
    let mut used = vec![false; pair.lambda.len()];
    let mut lines = Vec::with_capacity(r);
    for &m in pair.mu.parts() {
        let idx = pair
            .lambda
            .parts()
            .iter()
            .enumerate()
            .position(|(i, &p)| p == m && !used[i])
            .expect("mu is a sub-multiset of lambda");
        used[idx] = true;
        lines.push(ring.generator(idx));
    }
    lines.resize(r, Class::zero());
    let bundle = BundleClass::split(&ring, &lines);
    Ok((ring, bundle))
}

/// Rows are the Chern vectors of `phi(lambda, mu)` for all pairs of size 3.
pub fn basis_matrix(r: usize) -> Result<(Vec<PartitionPair>, Vec<Vec<BigRational>>)> {
    let pairs = enum_partition_pairs(3, r);
    let rows = pairs
        .iter()
        .map(|p| {
            let (ring, f) = phi_class(p, r)?;
            mixed_chern_vector(&ring, &f)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((pairs, rows))
}

/// Determinant over the rationals by fraction-exact elimination.
pub fn determinant(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= &a[col][col];
        for i in col + 1..n {
            if a[i][col].is_zero() {
                continue;
            }
            let factor = &a[i][col] / &a[col][col];
            for j in col..n {
                let d = &factor * &a[col][j];
                a[i][j] -= d;
            }
        }
    }
    det
}

/// Solves `x^T M = v`; `None` when `M` is singular.
fn solve_left(m: &[Vec<BigRational>], v: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = m.len();
    // augmented system M^T x = v
    let mut a: Vec<Vec<BigRational>> =
        (0..n).map(|i| (0..n).map(|j| m[j][i].clone()).chain(std::iter::once(v[i].clone())).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(pivot, col);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let factor = a[i][col].clone();
            for j in col..=n {
                let d = &factor * &a[col][j];
                a[i][j] -= d;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

/// Coordinates of `[Y, F]` in the `phi` basis, from its Chern numbers.
pub fn decompose(ring: &ChernRing, f: &BundleClass, r: usize) -> Result<Vec<(PartitionPair, BigRational)>> {
    if f.rank != r {
        return Err(Error::RankMismatch { left: f.rank, right: r });
    }
    let v = mixed_chern_vector(ring, f)?;
    let (pairs, rows) = basis_matrix(r)?;
    let x = solve_left(&rows, &v).ok_or(Error::SingularBasisMatrix { r })?;
    Ok(pairs.into_iter().zip(x).collect())
}

/// `sum c_b v(phi_b)` for coordinates from [`decompose`].
pub fn reconstruct(coords: &[(PartitionPair, BigRational)], r: usize) -> Result<Vec<BigRational>> {
    let labels = chern_number_labels(r).len();
    let mut out = vec![BigRational::zero(); labels];
    for (pair, c) in coords {
        let (ring, f) = phi_class(pair, r)?;
        for (o, x) in out.iter_mut().zip(mixed_chern_vector(&ring, &f)?) {
            *o += c * x;
        }
    }
    Ok(out)
}

/// One member `[Y, E]` of a double point relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DprSide {
    pub ring: ChernRing,
    pub bundle: BundleClass,
}

impl DprSide {
    pub fn trivial(ring: ChernRing, r: usize) -> Self {
        let bundle = BundleClass::trivial(&ring, r);
        Self { ring, bundle }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DprReport {
    /// Chern vectors of `Y_xi, A, B, P(pi)`.
    pub vectors: [Vec<BigRational>; 4],
    /// `int c3(T (x) omega)` of `Y_xi, A, B, P(pi)`.
    pub exponents: [BigInt; 4],
    /// `v(Y_xi) = v(A) + v(B) - v(P(pi))`.
    pub chern_numbers_match: bool,
    /// `e(Y_xi) + e(P(pi)) = e(A) + e(B)`.
    pub exponent_match: bool,
}

impl DprReport {
    pub fn passed(&self) -> bool {
        self.chern_numbers_match && self.exponent_match
    }
}

/// Checks the Chern-number shadow of `[Y_xi] - [A] - [B] + [P(pi)] = 0`.
pub fn dpr_check(y: &DprSide, a: &DprSide, b: &DprSide, p: &DprSide) -> Result<DprReport> {
    let sides = [y, a, b, p];
    let r = y.bundle.rank;
    for s in &sides {
        if s.bundle.rank != r {
            return Err(Error::RankMismatch { left: r, right: s.bundle.rank });
        }
        s.ring.require_dim3()?;
    }
    let vectors = sides.map(|s| mixed_chern_vector(&s.ring, &s.bundle));
    let [vy, va, vb, vp] = vectors;
    let (vy, va, vb, vp) = (vy?, va?, vb?, vp?);
    let chern_numbers_match =
        (0..vy.len()).all(|i| vy[i] == &(&va[i] + &vb[i]) - &vp[i]);
    let exps = sides.map(|s| s.ring.c3_t_omega());
    let [ey, ea, eb, ep] = exps;
    let (ey, ea, eb, ep) = (ey?, ea?, eb?, ep?);
    let exponent_match = &ey + &ep == &ea + &eb;
    Ok(DprReport {
        vectors: [vy, va, vb, vp],
        exponents: [ey, ea, eb, ep],
        chern_numbers_match,
        exponent_match,
    })
}

/// Names accepted by [`builtin_dpr`].
pub const BUILTIN_DPRS: &[&str] = &["quadric-dpr", "quadric-two-p3", "normal-cone-dpr"];

/// Built-in relations with trivial rank-`r` bundles, as `[Y_xi, A, B, P(pi)]`.
///
/// - `quadric-dpr`: the quadric degenerating to `P^3` and `P^3` blown up
///   along a conic, glued along a plane with normal bundle `O(1)`.
/// - `quadric-two-p3`: the same quadric against two copies of `P^3`.
/// - `normal-cone-dpr`: deformation to the normal cone of a plane in `P^3`.
pub fn builtin_dpr(name: &str, r: usize) -> Result<[DprSide; 4]> {
    let p3 = || ChernRing::builtin("p3");
    let pbundle = || ChernRing::builtin("pbundle-p2-o1");
    let sides = match name {
        "quadric-dpr" => [ChernRing::quadric(), p3()?, ChernRing::blowup_p3_along_conic(), pbundle()?],
        "quadric-two-p3" => [ChernRing::quadric(), p3()?, p3()?, pbundle()?],
        "normal-cone-dpr" => [p3()?, p3()?, pbundle()?, pbundle()?],
        _ => return Err(Error::UnknownSpace(name.to_string())),
    };
    Ok(sides.map(|ring| DprSide::trivial(ring, r)))
}

/// Convenience: `phi` for `(lambda, mu)` given as part lists.
pub fn phi_from_parts(lambda: &[u32], mu: &[u32], r: usize) -> Result<(ChernRing, BundleClass)> {
    let pair = PartitionPair::new(Partition::new(lambda.to_vec())?, Partition::new(mu.to_vec())?, r)?;
    phi_class(&pair, r)
}
