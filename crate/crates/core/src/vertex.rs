//! Virtual tangent characters at torus-fixed points of the local Quot scheme
//! and their inverse equivariant Euler classes.
//!
//! On a chart `U ~ A^3` whose coordinate functions carry the characters
//! `t1, t2, t3`, a fixed quotient of `F = w_1 O + ... + w_r O` is a colored
//! plane partition. With `f = sum w_j`, `q = sum w_j Q_j` (where `Q_j` is the
//! box character of the `j`-th plane partition), `P = (1-t1)(1-t2)(1-t3)`
//! and `kappa = t1 t2 t3`, the character of `RHom(F,Q) + RHom(Q,F) - RHom(Q,Q)`
//! is
//!
//! ```text
//! T = dual(f) q - dual(q) f / kappa + dual(q) q P / kappa
//! ```
//!
//! using `chi(A, B) = dual(a) b dual(P)` and `dual(P) = -P / kappa`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::charalg::{EquivParams, Exponent, LaurentPoly, TORUS_DIM};
use crate::error::{Error, Result};
use crate::partitions::{enum_colored, ColoredPlanePartition};

/// Parameters are drawn uniformly from `[-PARAM_BOUND, PARAM_BOUND]`.
pub const PARAM_BOUND: i64 = 1_000_000;

/// Resampling budget when a sampled point makes some weight vanish.
pub const MAX_RESAMPLES: usize = 32;

/// Localization data of one torus-fixed chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartWeights {
    /// Characters of the chart's three coordinate functions in the global
    /// torus basis. The tangent space at the fixed point has the dual
    /// characters.
    pub tangent: [[i64; 3]; 3],
    /// Characters `w_j = u_j t^{m_j}` of the bundle summands, length `3 + r`.
    pub colors: Vec<Exponent>,
}

impl ChartWeights {
    /// Chart with the given coordinate characters and per-summand torus
    /// characters `m_j`; the color variable `u_j` is attached to summand `j`.
    pub fn new(tangent: [[i64; 3]; 3], line_characters: &[[i64; 3]]) -> Result<Self> {
        let det = det3(&tangent);
        if det.abs() != 1 {
            return Err(Error::InvalidChart { index: 0, det });
        }
        let r = line_characters.len();
        let colors = line_characters
            .iter()
            .enumerate()
            .map(|(j, m)| {
                let mut e = vec![0; TORUS_DIM + r];
                e[..TORUS_DIM].copy_from_slice(m);
                e[TORUS_DIM + j] = 1;
                e
            })
            .collect();
        Ok(Self { tangent, colors })
    }

    /// The chart `A^3` with coordinate characters `t1, t2, t3` and the trivial
    /// bundle of rank `r`.
    pub fn standard(r: usize) -> Self {
        Self::new([[1, 0, 0], [0, 1, 0], [0, 0, 1]], &vec![[0; 3]; r]).expect("unimodular")
    }

    pub fn rank(&self) -> usize {
        self.colors.len()
    }

    /// Exponent of `t1 t2 t3` written in the chart coordinates.
    pub fn kappa(&self) -> [i64; 3] {
        let mut k = [0; 3];
        for c in &self.tangent {
            for a in 0..3 {
                k[a] += c[a];
            }
        }
        k
    }
}

pub(crate) fn det3(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// A virtual torus representation with vanishing fixed part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualCharacter(LaurentPoly);

impl VirtualCharacter {
    pub fn new(poly: LaurentPoly) -> Result<Self> {
        let c = poly.constant_term();
        if !c.is_zero() {
            return Err(Error::NonzeroFixedPart { coefficient: c });
        }
        Ok(Self(poly))
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.0
    }

    /// Whether `T + kappa^{-1} dual(T) = 0` for the monomial `kappa = t^k`.
    pub fn is_kappa_symmetric(&self, kappa: [i64; 3]) -> bool {
        let rank = self.0.rank();
        let mut shift = vec![0; TORUS_DIM + rank];
        for a in 0..TORUS_DIM {
            shift[a] = -kappa[a];
        }
        (&self.0 + &self.0.dual().shift(&shift)).is_zero()
    }
}

fn lift(t: [i64; 3], rank: usize) -> Exponent {
    let mut e = t.to_vec();
    e.resize(TORUS_DIM + rank, 0);
    e
}

/// Virtual tangent character at the fixed point `pt` of the chart.
pub fn vertex_character(pt: &ColoredPlanePartition, chart: &ChartWeights) -> Result<VirtualCharacter> {
    let r = chart.rank();
    if pt.rank() != r {
        return Err(Error::RankMismatch { left: pt.rank(), right: r });
    }
    let mut f = LaurentPoly::zero(r);
    let mut q = LaurentPoly::zero(r);
    for (w, pp) in chart.colors.iter().zip(pt.parts()) {
        f = &f + &LaurentPoly::monomial(w.clone(), 1)?;
        q = &q + &pp.character_in_chart(&chart.tangent, w);
    }
    if q.is_zero() {
        return VirtualCharacter::new(q);
    }
    // dual(f) q - dual(q) f / kappa + dual(q) q P / kappa
    //   = dual(f) q - dual(q) (f - q P) / kappa
    let one = LaurentPoly::one(r);
    let mut p = one.clone();
    for c in &chart.tangent {
        p = &p * &(&one - &LaurentPoly::torus_monomial(*c, r));
    }
    let kappa_inv = lift(chart.kappa().map(|x| -x), r);
    let tail = &q.dual() * &(&f - &(&q * &p));
    let t = &(&f.dual() * &q) - &tail.shift(&kappa_inv);
    VirtualCharacter::new(t)
}

/// `1 / e(T)`: the product of the weights of negative-multiplicity monomials
/// divided by the product of the weights of positive-multiplicity ones.
pub fn euler_inverse(ch: &VirtualCharacter, params: &EquivParams) -> Result<BigRational> {
    let poly = ch.poly();
    let c = poly.constant_term();
    if !c.is_zero() {
        return Err(Error::NonzeroFixedPart { coefficient: c });
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (e, c) in poly.terms() {
        let w = params.weight_int(e);
        if w.is_zero() {
            return Err(Error::ZeroWeight { exponent: e.clone() });
        }
        let k: u32 = c.abs().try_into().expect("multiplicity fits in u32");
        if c.is_positive() {
            den *= num_traits::pow(w, k as usize);
        } else {
            num *= num_traits::pow(w, k as usize);
        }
    }
    Ok(BigRational::new(num, den))
}

/// Global orientation convention for fixed-point contributions. A size-`n`
/// fixed point is weighted by `sign^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum SignConvention {
    /// Contributions are `1 / e(T^vir)` as computed.
    #[default]
    Natural,
    /// Contributions carry an extra `(-1)^n`.
    Alternating,
}

/// The convention pinned by requiring the length-one invariant of `P^3` with
/// the trivial line bundle to equal `20`.
pub const CALIBRATED_CONVENTION: SignConvention = SignConvention::Natural;

impl SignConvention {
    pub fn factor(self, n: usize) -> BigRational {
        match self {
            Self::Natural => BigRational::one(),
            Self::Alternating if n % 2 == 1 => -BigRational::one(),
            Self::Alternating => BigRational::one(),
        }
    }
}

/// Sum of `1 / e(N^vir)` over the fixed points of length `n` on one chart.
pub fn chart_contribution(chart: &ChartWeights, r: usize, n: usize, params: &EquivParams) -> Result<BigRational> {
    chart_contribution_with(chart, r, n, params, CALIBRATED_CONVENTION)
}

pub fn chart_contribution_with(
    chart: &ChartWeights,
    r: usize,
    n: usize,
    params: &EquivParams,
    convention: SignConvention,
) -> Result<BigRational> {
    if chart.rank() != r {
        return Err(Error::RankMismatch { left: chart.rank(), right: r });
    }
    if params.rank() != r {
        return Err(Error::RankMismatch { left: params.rank(), right: r });
    }
    Ok(sum_over_points(&enum_colored(n, r), chart, params)? * convention.factor(n))
}

/// Sum of `1/e(N^vir)` over a list of fixed points of one chart.
pub fn sum_over_points(points: &[ColoredPlanePartition], chart: &ChartWeights, params: &EquivParams) -> Result<BigRational> {
    let terms: Vec<Result<BigRational>> =
        points.par_iter().map(|pt| euler_inverse(&vertex_character(pt, chart)?, params)).collect();
    let mut sum = BigRational::zero();
    for t in terms {
        sum += t?;
    }
    Ok(sum)
}

/// Seeded source of integer parameter points.
#[derive(Clone, Debug)]
pub struct ParamSampler {
    rng: ChaCha8Rng,
}

impl ParamSampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn sample(&mut self, r: usize) -> EquivParams {
        let mut draw = || self.rng.random_range(-PARAM_BOUND..=PARAM_BOUND);
        let s = [draw(), draw(), draw()];
        let v = (0..r).map(|_| draw()).collect();
        EquivParams::new(s, v)
    }
}

/// Runs `eval` at freshly sampled points until no weight vanishes, giving up
/// after [`MAX_RESAMPLES`] attempts.
pub fn with_admissible_params<T>(
    sampler: &mut ParamSampler,
    r: usize,
    mut eval: impl FnMut(&EquivParams) -> Result<T>,
) -> Result<(EquivParams, T)> {
    for _ in 0..MAX_RESAMPLES {
        let params = sampler.sample(r);
        match eval(&params) {
            Ok(v) => return Ok((params, v)),
            Err(Error::ZeroWeight { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::ParametersExhausted { attempts: MAX_RESAMPLES })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enum_plane_partitions, PlanePartition};

    /// The three-term character `V(A, B) = B - dual(A)/kappa + dual(A) B P/kappa`,
    /// where `P` is built from the chart coordinate characters.
    fn pair_character(a: &LaurentPoly, b: &LaurentPoly, chart: &ChartWeights) -> LaurentPoly {
        let rank = a.rank();
        let one = LaurentPoly::one(rank);
        let mut p = one.clone();
        for c in &chart.tangent {
            p = &p * &(&one - &LaurentPoly::torus_monomial(*c, rank));
        }
        let kappa_inv = lift(chart.kappa().map(|x| -x), rank);
        let a_bar = a.dual();
        let mixed = &a_bar * &(&one - &(b * &p));
        b - &mixed.shift(&kappa_inv)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn single_box(r: usize, color: usize) -> ColoredPlanePartition {
        let mut parts = vec![PlanePartition::empty(); r];
        parts[color] = PlanePartition::from_boxes(&[[0, 0, 0]]).unwrap();
        ColoredPlanePartition::new(parts)
    }

    fn expected_single_box() -> LaurentPoly {
        LaurentPoly::from_terms(
            0,
            [
                (vec![-1, 0, 0], 1),
                (vec![0, -1, 0], 1),
                (vec![0, 0, -1], 1),
                (vec![-1, -1, 0], -1),
                (vec![-1, 0, -1], -1),
                (vec![0, -1, -1], -1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn single_box_character() {
        let ch = vertex_character(&single_box(1, 0), &ChartWeights::standard(1)).unwrap();
        let expected = LaurentPoly::from_terms(1, expected_single_box().terms().map(|(e, c)| {
            let mut e = e.clone();
            e.push(0);
            (e, c.clone())
        }))
        .unwrap();
        assert_eq!(ch.poly(), &expected);
    }

    #[test]
    fn empty_point_has_zero_character() {
        for r in 1..=3 {
            let ch = vertex_character(&ColoredPlanePartition::empty(r), &ChartWeights::standard(r)).unwrap();
            assert!(ch.poly().is_zero());
        }
    }

    #[test]
    fn rank_two_cross_terms() {
        let ch = vertex_character(&single_box(2, 0), &ChartWeights::standard(2)).unwrap();
        let poly = ch.poly();
        let diag: Vec<_> = poly.terms().filter(|(e, _)| e[3] == 0 && e[4] == 0).collect();
        let diag = LaurentPoly::from_terms(0, diag.into_iter().map(|(e, c)| (e[..3].to_vec(), c.clone()))).unwrap();
        assert_eq!(diag, expected_single_box());
        assert!(poly.terms().any(|(e, _)| e[3] == 1 && e[4] == -1));
        assert!(poly.terms().any(|(e, _)| e[3] == -1 && e[4] == 1));
    }

    #[test]
    fn rank_mismatch_rejected() {
        let err = vertex_character(&single_box(2, 0), &ChartWeights::standard(1)).unwrap_err();
        assert_eq!(err, Error::RankMismatch { left: 2, right: 1 });
    }

    #[test]
    fn euler_inverse_examples() {
        let zero = VirtualCharacter::new(LaurentPoly::zero(1)).unwrap();
        let p = EquivParams::new([1, 2, 3], vec![5]);
        assert_eq!(euler_inverse(&zero, &p).unwrap(), rat(1, 1));

        let ch = vertex_character(&single_box(1, 0), &ChartWeights::standard(1)).unwrap();
        // tangent forms -1,-2,-3; obstruction forms -3,-4,-5
        assert_eq!(euler_inverse(&ch, &p).unwrap(), rat(10, 1));
        let scaled = EquivParams::new([2, 4, 6], vec![10]);
        assert_eq!(euler_inverse(&ch, &scaled).unwrap(), rat(10, 1));

        let degenerate = EquivParams::new([1, -1, 3], vec![0]);
        assert!(matches!(euler_inverse(&ch, &degenerate), Err(Error::ZeroWeight { .. })));
    }

    #[test]
    fn nonzero_fixed_part_rejected() {
        assert!(matches!(
            VirtualCharacter::new(LaurentPoly::one(0)),
            Err(Error::NonzeroFixedPart { .. })
        ));
    }

    #[test]
    fn chart_contribution_small_cases() {
        let chart = ChartWeights::standard(1);
        let p = EquivParams::new([3, 5, 7], vec![11]);
        assert_eq!(chart_contribution(&chart, 1, 0, &p).unwrap(), rat(1, 1));
        let ones = EquivParams::new([1, 1, 1], vec![11]);
        assert_eq!(chart_contribution(&chart, 1, 1, &ones).unwrap(), rat(8, 1));
        // prod_{i<j}(s_i + s_j) / (s1 s2 s3)
        for s in [[3i64, 5, 7], [-2, 9, 4], [13, -6, 1]] {
            let p = EquivParams::new(s, vec![17]);
            let expected = rat((s[0] + s[1]) * (s[0] + s[2]) * (s[1] + s[2]), s[0] * s[1] * s[2]);
            assert_eq!(chart_contribution(&chart, 1, 1, &p).unwrap(), expected);
        }
    }

    #[test]
    fn alternating_convention_flips_odd_lengths() {
        let chart = ChartWeights::standard(1);
        let p = EquivParams::new([3, 5, 7], vec![11]);
        let nat = chart_contribution_with(&chart, 1, 1, &p, SignConvention::Natural).unwrap();
        let alt = chart_contribution_with(&chart, 1, 1, &p, SignConvention::Alternating).unwrap();
        assert_eq!(nat, -alt);
    }

    #[test]
    fn symmetry_and_vd_zero_on_a_twisted_chart() {
        let chart = ChartWeights::new([[-1, 0, 0], [-1, 1, 0], [-1, 0, 1]], &[[1, 0, 0], [0, 0, 0]]).unwrap();
        for n in 0..=3 {
            for pt in enum_colored(n, 2) {
                let ch = vertex_character(&pt, &chart).unwrap();
                assert!(ch.is_kappa_symmetric(chart.kappa()), "{pt}");
            }
        }
    }

    #[test]
    fn equal_colors_split_into_diagonal_and_paired_terms() {
        let chart = ChartWeights::standard(2);
        let rank1 = ChartWeights::standard(1);
        let pps: Vec<PlanePartition> = (0..=2).flat_map(enum_plane_partitions).collect();
        let forget = |p: &LaurentPoly| {
            LaurentPoly::from_terms(0, p.terms().map(|(e, c)| (e[..3].to_vec(), c.clone()))).unwrap()
        };
        let chart0 = ChartWeights::standard(0);
        for a in &pps {
            for b in &pps {
                let pt = ColoredPlanePartition::new(vec![a.clone(), b.clone()]);
                let full = forget(vertex_character(&pt, &chart).unwrap().poly());
                let diag = |p: &PlanePartition| {
                    forget(vertex_character(&ColoredPlanePartition::new(vec![p.clone()]), &rank1).unwrap().poly())
                };
                let ab = pair_character(&a.character(), &b.character(), &chart0);
                let ba = pair_character(&b.character(), &a.character(), &chart0);
                // off-diagonal terms are exchanged by the kappa-twisted bar involution
                assert_eq!(ba, -&ab.dual().shift(&[-1, -1, -1]));
                let total = &(&(&diag(a) + &diag(b)) + &ab) + &ba;
                assert_eq!(full, total);
            }
        }
    }

    #[test]
    fn sampler_is_deterministic() {
        let mut a = ParamSampler::new(7);
        let mut b = ParamSampler::new(7);
        for _ in 0..5 {
            let p = a.sample(2);
            assert_eq!(p, b.sample(2));
            assert!(p.s.iter().chain(&p.v).all(|x| x.abs() <= PARAM_BOUND));
        }
    }

    #[test]
    fn resampling_gives_up() {
        let mut s = ParamSampler::new(1);
        let res: Result<(EquivParams, ())> =
            with_admissible_params(&mut s, 1, |_| Err(Error::ZeroWeight { exponent: vec![0; 4] }));
        assert_eq!(res.unwrap_err(), Error::ParametersExhausted { attempts: MAX_RESAMPLES });
    }
}
