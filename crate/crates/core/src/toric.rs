//! Smooth toric 3-folds, split equivariant bundles and the global
//! localization sums.
//!
//! A [`ToricSpace`] is a list of torus-fixed charts, each given by the
//! characters of its three coordinate functions in one global torus basis.
//! Spaces built from a fan also know their rays, so line bundles can be
//! described by torus-invariant divisors. Chart adjacency is never checked
//! structurally: a localization sum that depends on the sampled parameter
//! point is reported as [`Error::ParameterDependence`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::charalg::EquivParams;
use crate::error::{Error, Result};
use crate::partitions::{enum_colored, ColoredPlanePartition};
use crate::series::Series;
use crate::vertex::{
    det3, sum_over_points, with_admissible_params, ChartWeights, ParamSampler, SignConvention,
    CALIBRATED_CONVENTION,
};

/// Names accepted by [`ToricSpace::builtin`].
pub const BUILTIN_SPACES: &[&str] = &["p3", "p2xp1", "p1cubed", "pbundle-p2-o1"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricSpace {
    pub name: String,
    /// Coordinate characters of each fixed chart.
    pub charts: Vec<[[i64; 3]; 3]>,
    rays: Vec<[i64; 3]>,
    cones: Vec<[usize; 3]>,
    /// Divisor coefficient vectors (one entry per ray) of the generators used
    /// for multidegree bundle descriptors.
    hyperplanes: Vec<Vec<i64>>,
}

impl ToricSpace {
    /// A space given directly by chart data, without a fan.
    pub fn from_charts(name: impl Into<String>, charts: Vec<[[i64; 3]; 3]>) -> Result<Self> {
        for (index, c) in charts.iter().enumerate() {
            let det = det3(c);
            if det.abs() != 1 {
                return Err(Error::InvalidChart { index, det });
            }
        }
        Ok(Self { name: name.into(), charts, rays: Vec::new(), cones: Vec::new(), hyperplanes: Vec::new() })
    }

    /// A space from a complete smooth fan. Each maximal cone gives a chart
    /// whose coordinate characters are the dual basis of the cone's rays.
    pub fn from_fan(
        name: impl Into<String>,
        rays: Vec<[i64; 3]>,
        cones: Vec<[usize; 3]>,
        hyperplanes: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let mut charts = Vec::with_capacity(cones.len());
        for (index, cone) in cones.iter().enumerate() {
            let m = [rays[cone[0]], rays[cone[1]], rays[cone[2]]];
            let det = det3(&m);
            if det.abs() != 1 {
                return Err(Error::InvalidChart { index, det });
            }
            charts.push(dual_basis(&m, det));
        }
        for h in &hyperplanes {
            if h.len() != rays.len() {
                return Err(Error::InvalidBundle(format!(
                    "divisor has {} coefficients for {} rays",
                    h.len(),
                    rays.len()
                )));
            }
        }
        Ok(Self { name: name.into(), charts, rays, cones, hyperplanes })
    }

    pub fn builtin(name: &str) -> Result<Self> {
        let e = |i: usize| {
            let mut v = [0; 3];
            v[i] = 1;
            v
        };
        let neg = |v: [i64; 3]| v.map(|x| -x);
        match name {
            "p3" => Self::from_fan(
                name,
                vec![e(0), e(1), e(2), [-1, -1, -1]],
                vec![[0, 1, 2], [1, 2, 3], [0, 2, 3], [0, 1, 3]],
                vec![vec![0, 0, 0, 1]],
            ),
            "p2xp1" => {
                let mut cones = Vec::new();
                for c in [[0, 1], [1, 2], [0, 2]] {
                    for f in [3, 4] {
                        cones.push([c[0], c[1], f]);
                    }
                }
                Self::from_fan(
                    name,
                    vec![e(0), e(1), [-1, -1, 0], e(2), neg(e(2))],
                    cones,
                    vec![vec![0, 0, 1, 0, 0], vec![0, 0, 0, 0, 1]],
                )
            }
            "p1cubed" => {
                let mut cones = Vec::new();
                for a in [0, 1] {
                    for b in [2, 3] {
                        for c in [4, 5] {
                            cones.push([a, b, c]);
                        }
                    }
                }
                let mut hyperplanes = vec![vec![0; 6]; 3];
                for (i, h) in hyperplanes.iter_mut().enumerate() {
                    h[2 * i + 1] = 1;
                }
                Self::from_fan(
                    name,
                    vec![e(0), neg(e(0)), e(1), neg(e(1)), e(2), neg(e(2))],
                    cones,
                    hyperplanes,
                )
            }
            // P(O + O(1)) over P^2, i.e. P^3 blown up at the fixed point of
            // the cone (e1, e2, e3). Generators: pullback of the hyperplane,
            // then the exceptional divisor.
            "pbundle-p2-o1" => Self::from_fan(
                name,
                vec![e(0), e(1), e(2), [-1, -1, -1], [1, 1, 1]],
                vec![[0, 1, 4], [0, 2, 4], [1, 2, 4], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
                vec![vec![0, 0, 0, 1, 0], vec![0, 0, 0, 0, 1]],
            ),
            _ => Err(Error::UnknownSpace(name.to_string())),
        }
    }

    pub fn num_charts(&self) -> usize {
        self.charts.len()
    }

    pub fn rays(&self) -> &[[i64; 3]] {
        &self.rays
    }

    pub fn cones(&self) -> &[[usize; 3]] {
        &self.cones
    }

    /// Number of generators available to multidegree descriptors.
    pub fn picard_generators(&self) -> usize {
        self.hyperplanes.len()
    }

    /// Per-chart characters of the line bundle `O(sum a_rho D_rho)`: on each
    /// cone, the character `m` with `<m, u_rho> = -a_rho` for its rays.
    pub fn divisor_characters(&self, divisor: &[i64]) -> Result<Vec<[i64; 3]>> {
        if self.rays.is_empty() {
            return Err(Error::InvalidBundle(format!("space `{}` has no fan data", self.name)));
        }
        if divisor.len() != self.rays.len() {
            return Err(Error::InvalidBundle(format!(
                "divisor has {} coefficients for {} rays",
                divisor.len(),
                self.rays.len()
            )));
        }
        Ok(self
            .cones
            .iter()
            .zip(&self.charts)
            .map(|(cone, dual)| {
                let mut m = [0; 3];
                for (slot, &ray) in cone.iter().enumerate() {
                    for a in 0..3 {
                        m[a] -= divisor[ray] * dual[slot][a];
                    }
                }
                m
            })
            .collect())
    }

    /// Per-chart characters of the line bundle with the given multidegree
    /// with respect to the space's generators. `O(d)` on `P^3` is `&[d]`.
    pub fn line_bundle(&self, degrees: &[i64]) -> Result<Vec<[i64; 3]>> {
        if degrees.len() != self.hyperplanes.len() {
            return Err(Error::InvalidBundle(format!(
                "space `{}` takes {} degrees, got {}",
                self.name,
                self.hyperplanes.len(),
                degrees.len()
            )));
        }
        let mut divisor = vec![0; self.rays.len()];
        for (d, h) in degrees.iter().zip(&self.hyperplanes) {
            for (x, y) in divisor.iter_mut().zip(h) {
                *x += d * y;
            }
        }
        self.divisor_characters(&divisor)
    }

    /// Direct sum of line bundles given by multidegrees.
    pub fn split_bundle(&self, summands: &[Vec<i64>]) -> Result<SplitBundle> {
        let per_summand = summands.iter().map(|d| self.line_bundle(d)).collect::<Result<Vec<_>>>()?;
        let characters =
            (0..self.num_charts()).map(|alpha| per_summand.iter().map(|s| s[alpha]).collect()).collect();
        SplitBundle::new(summands.len(), characters)
    }

    pub fn trivial_bundle(&self, r: usize) -> SplitBundle {
        SplitBundle::trivial(self.num_charts(), r)
    }

    /// Localization data for every chart with the bundle's color weights.
    pub fn chart_weights(&self, bundle: &SplitBundle) -> Result<Vec<ChartWeights>> {
        if bundle.characters.len() != self.num_charts() {
            return Err(Error::InvalidBundle(format!(
                "bundle has data for {} charts, space has {}",
                bundle.characters.len(),
                self.num_charts()
            )));
        }
        self.charts
            .iter()
            .zip(&bundle.characters)
            .enumerate()
            .map(|(index, (tangent, chars))| {
                ChartWeights::new(*tangent, chars).map_err(|e| match e {
                    Error::InvalidChart { det, .. } => Error::InvalidChart { index, det },
                    e => e,
                })
            })
            .collect()
    }
}

/// Rows `m_i` with `m_i . u_j = delta_ij` for a unimodular row matrix `u`.
fn dual_basis(u: &[[i64; 3]; 3], det: i64) -> [[i64; 3]; 3] {
    // (u^T)^{-1} = cofactor(u) / det
    let mut out = [[0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
            let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
            let cof = u[r0][c0] * u[r1][c1] - u[r0][c1] * u[r1][c0];
            *x = cof / det;
        }
    }
    out
}

/// Equivariant split bundle: for each chart and summand, the torus character
/// of the summand's local generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitBundle {
    rank: usize,
    pub characters: Vec<Vec<[i64; 3]>>,
}

impl SplitBundle {
    pub fn new(rank: usize, characters: Vec<Vec<[i64; 3]>>) -> Result<Self> {
        if let Some(bad) = characters.iter().find(|c| c.len() != rank) {
            return Err(Error::InvalidBundle(format!("chart has {} summands, expected {rank}", bad.len())));
        }
        Ok(Self { rank, characters })
    }

    pub fn trivial(num_charts: usize, rank: usize) -> Self {
        Self { rank, characters: vec![vec![[0; 3]; rank]; num_charts] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_trivial(&self) -> bool {
        self.characters.iter().flatten().all(|m| *m == [0; 3])
    }
}

/// Knobs for the localization runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtOptions {
    pub seed: u64,
    /// Independent parameter points; at least two.
    pub trials: usize,
    pub convention: SignConvention,
}

impl Default for DtOptions {
    fn default() -> Self {
        Self { seed: 0, trials: 2, convention: CALIBRATED_CONVENTION }
    }
}

impl DtOptions {
    pub fn with_seed(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }
}

/// Result of a checked localization run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtRun {
    pub series: Series,
    /// The parameter points actually used, one per trial.
    pub samples: Vec<EquivParams>,
}

/// Generating series `sum_n q^n sum_{fixed points of length n} 1/e(N^vir)` at
/// one parameter point: the product over charts of the per-chart series.
pub fn localized_series(
    charts: &[ChartWeights],
    r: usize,
    n_max: usize,
    params: &EquivParams,
    convention: SignConvention,
) -> Result<Series> {
    let points: Vec<Vec<ColoredPlanePartition>> = (0..=n_max).map(|k| enum_colored(k, r)).collect();
    let per_chart: Vec<Result<Series>> = charts
        .par_iter()
        .map(|chart| {
            if chart.rank() != r {
                return Err(Error::RankMismatch { left: chart.rank(), right: r });
            }
            let coeffs = points
                .iter()
                .enumerate()
                .map(|(k, pts)| Ok(sum_over_points(pts, chart, params)? * convention.factor(k)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Series::new(coeffs))
        })
        .collect();
    let mut total = Series::one(n_max);
    for s in per_chart {
        total = total.mul(&s?);
    }
    Ok(total)
}

/// Runs the localization sum at `opts.trials` independent parameter points,
/// requires exact agreement and integrality, and returns the common series.
pub fn dt_series_with(space: &ToricSpace, bundle: &SplitBundle, n_max: usize, opts: &DtOptions) -> Result<DtRun> {
    if opts.trials < 2 {
        return Err(Error::TooFewTrials { min: 2, got: opts.trials });
    }
    let r = bundle.rank();
    let charts = space.chart_weights(bundle)?;
    let mut sampler = ParamSampler::new(opts.seed);
    let mut samples = Vec::with_capacity(opts.trials);
    let mut evaluations = Vec::with_capacity(opts.trials);
    for _ in 0..opts.trials {
        let (params, series) = with_admissible_params(&mut sampler, r, |p| {
            localized_series(&charts, r, n_max, p, opts.convention)
        })?;
        samples.push(params);
        evaluations.push(series);
    }
    for n in 0..=n_max {
        let values: Vec<BigRational> = evaluations.iter().map(|s| s.coeff(n).clone()).collect();
        if values.iter().any(|v| *v != values[0]) {
            return Err(Error::ParameterDependence { n, values });
        }
        if !values[0].is_integer() {
            return Err(Error::NonIntegral { n, value: values[0].clone() });
        }
    }
    Ok(DtRun { series: evaluations.swap_remove(0), samples })
}

/// `1 + sum_{n=1}^{n_max} DT^n q^n`.
pub fn dt_series(space: &ToricSpace, bundle: &SplitBundle, n_max: usize, seed: u64) -> Result<Series> {
    Ok(dt_series_with(space, bundle, n_max, &DtOptions::with_seed(seed))?.series)
}

/// The length-`n` invariant as an integer.
pub fn dt_invariant(space: &ToricSpace, bundle: &SplitBundle, n: usize, seed: u64) -> Result<BigInt> {
    Ok(dt_series(space, bundle, n, seed)?.coeff(n).to_integer())
}

/// `sum_alpha prod_i (a_i - sigma) / prod_i a_i` with `sigma = sum_i a_i`,
/// the tangent weights `a_i` evaluated at `params`.
pub fn c3_localized_at(space: &ToricSpace, params: &EquivParams) -> Result<BigRational> {
    let mut sum = BigRational::zero();
    for chart in &space.charts {
        let mut weights = Vec::with_capacity(3);
        for c in chart {
            let w = params.weight_int(c);
            if w.is_zero() {
                return Err(Error::ZeroWeight { exponent: c.to_vec() });
            }
            weights.push(w);
        }
        let sigma: BigInt = weights.iter().sum();
        let num: BigInt = weights.iter().map(|a| a - &sigma).product();
        let den: BigInt = weights.iter().product();
        sum += BigRational::new(num, den);
    }
    Ok(sum)
}

/// `int_Y c3(T_Y (x) omega_Y)` by Bott localization, checked at two sampled
/// parameter points.
pub fn c3_via_localization(space: &ToricSpace, seed: u64) -> Result<BigInt> {
    let mut sampler = ParamSampler::new(seed);
    let mut values = Vec::with_capacity(2);
    for _ in 0..2 {
        let (_, v) = with_admissible_params(&mut sampler, 0, |p| c3_localized_at(space, p))?;
        values.push(v);
    }
    if values[0] != values[1] {
        return Err(Error::ParameterDependence { n: 0, values });
    }
    if !values[0].is_integer() {
        return Err(Error::NonIntegral { n: 0, value: values[0].clone() });
    }
    Ok(values[0].to_integer())
}

/// Number of torus-fixed points of the Quot scheme of length-`n` quotients of
/// a rank-`r` bundle: fixed points are tuples of colored plane partitions,
/// one per chart, of total size `n`.
pub fn count_fixed_points(space: &ToricSpace, r: usize, n: usize) -> BigInt {
    let local: Vec<BigInt> = (0..=n).map(|k| BigInt::from(enum_colored(k, r).len())).collect();
    let mut acc = vec![BigInt::zero(); n + 1];
    acc[0] = BigInt::one();
    for _ in 0..space.num_charts() {
        let mut next = vec![BigInt::zero(); n + 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in local.iter().enumerate().take(n + 1 - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc.swap_remove(n)
}
