use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use quotdt_core::chern::{self, BundleClass, ChernRing};
use quotdt_core::partitions::enum_colored;
use quotdt_core::toric::{self, DtOptions};
use quotdt_core::vertex::{self, ChartWeights};
use quotdt_core::{series, ColoredPlanePartition, PlanePartition, SplitBundle, ToricSpace, VirtualCharacter};

create_exception!(quotdt, QuotDTError, PyException);

fn err(e: quotdt_core::Error) -> PyErr {
    QuotDTError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, x: &BigRational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((x.numer().clone(), x.denom().clone()))
}

fn fractions<'py>(py: Python<'py>, xs: &[BigRational]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    xs.iter().map(|x| fraction(py, x)).collect()
}

fn integers(s: &series::Series) -> PyResult<Vec<BigInt>> {
    s.integer_coeffs().ok_or_else(|| QuotDTError::new_err("series has fractional coefficients"))
}

/// A toric 3-fold given by its fixed charts.
#[pyclass(name = "Space", module = "quotdt", frozen)]
struct PySpace {
    inner: ToricSpace,
}

impl PySpace {
    fn bundle(&self, degrees: Option<Vec<Vec<i64>>>, rank: usize) -> PyResult<SplitBundle> {
        match degrees {
            None => Ok(self.inner.trivial_bundle(rank)),
            Some(d) if d.iter().flatten().all(|x| *x == 0) => Ok(self.inner.trivial_bundle(d.len())),
            Some(d) => self.inner.split_bundle(&d).map_err(err),
        }
    }
}

#[pymethods]
impl PySpace {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(Self { inner: ToricSpace::builtin(name).map_err(err)? })
    }

    /// Space from explicit chart characters (three rows per chart).
    #[staticmethod]
    fn from_charts(charts: Vec<[[i64; 3]; 3]>) -> PyResult<Self> {
        Ok(Self { inner: ToricSpace::from_charts("inline", charts).map_err(err)? })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn charts(&self) -> Vec<[[i64; 3]; 3]> {
        self.inner.charts.clone()
    }

    fn num_charts(&self) -> usize {
        self.inner.num_charts()
    }

    /// Per-chart characters of the line bundle of the given multidegree.
    fn line_bundle(&self, degrees: Vec<i64>) -> PyResult<Vec<[i64; 3]>> {
        self.inner.line_bundle(&degrees).map_err(err)
    }

    /// `1 + DT^1 q + ...` for the split bundle with these multidegrees
    /// (`None` for the trivial bundle of rank `rank`).
    #[pyo3(signature = (nmax, degrees=None, rank=1, seed=0, trials=2))]
    fn dt_series(
        &self,
        py: Python<'_>,
        nmax: usize,
        degrees: Option<Vec<Vec<i64>>>,
        rank: usize,
        seed: u64,
        trials: usize,
    ) -> PyResult<Vec<BigInt>> {
        let bundle = self.bundle(degrees, rank)?;
        let opts = DtOptions { seed, trials, ..DtOptions::default() };
        let run = py.detach(|| toric::dt_series_with(&self.inner, &bundle, nmax, &opts)).map_err(err)?;
        integers(&run.series)
    }

    #[pyo3(signature = (seed=0))]
    fn c3_t_omega(&self, seed: u64) -> PyResult<BigInt> {
        toric::c3_via_localization(&self.inner, seed).map_err(err)
    }

    fn count_fixed_points(&self, rank: usize, n: usize) -> BigInt {
        toric::count_fixed_points(&self.inner, rank, n)
    }

    fn __repr__(&self) -> String {
        format!("Space({:?}, charts={})", self.inner.name, self.inner.num_charts())
    }
}

/// Virtual tangent character at a fixed point.
#[pyclass(name = "Character", module = "quotdt", frozen)]
struct PyCharacter {
    inner: VirtualCharacter,
    kappa: [i64; 3],
}

#[pymethods]
impl PyCharacter {
    /// `(exponent, coefficient)` pairs; exponents list `t1, t2, t3, u1, ...`.
    fn terms(&self) -> Vec<(Vec<i64>, BigInt)> {
        self.inner.poly().terms().map(|(e, c)| (e.clone(), c.clone())).collect()
    }

    fn constant_term(&self) -> BigInt {
        self.inner.poly().constant_term()
    }

    fn is_symmetric(&self) -> bool {
        self.inner.is_kappa_symmetric(self.kappa)
    }

    /// `1/e(N^vir)` at the parameter point `(s, v)`.
    fn euler_inverse<'py>(&self, py: Python<'py>, s: [i64; 3], v: Vec<i64>) -> PyResult<Bound<'py, PyAny>> {
        let x = vertex::euler_inverse(&self.inner, &quotdt_core::EquivParams::new(s, v)).map_err(err)?;
        fraction(py, &x)
    }

    fn __len__(&self) -> usize {
        self.inner.poly().len()
    }

    fn __str__(&self) -> String {
        self.inner.poly().to_string()
    }
}

/// Character of the colored plane partition given by box lists, one per
/// color, on the chart `tangent` with summand characters `lines`.
#[pyfunction]
#[pyo3(signature = (boxes, tangent=None, lines=None))]
fn vertex_character(
    boxes: Vec<Vec<[u32; 3]>>,
    tangent: Option<[[i64; 3]; 3]>,
    lines: Option<Vec<[i64; 3]>>,
) -> PyResult<PyCharacter> {
    let parts = boxes.iter().map(|b| PlanePartition::from_boxes(b)).collect::<Result<Vec<_>, _>>().map_err(err)?;
    let r = parts.len();
    let tangent = tangent.unwrap_or([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    let lines = lines.unwrap_or_else(|| vec![[0; 3]; r]);
    let chart = ChartWeights::new(tangent, &lines).map_err(err)?;
    let inner = vertex::vertex_character(&ColoredPlanePartition::new(parts), &chart).map_err(err)?;
    Ok(PyCharacter { inner, kappa: chart.kappa() })
}

/// Number of colored plane partitions of size `n` with `r` colors.
#[pyfunction]
fn count_colored(n: usize, r: usize) -> usize {
    enum_colored(n, r).len()
}

#[pyfunction]
fn macmahon(nmax: usize) -> PyResult<Vec<BigInt>> {
    integers(&series::macmahon(nmax))
}

/// `M((-1)^r q)^{r c3}` through `q^nmax`.
#[pyfunction]
fn dt_closed_formula(r: usize, c3: i64, nmax: usize) -> PyResult<Vec<BigInt>> {
    integers(&series::dt_closed_formula(r, c3, nmax))
}

fn ring_bundle(ring: &ChernRing, degrees: Option<Vec<Vec<i64>>>, rank: usize) -> PyResult<BundleClass> {
    match degrees {
        None => Ok(BundleClass::trivial(ring, rank)),
        Some(d) => {
            let lines = d.iter().map(|x| ring.linear_class(x)).collect::<Result<Vec<_>, _>>().map_err(err)?;
            Ok(BundleClass::split(ring, &lines))
        }
    }
}

/// `int c3(T (x) omega)` from the intersection ring.
#[pyfunction]
fn c3_t_omega(ring: &str) -> PyResult<BigInt> {
    ChernRing::builtin(ring).and_then(|r| r.c3_t_omega()).map_err(err)
}

#[pyfunction]
fn chern_number_labels(rank: usize) -> Vec<String> {
    chern::chern_number_labels(rank)
}

/// Mixed Chern numbers of `(ring, L_1 + ... + L_r)`, summands given by their
/// coefficients on the ring generators.
#[pyfunction]
#[pyo3(signature = (ring, degrees=None, rank=1))]
fn mixed_chern_vector<'py>(
    py: Python<'py>,
    ring: &str,
    degrees: Option<Vec<Vec<i64>>>,
    rank: usize,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let ring = ChernRing::builtin(ring).map_err(err)?;
    let f = ring_bundle(&ring, degrees, rank)?;
    fractions(py, &chern::mixed_chern_vector(&ring, &f).map_err(err)?)
}

/// Coordinates in the `phi(lambda, mu)` basis as `(pair, Fraction)`.
#[pyfunction]
#[pyo3(signature = (ring, degrees=None, rank=1))]
fn decompose<'py>(
    py: Python<'py>,
    ring: &str,
    degrees: Option<Vec<Vec<i64>>>,
    rank: usize,
) -> PyResult<Vec<(String, Bound<'py, PyAny>)>> {
    let ring = ChernRing::builtin(ring).map_err(err)?;
    let f = ring_bundle(&ring, degrees, rank)?;
    let coords = chern::decompose(&ring, &f, f.rank).map_err(err)?;
    coords.iter().map(|(p, c)| Ok((p.to_string(), fraction(py, c)?))).collect()
}

/// Checks a built-in double point relation; returns the two verdicts and
/// the exponents of `Y_xi, A, B, P_pi`.
#[pyfunction]
#[pyo3(signature = (name, rank=1))]
fn dpr_check(name: &str, rank: usize) -> PyResult<(bool, bool, Vec<BigInt>)> {
    let [y, a, b, p] = chern::builtin_dpr(name, rank).map_err(err)?;
    let rep = chern::dpr_check(&y, &a, &b, &p).map_err(err)?;
    Ok((rep.chern_numbers_match, rep.exponent_match, rep.exponents.to_vec()))
}

#[pymodule]
fn quotdt(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("QuotDTError", m.py().get_type::<QuotDTError>())?;
    m.add("BUILTIN_SPACES", toric::BUILTIN_SPACES.to_vec())?;
    m.add("BUILTIN_RINGS", chern::BUILTIN_RINGS.to_vec())?;
    m.add("BUILTIN_DPRS", chern::BUILTIN_DPRS.to_vec())?;
    m.add_class::<PySpace>()?;
    m.add_class::<PyCharacter>()?;
    m.add_function(wrap_pyfunction!(vertex_character, m)?)?;
    m.add_function(wrap_pyfunction!(count_colored, m)?)?;
    m.add_function(wrap_pyfunction!(macmahon, m)?)?;
    m.add_function(wrap_pyfunction!(dt_closed_formula, m)?)?;
    m.add_function(wrap_pyfunction!(c3_t_omega, m)?)?;
    m.add_function(wrap_pyfunction!(chern_number_labels, m)?)?;
    m.add_function(wrap_pyfunction!(mixed_chern_vector, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(dpr_check, m)?)?;
    Ok(())
}
