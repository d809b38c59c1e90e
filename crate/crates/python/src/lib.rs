//! Python bindings: shifted Stirling numbers, identity verification,
//! and moment conversions, with rationals crossing the boundary as
//! `fractions.Fraction` (plain ints and "num/den" strings are accepted
//! anywhere a rational goes in).

use pyo3::exceptions::{PyArithmeticError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use msn_core as mc;

fn to_py_err(e: mc::Error) -> PyErr {
    match e {
        mc::Error::SingularMatrix { .. } => PyArithmeticError::new_err(e.to_string()),
        mc::Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A rational argument: anything with numerator/denominator attributes
/// (Fraction, int) or a "num/den" string.
#[derive(FromPyObject)]
enum RatArg {
    Exact(mc::Rational),
    Text(String),
}

impl RatArg {
    fn rational(self) -> PyResult<mc::Rational> {
        match self {
            RatArg::Exact(r) => Ok(r),
            RatArg::Text(s) => mc::parse_rational(&s).map_err(to_py_err),
        }
    }
}

fn rationals(args: Vec<RatArg>) -> PyResult<Vec<mc::Rational>> {
    args.into_iter().map(RatArg::rational).collect()
}

/// c_{i,j,k}, evaluated from its defining sum.
#[pyfunction]
fn msn1(i: i64, j: i64, k: RatArg) -> PyResult<mc::Rational> {
    Ok(mc::msn1_def(i, j, &k.rational()?))
}

/// b_{i,j,k}, evaluated from its defining sum.
#[pyfunction]
fn msn2(i: i64, j: i64, k: RatArg) -> PyResult<mc::Rational> {
    Ok(mc::msn2_def(i, j, &k.rational()?))
}

/// Triangle rows 0..n_max of c_{i,j,k}.
#[pyfunction]
fn msn1_table(n_max: usize, k: RatArg) -> PyResult<Vec<Vec<mc::Rational>>> {
    let t = mc::Msn1Table::new(n_max, &k.rational()?);
    Ok((0..=n_max).map(|i| t.row(i).to_vec()).collect())
}

/// Triangle rows 0..n_max of b_{i,j,k}.
#[pyfunction]
fn msn2_table(n_max: usize, k: RatArg) -> PyResult<Vec<Vec<mc::Rational>>> {
    let t = mc::Msn2Table::new(n_max, &k.rational()?);
    Ok((0..=n_max).map(|i| t.row(i).to_vec()).collect())
}

/// Signed Stirling number of the first kind s_{i,j}.
#[pyfunction]
fn stirling1(i: i64, j: i64) -> mc::Integer {
    if i < 0 {
        return mc::Integer::from(0);
    }
    mc::StirlingFirst::new(i as usize).get(i, j)
}

/// Stirling number of the second kind S_{i,j}.
#[pyfunction]
fn stirling2(i: i64, j: i64) -> mc::Integer {
    if i < 0 {
        return mc::Integer::from(0);
    }
    mc::StirlingSecond::new(i as usize).get(i, j)
}

/// Unsigned r-Stirling number of the first kind.
#[pyfunction]
fn r_stirling1(r: usize, i: i64, j: i64) -> mc::Integer {
    if i < r as i64 {
        return mc::Integer::from(0);
    }
    mc::RStirlingFirst::new(r, i as usize).get(i, j)
}

/// (x)_n = x (x-1) ... (x-n+1).
#[pyfunction]
fn falling_factorial(x: RatArg, n: usize) -> PyResult<mc::Rational> {
    Ok(mc::scalar::falling_factorial(&x.rational()?, n))
}

/// H_n = 1 + 1/2 + ... + 1/n.
#[pyfunction]
fn harmonic(n: usize) -> mc::Rational {
    mc::harmonic(n)
}

/// The names `verify_identity` accepts, in catalog order.
#[pyfunction]
fn identity_catalog() -> Vec<&'static str> {
    mc::CATALOG.iter().map(|name| name.as_str()).collect()
}

/// One grid point where an identity check found a mismatch.
#[pyclass(frozen, module = "msn_py")]
struct IdentityFailure {
    inner: mc::IdentityFailure,
}

#[pymethods]
impl IdentityFailure {
    #[getter]
    fn indices(&self) -> Vec<i64> {
        self.inner.indices.clone()
    }

    #[getter]
    fn k_values(&self) -> Vec<mc::Rational> {
        self.inner.k_values.clone()
    }

    #[getter]
    fn lhs(&self) -> mc::Rational {
        self.inner.lhs.clone()
    }

    #[getter]
    fn rhs(&self) -> mc::Rational {
        self.inner.rhs.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "IdentityFailure(indices={:?}, k_values=[{}], lhs={}, rhs={})",
            self.inner.indices,
            self.inner.k_values.iter().map(mc::format_rational).collect::<Vec<_>>().join(", "),
            self.inner.lhs,
            self.inner.rhs
        )
    }
}

/// Outcome of sweeping one identity over its parameter grid.
#[pyclass(frozen, module = "msn_py")]
struct IdentityReport {
    inner: mc::IdentityReport,
}

#[pymethods]
impl IdentityReport {
    #[getter]
    fn identity(&self) -> &'static str {
        self.inner.identity.as_str()
    }

    #[getter]
    fn parameter_ranges(&self) -> String {
        self.inner.parameter_ranges.clone()
    }

    #[getter]
    fn checked(&self) -> u64 {
        self.inner.checked
    }

    #[getter]
    fn passed(&self) -> bool {
        self.inner.pass()
    }

    #[getter]
    fn failures(&self) -> Vec<IdentityFailure> {
        self.inner.failures.iter().map(|f| IdentityFailure { inner: f.clone() }).collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "<IdentityReport {}: {}, {} checked>",
            self.inner.identity.as_str(),
            if self.inner.pass() { "pass" } else { "FAIL" },
            self.inner.checked
        )
    }
}

/// Check one catalog identity on the grid 0..=n_max x ks.
#[pyfunction]
fn verify_identity(name: &str, n_max: usize, ks: Vec<RatArg>) -> PyResult<IdentityReport> {
    let name = name.parse::<mc::IdentityName>().map_err(to_py_err)?;
    let inner = mc::verify_identity(name, n_max, &rationals(ks)?).map_err(to_py_err)?;
    Ok(IdentityReport { inner })
}

/// Check the whole catalog; shifts an identity cannot be stated for
/// are dropped per identity.
#[pyfunction]
fn verify_all(n_max: usize, ks: Vec<RatArg>) -> PyResult<Vec<IdentityReport>> {
    Ok(mc::verify_all(n_max, &rationals(ks)?)
        .into_iter()
        .map(|inner| IdentityReport { inner })
        .collect())
}

/// Exact moments of one kind, plus the mean they were taken around.
#[pyclass(frozen, module = "msn_py")]
struct MomentVector {
    inner: mc::MomentVector,
}

#[pymethods]
impl MomentVector {
    /// Ordinary moments [1, M_1, M_2, ...].
    #[staticmethod]
    fn ordinary(values: Vec<RatArg>) -> PyResult<Self> {
        let inner = mc::MomentVector::ordinary(rationals(values)?).map_err(to_py_err)?;
        Ok(MomentVector { inner })
    }

    /// Factorial moments [1, F_1, F_2, ...].
    #[staticmethod]
    fn factorial(values: Vec<RatArg>) -> PyResult<Self> {
        let inner = mc::MomentVector::factorial(rationals(values)?).map_err(to_py_err)?;
        Ok(MomentVector { inner })
    }

    /// Central moments [1, 0, C_2, ...] around the given mean.
    #[staticmethod]
    fn central(values: Vec<RatArg>, mean: RatArg) -> PyResult<Self> {
        let inner = mc::MomentVector::central(rationals(values)?, mean.rational()?)
            .map_err(to_py_err)?;
        Ok(MomentVector { inner })
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind().as_str()
    }

    #[getter]
    fn mean(&self) -> mc::Rational {
        self.inner.mean().clone()
    }

    #[getter]
    fn values(&self) -> Vec<mc::Rational> {
        self.inner.values().to_vec()
    }

    /// Re-express in "ordinary", "factorial", or "central" moments.
    fn convert(&self, to: &str) -> PyResult<Self> {
        let kind = to.parse::<mc::MomentKind>().map_err(to_py_err)?;
        let inner = mc::convert(&self.inner, kind).map_err(to_py_err)?;
        Ok(MomentVector { inner })
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other.extract::<PyRef<'_, Self>>().is_ok_and(|o| o.inner == self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "MomentVector(kind={}, mean={}, values=[{}])",
            self.inner.kind().as_str(),
            self.inner.mean(),
            self.inner.values().iter().map(mc::format_rational).collect::<Vec<_>>().join(", ")
        )
    }
}

/// Ordinary moments of a Poisson law, optionally converted.
#[pyfunction]
#[pyo3(signature = (lam, m_max, kind = "ordinary"))]
fn poisson_moments(lam: RatArg, m_max: usize, kind: &str) -> PyResult<MomentVector> {
    let ordinary = mc::poisson_moments(&lam.rational()?, m_max).map_err(to_py_err)?;
    let kind = kind.parse::<mc::MomentKind>().map_err(to_py_err)?;
    let inner = mc::convert(&ordinary, kind).map_err(to_py_err)?;
    Ok(MomentVector { inner })
}

/// Absorption-step distribution of a substochastic chain.
#[pyclass(frozen, module = "msn_py")]
struct PhaseType {
    inner: mc::PhaseType,
}

#[pymethods]
impl PhaseType {
    #[new]
    fn new(p: Vec<RatArg>, transient: Vec<Vec<RatArg>>) -> PyResult<Self> {
        let rows = transient.into_iter().map(rationals).collect::<PyResult<Vec<_>>>()?;
        let inner = mc::PhaseType::new(rationals(p)?, rows).map_err(to_py_err)?;
        Ok(PhaseType { inner })
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn ordinary_moment(&self, m: usize) -> mc::Rational {
        self.inner.ordinary_moment(m)
    }

    fn factorial_moment(&self, m: usize) -> mc::Rational {
        self.inner.factorial_moment(m)
    }

    /// Moment vector up to order m_max in the requested kind.
    #[pyo3(signature = (m_max, kind = "ordinary"))]
    fn moments(&self, m_max: usize, kind: &str) -> PyResult<MomentVector> {
        let kind = kind.parse::<mc::MomentKind>().map_err(to_py_err)?;
        let inner = match kind {
            mc::MomentKind::Factorial => self.inner.factorial_moments(m_max),
            _ => mc::convert(&self.inner.ordinary_moments(m_max), kind).map_err(to_py_err)?,
        };
        Ok(MomentVector { inner })
    }

    /// Masses P(X = 1..n_max) and the exact mass beyond the cutoff.
    fn pmf(&self, n_max: usize) -> (Vec<mc::Rational>, mc::Rational) {
        let pmf = self.inner.pmf(n_max);
        (pmf.probs().to_vec(), pmf.tail_mass().clone())
    }

    fn __repr__(&self) -> String {
        format!("<PhaseType dimension={}>", self.inner.dimension())
    }
}

#[pymodule]
fn msn_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(msn1, m)?)?;
    m.add_function(wrap_pyfunction!(msn2, m)?)?;
    m.add_function(wrap_pyfunction!(msn1_table, m)?)?;
    m.add_function(wrap_pyfunction!(msn2_table, m)?)?;
    m.add_function(wrap_pyfunction!(stirling1, m)?)?;
    m.add_function(wrap_pyfunction!(stirling2, m)?)?;
    m.add_function(wrap_pyfunction!(r_stirling1, m)?)?;
    m.add_function(wrap_pyfunction!(falling_factorial, m)?)?;
    m.add_function(wrap_pyfunction!(harmonic, m)?)?;
    m.add_function(wrap_pyfunction!(identity_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identity, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    m.add_function(wrap_pyfunction!(poisson_moments, m)?)?;
    m.add_class::<IdentityFailure>()?;
    m.add_class::<IdentityReport>()?;
    m.add_class::<MomentVector>()?;
    m.add_class::<PhaseType>()?;
    Ok(())
}
