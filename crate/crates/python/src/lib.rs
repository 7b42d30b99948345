//! Python bindings: the automorphism algebra, cycle counts, and census
//! routines driven from Python. Big counts come back as ordinary Python
//! ints; domain errors raise ValueError.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use cayley_census::census::Method;
use cayley_census::{arith, census, cycles, d6p, dihedral, oracle, CycleData};

fn value_err(err: cayley_census::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// Automorphism of the dihedral group of order 2n: the canonical triple
/// (n, r, t) acting as u^i -> u^(ri), u^j v -> u^(rj+t) v.
#[pyclass(name = "Aut", frozen, eq, from_py_object)]
#[derive(PartialEq, Eq, Clone)]
struct PyAut {
    inner: dihedral::Aut,
}

#[pymethods]
impl PyAut {
    #[new]
    fn new(n: u64, r: u64, t: u64) -> PyResult<Self> {
        Ok(PyAut { inner: dihedral::Aut::new(n, r, t).map_err(value_err)? })
    }

    #[getter]
    fn n(&self) -> u64 {
        self.inner.n()
    }

    #[getter]
    fn r(&self) -> u64 {
        self.inner.r()
    }

    #[getter]
    fn t(&self) -> u64 {
        self.inner.t()
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    /// Order of the automorphism.
    fn order(&self) -> u64 {
        self.inner.order()
    }

    /// self followed by other.
    fn compose(&self, other: &PyAut) -> PyResult<PyAut> {
        Ok(PyAut { inner: self.inner.compose(&other.inner).map_err(value_err)? })
    }

    fn power(&self, s: u64) -> PyAut {
        PyAut { inner: self.inner.power(s) }
    }

    /// Image array of the induced permutation on the 2n - 1 non-identity
    /// elements (rotations u^1..u^(n-1) first, then reflections v..u^(n-1)v).
    fn permutation(&self) -> Vec<usize> {
        self.inner.to_permutation().images().to_vec()
    }

    /// Cycle counts on the non-identity elements, as a dict.
    fn cycle_data<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let data = cycles::c_total(self.inner.n(), self.inner.r(), self.inner.t())
            .map_err(value_err)?;
        cycle_dict(py, &data)
    }

    fn __repr__(&self) -> String {
        format!("Aut(n={}, r={}, t={})", self.inner.n(), self.inner.r(), self.inner.t())
    }
}

fn cycle_dict<'py>(py: Python<'py>, data: &CycleData) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("n", data.n)?;
    dict.set_item("u_parts", data.u_parts.clone())?;
    dict.set_item("c_v", data.c_v)?;
    dict.set_item("total", data.total)?;
    Ok(dict)
}

fn census_dict<'py>(
    py: Python<'py>,
    result: &census::CensusResult,
    method: Method,
) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("n", result.n)?;
    dict.set_item("aut_order", result.aut_order)?;
    dict.set_item("burnside_sum", result.burnside_sum.clone())?;
    dict.set_item("orbit_count", result.orbit_count.clone())?;
    dict.set_item("dci", result.dci.tag.name())?;
    dict.set_item("method", method.name())?;
    Ok(dict)
}

#[pyfunction]
fn euler_phi(n: u64) -> PyResult<u64> {
    arith::euler_phi(n).map_err(value_err)
}

#[pyfunction]
fn mult_order(r: u64, n: u64) -> PyResult<u64> {
    arith::mult_order(r, n).map_err(value_err)
}

#[pyfunction]
fn divisors_of(n: u64) -> PyResult<Vec<u64>> {
    arith::divisors_of(n).map_err(value_err)
}

#[pyfunction]
fn is_squarefree(n: u64) -> bool {
    arith::is_squarefree(n)
}

/// Order of the automorphism with subscripts (r, t) on D_{2n}.
#[pyfunction]
fn kappa(n: u64, r: u64, t: u64) -> PyResult<u64> {
    dihedral::kappa(n, r, t).map_err(value_err)
}

/// All n*phi(n) automorphisms, r ascending then t ascending.
#[pyfunction]
fn enumerate_aut(n: u64) -> PyResult<Vec<PyAut>> {
    if n == 0 {
        return Err(PyValueError::new_err("group parameter n must be positive"));
    }
    Ok(dihedral::enumerate_aut(n).into_iter().map(|inner| PyAut { inner }).collect())
}

/// Cycle counts of the automorphism (r, t) on the non-identity elements.
#[pyfunction]
fn cycle_total<'py>(py: Python<'py>, n: u64, r: u64, t: u64) -> PyResult<Bound<'py, PyDict>> {
    let data = cycles::c_total(n, r, t).map_err(value_err)?;
    cycle_dict(py, &data)
}

/// Number of CI-classes of Cayley digraphs on D_{2n}, by direct summation
/// over all automorphisms.
#[pyfunction]
fn burnside_count(n: u64) -> PyResult<BigUint> {
    Ok(census::burnside_count(n).map_err(value_err)?.orbit_count)
}

/// Same count through the divisor-weighted formula (n odd, square-free).
#[pyfunction]
fn dci_census(n: u64) -> PyResult<BigUint> {
    Ok(census::dci_census(n).map_err(value_err)?.orbit_count)
}

/// Closed-form count of Cayley digraphs on D_{6p} for a prime p >= 5.
#[pyfunction]
fn d6p_count(p: u64) -> PyResult<BigUint> {
    d6p::d6p_count(p).map_err(value_err)
}

/// Brute-force orbit count on the power set of the non-identity elements.
#[pyfunction]
#[pyo3(signature = (n, max_mask_bits=None))]
fn powerset_orbit_count(n: u64, max_mask_bits: Option<u32>) -> PyResult<BigUint> {
    let limit = max_mask_bits.unwrap_or(oracle::DEFAULT_MAX_MASK_BITS);
    oracle::powerset_orbit_count_with_limit(n, limit).map_err(value_err)
}

/// "known_dci", "known_not_dci" or "unknown".
#[pyfunction]
fn dci_status(n: u64) -> &'static str {
    census::dci_status(n).tag.name()
}

/// Full census row as a dict; method is one of "burnside", "theorem",
/// "d6p", "oracle".
#[pyfunction]
#[pyo3(signature = (n, method="burnside"))]
fn census_row<'py>(py: Python<'py>, n: u64, method: &str) -> PyResult<Bound<'py, PyDict>> {
    let (method, result) = match method {
        "burnside" => (Method::Burnside, census::burnside_count(n)),
        "theorem" => (Method::Theorem, census::dci_census(n)),
        "oracle" => (Method::Oracle, census::oracle_census(n, oracle::DEFAULT_MAX_MASK_BITS)),
        "d6p" => {
            if n % 3 != 0 {
                return Err(PyValueError::new_err(format!("n = {n} is not of the form 3p")));
            }
            (Method::D6p, census::d6p_census(n / 3))
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown method {other:?}; expected burnside, theorem, d6p or oracle"
            )))
        }
    };
    census_dict(py, &result.map_err(value_err)?, method)
}

#[pymodule]
fn cayley_census_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyAut>()?;
    m.add_function(wrap_pyfunction!(euler_phi, m)?)?;
    m.add_function(wrap_pyfunction!(mult_order, m)?)?;
    m.add_function(wrap_pyfunction!(divisors_of, m)?)?;
    m.add_function(wrap_pyfunction!(is_squarefree, m)?)?;
    m.add_function(wrap_pyfunction!(kappa, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_aut, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_total, m)?)?;
    m.add_function(wrap_pyfunction!(burnside_count, m)?)?;
    m.add_function(wrap_pyfunction!(dci_census, m)?)?;
    m.add_function(wrap_pyfunction!(d6p_count, m)?)?;
    m.add_function(wrap_pyfunction!(powerset_orbit_count, m)?)?;
    m.add_function(wrap_pyfunction!(dci_status, m)?)?;
    m.add_function(wrap_pyfunction!(census_row, m)?)?;
    Ok(())
}
