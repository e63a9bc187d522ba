use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use rectlab::biject;
use rectlab::enumerate;
use rectlab::perm::{self, PermClass};
use rectlab::rect::{self, Format};
use rectlab::verify::{self, Bounds, Inputs};
use rectlab::walks::{self, HistoryQuadrantWalk};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn variant(strong: bool) -> walks::Variant {
    if strong {
        walks::Variant::Strong
    } else {
        walks::Variant::Weak
    }
}

#[pyclass(name = "Permutation", frozen, eq, hash, ord, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyPermutation(perm::Permutation);

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(entries: Vec<usize>) -> PyResult<Self> {
        perm::Permutation::new(entries).map(PyPermutation).map_err(value_error)
    }

    /// Parses one-line notation such as `"2 4 1 3"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(PyPermutation).map_err(value_error)
    }

    fn entries(&self) -> Vec<usize> {
        self.0.entries().to_vec()
    }

    fn complement(&self) -> Self {
        PyPermutation(self.0.complement())
    }

    fn inverse(&self) -> Self {
        PyPermutation(self.0.inverse())
    }

    /// Names of the classes this permutation belongs to.
    fn classes(&self) -> Vec<&'static str> {
        perm::classify(&self.0).iter().map(PermClass::name).collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.entries())
    }
}

#[pyclass(name = "Rectangulation", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyRectangulation(rect::Rectangulation);

fn perms(set: impl IntoIterator<Item = perm::Permutation>) -> Vec<PyPermutation> {
    set.into_iter().map(PyPermutation).collect()
}

#[pymethods]
impl PyRectangulation {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        rect::Rectangulation::from_json(text).map(PyRectangulation).map_err(value_error)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    /// `(label, x_left, y_top, x_right, y_bottom)` in label order.
    fn rects(&self) -> Vec<(usize, usize, usize, usize, usize)> {
        self.0.rects().iter().map(|r| (r.label, r.x_left, r.y_top, r.x_right, r.y_bottom)).collect()
    }

    fn weak_key(&self) -> PyPermutation {
        PyPermutation(self.0.weak_key())
    }

    fn strong_key(&self) -> PyPermutation {
        PyPermutation(self.0.strong_key())
    }

    fn baxter_representative(&self) -> PyPermutation {
        PyPermutation(self.0.baxter_representative())
    }

    fn fiber(&self, strong: bool) -> Vec<PyPermutation> {
        perms(if strong { self.0.fiber_s() } else { self.0.fiber_w() })
    }

    fn is_guillotine(&self) -> bool {
        self.0.is_guillotine()
    }

    fn multiplicity(&self) -> BigUint {
        self.0.multiplicity()
    }

    /// `"svg"` or `"ascii"`.
    fn render(&self, format: &str) -> PyResult<String> {
        let format: Format = format.parse().map_err(value_error)?;
        Ok(self.0.render(format))
    }

    fn __repr__(&self) -> String {
        format!("Rectangulation(n={})", self.0.n())
    }
}

#[pyfunction]
fn gamma_w(p: &PyPermutation) -> PyRectangulation {
    PyRectangulation(biject::gamma_w(&p.0))
}

#[pyfunction]
fn gamma_s(p: &PyPermutation) -> PyRectangulation {
    PyRectangulation(biject::gamma_s(&p.0))
}

/// The `n`-th term of `schroder`, `baxter`, `strong`, `u`, `o` or
/// `strong-guillotine`.
#[pyfunction]
fn count(family: &str, n: usize) -> PyResult<BigUint> {
    if n == 0 {
        return Err(value_error("n must be at least 1"));
    }
    Ok(match family {
        "schroder" => enumerate::schroder_counts(n).swap_remove(n - 1),
        "baxter" => enumerate::baxter_number(n),
        "strong" => walks::count_strong_rect(n),
        "u" => walks::count_u(n),
        "o" => walks::count_o(n),
        "strong-guillotine" => enumerate::strong_guillotine_count(n),
        other => return Err(value_error(format!("unknown family `{other}`"))),
    })
}

#[pyfunction]
#[pyo3(signature = (p, strong = true))]
fn encode_walk(p: &PyPermutation, strong: bool) -> String {
    if strong { walks::encode_strong(&p.0) } else { walks::encode_weak(&p.0) }.to_text()
}

#[pyfunction]
#[pyo3(signature = (text, strong = true))]
fn decode_walk(text: &str, strong: bool) -> PyResult<PyRectangulation> {
    let w = HistoryQuadrantWalk::from_text(text, variant(strong)).map_err(value_error)?;
    w.decode().map(PyRectangulation).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (terms = 12))]
fn growth_constants(py: Python<'_>, terms: usize) -> PyResult<Bound<'_, PyDict>> {
    let c = enumerate::growth_constants(terms);
    let d = PyDict::new(py);
    d.set_item("gamma", c.gamma)?;
    d.set_item("gamma_prime", c.gamma_prime)?;
    d.set_item("rho_zero", (c.rho_zero.numer().clone(), c.rho_zero.denom().clone()))?;
    d.set_item("x0", c.x0)?;
    d.set_item("lower_bound", c.lower_bound)?;
    d.set_item("z0_bound", c.z0_bound)?;
    Ok(d)
}

/// Runs verification suites; returns `(passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (suites = Vec::new(), max_n = verify::DEFAULT_MAX_N))]
fn run_verify(suites: Vec<String>, max_n: usize) -> PyResult<(bool, String)> {
    let names: Vec<&str> = suites.iter().map(String::as_str).collect();
    let bounds = Bounds { max_n, ..Bounds::default() };
    let report = verify::verify_with(&Inputs::default(), &names, bounds).map_err(value_error)?;
    Ok((report.passed(), report.to_text()))
}

#[pymodule]
fn pyrectlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyRectangulation>()?;
    m.add_function(wrap_pyfunction!(gamma_w, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_s, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(encode_walk, m)?)?;
    m.add_function(wrap_pyfunction!(decode_walk, m)?)?;
    m.add_function(wrap_pyfunction!(growth_constants, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
