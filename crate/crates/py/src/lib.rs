//! Python bindings. Elements cross the boundary in text form (`r3`, `s0`,
//! or `g5` for table groups); reports come back as plain dicts.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use serde::Serialize;
use zsl_core::group::{dihedral_group, GroupModel, SubsetMask};
use zsl_core::harborth::{self as hb, SearchOptions};
use zsl_core::lemma::{self, LemmaOptions};
use zsl_core::residue::{self, ResidueSet};

create_exception!(
    zsl,
    ZslError,
    PyValueError,
    "Raised for domain, capacity and parse errors."
);

fn to_py(e: zsl_core::Error) -> PyErr {
    ZslError::new_err(e.to_string())
}

/// Serializes through `json.loads` so nested reports become dicts and lists.
fn to_pyobject<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| ZslError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A finite group: dihedral, or given by a Cayley table.
#[pyclass(name = "Group", module = "zsl", frozen)]
struct PyGroup {
    inner: GroupModel,
}

impl PyGroup {
    fn parse_all(&self, elements: Vec<String>) -> PyResult<SubsetMask> {
        self.inner.parse_subset(&elements.join(",")).map_err(to_py)
    }
}

#[pymethods]
impl PyGroup {
    /// The dihedral group of order `2n`.
    #[staticmethod]
    fn dihedral(n: u32) -> PyResult<Self> {
        Ok(PyGroup {
            inner: dihedral_group(n).map_err(to_py)?,
        })
    }

    /// A group from its Cayley table; element `0` must be the identity.
    #[staticmethod]
    fn from_table(label: String, table: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyGroup {
            inner: GroupModel::from_table(label, &table).map_err(to_py)?,
        })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn exponent(&self) -> usize {
        self.inner.exponent()
    }

    /// `n` for dihedral groups, `None` otherwise.
    #[getter]
    fn n(&self) -> Option<u32> {
        self.inner.dihedral_n()
    }

    fn elements(&self) -> Vec<String> {
        self.inner
            .elements()
            .map(|e| self.inner.element_name(e))
            .collect()
    }

    fn multiply(&self, a: &str, b: &str) -> PyResult<String> {
        let a = self.inner.parse_element(a).map_err(to_py)?;
        let b = self.inner.parse_element(b).map_err(to_py)?;
        Ok(self.inner.element_name(self.inner.mul(a, b)))
    }

    fn inverse(&self, a: &str) -> PyResult<String> {
        let a = self.inner.parse_element(a).map_err(to_py)?;
        Ok(self.inner.element_name(self.inner.inverse(a)))
    }

    fn element_order(&self, a: &str) -> PyResult<usize> {
        let a = self.inner.parse_element(a).map_err(to_py)?;
        Ok(self.inner.element_order(a))
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!(
            "Group({:?}, order={})",
            self.inner.label(),
            self.inner.order()
        )
    }
}

/// Maps each achievable product to one ordering of `elements` that yields it.
#[pyfunction]
fn product_set<'py>(
    py: Python<'py>,
    group: &PyGroup,
    elements: Vec<String>,
) -> PyResult<Bound<'py, PyDict>> {
    let g = &group.inner;
    let s = group.parse_all(elements)?;
    let r = py
        .detach(|| zsl_core::product::product_set(g, s))
        .map_err(to_py)?;
    let out = PyDict::new(py);
    for (e, w) in &r.witnesses {
        let names: Vec<String> = w.iter().map(|&x| g.element_name(x)).collect();
        out.set_item(g.element_name(*e), names)?;
    }
    Ok(out)
}

/// Whether some `length` elements of `elements` multiply to the identity in
/// some order. Returns that ordering, or `None`.
#[pyfunction]
fn one_product(
    py: Python<'_>,
    group: &PyGroup,
    elements: Vec<String>,
    length: usize,
) -> PyResult<Option<Vec<String>>> {
    let g = &group.inner;
    let s = group.parse_all(elements)?;
    let w = py
        .detach(|| hb::admits_one_product(g, s, length))
        .map_err(to_py)?;
    Ok(w.map(|w| w.ordering.iter().map(|&e| g.element_name(e)).collect()))
}

/// Harborth constant by exhaustive search. Returns a dict with `value`,
/// `lower_witness` and `checked_subsets`.
#[pyfunction]
#[pyo3(signature = (group, symmetry=false, jobs=1))]
fn harborth<'py>(
    py: Python<'py>,
    group: &PyGroup,
    symmetry: bool,
    jobs: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let g = &group.inner;
    let opts = SearchOptions {
        jobs,
        symmetry,
        ..SearchOptions::default()
    };
    let cert = py
        .detach(|| hb::harborth_bruteforce(g, &opts))
        .map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("group", g.label())?;
    out.set_item("value", cert.value)?;
    out.set_item("lower_witness", g.subset_names(cert.lower_witness))?;
    out.set_item("checked_subsets", cert.checked_subsets())?;
    Ok(out)
}

/// Closed-form Harborth constant of the dihedral group of order `2n`.
#[pyfunction]
fn harborth_formula(n: u32) -> PyResult<usize> {
    hb::harborth_formula(n).map_err(to_py)
}

/// A largest subset of `D_2n` with no one-product subsequence of length `exp`.
#[pyfunction]
fn extremal_set(n: u32) -> PyResult<Vec<String>> {
    let g = dihedral_group(n).map_err(to_py)?;
    let s = hb::extremal_set(n).map_err(to_py)?;
    Ok(g.subset_names(s))
}

/// `A + B` in `Z_n`, sorted.
#[pyfunction]
fn sumset(n: u32, a: Vec<i64>, b: Vec<i64>) -> PyResult<Vec<u32>> {
    let a = ResidueSet::new(n, a).map_err(to_py)?;
    let b = ResidueSet::new(n, b).map_err(to_py)?;
    Ok(residue::sumset(&a, &b).map_err(to_py)?.to_vec())
}

#[pyfunction]
#[pyo3(signature = (n, trials=1000, seed=0))]
fn verify_lemma1<'py>(
    py: Python<'py>,
    n: u32,
    trials: u64,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let r = py
        .detach(|| lemma::verify_lemma1(n, trials, seed))
        .map_err(to_py)?;
    to_pyobject(py, &r)
}

#[pyfunction]
#[pyo3(signature = (n, s, jobs=1, quotient_translation=false))]
fn verify_lemma2<'py>(
    py: Python<'py>,
    n: u32,
    s: u32,
    jobs: usize,
    quotient_translation: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let opts = LemmaOptions {
        jobs,
        quotient_translation,
        force: false,
    };
    let r = py
        .detach(|| lemma::verify_lemma2(n, s, &opts))
        .map_err(to_py)?;
    to_pyobject(py, &r)
}

#[pyfunction]
#[pyo3(signature = (n, s, jobs=1, quotient_translation=false))]
fn verify_lemma3<'py>(
    py: Python<'py>,
    n: u32,
    s: u32,
    jobs: usize,
    quotient_translation: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let opts = LemmaOptions {
        jobs,
        quotient_translation,
        force: false,
    };
    let r = py
        .detach(|| lemma::verify_lemma3(n, s, &opts))
        .map_err(to_py)?;
    to_pyobject(py, &r)
}

/// Checks every `(n+1)`-subset of `D_2n` (n odd) for a length-`n` one-product.
#[pyfunction]
#[pyo3(signature = (n, jobs=1))]
fn verify_remark_odd<'py>(py: Python<'py>, n: u32, jobs: usize) -> PyResult<Bound<'py, PyDict>> {
    let g = dihedral_group(n).map_err(to_py)?;
    let r = py
        .detach(|| hb::verify_remark_odd(n, jobs))
        .map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("n", r.n)?;
    out.set_item("subsets_checked", r.subsets_checked)?;
    out.set_item("passed", r.passed)?;
    out.set_item(
        "counterexample",
        r.counterexample.map(|m| g.subset_names(m)),
    )?;
    Ok(out)
}

#[pymodule]
fn zsl(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", zsl_core::VERSION)?;
    m.add("ZslError", m.py().get_type::<ZslError>())?;
    m.add_class::<PyGroup>()?;
    m.add_function(wrap_pyfunction!(product_set, m)?)?;
    m.add_function(wrap_pyfunction!(one_product, m)?)?;
    m.add_function(wrap_pyfunction!(harborth, m)?)?;
    m.add_function(wrap_pyfunction!(harborth_formula, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_set, m)?)?;
    m.add_function(wrap_pyfunction!(sumset, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lemma1, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lemma2, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lemma3, m)?)?;
    m.add_function(wrap_pyfunction!(verify_remark_odd, m)?)?;
    Ok(())
}
