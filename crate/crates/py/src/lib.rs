//! Python module `biset`.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use biset_core::acceptance::run_acceptance as core_acceptance;
use biset_core::charmod::CharacterTable as CoreTable;
use biset_core::group::{FiniteGroup, Subgroup};
use biset_core::io::{bundled_names, bundled_table, load_group, GroupSpec, TableDocument};
use biset_core::scenario::{blocks_report, bundled_scenario, parse_scenario, run_scenario as core_scenario, BUNDLED_SCENARIOS};
use biset_core::suite::{run_suite, SuiteConfig};

fn err(e: biset_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A finite group.
#[pyclass(frozen, module = "biset")]
struct Group {
    inner: Arc<FiniteGroup>,
}

#[pymethods]
impl Group {
    /// The group of a bundled character table.
    #[staticmethod]
    fn bundled(name: &str) -> PyResult<Group> {
        Ok(Group { inner: bundled_table(name).map_err(err)?.group().ambient().clone() })
    }

    /// The permutation group generated by cycle-notation strings such as `"(1,2,3)"`.
    #[staticmethod]
    #[pyo3(signature = (generators, name=None))]
    fn from_generators(generators: Vec<String>, name: Option<String>) -> PyResult<Group> {
        let (g, _) = load_group(&GroupSpec::Generators { name, generators }).map_err(err)?;
        Ok(Group { inner: g })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn exponent(&self) -> u64 {
        self.inner.exponent()
    }

    fn num_classes(&self) -> usize {
        Subgroup::full(&self.inner).conjugacy_classes().len()
    }

    fn sylow_order(&self, p: u64) -> usize {
        Subgroup::full(&self.inner).sylow(p).order()
    }

    fn __repr__(&self) -> String {
        format!("Group({}, order {})", self.inner.name(), self.inner.order())
    }
}

/// A validated character table.
#[pyclass(frozen, module = "biset")]
struct CharacterTable {
    name: String,
    doc: TableDocument,
    inner: CoreTable,
}

#[pymethods]
impl CharacterTable {
    #[staticmethod]
    fn bundled(name: &str) -> PyResult<CharacterTable> {
        let doc = biset_core::io::bundled_document(name).map_err(err)?;
        let inner = doc.load().map_err(err)?;
        Ok(CharacterTable { name: doc.name.clone(), doc, inner })
    }

    /// Parses and validates a JSON table document.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<CharacterTable> {
        let doc: TableDocument = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        let inner = doc.load().map_err(err)?;
        Ok(CharacterTable { name: doc.name.clone(), doc, inner })
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    #[getter]
    fn degrees(&self) -> Vec<i64> {
        self.inner.degrees()
    }

    fn group(&self) -> Group {
        Group { inner: self.inner.group().ambient().clone() }
    }

    /// Canonical JSON document.
    fn to_json(&self) -> PyResult<String> {
        let canon = TableDocument::from_table(&self.name, self.doc.group.clone(), &self.inner);
        serde_json::to_string_pretty(&canon).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("CharacterTable({}, {} characters)", self.name, self.inner.len())
    }
}

#[pyfunction]
fn bundled_tables() -> Vec<&'static str> {
    bundled_names()
}

#[pyfunction]
fn bundled_scenarios() -> Vec<&'static str> {
    BUNDLED_SCENARIOS.iter().map(|(n, _)| *n).collect()
}

/// Blocks of a bundled group at the prime `p`, as a dict.
#[pyfunction]
#[pyo3(signature = (table, p, field_degree=None, seed=0))]
fn blocks<'py>(py: Python<'py>, table: &CharacterTable, p: u64, field_degree: Option<u32>, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let g = table.inner.group().ambient().clone();
    let report = blocks_report(&g, Some(&table.inner), p, field_degree, seed).map_err(err)?;
    to_py(py, &report)
}

/// Runs a bundled scenario (by name) or a JSON scenario document.
#[pyfunction]
#[pyo3(signature = (scenario, field_degree=None))]
fn run_scenario<'py>(py: Python<'py>, scenario: &str, field_degree: Option<u32>) -> PyResult<Bound<'py, PyAny>> {
    let mut doc = if BUNDLED_SCENARIOS.iter().any(|(n, _)| *n == scenario) {
        bundled_scenario(scenario)
    } else {
        parse_scenario(scenario)
    }
    .map_err(err)?;
    if field_degree.is_some() {
        doc.field_degree = field_degree;
    }
    to_py(py, &core_scenario(&doc).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (seed=1, count=20, max_order=12))]
fn verify_biset_laws<'py>(py: Python<'py>, seed: u64, count: usize, max_order: usize) -> PyResult<Bound<'py, PyAny>> {
    let report = run_suite(&SuiteConfig { seed, count, max_order, mutate: false }).map_err(err)?;
    to_py(py, &report)
}

#[pyfunction]
#[pyo3(signature = (seed=1))]
fn run_acceptance<'py>(py: Python<'py>, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &core_acceptance(seed))
}

#[pymodule]
fn biset(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<CharacterTable>()?;
    m.add_function(wrap_pyfunction!(bundled_tables, m)?)?;
    m.add_function(wrap_pyfunction!(bundled_scenarios, m)?)?;
    m.add_function(wrap_pyfunction!(blocks, m)?)?;
    m.add_function(wrap_pyfunction!(run_scenario, m)?)?;
    m.add_function(wrap_pyfunction!(verify_biset_laws, m)?)?;
    m.add_function(wrap_pyfunction!(run_acceptance, m)?)?;
    Ok(())
}
