//! Python bindings.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyAny;

use ::lefschetz::document::{ComplexDocument, MapDocument};
use ::lefschetz::homology::homology;
use ::lefschetz::lefschetz::lefschetz_full;
use ::lefschetz::oracle::coincidence_witness;
use ::lefschetz::orientation::fundamental_class;
use ::lefschetz::{builtins, verify, Error, FieldSpec, SimplicialMap, SimplicialPair};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(spec: &str) -> PyResult<FieldSpec> {
    spec.parse().map_err(py_err)
}

fn loads<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// A simplicial pair `(X, A)`; `A` is empty for plain complexes.
#[pyclass(name = "Complex", module = "lefschetz_py", frozen)]
struct PyComplex {
    name: String,
    pair: Arc<SimplicialPair>,
}

#[pymethods]
impl PyComplex {
    #[new]
    #[pyo3(signature = (vertex_count, facets, subcomplex=None, name=String::new()))]
    fn new(
        vertex_count: usize,
        facets: Vec<Vec<usize>>,
        subcomplex: Option<Vec<Vec<usize>>>,
        name: String,
    ) -> PyResult<Self> {
        let doc = ComplexDocument {
            name,
            vertex_count,
            facets,
            subcomplex,
        };
        Self::from_doc(doc)
    }

    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        Ok(PyComplex {
            name: name.into(),
            pair: Arc::new(builtins::pair(name).map_err(py_err)?),
        })
    }

    #[staticmethod]
    fn builtin_names() -> Vec<&'static str> {
        builtins::NAMES.to_vec()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Self::from_doc(ComplexDocument::parse(text).map_err(py_err)?)
    }

    fn to_json(&self) -> String {
        ComplexDocument::from_pair(&self.name, &self.pair).to_json()
    }

    #[getter]
    fn name(&self) -> &str {
        &self.name
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.pair.total().vertex_count()
    }

    #[getter]
    fn is_absolute(&self) -> bool {
        self.pair.is_absolute()
    }

    #[pyo3(signature = (field="q"))]
    fn betti(&self, field: &str) -> PyResult<Vec<usize>> {
        let basis = homology(self.pair.clone(), self::field(field)?).map_err(py_err)?;
        Ok(basis.betti_numbers())
    }

    fn euler_characteristic(&self) -> i64 {
        self.pair.total().euler_characteristic()
    }

    /// Dimension of the fundamental class, or `None` when there is none.
    fn orientable_dimension(&self) -> Option<usize> {
        fundamental_class(self.pair.clone())
            .ok()
            .map(|o| o.degree())
    }

    fn __repr__(&self) -> String {
        format!("Complex('{}', vertices={})", self.name, self.vertex_count())
    }
}

impl PyComplex {
    fn from_doc(doc: ComplexDocument) -> PyResult<Self> {
        Ok(PyComplex {
            pair: Arc::new(doc.to_pair().map_err(py_err)?),
            name: doc.name,
        })
    }
}

/// A simplicial map of pairs given by vertex images.
#[pyclass(name = "Map", module = "lefschetz_py", frozen)]
struct PyMap {
    map: SimplicialMap,
}

#[pymethods]
impl PyMap {
    #[new]
    fn new(source: &PyComplex, target: &PyComplex, images: Vec<usize>) -> PyResult<Self> {
        let map =
            SimplicialMap::new(source.pair.clone(), target.pair.clone(), images).map_err(py_err)?;
        Ok(PyMap { map })
    }

    #[staticmethod]
    fn identity(complex: &PyComplex) -> Self {
        PyMap {
            map: SimplicialMap::identity(complex.pair.clone()),
        }
    }

    #[staticmethod]
    fn constant(source: &PyComplex, target: &PyComplex, vertex: usize) -> PyResult<Self> {
        let map = SimplicialMap::constant(source.pair.clone(), target.pair.clone(), vertex)
            .map_err(py_err)?;
        Ok(PyMap { map })
    }

    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        Ok(PyMap {
            map: builtins::map(name).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn from_json(source: &PyComplex, target: &PyComplex, text: &str) -> PyResult<Self> {
        let doc = MapDocument::parse(text).map_err(py_err)?;
        let map = doc
            .to_map(source.pair.clone(), target.pair.clone())
            .map_err(py_err)?;
        Ok(PyMap { map })
    }

    #[getter]
    fn images(&self) -> Vec<usize> {
        self.map.images().to_vec()
    }

    #[getter]
    fn source(&self) -> PyComplex {
        PyComplex {
            name: String::new(),
            pair: self.map.source().clone(),
        }
    }

    #[getter]
    fn target(&self) -> PyComplex {
        PyComplex {
            name: String::new(),
            pair: self.map.target().clone(),
        }
    }

    fn __repr__(&self) -> String {
        format!("Map({:?})", self.map.images())
    }
}

/// The Lefschetz report of `f, g` as a dict; coefficients are "num/den" strings.
#[pyfunction]
#[pyo3(name = "lefschetz", signature = (f, g, field="q", oracle=false))]
fn lefschetz_report<'py>(
    py: Python<'py>,
    f: &PyMap,
    g: &PyMap,
    field: &str,
    oracle: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let report = lefschetz_full(&f.map, &g.map, self::field(field)?, oracle).map_err(py_err)?;
    loads(py, &report.to_json())
}

/// Exact coincidence search over the rationals.
#[pyfunction]
fn witness<'py>(py: Python<'py>, f: &PyMap, g: &PyMap) -> PyResult<Bound<'py, PyAny>> {
    let verdict = coincidence_witness(&f.map, &g.map).map_err(py_err)?;
    loads(
        py,
        &serde_json::to_string(&verdict).expect("verdicts serialize"),
    )
}

/// Runs the seeded invariant suite and returns its report as a dict.
#[pyfunction]
#[pyo3(name = "verify", signature = (seed=0, trials=verify::DEFAULT_TRIALS))]
fn run_verify<'py>(py: Python<'py>, seed: u64, trials: usize) -> PyResult<Bound<'py, PyAny>> {
    let report = verify::verify(seed, trials);
    loads(py, &report.to_json())
}

#[pymodule]
fn lefschetz_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComplex>()?;
    m.add_class::<PyMap>()?;
    m.add_function(wrap_pyfunction!(lefschetz_report, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
