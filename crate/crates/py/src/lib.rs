//! Python bindings for `fsl-core`.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use fsl_core::verify::{self as core_verify, CheckOptions, GridConfig, GridEntry};
use fsl_core::{
    crystal, degenmap, fflv, wedge, DominantWeight, Error, ExponentVector, Family, LatticePointSet,
};

create_exception!(
    fsl,
    GateError,
    PyRuntimeError,
    "A built-in consistency check failed."
);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Gate { .. } => GateError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn points_list(set: &LatticePointSet) -> Vec<Vec<u32>> {
    set.iter().map(|p| p.0.clone()).collect()
}

/// A Lie type `X_n` with `X` in {"A", "C"}.
#[pyclass(name = "LieType", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyLieType {
    inner: fsl_core::LieType,
}

impl PyLieType {
    fn weight(&self, weight: Vec<u32>) -> PyResult<DominantWeight> {
        let w = DominantWeight::new(weight);
        w.check_rank(&self.inner).map_err(to_py)?;
        Ok(w)
    }
}

#[pymethods]
impl PyLieType {
    #[new]
    fn new(family: &str, rank: usize) -> PyResult<Self> {
        let family: Family = family.parse().map_err(to_py)?;
        let inner = fsl_core::LieType::new(family, rank).map_err(to_py)?;
        Ok(PyLieType { inner })
    }

    #[getter]
    fn family(&self) -> String {
        self.inner.family.to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank
    }

    /// The type `X_{2n-1}` in which string points live.
    fn target(&self) -> Self {
        PyLieType {
            inner: self.inner.target(),
        }
    }

    /// Labels `(row, col, barred)` in descending order.
    fn labels(&self) -> Vec<(usize, usize, bool)> {
        self.inner
            .build_labels()
            .into_iter()
            .map(|l| (l.row, l.col, l.barred))
            .collect()
    }

    fn reduced_word(&self) -> Vec<usize> {
        self.inner.reduced_word().letters
    }

    fn weyl_dim(&self, weight: Vec<u32>) -> PyResult<String> {
        Ok(self.inner.weyl_dim(&self.weight(weight)?).to_string())
    }

    fn fflv_points(&self, weight: Vec<u32>) -> PyResult<Vec<Vec<u32>>> {
        let w = self.weight(weight)?;
        Ok(points_list(&fflv::points(&self.inner, &w).map_err(to_py)?))
    }

    /// String points of the lifted weight; `weight` is given in the source algebra.
    fn string_points(&self, weight: Vec<u32>) -> PyResult<Vec<Vec<u32>>> {
        let w = self.weight(weight)?;
        Ok(points_list(
            &crystal::string_points(&self.inner, &w).map_err(to_py)?,
        ))
    }

    fn matrix(&self) -> PyResult<Vec<Vec<i64>>> {
        Ok((*degenmap::build_matrix(&self.inner).map_err(to_py)?).clone())
    }

    fn determinant(&self) -> PyResult<String> {
        Ok(degenmap::determinant(&self.inner)
            .map_err(to_py)?
            .to_string())
    }

    fn translation(&self, weight: Vec<u32>) -> PyResult<Vec<i64>> {
        let w = self.weight(weight)?;
        degenmap::build_translation(&self.inner, &w).map_err(to_py)
    }

    /// `T(p)` for an FFLV point `p` of `weight`.
    fn apply_t(&self, weight: Vec<u32>, point: Vec<u32>) -> PyResult<Vec<u32>> {
        let w = self.weight(weight)?;
        Ok(degenmap::apply_t(&self.inner, &w, &ExponentVector(point))
            .map_err(to_py)?
            .0)
    }

    fn check_main(&self, weight: Vec<u32>) -> PyResult<VerificationReport> {
        let w = self.weight(weight)?;
        let inner =
            core_verify::check_main(&self.inner, &w, &CheckOptions::default()).map_err(to_py)?;
        Ok(VerificationReport { inner })
    }

    fn __repr__(&self) -> String {
        format!("LieType('{}', {})", self.inner.family, self.inner.rank)
    }
}

/// Comparison of `T(FFLV points)` with string points for one weight.
#[pyclass(frozen, skip_from_py_object)]
struct VerificationReport {
    inner: core_verify::VerificationReport,
}

#[pymethods]
impl VerificationReport {
    #[getter]
    fn case(&self) -> (String, usize, Vec<u32>) {
        let c = &self.inner.case;
        (c.family.to_string(), c.rank, c.weight.clone())
    }

    #[getter]
    fn status(&self) -> &'static str {
        match self.inner.status {
            core_verify::Status::Pass => "pass",
            core_verify::Status::Fail => "fail",
            core_verify::Status::Skipped => "skipped",
        }
    }

    #[getter]
    fn passed(&self) -> bool {
        self.inner.passed()
    }

    #[getter]
    fn equal(&self) -> bool {
        self.inner.equal
    }

    #[getter]
    fn fflv_count(&self) -> u64 {
        self.inner.fflv_count
    }

    #[getter]
    fn string_count(&self) -> u64 {
        self.inner.string_count
    }

    #[getter]
    fn weyl_dim(&self) -> u64 {
        self.inner.weyl_dim
    }

    #[getter]
    fn missing(&self) -> Vec<Vec<i64>> {
        self.inner.missing.points.clone()
    }

    #[getter]
    fn extra(&self) -> Vec<Vec<i64>> {
        self.inner.extra.points.clone()
    }

    /// The report as the JSON object emitted by the command-line tool.
    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("report serializes")
    }

    fn __repr__(&self) -> String {
        format!("VerificationReport({}, {})", self.inner.case, self.status())
    }
}

/// Runs `check_main` for every weight of level at most `max_level` of each
/// `(family, rank, max_level)` entry, sorted by case.
#[pyfunction]
#[pyo3(signature = (entries, threads = None))]
fn run_grid(
    py: Python<'_>,
    entries: Vec<(String, usize, u32)>,
    threads: Option<usize>,
) -> PyResult<Vec<VerificationReport>> {
    let entries = entries
        .into_iter()
        .map(|(family, rank, max_level)| {
            let family: Family = family.parse().map_err(to_py)?;
            Ok(GridEntry {
                ty: fsl_core::LieType::new(family, rank).map_err(to_py)?,
                max_level,
            })
        })
        .collect::<PyResult<Vec<_>>>()?;
    let config = GridConfig {
        entries,
        options: CheckOptions::default(),
    };
    let reports = py
        .detach(|| match threads {
            Some(n) => core_verify::run_grid_with_threads(&config, n),
            None => core_verify::run_grid(&config),
        })
        .map_err(to_py)?;
    Ok(reports
        .into_iter()
        .map(|inner| VerificationReport { inner })
        .collect())
}

/// String points of `ω̃_i` in type `A_n` rebuilt from the exterior-power action alone.
#[pyfunction]
fn oracle_string_points_a(n: usize, i: usize) -> PyResult<Vec<Vec<u32>>> {
    Ok(points_list(
        &wedge::oracle_string_points_a(n, i).map_err(to_py)?,
    ))
}

#[pymodule]
pub fn fsl(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLieType>()?;
    m.add_class::<VerificationReport>()?;
    m.add_function(wrap_pyfunction!(run_grid, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_string_points_a, m)?)?;
    m.add("GateError", m.py().get_type::<GateError>())?;
    Ok(())
}
