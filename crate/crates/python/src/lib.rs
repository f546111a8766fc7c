//! Python bindings. Rationals cross the boundary as `fractions.Fraction`
//! and basis indices are 1-based.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use qfla_core::catalog::{self, FamilyId, FamilyTag};
use qfla_core::derivations::{self, DerivationProblem};
use qfla_core::linalg::{format_rational, parse_rational, Matrix, Rational};
use qfla_core::{io, report, tpa, witness};

fn err(e: qfla_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn family_id(family: &str, n: Option<usize>) -> PyResult<FamilyId> {
    let tag: FamilyTag = family.parse().map_err(err)?;
    FamilyId::new(tag, n).map_err(err)
}

fn to_fraction<'py>(py: Python<'py>, x: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((format_rational(x),))
}

fn from_python(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse_rational(&obj.str()?.to_cow()?).map_err(err)
}

fn fractions<'py>(py: Python<'py>, v: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = v
        .iter()
        .map(|x| to_fraction(py, x))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn matrix_rows<'py>(py: Python<'py>, m: &Matrix) -> PyResult<Bound<'py, PyList>> {
    let rows = m
        .to_rows()
        .iter()
        .map(|r| fractions(py, r))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, rows)
}

fn matrix_from_python(n: usize, rows: &Bound<'_, PyAny>) -> PyResult<Matrix> {
    let mut out = Vec::new();
    for row in rows.try_iter()? {
        let row = row?;
        out.push(
            row.try_iter()?
                .map(|x| from_python(&x?))
                .collect::<PyResult<Vec<_>>>()?,
        );
    }
    Matrix::from_rows(n, out).map_err(err)
}

fn json_loads<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn check_dict<'py>(py: Python<'py>, r: &witness::CheckReport) -> PyResult<Bound<'py, PyAny>> {
    json_loads(py, &io::to_json(r))
}

#[pyclass(name = "LieAlgebra", module = "qfla")]
struct PyLieAlgebra {
    inner: qfla_core::LieAlgebra,
    warnings: Vec<String>,
}

#[pymethods]
impl PyLieAlgebra {
    /// Catalog algebra, e.g. `LieAlgebra.family("g1n1", 9)`.
    #[staticmethod]
    #[pyo3(signature = (family, n=None))]
    fn family(family: &str, n: Option<usize>) -> PyResult<Self> {
        Ok(PyLieAlgebra {
            inner: catalog::make_algebra(family_id(family, n)?),
            warnings: Vec::new(),
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let imported = io::import_algebra(text).map_err(err)?;
        Ok(PyLieAlgebra {
            inner: imported.algebra,
            warnings: imported.warnings,
        })
    }

    fn to_json(&self) -> String {
        io::export_algebra(&self.inner)
    }

    #[getter]
    fn name(&self) -> &str {
        self.inner.name()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Loader diagnostics such as a failing Jacobi identity.
    #[getter]
    fn warnings(&self) -> Vec<String> {
        self.warnings.clone()
    }

    /// `[e_i, e_j]` as a dense coordinate list.
    fn bracket<'py>(&self, py: Python<'py>, i: usize, j: usize) -> PyResult<Bound<'py, PyList>> {
        let n = self.inner.dim();
        if i == 0 || j == 0 || i > n || j > n {
            return Err(PyIndexError::new_err(format!(
                "basis index outside 1..={n}"
            )));
        }
        fractions(py, &self.inner.basis_bracket_dense(i - 1, j - 1))
    }

    fn jacobi_check<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        check_dict(py, &self.inner.jacobi_check())
    }

    fn lower_central_series(&self) -> Vec<usize> {
        self.inner.lower_central_series().dims()
    }

    fn nilindex(&self) -> Option<usize> {
        self.inner.nilindex()
    }

    fn __repr__(&self) -> String {
        format!(
            "LieAlgebra({:?}, dim={})",
            self.inner.name(),
            self.inner.dim()
        )
    }
}

#[pyclass(name = "DerivationSpace", module = "qfla")]
struct PyDerivationSpace {
    inner: qfla_core::DerivationSpace,
}

#[pymethods]
impl PyDerivationSpace {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Basis maps as `n×n` row lists; column `j` is the image of `e_{j+1}`.
    fn basis<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let maps = self
            .inner
            .basis_maps()
            .iter()
            .map(|m| matrix_rows(py, m))
            .collect::<PyResult<Vec<_>>>()?;
        PyList::new(py, maps)
    }

    fn contains(&self, rows: &Bound<'_, PyAny>) -> PyResult<bool> {
        let m = matrix_from_python(self.inner.algebra_dim(), rows)?;
        self.inner.contains(&m).map_err(err)
    }

    fn to_json(&self) -> String {
        io::export_derivation_space(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("DerivationSpace(dim={})", self.inner.dim())
    }
}

#[pyclass(name = "CommutativeProduct", module = "qfla")]
struct PyCommutativeProduct {
    inner: tpa::CommutativeProduct,
}

#[pymethods]
impl PyCommutativeProduct {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyCommutativeProduct {
            inner: io::import_product(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        io::export_product(&self.inner)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// `e_i · e_j` as a dense coordinate list.
    fn product<'py>(&self, py: Python<'py>, i: usize, j: usize) -> PyResult<Bound<'py, PyList>> {
        let n = self.inner.dim();
        if i == 0 || j == 0 || i > n || j > n {
            return Err(PyIndexError::new_err(format!(
                "basis index outside 1..={n}"
            )));
        }
        fractions(py, &self.inner.basis_product(i - 1, j - 1))
    }

    fn multiplication_operator<'py>(
        &self,
        py: Python<'py>,
        i: usize,
    ) -> PyResult<Bound<'py, PyList>> {
        let m = tpa::multiplication_operator(&self.inner, i.wrapping_sub(1)).map_err(err)?;
        matrix_rows(py, &m)
    }

    fn check_associative<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        check_dict(py, &tpa::check_associative(&self.inner))
    }

    fn check_transposed_leibniz<'py>(
        &self,
        py: Python<'py>,
        algebra: PyRef<'_, PyLieAlgebra>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let r = tpa::check_transposed_leibniz(&algebra.inner, &self.inner).map_err(err)?;
        check_dict(py, &r)
    }

    fn check_poisson_leibniz<'py>(
        &self,
        py: Python<'py>,
        algebra: PyRef<'_, PyLieAlgebra>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let r = tpa::check_poisson_leibniz(&algebra.inner, &self.inner).map_err(err)?;
        check_dict(py, &r)
    }
}

#[pyclass(name = "TPVariant", module = "qfla")]
struct PyTPVariant {
    inner: tpa::TPVariant,
}

#[pymethods]
impl PyTPVariant {
    #[getter]
    fn key(&self) -> &str {
        &self.inner.key
    }

    #[getter]
    fn id(&self) -> String {
        self.inner.id()
    }

    #[getter]
    fn parameters(&self) -> Vec<String> {
        self.inner.parameters.clone()
    }

    /// Expressions required to be nonzero.
    #[getter]
    fn constraints(&self) -> Vec<String> {
        self.inner
            .constraints
            .iter()
            .map(|c| c.to_string())
            .collect()
    }

    /// Instantiate with a `{name: value}` mapping; values may be ints,
    /// Fractions or `"p/q"` strings.
    fn instantiate(&self, values: &Bound<'_, PyDict>) -> PyResult<PyCommutativeProduct> {
        let mut map = BTreeMap::new();
        for (k, v) in values.iter() {
            map.insert(k.extract::<String>()?, from_python(&v)?);
        }
        let assignment = tpa::ParameterAssignment {
            variant: self.inner.id(),
            values: map,
        };
        Ok(PyCommutativeProduct {
            inner: tpa::instantiate(&self.inner, &assignment).map_err(err)?,
        })
    }

    #[pyo3(signature = (seed, bound=5))]
    fn sample<'py>(&self, py: Python<'py>, seed: u64, bound: u32) -> PyResult<Bound<'py, PyDict>> {
        let a = tpa::sample_parameters(&self.inner, seed, bound).map_err(err)?;
        let out = PyDict::new(py);
        for (k, v) in &a.values {
            out.set_item(k, to_fraction(py, v)?)?;
        }
        Ok(out)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("TPVariant({:?})", self.inner.id())
    }
}

#[pyfunction]
fn list_families<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    json_loads(py, &io::to_json(&catalog::list_families()))
}

#[pyfunction]
#[pyo3(signature = (algebra, delta="1/2"))]
fn solve_derivation_space(
    algebra: PyRef<'_, PyLieAlgebra>,
    delta: &str,
) -> PyResult<PyDerivationSpace> {
    let delta = parse_rational(delta).map_err(err)?;
    Ok(PyDerivationSpace {
        inner: derivations::solve_derivation_space(&DerivationProblem::new(&algebra.inner, delta)),
    })
}

#[pyfunction]
#[pyo3(signature = (family, n=None))]
fn predicted_space(family: &str, n: Option<usize>) -> PyResult<PyDerivationSpace> {
    Ok(PyDerivationSpace {
        inner: derivations::predicted_space(family_id(family, n)?),
    })
}

#[pyfunction]
#[pyo3(signature = (family, n=None))]
fn verify_theorem<'py>(
    py: Python<'py>,
    family: &str,
    n: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    json_loads(
        py,
        &io::to_json(&derivations::verify_theorem(family_id(family, n)?)),
    )
}

#[pyfunction]
#[pyo3(signature = (family, n=None))]
fn list_variants(family: &str, n: Option<usize>) -> PyResult<Vec<String>> {
    Ok(tpa::list_variants(family_id(family, n)?))
}

#[pyfunction]
#[pyo3(signature = (family, n, key))]
fn variant(family: &str, n: Option<usize>, key: &str) -> PyResult<PyTPVariant> {
    Ok(PyTPVariant {
        inner: tpa::find_variant(family_id(family, n)?, key).map_err(err)?,
    })
}

/// Sweep report for one table, as a dict.
#[pyfunction]
#[pyo3(signature = (family, n, key, samples=25, seed=1, bound=5))]
fn verify_variant<'py>(
    py: Python<'py>,
    family: &str,
    n: Option<usize>,
    key: &str,
    samples: usize,
    seed: u64,
    bound: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let id = family_id(family, n)?;
    let v = tpa::find_variant(id, key).map_err(err)?;
    let alg = catalog::make_algebra(id);
    let half = derivations::solve_derivation_space(&DerivationProblem::half(&alg));
    let r = py.detach(|| report::verify_variant(&v, &alg, &half, samples, seed, bound));
    json_loads(py, &io::to_json(&r))
}

/// Full run report, as a dict. Timing fields are included.
#[pyfunction]
#[pyo3(signature = (n_grid, samples=25, seed=1, bound=5))]
fn verify_all<'py>(
    py: Python<'py>,
    n_grid: Vec<usize>,
    samples: usize,
    seed: u64,
    bound: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let r = py.detach(|| report::cmd_verify_all(&n_grid, samples, seed, bound));
    json_loads(py, &r.to_json())
}

#[pymodule]
fn qfla(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLieAlgebra>()?;
    m.add_class::<PyDerivationSpace>()?;
    m.add_class::<PyCommutativeProduct>()?;
    m.add_class::<PyTPVariant>()?;
    m.add_function(wrap_pyfunction!(list_families, m)?)?;
    m.add_function(wrap_pyfunction!(solve_derivation_space, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_space, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(list_variants, m)?)?;
    m.add_function(wrap_pyfunction!(variant, m)?)?;
    m.add_function(wrap_pyfunction!(verify_variant, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
