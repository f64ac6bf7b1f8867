//! Python bindings: documents, algebras, checks, cohomology and conversions.
//!
//! Rationals cross the boundary as strings (`"3"`, `"-1/2"`) so that no
//! precision is lost; `fractions.Fraction` accepts them directly.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use trisys_core::algebras::{adjoint_rep, check_lts, check_representation, Algebra, CheckReport, Rep};
use trisys_core::cli::{self, CheckKind, Target};
use trisys_core::cohomology::{cohomology_dims, oracle_delta_vs_bracket};
use trisys_core::controlling::mc_report;
use trisys_core::exactlin::Rat;
use trisys_core::formats::{emit, parse, read_document, write_document, Document, Payload, ReportDoc};
use trisys_core::multilinear::Space;
use trisys_core::Error;

create_exception!(trisys, TrisysError, PyException, "Base class for trisys errors.");
create_exception!(trisys, InputError, TrisysError, "Malformed input, bad arguments or I/O failure.");
create_exception!(trisys, PreconditionError, TrisysError, "The input lacks the structure an operation needs.");

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Precondition(_) => PreconditionError::new_err(e.to_string()),
        Error::Consistency(_) => TrisysError::new_err(e.to_string()),
        _ => InputError::new_err(e.to_string()),
    }
}

fn strs(v: &[Rat]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// A versioned document of any kind.
#[pyclass(name = "Document", module = "trisys", frozen)]
struct PyDocument {
    inner: Document,
}

#[pymethods]
impl PyDocument {
    /// Reads and validates a document file.
    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        read_document(path.as_ref()).map(|inner| PyDocument { inner }).map_err(to_py)
    }

    /// Parses and validates JSON text.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse(text).map(|inner| PyDocument { inner }).map_err(to_py)
    }

    /// Canonical JSON text.
    fn to_json(&self) -> String {
        emit(&self.inner)
    }

    fn save(&self, path: &str) -> PyResult<()> {
        write_document(path.as_ref(), &self.inner).map_err(to_py)
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind()
    }

    /// Verifies the defining identities; `kind` takes the CLI's `--kind` values.
    #[pyo3(signature = (kind = "auto"))]
    fn check(&self, kind: &str) -> PyResult<PyReport> {
        let kind = CheckKind::parse(kind).map_err(to_py)?;
        cli::check_document(&self.inner, kind).map(|r| PyReport { inner: r }).map_err(to_py)
    }

    /// Converts to another kind; `to` takes the CLI's `--to` values.
    fn convert(&self, to: &str) -> PyResult<PyDocument> {
        let to = Target::parse(to).map_err(to_py)?;
        cli::convert_document(&self.inner, to).map(|inner| PyDocument { inner }).map_err(to_py)
    }

    /// The algebra held by an algebra document.
    fn algebra(&self) -> PyResult<PyAlgebra> {
        match &self.inner.payload {
            Payload::Algebra(a) => Ok(PyAlgebra { inner: a.clone() }),
            _ => Err(InputError::new_err(format!("expected an algebra document, got {}", self.inner.kind()))),
        }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("<trisys.Document kind={}>", self.inner.kind())
    }
}

/// A finite-dimensional algebra with exact rational structure constants.
#[pyclass(name = "Algebra", module = "trisys", frozen)]
struct PyAlgebra {
    inner: Algebra,
}

impl PyAlgebra {
    fn index(&self, label: &str) -> PyResult<usize> {
        self.inner.space.index_of(label).ok_or_else(|| InputError::new_err(format!("no basis element {label:?}")))
    }

    fn rep(&self, rep: &Bound<'_, PyAny>) -> PyResult<Rep> {
        if let Ok(name) = rep.extract::<String>() {
            return match name.as_str() {
                "adjoint" => adjoint_rep(&self.inner).map_err(to_py),
                "trivial" => Ok(Rep::zero(self.inner.clone(), Space::from_labels(&["v"]).map_err(to_py)?)),
                _ => Err(InputError::new_err("rep must be 'adjoint', 'trivial' or a representation Document")),
            };
        }
        let doc = rep.extract::<PyRef<'_, PyDocument>>()?;
        match &doc.inner.payload {
            Payload::Representation(r) if r.base == self.inner => Ok(r.clone()),
            Payload::Representation(_) => Err(InputError::new_err("the representation is over a different algebra")),
            _ => Err(InputError::new_err("expected a representation document")),
        }
    }
}

#[pymethods]
impl PyAlgebra {
    #[getter]
    fn kind(&self) -> String {
        self.inner.kind.to_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.inner.space.labels().to_vec()
    }

    /// Bracket of basis elements given by label, as coordinates.
    fn bracket(&self, labels: Vec<String>) -> PyResult<Vec<String>> {
        let idx = labels.iter().map(|l| self.index(l)).collect::<PyResult<Vec<_>>>()?;
        if idx.len() != self.inner.kind.arity() {
            return Err(InputError::new_err(format!("the bracket takes {} arguments", self.inner.kind.arity())));
        }
        Ok(strs(&self.inner.bracket_basis(&idx)))
    }

    fn check(&self) -> PyResult<PyReport> {
        let doc = Document::new(Payload::Algebra(self.inner.clone()));
        cli::check_document(&doc, CheckKind::Auto).map(|r| PyReport { inner: r }).map_err(to_py)
    }

    /// Maurer-Cartan status: `{"mc", "antisymmetry", "cyclic", "passes", "witness"}`.
    fn mc<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = mc_report(&self.inner).map_err(to_py)?;
        let d = PyDict::new(py);
        d.set_item("mc", r.defect_zero)?;
        d.set_item("antisymmetry", r.constraints.cond1)?;
        d.set_item("cyclic", r.constraints.cond2)?;
        d.set_item("passes", r.passes(self.inner.kind))?;
        let witness =
            r.witness.map(|(t, _)| t.iter().map(|&i| self.inner.space.label(i).to_string()).collect::<Vec<_>>());
        d.set_item("witness", witness)?;
        Ok(d)
    }

    /// `(degree, dim C^n, rank d_n, dim H^n)` for `1 <= n <= max_degree`.
    #[pyo3(signature = (rep = None, max_degree = 3))]
    fn cohomology(
        &self,
        rep: Option<&Bound<'_, PyAny>>,
        max_degree: usize,
    ) -> PyResult<Vec<(usize, usize, usize, usize)>> {
        if max_degree == 0 {
            return Err(InputError::new_err("max_degree must be at least 1"));
        }
        let lts = self.inner.with_kind(trisys_core::algebras::AlgebraKind::Lts).map_err(to_py)?;
        let base = PyAlgebra { inner: lts.clone() };
        if !check_lts(&lts).map_err(to_py)?.passed() {
            return Err(PreconditionError::new_err("the algebra is not a Lie triple system"));
        }
        let rep = match rep {
            Some(r) => base.rep(r)?,
            None => adjoint_rep(&lts).map_err(to_py)?,
        };
        if !check_representation(&rep).map_err(to_py)?.passed() {
            return Err(PreconditionError::new_err("the representation fails its identities"));
        }
        let dims = cohomology_dims(&lts, &rep, max_degree).map_err(to_py)?;
        Ok(dims.iter().map(|d| (d.degree, d.cochains, d.rank, d.cohomology)).collect())
    }

    /// Compares the coboundary with the controlling bracket on basis cochains.
    #[pyo3(signature = (degree = 1))]
    fn oracle(&self, degree: usize) -> PyResult<PyReport> {
        oracle_delta_vs_bracket(&self.inner, degree).map(|r| PyReport { inner: r }).map_err(to_py)
    }

    fn to_document(&self) -> PyDocument {
        PyDocument { inner: Document::new(Payload::Algebra(self.inner.clone())) }
    }

    fn __repr__(&self) -> String {
        format!("<trisys.Algebra kind={} dim={}>", self.inner.kind, self.inner.dim())
    }
}

/// Outcome of an identity check.
#[pyclass(name = "Report", module = "trisys", frozen)]
struct PyReport {
    inner: CheckReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn passed(&self) -> bool {
        self.inner.passed()
    }

    #[getter]
    fn identities(&self) -> Vec<String> {
        self.inner.identities.clone()
    }

    #[getter]
    fn failed(&self) -> Vec<String> {
        self.inner.failed_identities()
    }

    /// Each violation as `{"identity", "witness", "lhs", "rhs"}`.
    #[getter]
    fn violations<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        self.inner
            .violations
            .iter()
            .map(|v| {
                let d = PyDict::new(py);
                d.set_item("identity", &v.identity)?;
                d.set_item("witness", &v.witness_labels)?;
                d.set_item("lhs", strs(&v.lhs))?;
                d.set_item("rhs", strs(&v.rhs))?;
                Ok(d)
            })
            .collect()
    }

    /// The report as a canonical report document.
    #[pyo3(signature = (subject = ""))]
    fn to_json(&self, subject: &str) -> String {
        emit(&Document::new(Payload::Report(ReportDoc { subject: subject.to_string(), report: self.inner.clone() })))
    }

    fn __bool__(&self) -> bool {
        self.inner.passed()
    }

    fn __repr__(&self) -> String {
        format!("<trisys.Report passed={} identities={}>", self.inner.passed(), self.inner.identities.len())
    }
}

/// Runs the command line in-process; returns `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(std::iter::once("trisys".to_string()).chain(args), &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned(), String::from_utf8_lossy(&err).into_owned())
}

#[pymodule]
fn trisys(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyDocument>()?;
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    m.add("TrisysError", py.get_type::<TrisysError>())?;
    m.add("InputError", py.get_type::<InputError>())?;
    m.add("PreconditionError", py.get_type::<PreconditionError>())?;
    Ok(())
}
