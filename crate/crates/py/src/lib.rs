use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use grm_core::cyclic::{self, cyclic_genmat};
use grm_core::error::GrmError;
use grm_core::galois_ring::{build_tower, GaloisTower, LElem};
use grm_core::grm::{self, standard_genmat};
use grm_core::oracle::{brute_min_weight, DEFAULT_GUARD};
use grm_core::ring_base::{PolyRing, RingParams};
use grm_core::ring_linalg::Matrix;
use grm_core::trace_codes::kerdock_gen_poly;
use grm_core::verify::{run_suite, Suite};

fn to_py(e: GrmError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Elements of L as coefficient lists over Z/p^s.
fn rows_of(m: &Matrix<LElem>) -> Vec<Vec<Vec<u64>>> {
    m.rows().iter().map(|r| r.iter().map(|c| c.coeffs().to_vec()).collect()).collect()
}

/// The tower Z/p^s < L = GR(p^s, r) < R = GR(p^s, rm).
#[pyclass(frozen, name = "Tower")]
struct PyTower {
    inner: Arc<GaloisTower>,
}

#[pymethods]
impl PyTower {
    #[new]
    fn new(p: u64, s: u32, r: u32, m: u32) -> PyResult<Self> {
        let params = RingParams::new(p, s, r).map_err(to_py)?;
        Ok(Self { inner: Arc::new(build_tower(params, m).map_err(to_py)?) })
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.params().p
    }

    #[getter]
    fn s(&self) -> u32 {
        self.inner.params().s
    }

    #[getter]
    fn r(&self) -> u32 {
        self.inner.params().r
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m()
    }

    #[getter]
    fn q(&self) -> u64 {
        self.inner.q()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn length(&self) -> usize {
        self.inner.length()
    }

    #[getter]
    fn max_order(&self) -> u32 {
        self.inner.max_order()
    }

    #[getter]
    fn rm_at_least_s(&self) -> bool {
        self.inner.rm_at_least_s()
    }

    fn h_r(&self) -> String {
        PolyRing::new(self.inner.zps()).display(self.inner.h_r())
    }

    fn g0(&self) -> String {
        self.inner.fmt_poly(self.inner.g0())
    }

    /// Minimal polynomial of xi over L.
    fn xi_minimal_polynomial(&self) -> PyResult<String> {
        let f = self.inner.minimal_polynomial(&self.inner.xi()).map_err(to_py)?;
        Ok(self.inner.fmt_poly(&f))
    }

    fn __repr__(&self) -> String {
        format!("Tower({}, m={})", self.inner.params(), self.inner.m())
    }
}

/// RM_L(nu, m) with its standard generator matrix.
#[pyclass(frozen, name = "GrmCode")]
struct PyGrmCode {
    inner: grm::GrmCode,
}

#[pymethods]
impl PyGrmCode {
    #[new]
    fn new(tower: &PyTower, nu: u32) -> PyResult<Self> {
        Ok(Self { inner: standard_genmat(&tower.inner, nu).map_err(to_py)? })
    }

    #[getter]
    fn nu(&self) -> u32 {
        self.inner.nu()
    }

    #[getter]
    fn length(&self) -> usize {
        self.inner.length()
    }

    fn rank(&self) -> PyResult<usize> {
        self.inner.rank().map_err(to_py)
    }

    fn genmat(&self) -> Vec<Vec<Vec<u64>>> {
        rows_of(self.inner.genmat())
    }

    fn punctured(&self) -> Vec<Vec<Vec<u64>>> {
        rows_of(&self.inner.punctured())
    }

    /// Monomial labels of the rows, e.g. `"x1*x2"`.
    fn row_labels(&self) -> Vec<String> {
        self.inner.labels().iter().map(|l| l.to_string()).collect()
    }

    fn column_labels(&self) -> Vec<String> {
        self.inner.column_labels().iter().map(|l| l.to_string()).collect()
    }

    #[pyo3(signature = (shortened = false, guard = DEFAULT_GUARD))]
    fn min_weight(&self, py: Python<'_>, shortened: bool, guard: u64) -> PyResult<Option<usize>> {
        let m = if shortened { self.inner.punctured() } else { self.inner.genmat().clone() };
        let base = self.inner.tower().base().clone();
        py.detach(|| brute_min_weight(&base, &m, guard)).map(|r| r.min_weight).map_err(to_py)
    }

    /// Generator matrix of the shortened code built from its generator polynomial.
    fn cyclic_genmat(&self) -> PyResult<Vec<Vec<Vec<u64>>>> {
        let t = self.inner.tower();
        let code = cyclic::grm_generator_poly(t, self.inner.nu()).map_err(to_py)?;
        Ok(rows_of(&cyclic_genmat(t.base(), &code)))
    }

    fn __repr__(&self) -> String {
        let t = self.inner.tower();
        format!("GrmCode({}, m={}, nu={})", t.params(), t.m(), self.inner.nu())
    }
}

#[pyfunction]
fn rank_formula(nu: u32, m: u32, q: u64) -> u64 {
    grm::rank_formula(nu, m, q)
}

#[pyfunction]
fn qweight_rank_count(nu: u32, m: u32, q: u64) -> PyResult<u64> {
    grm::qweight_rank_count(nu, m, q).map_err(to_py)
}

#[pyfunction]
fn dual_order(nu: u32, m: u32, q: u64) -> PyResult<u32> {
    grm::dual_order(nu, m, q).map_err(to_py)
}

/// `(Q, rem, designed)` with `designed = (rem + 1) q^Q - 1`.
#[pyfunction]
fn distance_params(nu: u32, m: u32, q: u64) -> PyResult<(u32, u32, u64)> {
    let d = grm::distance_params(nu, m, q).map_err(to_py)?;
    Ok((d.quotient, d.remainder, d.designed))
}

#[pyfunction]
fn qweight(k: u64, q: u64, m: u32) -> PyResult<u32> {
    cyclic::qweight(k, q, m).map_err(to_py)
}

#[pyfunction]
fn cyclotomic_cosets(n: u64, q: u64) -> Vec<Vec<u64>> {
    cyclic::cyclotomic_cosets(n, q).into_iter().map(|c| c.members).collect()
}

#[pyfunction]
fn grm_generator_poly(tower: &PyTower, nu: u32) -> PyResult<String> {
    let code = cyclic::grm_generator_poly(&tower.inner, nu).map_err(to_py)?;
    Ok(tower.inner.fmt_poly(code.gen()))
}

#[pyfunction]
fn kerdock_generator_poly(tower: &PyTower) -> PyResult<String> {
    let code = kerdock_gen_poly(&tower.inner).map_err(to_py)?;
    Ok(tower.inner.fmt_poly(code.gen()))
}

/// Runs a verification suite; returns `(passed, report)`.
#[pyfunction]
#[pyo3(signature = (tower, suite = "all", guard = DEFAULT_GUARD))]
fn verify(py: Python<'_>, tower: &PyTower, suite: &str, guard: u64) -> PyResult<(bool, String)> {
    let suite: Suite = suite.parse().map_err(to_py)?;
    let t = tower.inner.clone();
    let report = py.detach(|| run_suite(&t, suite, guard)).map_err(to_py)?;
    Ok((!report.has_failures(), report.render()))
}

#[pymodule]
fn galois_grm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTower>()?;
    m.add_class::<PyGrmCode>()?;
    m.add_function(wrap_pyfunction!(rank_formula, m)?)?;
    m.add_function(wrap_pyfunction!(qweight_rank_count, m)?)?;
    m.add_function(wrap_pyfunction!(dual_order, m)?)?;
    m.add_function(wrap_pyfunction!(distance_params, m)?)?;
    m.add_function(wrap_pyfunction!(qweight, m)?)?;
    m.add_function(wrap_pyfunction!(cyclotomic_cosets, m)?)?;
    m.add_function(wrap_pyfunction!(grm_generator_poly, m)?)?;
    m.add_function(wrap_pyfunction!(kerdock_generator_poly, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
