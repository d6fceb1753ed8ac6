//! Python bindings exposing the main types and operations.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use equires::complexes;
use equires::partitions::{self, Partition, Weight};

fn err(e: equires::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn weight(entries: Vec<i64>) -> PyResult<Weight> {
    Weight::new(entries).map_err(err)
}

fn partition(parts: Vec<i64>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

/// A complex of equivariant free modules, recorded term by term.
#[pyclass(name = "GradedComplex")]
struct PyGradedComplex {
    inner: complexes::GradedComplex,
}

#[pymethods]
impl PyGradedComplex {
    fn e(&self) -> usize {
        self.inner.e()
    }

    fn g(&self) -> usize {
        self.inner.g()
    }

    fn f(&self) -> usize {
        self.inner.f()
    }

    fn base_ring(&self) -> String {
        self.inner.base_ring().tag().to_string()
    }

    fn term_count(&self) -> usize {
        self.inner.term_count()
    }

    fn degrees(&self) -> Vec<i64> {
        self.inner.degrees()
    }

    fn top_degree(&self) -> Option<i64> {
        self.inner.top_degree()
    }

    /// Per-degree total ranks.
    fn betti(&self) -> Vec<(i64, BigInt)> {
        self.inner.degrees().into_iter().map(|d| (d, self.inner.total_rank(d))).collect()
    }

    /// Terms as tuples (hom_degree, nu, k, e_weight, n_ext, g_weight, twist, rank).
    #[allow(clippy::type_complexity)]
    fn terms(
        &self,
    ) -> Vec<(i64, Vec<i64>, i64, Vec<i64>, usize, Vec<i64>, (i64, i64), BigInt)> {
        self.inner
            .iter_terms()
            .map(|t| {
                (
                    t.hom_degree,
                    t.nu.entries().to_vec(),
                    t.k,
                    t.e_weight.parts().to_vec(),
                    t.n_ext,
                    t.g_weight.entries().to_vec(),
                    t.twist,
                    t.rank.clone(),
                )
            })
            .collect()
    }

    fn same_terms(&self, other: &PyGradedComplex) -> bool {
        self.inner.same_terms(&other.inner)
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!(
            "GradedComplex(ring={}, e={}, g={}, terms={})",
            self.inner.base_ring().tag(),
            self.inner.e(),
            self.inner.g(),
            self.inner.term_count()
        )
    }
}

#[pyfunction]
fn conjugate(parts: Vec<i64>) -> PyResult<Vec<i64>> {
    Ok(partitions::conjugate(&partition(parts)?).parts().to_vec())
}

#[pyfunction]
fn nu_prime(nu: Vec<i64>, k: i64) -> PyResult<usize> {
    Ok(partitions::nu_prime(&weight(nu)?, k))
}

#[pyfunction]
fn complement_in_box(nu: Vec<i64>, e: i64) -> PyResult<Vec<i64>> {
    Ok(partitions::complement_in_box(&weight(nu)?, e).entries().to_vec())
}

#[pyfunction]
fn weyl_dim(w: Vec<i64>, n: usize) -> PyResult<BigInt> {
    partitions::weyl_dim(&weight(w)?, n).map_err(err)
}

#[pyfunction]
fn enumerate_in_box(rows: usize, cols: usize) -> Vec<Vec<i64>> {
    partitions::enumerate_in_box(rows, cols)
        .into_iter()
        .map(|p| p.parts().to_vec())
        .collect()
}

/// Bott's algorithm; returns None for vanishing cohomology, otherwise
/// (cohomology degree, dominant output weight).
#[pyfunction]
fn bott(
    q_part: Vec<i64>,
    r_part: Vec<i64>,
    n: usize,
    r: usize,
) -> PyResult<Option<(usize, Vec<i64>)>> {
    match equires::bott::bott(&weight(q_part)?, &weight(r_part)?, n, r).map_err(err)? {
        equires::bott::BottOutcome::Zero => Ok(None),
        equires::bott::BottOutcome::Cohomology { length, weight } => {
            Ok(Some((length, weight.entries().to_vec())))
        }
    }
}

#[pyfunction]
fn p_and_n(nu: Vec<i64>, k: i64, g: usize) -> PyResult<(Vec<i64>, i64)> {
    let (p, n) = equires::bott::p_and_n(&weight(nu)?, k, g).map_err(err)?;
    Ok((p.entries().to_vec(), n))
}

#[pyfunction]
fn f_terms_closed(e: usize, g: usize) -> PyResult<PyGradedComplex> {
    Ok(PyGradedComplex { inner: complexes::f_terms_closed(e, g).map_err(err)? })
}

#[pyfunction]
fn f_terms_via_bott(e: usize, g: usize) -> PyResult<PyGradedComplex> {
    Ok(PyGradedComplex { inner: equires::bott::f_terms_via_bott(e, g).map_err(err)? })
}

#[pyfunction]
fn t_terms_closed(nu: Vec<i64>, e: usize, g: usize) -> PyResult<PyGradedComplex> {
    Ok(PyGradedComplex { inner: complexes::t_terms_closed(&weight(nu)?, e, g).map_err(err)? })
}

#[pyfunction]
fn t_terms_via_bott(nu: Vec<i64>, e: usize, g: usize) -> PyResult<PyGradedComplex> {
    Ok(PyGradedComplex {
        inner: equires::bott::t_terms_via_bott(&partition(nu)?, e, g).map_err(err)?,
    })
}

#[pyfunction]
fn eagon_northcott_terms(i: i64, e: usize, g: usize) -> PyResult<PyGradedComplex> {
    Ok(PyGradedComplex { inner: complexes::eagon_northcott_terms(i, e, g).map_err(err)? })
}

#[pyfunction]
fn g_complex(e: usize, g: usize) -> PyResult<PyGradedComplex> {
    Ok(PyGradedComplex { inner: complexes::g_complex(e, g).map_err(err)? })
}

#[pyfunction]
fn strand(e: usize, g: usize) -> PyResult<PyGradedComplex> {
    Ok(PyGradedComplex { inner: complexes::strand(e, g).map_err(err)? })
}

#[pyfunction]
fn dual_check_t(nu: Vec<i64>, e: usize, g: usize) -> PyResult<bool> {
    complexes::dual_check_t(&weight(nu)?, e, g).map_err(err)
}

#[pyfunction]
fn self_duality_check(e: usize, g: usize) -> PyResult<bool> {
    complexes::self_duality_check(e, g).map_err(err)
}

/// Structural assertions on F-type complexes; returns (passed, failures).
#[pyfunction]
fn structural_checks(c: &PyGradedComplex) -> (bool, Vec<String>) {
    let report = complexes::structural_checks(&c.inner);
    (report.passed(), report.failures)
}

type ArrowTuple = (String, String, String, (i64, i64));

/// Differential-support arrows as (source_name, target_name, kind, map_degree).
#[pyfunction]
fn diff_arrows(e: usize, g: usize) -> PyResult<Vec<ArrowTuple>> {
    let c = complexes::f_terms_closed(e, g).map_err(err)?;
    let arrows = complexes::diff_support(&c).map_err(err)?;
    Ok(arrows
        .into_iter()
        .map(|a| {
            (
                a.source.node_name(),
                a.target.node_name(),
                a.kind.tag().to_string(),
                a.map_degree,
            )
        })
        .collect())
}

#[pyfunction]
fn hilbert_ai(
    e: usize,
    g: usize,
    degree: i64,
) -> PyResult<std::collections::BTreeMap<(i64, i64), BigInt>> {
    let s = equires::hilbert::hilbert_ai(e, g, degree).map_err(err)?;
    Ok(s.iter().map(|(&k, v)| (k, v.clone())).collect())
}

#[pyfunction]
fn hilbert_c(
    e: usize,
    g: usize,
    degree: i64,
) -> PyResult<std::collections::BTreeMap<(i64, i64), BigInt>> {
    let s = equires::hilbert::hilbert_c(e, g, degree).map_err(err)?;
    Ok(s.iter().map(|(&k, v)| (k, v.clone())).collect())
}

/// Euler-characteristic verification; returns (passed, failures).
#[pyfunction]
fn check_euler(e: usize, g: usize, degree: i64) -> PyResult<(bool, Vec<String>)> {
    let report = equires::hilbert::check_euler(e, g, degree).map_err(err)?;
    Ok((report.passed(), report.failures))
}

#[pymodule]
fn equires_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGradedComplex>()?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(nu_prime, m)?)?;
    m.add_function(wrap_pyfunction!(complement_in_box, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dim, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_in_box, m)?)?;
    m.add_function(wrap_pyfunction!(bott, m)?)?;
    m.add_function(wrap_pyfunction!(p_and_n, m)?)?;
    m.add_function(wrap_pyfunction!(f_terms_closed, m)?)?;
    m.add_function(wrap_pyfunction!(f_terms_via_bott, m)?)?;
    m.add_function(wrap_pyfunction!(t_terms_closed, m)?)?;
    m.add_function(wrap_pyfunction!(t_terms_via_bott, m)?)?;
    m.add_function(wrap_pyfunction!(eagon_northcott_terms, m)?)?;
    m.add_function(wrap_pyfunction!(g_complex, m)?)?;
    m.add_function(wrap_pyfunction!(strand, m)?)?;
    m.add_function(wrap_pyfunction!(dual_check_t, m)?)?;
    m.add_function(wrap_pyfunction!(self_duality_check, m)?)?;
    m.add_function(wrap_pyfunction!(structural_checks, m)?)?;
    m.add_function(wrap_pyfunction!(diff_arrows, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_ai, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_c, m)?)?;
    m.add_function(wrap_pyfunction!(check_euler, m)?)?;
    Ok(())
}
