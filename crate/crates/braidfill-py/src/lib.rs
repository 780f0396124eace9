//! Python bindings: braid families, verification reports, dynamics and link export.
//! Reports and links cross the boundary as JSON strings.

use ::braidfill as core;
use core::export::{manifold_link, snappy_script as script, Manifold, ManifoldParams};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: core::Error) -> PyErr {
    match e {
        core::Error::NoConvergence(_) | core::Error::Io(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Braid word of a family member as text, e.g. `family_word("beta", "1/3")`.
#[pyfunction]
#[pyo3(signature = (name, param=None))]
fn family_word(name: &str, param: Option<&str>) -> PyResult<String> {
    Ok(core::families::family_by_name(name, param).map_err(py_err)?.word.text())
}

#[pyfunction]
fn verify_thm42(l: u32, m: u32, k: u32) -> PyResult<String> {
    Ok(core::verifier::verify_thm42(l, m, k).map_err(py_err)?.to_json())
}

#[pyfunction]
fn verify_thm53(kappa: u32) -> PyResult<String> {
    Ok(core::verifier::verify_thm53(kappa).map_err(py_err)?.to_json())
}

#[pyfunction]
fn verify_magic() -> PyResult<String> {
    Ok(core::verifier::verify_magic().map_err(py_err)?.to_json())
}

#[pyfunction]
#[pyo3(signature = (m, n, eps=1e-12))]
fn t_of_q(m: u32, n: u32, eps: f64) -> PyResult<f64> {
    Ok(core::dynamics::t_of_q(m, n, eps).map_err(py_err)?.t)
}

#[pyfunction]
#[pyo3(signature = (m, n, eps=1e-12))]
fn dilatation(m: u32, n: u32, eps: f64) -> PyResult<f64> {
    let p = core::dynamics::OrbitPattern::of_q(m, n).map_err(py_err)?;
    core::dynamics::perron_root(&core::dynamics::transition_matrix(&p), eps).map_err(py_err)
}

fn params(q: Option<String>, nu: Option<String>, k: Option<u32>, kappa: Option<u32>) -> ManifoldParams {
    ManifoldParams { q, nu, k, kappa }
}

/// Link JSON for one of `Mq`, `Mhat`, `M`, `zeta`, `magic`.
#[pyfunction]
#[pyo3(signature = (manifold, q=None, nu=None, k=None, kappa=None))]
fn export_link(manifold: &str, q: Option<String>, nu: Option<String>, k: Option<u32>, kappa: Option<u32>) -> PyResult<String> {
    let which: Manifold = manifold.parse().map_err(py_err)?;
    Ok(manifold_link(which, &params(q, nu, k, kappa)).map_err(py_err)?.to_json())
}

#[pyfunction]
#[pyo3(signature = (manifold, q=None, nu=None, k=None, kappa=None))]
fn snappy_script(manifold: &str, q: Option<String>, nu: Option<String>, k: Option<u32>, kappa: Option<u32>) -> PyResult<String> {
    let which: Manifold = manifold.parse().map_err(py_err)?;
    let link = manifold_link(which, &params(q, nu, k, kappa)).map_err(py_err)?;
    script(&link, manifold).map_err(py_err)
}

#[pymodule]
#[pyo3(name = "braidfill")]
fn braidfill_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(family_word, m)?)?;
    m.add_function(wrap_pyfunction!(verify_thm42, m)?)?;
    m.add_function(wrap_pyfunction!(verify_thm53, m)?)?;
    m.add_function(wrap_pyfunction!(verify_magic, m)?)?;
    m.add_function(wrap_pyfunction!(t_of_q, m)?)?;
    m.add_function(wrap_pyfunction!(dilatation, m)?)?;
    m.add_function(wrap_pyfunction!(export_link, m)?)?;
    m.add_function(wrap_pyfunction!(snappy_script, m)?)?;
    Ok(())
}
