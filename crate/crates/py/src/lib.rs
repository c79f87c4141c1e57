//! Python module `hda`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hda_cli::commands::parse_nerve;
use hda_core::homology::chain_of_cut;
use hda_core::nerves::{nerve, Model, NerveOptions};
use hda_core::omega_complex::Category;
use hda_core::precubical::{parse, realize};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Runs the command line in-process; returns `(exit_code, stdout)`.
#[pyfunction]
fn run(argv: Vec<String>) -> (i32, String) {
    let o = hda_cli::run(std::iter::once("hda".to_string()).chain(argv));
    (o.code, o.stdout)
}

/// Whether a `pcs` text is valid and admissible.
#[pyfunction]
fn validate(text: &str) -> PyResult<bool> {
    let v = parse(text).map_err(err)?.validate();
    Ok(v.is_valid() && v.is_admissible())
}

/// Homology groups of a nerve, rendered as in the reports (`"Z^2"`, `"Z/2"`, `"0"`).
#[pyfunction]
#[pyo3(signature = (text, theory, max_dim=2))]
fn homology(text: &str, theory: &str, max_dim: usize) -> PyResult<Vec<String>> {
    let kind = parse_nerve(theory).ok_or_else(|| err(format!("unknown nerve {theory}")))?;
    let k = parse(text).map_err(err)?;
    let c = Category::of_poset(realize(&k).map_err(err)?).map_err(err)?;
    let cut = nerve(&Model::complex(c), kind, NerveOptions::up_to(max_dim)).map_err(err)?;
    let h = chain_of_cut(&cut).homology(max_dim).map_err(err)?;
    Ok(h.degrees.iter().map(|d| d.render()).collect())
}

#[pymodule]
fn hda(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(homology, m)?)?;
    Ok(())
}
