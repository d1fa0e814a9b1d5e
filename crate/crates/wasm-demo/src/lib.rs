//! Browser bindings: a few commands over objects given as file text.

use ssx_core::cli::commands::run_text;
use ssx_core::cli::corpus::FILES;
use wasm_bindgen::prelude::*;

const MAX_DIM: usize = 3;

fn run(command: &str, text: &str, dim: usize, mode: Option<&str>) -> Result<String, JsError> {
    if dim > MAX_DIM {
        return Err(JsError::new(&format!("dimension {dim} is above {MAX_DIM}")));
    }
    run_text(command, text, dim, mode).map(|r| r.to_text()).map_err(|e| JsError::new(&e.to_string()))
}

/// Names of the bundled corpus objects.
#[wasm_bindgen]
pub fn corpus_names() -> Vec<String> {
    FILES.iter().map(|(n, _)| n.to_string()).collect()
}

#[wasm_bindgen]
pub fn corpus_text(name: &str) -> Option<String> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| t.to_string())
}

#[wasm_bindgen]
pub fn describe(text: &str) -> Result<String, JsError> {
    run("describe", text, MAX_DIM, None)
}

/// Integral homology of an sset, the nerve of a groupoid, or sing of an sgpd.
#[wasm_bindgen]
pub fn homology(text: &str, dim: usize) -> Result<String, JsError> {
    run("homology", text, dim, None)
}

/// Fibration check of a map, functor or sgpd map with a witness on failure. `mode` is one of
/// kan, trivial-kan, weak-kan or weak-trivial-kan.
#[wasm_bindgen]
pub fn check_kan(text: &str, dim: usize, mode: &str) -> Result<String, JsError> {
    run("check-kan", text, dim, Some(mode))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_corpus_name_has_text() {
        let names = corpus_names();
        assert!(names.len() > 30);
        assert!(names.iter().all(|n| corpus_text(n).is_some()));
    }

    #[test]
    fn commands_run_on_corpus_text() {
        let t = corpus_text("sset/boundary2").unwrap();
        assert!(run("homology", &t, 2, None).unwrap().contains("H1: rank 1"));
        let f = corpus_text("functor/point_to_interval").unwrap();
        assert!(run("check-kan", &f, 2, Some("kan")).unwrap().contains("FAIL"));
    }
}
