//! Inputs shared by the benchmarks.

use std::fs;
use std::path::Path;

use tkh_core::{parse_diagram, TorusDiagram};

/// A diagram from `corpus/`, e.g. `perf/random_12x.tkh`.
pub fn corpus_diagram(name: &str) -> TorusDiagram {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name);
    let text = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_diagram(&text).unwrap()
}
