//! Khovanov skein homology of links in the thickened torus.
//!
//! A link is given by a diagram on the torus ([`TorusDiagram`]); the crate
//! resolves it over the cube of smoothings, assembles the chain complex
//! graded by homological degree and by the free abelian group on essential
//! curve classes, and computes its homology over ℤ or ℤ/2.

pub mod arrangement;
pub mod complex;
pub mod cube;
pub mod diagram;
pub mod error;
pub mod homology;
pub mod linalg;

pub use complex::{
    assemble_complex, assemble_complex_with, AssembleOptions, GradedChainComplex, Ring, SkeinDegree,
};
pub use cube::{normalize_class, resolve, CubeVertex, CurveClass, ResolvedState};
pub use diagram::{
    apply_r1, parse_diagram, validate_diagram, Chirality, R1Site, TorusDiagram, ValidationReport,
    Winding,
};
pub use error::{Error, Result};
pub use homology::{
    c_graded_ranks, detect, homology, homology_with, AnnulusVerdict, DetectionReport,
    HomologyResult, KnotVerdict,
};
