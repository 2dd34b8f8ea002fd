//! Exact computations on simplicial complexes: simplicial chromatic
//! polynomials, Stanley–Reisner Hilbert numerators and h-vectors, auxiliary
//! complexes realizing the chromatic polynomial as a reversed Hilbert
//! numerator, integer homology and cyclotomic-coefficient complexes.

pub mod analysis;
pub mod auxiliary;
pub mod chromatic;
pub mod complex;
pub mod cyclotomic;
pub mod enumerate;
pub mod error;
pub mod hilbert;
pub mod homology;
pub mod io;
pub mod poly;
pub mod random;
pub mod report;
pub mod sweep;

pub use complex::{NonfaceFamily, SimplicialComplex, VertexSet};
pub use error::{Error, Result};
pub use poly::IntPolynomial;
pub use report::{CheckReport, Verdict};
