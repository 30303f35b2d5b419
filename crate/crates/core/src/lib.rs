//! Exact tools for symbol-pair codes built from interleaved matrix-product
//! codes over small finite fields: field and matrix arithmetic, linear and GRS
//! codes, matrix-product assembly, coordinate interleavers, exact Hamming and
//! symbol-pair minimum distances, and the five construction families.

pub mod census;
pub mod code;
pub mod construct;
pub mod error;
pub mod examples;
pub mod gf;
pub mod linalg;
pub mod mp;
pub mod perm;
pub mod search;
pub mod sympair;

pub use code::LinearCode;
pub use construct::{build, construct, verify, Construction, Family};
pub use error::{Error, Result};
pub use gf::{Elem, Field, FieldElement};
pub use linalg::FMatrix;
pub use perm::Permutation;
pub use search::{SearchOptions, Strategy};
pub use sympair::{analyze, PairAnalysisReport, PairClass};
