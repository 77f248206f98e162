//! Exact verification and construction of finite-dimensional algebras given
//! by structure constants: Rota-Baxter operators and the algebras they
//! induce, post-Lie and post-associative structures, first cohomology, and
//! decompositions into subalgebras.
//!
//! All arithmetic is exact, over the rationals or a prime field.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod decomposition;
pub mod error;
pub mod field;
pub mod json;
pub mod linalg;
pub mod par;
pub mod post;
pub mod report;
pub mod rota_baxter;

pub use algebra::{Algebra, BilinearForm, Fingerprint, FormKind, Kind, Law, Nilpotency, Product, SubstructureMode};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Subspace, Vector};
pub use decomposition::Decomposition;
pub use report::{Report, Violation};
pub use rota_baxter::{RbOperator, Tower};
