//! Hochschild cohomology of split algebras over exact fields.

pub mod algebra;
pub mod bimodule;
pub mod connect;
pub mod corpus;
pub mod error;
pub mod ext;
pub mod field;
pub mod hochschild;
pub mod idempotent;
pub mod io;
pub mod linalg;
pub mod quiver;
pub mod split;
pub mod theorems;

pub use algebra::Algebra;
pub use bimodule::Bimodule;
pub use error::{Error, Result};
pub use field::{Field, Scalar};
