pub mod error;
pub mod special;

pub use error::{Error, Result};
pub use special::Complex;
pub(crate) mod dd;
pub mod hypergeom;
pub mod spectral;
pub mod quadrature;
pub mod catalog;
pub mod cli;
