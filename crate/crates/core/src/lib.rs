//! Planar projective geometry over the complex projective plane, with a
//! Cayley-Klein metric layer and a randomized theorem verifier.

pub mod cayley_klein;
pub mod conic;
pub mod error;
pub mod io;
pub mod lab;
pub mod measure;
pub mod oriented;
pub mod projective;
pub mod rays;
pub mod scalar;
pub mod svg;
pub mod triangle;
pub mod trig;

pub use error::{GeomError, Result};
pub use projective::{HomLine, HomPoint};
pub use scalar::{tol, ExtScalar, Scalar};
