//! Exact polynomial and truncated power-series arithmetic.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here may be freely shared between threads.

mod scalar;
mod series;
mod tpoly;
mod uvpoly;

pub use scalar::Scalar;
pub use series::Series;
pub use tpoly::TPoly;
pub use uvpoly::{UVPoly, UVVar};
