//! Exact dense linear algebra over the integers and over `Z[t]`.

mod charpoly;
mod matrix;
mod ring;
mod upoly;

pub use charpoly::{charpoly, charpoly_by_interpolation, CharPoly};
pub use matrix::{IntMatrix, LEIBNIZ_MAX_ORDER};
pub use ring::{bareiss_det, BareissRing};
pub use upoly::UPoly;
