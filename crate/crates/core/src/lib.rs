//! Exact zeta and Möbius matrices of finite posets, the determinant of
//! `Z_P + Z_P^t`, and the combinatorial identities around it.
//!
//! ```
//! use poset_zeta::{incidence, Poset};
//!
//! let diamond = Poset::boolean_algebra(2).unwrap();
//! let sym = incidence::symmetric_zeta_matrix(&diamond);
//! assert_eq!(sym.det().unwrap(), 4.into());
//! ```
//!
//! Modules, bottom up:
//!
//! * [`poset`]: construction, validation and text I/O for finite posets.
//! * [`linalg`]: integer matrices, Bareiss determinants, characteristic
//!   polynomials.
//! * [`incidence`]: the incidence algebra, Möbius function and inversion.
//! * [`cycles`]: comparability digraphs, `S_n^P`, cycle-cover counts.
//! * [`families`]: closed forms for chains and boolean algebras.
//! * [`bipoly`]: bivariate polynomials and `det(x Z_n + y Z_n^t)`.

pub mod bipoly;
pub mod cycles;
mod error;
pub mod families;
pub mod incidence;
pub mod linalg;
pub mod partitions;
pub mod poset;
pub mod random;

pub use error::{Error, Result};
pub use linalg::{CharPoly, IntMatrix};
pub use poset::{Interval, Poset};
