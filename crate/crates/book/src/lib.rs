//! The guide in `book/` cannot run its listings against this workspace on
//! its own, so each chapter is pulled in as a module doc and `cargo test`
//! runs the code blocks as doc-tests. One module per chapter keeps failures
//! traceable to a file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/posets.md")]
pub mod posets {}
#[doc = include_str!("../../../book/src/incidence.md")]
pub mod incidence {}
#[doc = include_str!("../../../book/src/determinants.md")]
pub mod determinants {}
#[doc = include_str!("../../../book/src/cycles.md")]
pub mod cycles {}
#[doc = include_str!("../../../book/src/chains.md")]
pub mod chains {}
#[doc = include_str!("../../../book/src/boolean.md")]
pub mod boolean {}
#[doc = include_str!("../../../book/src/bivariate.md")]
pub mod bivariate {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
