//! The guide in `book/` as doc-tests: one module per chapter, so `cargo test`
//! compiles and runs every listing and a failure names its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/runs.md")]
pub mod runs {}
#[doc = include_str!("../../../book/src/factorization.md")]
pub mod factorization {}
#[doc = include_str!("../../../book/src/offline.md")]
pub mod offline {}
#[doc = include_str!("../../../book/src/pair-sets.md")]
pub mod pair_sets {}
#[doc = include_str!("../../../book/src/online.md")]
pub mod online {}
#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
#[doc = include_str!("../../../book/src/testing.md")]
pub mod testing {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
