//! mdbook cannot run examples that depend on external crates, so each
//! chapter is included here and its code blocks run under `cargo test --doc`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/lattices.md")]
pub mod lattices {}

#[doc = include_str!("../../../book/src/codes.md")]
pub mod codes {}

#[doc = include_str!("../../../book/src/neighbors.md")]
pub mod neighbors {}

#[doc = include_str!("../../../book/src/automorphisms.md")]
pub mod automorphisms {}

#[doc = include_str!("../../../book/src/bounds.md")]
pub mod bounds {}

#[doc = include_str!("../../../book/src/cyclotomic.md")]
pub mod cyclotomic {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
