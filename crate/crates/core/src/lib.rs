//! Exact computations on association schemes of finite groups and their
//! Terwilliger algebras, with Camina-type group classification.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod group;
pub mod linalg;
pub mod scheme;
pub mod terwilliger;

pub use error::{Error, Result};

/// The guide's chapters, compiled so that every snippet runs as a doctest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/schemes.md")]
    mod schemes {}
    #[doc = include_str!("../../../book/src/terwilliger.md")]
    mod terwilliger {}
    #[doc = include_str!("../../../book/src/wedderburn.md")]
    mod wedderburn {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
