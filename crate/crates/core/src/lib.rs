//! Hackenbush under normal and misère play.
//!
//! [`oracle`] answers any question about a position by exhaustive search;
//! [`classifiers`] answer the structured families (nim, shrubs, sprigs,
//! generalized flowerbeds, star-based positions) in closed form or by a
//! small recursion, and every one of them is checked against the oracle by
//! the suites in [`verify`].

pub mod classifiers;
pub mod cli;
pub mod dsl;
pub mod dyadic;
pub mod error;
pub mod game;
pub mod generators;
pub mod model;
pub mod nim;
pub mod oracle;
pub mod position;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
