//! Exact structure-constant toolkit for Lie triple systems, Nambu and Leibniz
//! algebras, their controlling graded Lie brackets and cohomology, and 2-term
//! homotopy Lie triple systems with their skeletal, strict and categorified
//! descriptions.

pub mod algebras;
pub mod cli;
pub mod cohomology;
pub mod controlling;
pub mod corpus;
pub mod error;
pub mod exactlin;
pub mod formats;
pub mod multilinear;
pub mod twoterm;

pub use error::{Error, Result};
pub use exactlin::{rat, Mat, Rat};
pub use multilinear::{shuffles, Arg, MultiMap, Shuffle, Space};
