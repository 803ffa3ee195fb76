#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod arrangement;
pub mod error;
pub mod graphs;
pub mod intpoly;
pub mod lattice;
pub mod linalg;
pub mod ncpoly;
pub mod oracle;
pub mod poset;
pub mod toric;

pub use error::{Error, ParseError, Result};
