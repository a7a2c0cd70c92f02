//! Exact computations with finite groups, bisets, characters and blocks.

pub mod acceptance;
pub mod arith;
pub mod biset;
pub mod blocks;
pub mod broue;
pub mod charmod;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod group;
pub mod gset;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod scenario;
pub mod subdirect;
pub mod suite;

pub use error::{Error, Result};
