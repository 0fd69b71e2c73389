#![no_std]
extern crate alloc;

pub mod bounds;
pub mod eigen;
pub mod feasibility;
pub mod error;
pub mod fmath;
pub mod gfpoly;
pub mod graphs;
pub mod lpcert;
pub mod orthopoly;
pub mod poly;
pub mod roots;
pub mod spectra;
pub mod theta;

pub use error::{Error, Result};
pub use poly::ExactPolynomial;
