//! Exact spectral toolkit for threshold graphs.
//!
//! Threshold graphs are given by binary creation sequences. From the block
//! (run-length) form of a sequence this crate computes the multiplicities of
//! the eigenvalues 0 and -1, the full characteristic polynomial, certified
//! root enclosures and a guaranteed energy interval. On top of that it
//! generates and checks two infinite families of noncospectral equienergetic
//! pairs, and searches all connected threshold graphs of a fixed order for
//! equienergetic and borderenergetic graphs.

pub mod cli;
pub mod error;
pub mod families;
pub mod hunt;
pub mod num;
pub mod poly;
pub mod selftest;
pub mod seq;
pub mod spectra;

pub use error::{Error, Result};
pub use poly::{IntPolynomial, RootEnclosure};
pub use seq::{AdjacencyMatrix, BlockForm, CreationSequence};
pub use spectra::{EnergyInterval, SpectralSummary};
