pub mod cartan;
pub mod crystal;
pub mod error;
pub mod highest;
pub mod io;
pub mod polygon;
pub mod polytope;
pub mod random;
pub mod report;
pub mod sweep;
pub mod trop;
pub mod weyl;
