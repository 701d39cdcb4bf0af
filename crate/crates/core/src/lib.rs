pub mod cech;
pub mod cli;
pub mod corpus;
pub mod ellinv;
pub mod error;
pub mod fan;
pub mod gkm;
pub mod io;
pub mod lattice;
pub mod rational;
pub mod triang;

pub use error::{Error, Result};
