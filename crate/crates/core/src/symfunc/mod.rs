//! Symmetric functions in the power-sum basis with exact rational coefficients.

mod partition;
mod poly;

pub use partition::{partitions, Partition, Partitions};
pub use poly::PPolynomial;
