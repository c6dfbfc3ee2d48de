//! Exact dense linear algebra over GF(p) and over the integers.

mod fp;
mod integer;

pub use fp::{kernel_basis_fp, rank_fp, solve_affine_fp, AffineSolution, Eliminator, MatFp};
pub use integer::{rank_q, solve_integer, MatZ};
