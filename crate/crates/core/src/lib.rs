//! Hemmer elements and universal p-ary designs for two-part Specht modules.
//!
//! For a two-part partition `(a, b)` and an odd prime `p`, the crate builds
//! elements of the permutation module `M^(a,b)` that span non-split
//! extensions of the Specht module `S^(a,b)` by the trivial module, checks
//! them, and counts such extensions by brute-force linear algebra.

pub mod cli;
pub mod designs;
pub mod error;
pub mod h1;
pub mod hemmer;
pub mod linalg;
pub mod numtheory;
pub mod subset;
pub mod tabloid;

pub use error::{Error, Result};
pub use numtheory::PrimeModulus;
pub use tabloid::{Element, Partition2};
