//! Exact computer algebra for schemes of liftings of homogeneous
//! polynomial ideals.
//!
//! The crate computes, over Q or a prime field:
//!
//! - reduced Groebner bases, syzygies and the standard ideal operations
//!   (elimination, intersection, saturation by the last variable, degree
//!   truncation, membership, equality, resultants, discriminants);
//! - the defining ideal of the scheme of x_n-liftings of a homogeneous
//!   ideal H, its tangent-space elimination and the specialized family of
//!   liftings, together with Groebner stratum ideals;
//! - the explicit isomorphism between the presentations of the lifting
//!   scheme obtained from two different term orders;
//! - Hilbert-Burch matrices of codimension-two arithmetically
//!   Cohen-Macaulay ideals, distraction liftings, Groebner deformation
//!   families and radical liftings built from the perturbed matrix
//!   `M(t) = M_H(t) + M_N - M_j`.
//!
//! Everything is exact; there is no floating point anywhere. All values
//! are immutable after construction and every operation is a pure
//! function, so sharing between threads is safe.

pub mod error;
pub mod field;
pub mod order;
pub mod ring;
pub mod poly;
pub mod groebner;
pub mod resultant;
pub mod tower;
pub mod lifting;
pub mod isom;
pub mod acm;
pub mod util;
pub mod report;
pub mod job;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use groebner::{Grading, GroebnerBasis, SyzygyRow};
pub use order::{Exp, TermOrder};
pub use poly::Poly;
pub use ring::Ring;
