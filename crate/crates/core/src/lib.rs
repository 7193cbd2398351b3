//! Exact computations on the quintic del Pezzo threefold Y = Gr(2,5) ∩ P⁶:
//! its lines and conics, homogeneous-bundle cohomology, and instanton monads
//! of charge 2 and 3.

pub mod cohomology;
pub mod exact;
pub mod geometry;
pub mod jumping;
pub mod monads;
pub mod p1bundles;
pub mod rep;
pub mod report;
pub mod sampling;

pub use exact::{frac, rat, BinaryForm, MultiPoly, RatMatrix, Rational, UniPoly};
