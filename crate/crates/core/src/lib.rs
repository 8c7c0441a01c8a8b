//! Exact implicitization of rational hypersurfaces.
//!
//! Given n + 1 forms of one degree d in n variables defining a rational map
//! P^(n-1) ⇢ P^n whose closed image is a hypersurface, this crate computes
//! the implicit equation of that image from graded pieces of the
//! approximation complex built on the Koszul cycles of the forms. The degree
//! threshold for the graded piece is selected automatically from a
//! base-locus analysis (truncated saturation, initial degree, Hilbert
//! function), and the determinant of the piece is evaluated either by the
//! recursive minor decomposition or as a gcd of maximal minors.
//!
//! Everything is exact: rational arithmetic throughout, with a word-sized
//! prime field used only to pick nonzero minors probabilistically (each
//! choice is confirmed by an exact determinant afterwards).

pub mod baselocus;
pub mod elim;
pub mod error;
pub mod gcd;
pub mod koszul;
pub mod linalg;
pub mod parse;
pub mod pipeline;
pub mod poly;
pub mod scalar;
