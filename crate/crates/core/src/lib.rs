//! Exact computation of minimal free and injective resolutions, graded
//! Betti/Bass numbers and multigraded local cohomology for Z^n-graded
//! modules presented by filtration or monomial data, together with the
//! hyperplane-arrangement combinatorics predicting them and a search for
//! maximal Cohen-Macaulay modules over simplicial affine toric rings.

pub mod error;
pub mod linalg;
pub mod lattice;
pub mod posetrep;
pub mod graded;
pub mod duality;
pub mod localcohom;
pub mod arrangement;
pub mod toric;
