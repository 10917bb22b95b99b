//! Polar, PAC and generalized polynomial polar codes over GF(2).
//!
//! Row `i` of `G_N` is identified with the monomial `x^{bin(N-1-i)}` of the
//! ring `F2[x_0..x_{m-1}] / (x_i^2 - x_i)`, so that codes built from rows of
//! `P G_N` can be studied through polynomials: their monomial sub- and
//! supercodes, closed-form duals and minimum-weight counts.

pub mod construction;
pub mod duality;
pub mod error;
pub mod gf2;
pub mod monomial;
pub mod structure;
pub mod weights;

pub use construction::{
    beta_profile, beta_profile_exact, build_code, build_info_set, polar_kernel, row_polynomial, toeplitz_matrix, Code,
    CodeSpec, Pretransform, PretransformClass, ReliabilityProfile, SpecFile,
};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector, EchelonBasis};
pub use monomial::{LtaTransform, Monomial, MonomialSet, Polynomial};
