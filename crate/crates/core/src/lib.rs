//! Exact and high-precision algebra for complex tori with endomorphisms.
//!
//! The crate certifies that a complex torus built from an integer polynomial
//! is not an abelian variety (irreducible characteristic polynomial, no real
//! roots, full symmetric Galois group), realizes even-rank homomorphisms of
//! finitely generated abelian groups as explicit morphisms of tori, and
//! assembles a Kähler-but-not-projective homomorphism of fundamental groups
//! as machine-checkable lattice data.
//!
//! Everything here is `no_std` with `alloc`; file formats and the command line
//! live in the companion `kahler-cli` crate.
//!
//! Module overview:
//!
//! - [`exact`]: integer matrices and polynomials, Smith normal form,
//!   characteristic polynomials, finitely generated abelian groups.
//! - [`real`]: fixed-precision binary floating point and complex arithmetic.
//! - [`roots`]: Sturm chains and Aberth–Ehrlich root finding.
//! - [`galois`]: Dedekind reduction modulo primes and sound irreducibility /
//!   symmetric-group certificates.
//! - [`torus`]: period matrices, the Voisin criterion, the integral (1,1)-form
//!   search and the randomized polynomial search.
//! - [`lattice`]: integral LLL reduction and short-vector enumeration.
//! - [`hom`]: even-rank obstruction and three-step realization of abelian
//!   homomorphisms.
//! - [`construct`]: the semidirect product `(Z^2n)^3 ⋊ S3`, the map `mu`, the
//!   Albanese transport and graph subgroups.
#![no_std]

extern crate alloc;

pub mod construct;
pub mod error;
pub mod exact;
pub mod galois;
pub mod hom;
pub mod lattice;
pub mod real;
pub mod roots;
pub mod torus;

pub use error::{Error, Result};
pub use exact::{FgAbelianGroup, IntMatrix, IntPolynomial, SnfDecomposition};
