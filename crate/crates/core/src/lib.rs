//! Boolean powers of commutative rings, computed exactly.
//!
//! For a commutative ring `R` and a finite Boolean algebra `B`, the Specker
//! algebra `R[B]` is the ring of functions from the atoms of `B` to `R`.
//! This crate provides
//!
//! * finite Boolean algebras, their homomorphisms and coproducts ([`boolean_algebra`]),
//! * exact ring backends `Z`, `Q`, `Z/n` and products ([`rings`]),
//! * Specker algebra arithmetic in pointwise, orthogonal and Foster form ([`specker`]),
//! * the functors between Boolean algebras and Specker algebras, hom lifting,
//!   unit and counit ([`functors`]),
//! * hom spaces, minimal prime spectra, annihilators and Baer checks ([`spectra`]),
//! * the f-algebra order over totally ordered rings ([`order`]),
//! * a JSON command-line front end ([`cli`]).

pub mod boolean_algebra;
pub mod cli;
pub mod error;
pub mod functors;
pub mod order;
pub mod rings;
pub mod specker;
pub mod spectra;

pub use boolean_algebra::{BAElement, BoolHom, FiniteBooleanAlgebra};
pub use error::{Error, Result};
pub use functors::AlgebraHom;
pub use rings::{Elem, Ring};
pub use specker::{SpeckerAlgebra, SpeckerElement};
