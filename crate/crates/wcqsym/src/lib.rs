//! Exact-arithmetic kernel for quasisymmetric functions indexed by weak
//! compositions, together with their peak subalgebra.
//!
//! The crate provides three bases (`M` monomial, `F` fundamental, `K` peak),
//! their products and basis changes, the Hopf structure (coproduct, counit,
//! antipode), descent-to-peak maps, Rota–Baxter operators, a brute-force
//! P-partition series oracle for cross-validation, and the verification
//! suites the command-line front end exposes.

pub mod element;
pub mod expand;
pub mod hopf;
pub mod maps;
pub mod mutation;
pub mod oracle;
pub mod product;
pub mod rota_baxter;
pub mod scalar;
pub mod verify;
pub mod wc;
pub mod word;

pub use element::{Basis, Element, TensorElement};
pub use scalar::Scalar;
pub use wc::{BlockStructure, WeakComposition};
