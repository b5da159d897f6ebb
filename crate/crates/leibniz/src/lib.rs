//! Exact-arithmetic toolkit for finite-dimensional right Leibniz algebras.
//!
//! The library constructs semisimple Leibniz algebras as semidirect products
//! S ⋉ (V_1 ⊕ ... ⊕ V_m), computes their derivation algebras by two
//! independent methods (a brute-force nullspace and the symbolic
//! R_a + Σ ω_k θ_k + Σ λ_{i,j} π_{i,j} form), and produces machine-checkable
//! certificates that every local derivation is a derivation via the sandwich
//! Der ⊆ LocalDer ⊆ (sampled upper bound).
//!
//! Conventions, fixed everywhere: **right** Leibniz identity
//! `[x,[y,z]] = [[x,y],z] - [[x,z],y]`, **right** modules, exact rational
//! arithmetic. No floating point anywhere.

pub mod algebra;
pub mod catalog;
pub mod deriv;
pub mod error;
pub mod io;
pub mod linalg;
pub mod repr;

pub use error::{Error, Result};
