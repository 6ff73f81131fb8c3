//! Degrees and maximum likelihood degrees of toric varieties defined by
//! Lawrence lifts of totally unimodular matrices.
//!
//! For a totally unimodular integer matrix `A` the degree of `X_{Λ(A)}` is
//! the Tutte evaluation `τ(1,1)` of the column matroid of `A`, and when every
//! circuit of `A` has even support the ML degree is `τ(1,0)`. This crate
//! computes both through exact arithmetic, together with brute-force oracles
//! that recount the same quantities along independent routes.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, JSON reports
//! and the command line live in the companion `lawrence` crate.
#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod exactlin;
pub mod graphs;
pub mod matroid;
pub mod models;
pub mod toric;

pub use error::{Error, Hypothesis, Result};
pub use exactlin::{Circuit, Parity, RatMatrix, Rational};
pub use matroid::{Matroid, TuttePoly};
