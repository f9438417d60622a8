//! Fundamental solutions of time-fractional diffusion equations.
//!
//! This crate evaluates the Green functions (fundamental solutions), moments
//! and asymptotics of the one-dimensional diffusion equation with a Caputo
//! time derivative of a single order `0 < beta <= 1`, and of its
//! distributed-order generalisation where the order is spread over `(0, 1]`
//! by a weight made of discrete atoms and/or a uniform density.
//!
//! The library is organised around several independent computation paths
//! that cross-validate each other:
//!
//! * [`specfun`] — scalar special functions: gamma (real and complex),
//!   complementary error function, Mittag-Leffler `E_beta(-x)`, the Wright
//!   M-function `M_nu(x)` and the sine-kernel series `F(y)` driving the
//!   distributed-order solution.
//! * [`mellin`] — Mellin-Barnes contour quadrature used as an independent
//!   oracle for (and numerical fallback of) the series evaluations.
//! * [`single_order`] — self-similar Green function `u(x,t) =
//!   t^{-beta/2} U(|x| t^{-beta/2})`, its even moments, and a Fourier-cosine
//!   oracle path through the Mittag-Leffler relaxation function.
//! * [`distributed`] — branch-cut (Titchmarsh) representation of the
//!   distributed-order solution as a Laplace-type integral over relaxation
//!   rates, the `phi_k` time-scale series, and Laplace-domain moment
//!   analysis inverted with the fixed-Talbot rule.
//! * [`quad`] — shared numerical kernels: adaptive Gauss-Kronrod
//!   quadrature, fixed-Talbot Laplace inversion, and acceleration of
//!   alternating sequences.
//!
//! `no_std` builds (with `alloc`) are supported by disabling the default
//! `std` feature; the only behavioural difference is that the series /
//! asymptotic crossover cache of [`specfun::mwright`] is recomputed per call
//! instead of memoised.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod quad;
pub mod specfun;
pub mod mellin;
pub mod single_order;
pub mod distributed;

pub use error::Error;
pub use specfun::SeriesPolicy;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
