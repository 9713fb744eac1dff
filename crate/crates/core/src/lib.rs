//! Numerical toolkit for starlike functions whose `zf'/f` lies in a
//! vertical strip.
//!
//! For an angle `pi/2 <= alpha < pi`, a normalized analytic function
//! `f(z) = z + a_2 z^2 + ...` on the unit disk belongs to the strip class
//! when
//!
//! ```text
//! 1 + (alpha - pi) / (2 sin alpha) < Re(zf'/f) < 1 + alpha / (2 sin alpha).
//! ```
//!
//! The crate provides:
//!
//! * [`series`]: truncated complex Taylor polynomials (ring operations,
//!   `exp`, `log`, composition, Hadamard product);
//! * [`kernel`]: the strip map, its coefficients and the sharp distortion
//!   bounds on `|z| = r`;
//! * [`factory`]: members built from Schwarz functions, `zf'/f`, and the
//!   coefficient recursion behind `|a_n| <= 1`;
//! * [`membership`]: region predicates and sampled membership reports;
//! * [`radius`]: the inclusion-radius equations and their least positive
//!   roots.
//!
//! ```
//! use strip_starlike::radius::{reference_problems, solve, RootOptions};
//!
//! let sol = solve(reference_problems()[1], RootOptions::default()).unwrap();
//! assert!((sol.radius - 0.421547).abs() < 1e-6);
//! ```
//!
//! The crate is `no_std` and needs `alloc`. Float functions come from
//! `num-traits` (`libm` by default, the platform library with the `std`
//! feature).

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
pub mod factory;
pub mod kernel;
pub mod membership;
pub mod radius;
pub mod series;

pub use error::{Error, Result};
pub use num_complex::Complex64;
