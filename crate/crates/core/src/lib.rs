//! Exact string-theoretic invariants of the `A(n, l, r)` family of isolated
//! hypersurface singularities
//!
//! ```text
//! x_1^(n+1) + x_2^l + ... + x_(r+1)^l = 0,    r >= l >= 2,  n + 1 >= l,
//! ```
//!
//! and of complete intersections carrying such singularities.
//!
//! Everything is computed with arbitrary-precision rationals; there is no
//! floating point anywhere in the crate. The crate is `no_std` and only needs
//! `alloc`.
//!
//! Layout:
//!
//! * [`exactnum`]: rationals, polynomials in `u, v`, polynomials in `t = uv`,
//!   and sums of fractions with denominators `prod (t^k - 1)`.
//! * [`combinat`]: binomials, the `a`, `b`, `c` counting functions and
//!   non-central Eulerian numbers.
//! * [`localsing`]: Milnor algebra Poincaré series, link Hodge numbers, the
//!   E-polynomial of the punctured germ, Fermat hypersurface Hodge data.
//! * [`stringy`]: the exceptional divisor chain, assembly of `E_str`, the
//!   closed formulas, `e_str` and the string-theoretic index.
//! * [`global`]: complete intersections, Goryunov quartics, the Segre–Knörrer
//!   family and branched coverings of hyperplane arrangements.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod combinat;
mod error;
pub mod exactnum;
pub mod global;
pub mod localsing;
pub mod stringy;

pub use error::{Error, Result};
pub use exactnum::{Rational, StringyExpression, StringyTerm, TPolynomial, UVPolynomial};
pub use localsing::{FermatSpec, SingularityType, WeightSystem};
pub use stringy::{EulerMethod, ResolutionModel, StringyResult};
