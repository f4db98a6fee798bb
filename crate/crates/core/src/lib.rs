//! Exact computation of skein-derived polynomial invariants of the torus
//! knots T(n,2).
//!
//! * [`laurent`]: two-variable Laurent polynomials with quarter-integer
//!   exponents and big-integer coefficients.
//! * [`qnumbers`]: symmetric q-numbers and two-parameter q,p-numbers.
//! * [`skein`]: full and odd-step skein recurrences, the conversion between
//!   their coefficients, and closed-form (ansatz) fitting.
//! * [`families`]: the Alexander, generalized Alexander, Jones and HOMFLY
//!   families and the substitutions relating them.
//! * [`cli`]: the `torkit` command-line front end and its verification suite.

pub mod cli;
pub mod families;
pub mod laurent;
pub mod qnumbers;
pub mod report;
pub mod skein;
pub mod vars;

pub use laurent::{LaurentError, LaurentPoly, Monomial, QuarterExp, VarContext};
