//! Graded characters of symmetric-group-stable complete intersections.
//!
//! Let `S_n` act on `R = k[x_1, …, x_n]` by permuting variables and let `I` be
//! an `S_n`-stable ideal generated by a homogeneous regular sequence. The span
//! of the generators is a representation of `S_n`, and only a handful of
//! isomorphism types are possible ([`classify`]). For each of them the graded
//! character of `R/I` has a closed form ([`graded`]), built from the
//! coinvariant algebra and Kostka–Foulkes polynomials ([`tableaux`]) and exact
//! character arithmetic ([`characters`]).
//!
//! [`oracle`] recomputes the same characters from explicit generators by
//! linear algebra on monomials, independently of the formulas.
//!
//! ```
//! use symci::graded::{quotient_character, RepresentationType};
//!
//! let rt: RepresentationType = "case III d=2 c=2".parse().unwrap();
//! let g = quotient_character(&rt, 4, None).unwrap();
//! assert_eq!(g.top_degree(), Some(4));
//! ```

pub mod characters;
pub mod classify;
pub mod cli;
pub mod error;
pub mod graded;
pub mod linalg;
pub mod oracle;
pub mod partitions;
pub mod perm;
pub mod tableaux;

pub use error::{Error, Result};
