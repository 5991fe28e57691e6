//! Computational multidimensional Rado theory.
//!
//! - [`systems`]: scalar and vector linear systems, the columns condition,
//!   and the JSON system format.
//! - [`lattice`]: solutions inside `[1,n]^d`, counting, degeneracy and
//!   colorings.
//! - [`mpc`]: `(m,p,c)`-sets and their products.
//! - [`search`]: exact Rado numbers by backtracking, witnesses and DIMACS.
//! - [`construct`]: the Vandermonde point construction for
//!   `p_1 + .. + p_k = q_1 + .. + q_l`.
//! - [`cli`]: the `rado` command line.
//!
//! ```
//! use rado::lattice::Mask;
//! use rado::search::{rado_number, SearchConfig, SearchProblem};
//! use rado::systems::{ScalarSystem, VectorSystem};
//!
//! let schur = ScalarSystem::new(vec![vec![1, 1, -1]]).unwrap();
//! let p = SearchProblem::new(VectorSystem::new(vec![schur]).unwrap(), 2, Mask::all(3)).unwrap();
//! assert_eq!(rado_number(&p, 10, &SearchConfig::default()).unwrap().value(), Some(5));
//! ```

pub mod cli;
pub mod construct;
pub mod error;
pub mod exactmath;
pub mod lattice;
pub mod mpc;
pub mod search;
pub mod systems;

pub use error::{RadoError, Result};
