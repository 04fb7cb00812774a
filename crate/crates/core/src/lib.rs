//! Exact computations with tensor modules `F^sigma(lambda) = V(lambda) (x) C[q^{+-1}]`
//! for the Lie algebra of divergence-zero vector fields on the `(N+1)`-torus.
//!
//! * [`weight_core`]: `A_N` weights, labels, reflections, theta-strings.
//! * [`sl_rep`]: irreducible `sl_{N+1}`-modules with exact matrices.
//! * [`divfield`]: the divergence-zero fields `D(u, r)` and their bracket.
//! * [`fmodule`]: the graded action, the submodules `W_k` / `W~_k` and the maps `psi_k`.
//! * [`generation`]: submodule closure inside a degree box, and replayable
//!   constructions of highest weight vectors.
//! * [`cli`]: the `divtorus` command line.

pub mod cli;
pub mod divfield;
pub mod error;
pub mod fmodule;
pub mod generation;
pub mod linalg;
pub mod rational;
pub mod sl_rep;
pub mod weight_core;

pub use error::{Error, Result};
