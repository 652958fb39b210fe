//! Non-commutative graph theory over finite matrix algebras.
//!
//! A graph on `[n]` embeds into M_n in two ways: as the operator system
//! spanned by the edge matrix units together with the diagonal, or as the
//! traceless self-adjoint span of the edge units alone. The two
//! representations are exchanged by the Hilbert-Schmidt orthogonal
//! complement, which plays the role of the graph complement. This crate
//! builds both representations, estimates their independence, clique and
//! chromatic-type parameters with certified bounds, computes theta numbers
//! by semidefinite programming, forms Cartesian and categorical products,
//! and verifies homomorphism certificates in Kraus and isometry form.

pub mod budget;
pub mod error;
pub mod graphs;
pub mod homomorphism;
pub mod json;
pub mod linalg;
pub mod ncgraph;
pub mod parameters;
pub mod sdp;
pub mod tol;

pub use error::{Error, Result};
