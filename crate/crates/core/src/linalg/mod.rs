//! Dense complex matrix arithmetic, Hermitian eigendecomposition,
//! Hilbert-Schmidt geometry and subspace algebra.

pub mod eig;
pub mod family;
pub mod matrix;
pub mod random;
pub mod subspace;
pub mod vector;

pub use eig::{hermitian_eig, lambda_max, lambda_min, top_eigenvector};
pub use family::OrthonormalFamily;
pub use matrix::{check_unitary, hs_inner, unitary_defect, CholeskyFactor, ComplexMatrix, RectMatrix};
pub use random::{random_unitary, sub_seed};
pub use subspace::{MatrixSubspace, SpaceKind};
pub use vector::ComplexVector;
