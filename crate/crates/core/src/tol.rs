//! Numerical tolerances used across the crate.
//!
//! All constructions live in ambient dimension ≤ ~16 in double precision,
//! so absolute tolerances in the 1e-7..1e-10 range separate genuine zeros
//! (rounding noise, ~1e-13) from genuine content (~1e-2 and above).

/// Orthogonality / membership residual tolerance for subspace tests.
pub const TOL_ORTH: f64 = 1e-9;

/// Rank-drop tolerance for Gram-Schmidt, relative to the largest generator norm.
pub const TOL_RANK: f64 = 1e-9;

/// Hermiticity tolerance, relative: `‖a − a*‖_HS ≤ TOL_HERM · ‖a‖_HS`.
pub const TOL_HERM: f64 = 1e-10;

/// Eigendecomposition reconstruction tolerance, relative to `max(1, ‖a‖_HS)`.
pub const TOL_EIG: f64 = 1e-10;

/// Loose edge-decision tolerance for derived graphs; residuals between
/// [`TOL_ORTH`] and this value are flagged marginal and downgrade exactness.
pub const TOL_EDGE: f64 = 1e-7;

/// Allowed negative slack on the smallest eigenvalue of a PSD certificate.
pub const TOL_PSD: f64 = 1e-7;

/// Duality-gap tolerance for the interior-point solver.
pub const TOL_GAP: f64 = 1e-6;

/// Determinant / rank threshold for linear-independence decisions
/// (minimal colourings, witness transport).
pub const TOL_DET: f64 = 1e-8;

/// Mutual-projection residual bound for subspace equality.
pub const TOL_SUBSPACE_EQ: f64 = 1e-8;

/// Slack allowed when comparing theta brackets against oracle values.
pub const TOL_THETA: f64 = 1e-4;

/// Default nonzero-entry threshold for support-pattern matching.
pub const TOL_ENTRY: f64 = 1e-8;
