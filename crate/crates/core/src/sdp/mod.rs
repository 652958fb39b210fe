//! Semidefinite programming: a dense log-det barrier solver and the theta
//! number front-ends.

pub mod solver;
pub mod theta;

pub use solver::{solve_sdp, SdpProblem, SdpSolution, SdpStatus};
pub use theta::{
    theta_bar, theta_classical, theta_d, theta_system, theta_witness_matrix,
    validate_theta_witness, ThetaBracket, THETA_AMBIENT_BUDGET,
};
