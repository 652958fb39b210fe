//! Theta numbers: the classical SDP oracle for graphs and certified
//! brackets for operator systems and traceless spaces.
//!
//! `‖I+T‖` maximization over a spectrahedron is convex maximization, not an
//! SDP, so general spaces get a bracket: the lower end is achieved by a
//! feasible witness T, the upper end comes from an independent bound (the
//! trace bound n, or the classical oracle when the space is graph-derived).

use num_complex::Complex64;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::linalg::eig::{hermitian_eig, lambda_min};
use crate::linalg::matrix::ComplexMatrix;
use crate::linalg::random::{random_unit_vector, rng_from_seed, sub_seed};
use crate::linalg::subspace::{MatrixSubspace, SpaceKind};
use crate::linalg::vector::ComplexVector;
use crate::ncgraph::{amplify, recognize_graph_space, Recognition};
use crate::sdp::solver::{solve_sdp, solve_sdp_warm, SdpProblem};
use crate::tol;

/// Largest ambient dimension accepted by the theta machinery.
pub const THETA_AMBIENT_BUDGET: usize = 12;

/// Certified two-sided estimate of a theta number.
#[derive(Debug, Clone)]
pub struct ThetaBracket {
    /// Achieved by the stored witness: `λ_max(I + witness)`.
    pub lower: f64,
    /// Independent upper bound.
    pub upper: f64,
    /// Feasible T: Hermitian, `I + T ⪰ 0`, inside the admissible subspace.
    pub witness: ComplexMatrix,
    /// True when an oracle identity pins the value (bracket width ≤ gap).
    pub exact: bool,
    pub method: String,
}

impl ThetaBracket {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// Classical Lovász theta of a graph, by the minimization form
/// min t s.t. t·I − A ⪰ 0, A_ii = 1, A_ij = 1 for i ≁ j, A_ij free for i ∼ j.
/// The reported value approaches the optimum from the feasible side, so it is
/// an upper bound on θ(G) within solver rounding.
pub fn theta_classical(g: &Graph) -> Result<f64> {
    let n = g.n();
    if n == 0 {
        return Err(Error::DimensionMismatch("theta of the empty graph".into()));
    }
    if n > THETA_AMBIENT_BUDGET {
        return Err(Error::Budget(format!(
            "theta_classical: {n} vertices exceeds the SDP budget of {THETA_AMBIENT_BUDGET}"
        )));
    }
    let mut all_ones = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            all_ones.set(i, j, Complex64::ONE);
        }
    }
    let f0 = all_ones.scale(Complex64::new(-1.0, 0.0));
    let mut constraints = vec![ComplexMatrix::identity(n)];
    let mut objective = vec![-1.0];
    for (i, j) in g.edges() {
        let mut s = ComplexMatrix::zeros(n);
        s.set(i, j, -Complex64::ONE);
        s.set(j, i, -Complex64::ONE);
        constraints.push(s);
        objective.push(0.0);
    }
    let p = SdpProblem::new(objective, f0, constraints)?;
    // strictly feasible: t = n + 1, A = J
    let mut start = vec![0.0; p.num_vars()];
    start[0] = n as f64 + 1.0;
    let sol = solve_sdp(&p, Some(&start))?;
    Ok(-sol.value)
}

/// Optimal matrix of the dual program
/// max Σ_ij B_ij s.t. B ⪰ 0, tr B = 1, B_ij = 0 on edges,
/// turned into a feasible witness for the `‖I+T‖` form: with
/// M_ij = B_ij / √(B_ii B_jj), the matrix T = M − I has zero diagonal, zeros
/// on the edges, I + T = M ⪰ 0, and λ_max(M) ≥ Σ_ij B_ij.
pub fn theta_witness_matrix(g: &Graph) -> Result<(f64, ComplexMatrix)> {
    let n = g.n();
    if n == 0 || n > THETA_AMBIENT_BUDGET {
        return Err(Error::Budget("theta_witness_matrix: bad dimension".into()));
    }
    let comp = g.complement();
    let sqrt_half = std::f64::consts::FRAC_1_SQRT_2;
    let mut constraints: Vec<ComplexMatrix> = Vec::new();
    let mut objective: Vec<f64> = Vec::new();
    // traceless diagonal directions
    for i in 0..(n - 1) {
        let mut d = ComplexMatrix::zeros(n);
        d.set(i, i, Complex64::new(sqrt_half, 0.0));
        d.set(i + 1, i + 1, Complex64::new(-sqrt_half, 0.0));
        constraints.push(d);
        objective.push(0.0);
    }
    // symmetric non-edge directions
    for (i, j) in comp.edges() {
        let mut s = ComplexMatrix::zeros(n);
        s.set(i, j, Complex64::new(sqrt_half, 0.0));
        s.set(j, i, Complex64::new(sqrt_half, 0.0));
        constraints.push(s);
        objective.push(2.0 * sqrt_half);
    }
    let f0 = ComplexMatrix::identity(n).scale(Complex64::new(1.0 / n as f64, 0.0));
    let p = SdpProblem::new(objective, f0, constraints)?;
    let sol = solve_sdp(&p, None)?;
    let b = p.eval(&sol.x);
    let value = 1.0 + sol.value;

    let mut m = ComplexMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let di = b.get(i, i).re;
            let dj = b.get(j, j).re;
            if di > 1e-300 && dj > 1e-300 {
                m.set(i, j, b.get(i, j) / (di * dj).sqrt());
            }
        }
    }
    // exact zeros on edges by construction of the parametrization
    let t = m.sub(&ComplexMatrix::identity(n));
    Ok((value, t))
}

/// Theta of an operator system: sup ‖I+T‖ over Hermitian T ⊥ S with I+T ⪰ 0.
pub fn theta_system(s: &MatrixSubspace, budget: &Budget) -> Result<ThetaBracket> {
    if s.kind() != SpaceKind::System {
        return Err(Error::InvariantViolation(
            "theta_system expects an operator system".into(),
        ));
    }
    check_ambient(s)?;
    let oracle = match recognize_graph_space(s) {
        Recognition::System(g) => Some((theta_classical(&g)?, theta_witness_matrix(&g)?, g)),
        _ => None,
    };
    let admissible = s.perp()?;
    bracket_for(&admissible, oracle, budget, "theta")
}

/// Complementary theta of a traceless space: sup ‖I+T‖ over T ∈ J, I+T ⪰ 0.
pub fn theta_bar(j: &MatrixSubspace, budget: &Budget) -> Result<ThetaBracket> {
    if j.kind() != SpaceKind::Traceless {
        return Err(Error::InvariantViolation(
            "theta_bar expects a traceless space".into(),
        ));
    }
    check_ambient(j)?;
    let oracle = match recognize_graph_space(j) {
        Recognition::Traceless(g) => {
            let comp = g.complement();
            Some((theta_classical(&comp)?, theta_witness_matrix(&comp)?, comp))
        }
        _ => None,
    };
    bracket_for(j, oracle, budget, "theta_bar")
}

/// d-th degree theta: the base bracket applied to the amplification M_d(X).
pub fn theta_d(x: &MatrixSubspace, d: usize, budget: &Budget) -> Result<ThetaBracket> {
    let amplified = amplify(x, d)?;
    match x.kind() {
        SpaceKind::System => theta_system(&amplified, budget),
        SpaceKind::Traceless => theta_bar(&amplified, budget),
        SpaceKind::Plain => Err(Error::InvariantViolation(
            "theta_d expects a system or traceless space".into(),
        )),
    }
}

fn check_ambient(x: &MatrixSubspace) -> Result<()> {
    if x.ambient_dim() > THETA_AMBIENT_BUDGET {
        return Err(Error::Budget(format!(
            "ambient dimension {} exceeds the theta budget of {THETA_AMBIENT_BUDGET}",
            x.ambient_dim()
        )));
    }
    Ok(())
}

type Oracle = Option<(f64, (f64, ComplexMatrix), Graph)>;

fn bracket_for(
    admissible: &MatrixSubspace,
    oracle: Oracle,
    budget: &Budget,
    label: &str,
) -> Result<ThetaBracket> {
    let n = admissible.ambient_dim();
    let herm = admissible.hermitian_basis();
    if herm.is_empty() {
        return Ok(ThetaBracket {
            lower: 1.0,
            upper: 1.0,
            witness: ComplexMatrix::zeros(n),
            exact: true,
            method: format!("{label}:admissible-space-zero"),
        });
    }

    if let Some((oracle_value, (witness_value, witness), g)) = oracle {
        let lower = validate_theta_witness(&witness, admissible, None)?;
        let upper = (oracle_value + tol::TOL_GAP).min(n as f64);
        debug_assert!(witness_value <= upper + tol::TOL_GAP);
        return Ok(ThetaBracket {
            lower,
            upper,
            witness,
            exact: true,
            method: format!(
                "{label}:graph-derived(n={},m={});oracle=theta_classical",
                g.n(),
                g.edge_count()
            ),
        });
    }

    let (lower, witness) = alternating_max(&herm, n, budget)?;
    let upper = n as f64;
    let exact = upper - lower <= 2.0 * tol::TOL_GAP;
    Ok(ThetaBracket {
        lower,
        upper,
        witness,
        exact,
        method: format!("{label}:multistart-alternating(starts={})", budget.starts),
    })
}

/// Alternating maximization of λ_max(I+T): fix a unit vector u and solve the
/// SDP max u*(I+T)u over the admissible Hermitian span with I+T ⪰ 0, then
/// move u to the top eigenvector. The objective sequence is nondecreasing.
fn alternating_max(
    herm: &[ComplexMatrix],
    n: usize,
    budget: &Budget,
) -> Result<(f64, ComplexMatrix)> {
    let m = herm.len();
    let p = SdpProblem::new(
        vec![0.0; m],
        ComplexMatrix::identity(n),
        herm.to_vec(),
    )?;
    let mut best_val = 1.0f64;
    let mut best_t = ComplexMatrix::zeros(n);
    let starts = budget.starts.max(1);
    for start in 0..starts {
        let mut u = if start < n {
            ComplexVector::basis(n, start)
        } else {
            let mut rng = rng_from_seed(sub_seed(budget.seed, start as u64));
            random_unit_vector(n, &mut rng)
        };
        let mut x = vec![0.0; m];
        let mut prev = 1.0f64;
        for iter in 0..budget.refine_steps.max(4) {
            let objective: Vec<f64> = herm
                .iter()
                .map(|h| {
                    let hu = h.mul_vec(&u);
                    u.inner(&hu).re
                })
                .collect();
            let sub = SdpProblem {
                objective,
                f0: p.f0.clone(),
                constraints: p.constraints.clone(),
            };
            let sol = if iter == 0 {
                solve_sdp(&sub, Some(&x))?
            } else {
                solve_sdp_warm(&sub, &x, 0.9, 1e-2)?
            };
            x = sol.x;
            let mut t = ComplexMatrix::zeros(n);
            for (h, &xk) in herm.iter().zip(x.iter()) {
                t.axpy(Complex64::new(xk, 0.0), h);
            }
            let it = t.add(&ComplexMatrix::identity(n));
            let (vals, vecs) = hermitian_eig(&it)?;
            let val = vals[0];
            debug_assert!(val >= prev - 1e-7, "alternating objective decreased");
            u = vecs.vectors()[0].clone();
            if val > best_val + 1e-12 {
                best_val = val;
                best_t = t;
            }
            if val - prev < 1e-9 {
                break;
            }
            prev = val;
        }
        if best_val >= n as f64 - 1e-9 {
            break;
        }
    }
    Ok((best_val, best_t))
}

/// Re-validate a theta witness: Hermitian, inside the admissible subspace,
/// `I + T ⪰ −tol`, and λ_max(I+T) agreeing with any claimed lower bound.
/// Returns the recomputed λ_max.
pub fn validate_theta_witness(
    t: &ComplexMatrix,
    admissible: &MatrixSubspace,
    claimed_lower: Option<f64>,
) -> Result<f64> {
    if !t.is_hermitian(tol::TOL_HERM.max(1e-12)) && t.hs_norm() > 0.0 {
        return Err(Error::NotHermitian {
            defect: t.hermitian_defect(),
        });
    }
    let membership = admissible.membership_residual(t)?;
    if membership > tol::TOL_SUBSPACE_EQ {
        return Err(Error::Certificate(format!(
            "witness leaves the admissible subspace by {membership:.3e}"
        )));
    }
    let it = t.add(&ComplexMatrix::identity(t.dim()));
    let min_eig = lambda_min(&it)?;
    if min_eig < -tol::TOL_PSD {
        return Err(Error::Certificate(format!(
            "I + T has negative eigenvalue {min_eig:.3e}"
        )));
    }
    let lmax = crate::linalg::eig::lambda_max(&it)?;
    if let Some(claim) = claimed_lower {
        if (lmax - claim).abs() > tol::TOL_PSD {
            return Err(Error::Certificate(format!(
                "witness norm {lmax:.9} differs from claimed lower bound {claim:.9}"
            )));
        }
    }
    Ok(lmax)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;
    use crate::ncgraph::{system_from_graph, traceless_from_graph};

    #[test]
    fn theta_complete_graphs() {
        for n in 1..=5 {
            let v = theta_classical(&Graph::complete(n)).unwrap();
            assert!((v - 1.0).abs() <= 1e-6, "theta(K_{n}) = {v}");
        }
    }

    #[test]
    fn theta_edgeless_graphs() {
        for n in 1..=5 {
            let v = theta_classical(&Graph::empty(n)).unwrap();
            assert!((v - n as f64).abs() <= 1e-6, "theta(empty_{n}) = {v}");
        }
    }

    #[test]
    fn theta_c5_closed_form() {
        // odd cycle closed form n cos(π/n) / (1 + cos(π/n)) at n = 5 is √5
        let closed_form = 5.0 * (std::f64::consts::PI / 5.0).cos()
            / (1.0 + (std::f64::consts::PI / 5.0).cos());
        assert!((closed_form - 5f64.sqrt()).abs() < 1e-12);
        let v = theta_classical(&Graph::cycle(5)).unwrap();
        assert!((v - 2.236_068_0).abs() <= 1e-5, "theta(C5) = {v}");
    }

    #[test]
    fn theta_witness_reaches_value() {
        for (g, expected) in [
            (Graph::cycle(5), 5f64.sqrt()),
            (Graph::empty(4), 4.0),
            (Graph::complete(4), 1.0),
        ] {
            let (value, t) = theta_witness_matrix(&g).unwrap();
            assert!((value - expected).abs() <= 1e-5);
            // validate against the traceless complement space J_{Ḡ},
            // which is exactly the orthogonal complement of S_G
            let admissible = system_from_graph(&g).perp().unwrap();
            let lmax = validate_theta_witness(&t, &admissible, None).unwrap();
            assert!((lmax - expected).abs() <= 1e-5, "witness norm {lmax}");
        }
    }

    #[test]
    fn classical_sandwich_on_random_graphs() {
        for seed in 0..12u64 {
            let n = 4 + (seed % 4) as usize;
            let g = graphs::random_graph(n, 500, 90 + seed);
            let th = theta_classical(&g).unwrap();
            let alpha = graphs::alpha_exact(&g).unwrap().0 as f64;
            let chib = graphs::chi_exact(&g.complement()).unwrap().0 as f64;
            assert!(alpha <= th + 1e-6, "alpha {alpha} > theta {th}");
            assert!(th <= chib + 1e-6, "theta {th} > chi(comp) {chib}");
        }
    }

    #[test]
    fn theta_of_full_algebra_is_one() {
        let full = MatrixSubspace::full(3);
        let b = theta_system(&full, &Budget::theta_default(0)).unwrap();
        assert!(b.exact);
        assert!((b.lower - 1.0).abs() <= 1e-9);
        assert!((b.upper - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn theta_of_graph_system_matches_oracle() {
        let g = Graph::cycle(5);
        let b = theta_system(&system_from_graph(&g), &Budget::theta_default(1)).unwrap();
        let oracle = theta_classical(&g).unwrap();
        assert!(b.exact);
        assert!(b.lower >= oracle - tol::TOL_THETA, "lower {} oracle {}", b.lower, oracle);
        assert!(b.upper <= oracle + tol::TOL_THETA, "upper {} oracle {}", b.upper, oracle);
        // witness re-validates
        let admissible = system_from_graph(&g).perp().unwrap();
        validate_theta_witness(&b.witness, &admissible, Some(b.lower)).unwrap();
    }

    #[test]
    fn theta_bar_of_graph_space_is_theta_of_complement() {
        let g = Graph::path(3);
        let b = theta_bar(&traceless_from_graph(&g), &Budget::theta_default(2)).unwrap();
        let oracle = theta_classical(&g.complement()).unwrap();
        assert!(b.exact);
        assert!((b.upper - oracle).abs() <= 2e-6 || b.upper == 3.0);
        assert!(b.lower >= oracle - tol::TOL_THETA);
    }

    #[test]
    fn theta_of_skew_diagonal_example() {
        // S = span{I, E_{i,j} : i≠j}: θ(S) = n via T = diag(n−1, −1, ..., −1)
        for n in 3..=4usize {
            let mut gens = vec![ComplexMatrix::identity(n)];
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        gens.push(ComplexMatrix::unit(n, i, j));
                    }
                }
            }
            let s = MatrixSubspace::span(&gens, SpaceKind::System).unwrap();
            let b = theta_system(&s, &Budget::theta_default(3)).unwrap();
            assert!(b.lower >= n as f64 - tol::TOL_THETA, "lower = {}", b.lower);
            assert!(b.upper <= n as f64 + 1e-9);
            assert!(b.exact);
        }
    }

    #[test]
    fn theta_bar_of_spiked_diagonal_line() {
        // J = span{Δ}, Δ = diag(n−1, −1, ..., −1): θ̄(J) = n
        for n in 3..=4usize {
            let mut entries = vec![n as f64 - 1.0];
            entries.extend(std::iter::repeat(-1.0).take(n - 1));
            let delta = ComplexMatrix::diagonal(&entries);
            let j = MatrixSubspace::span(&[delta], SpaceKind::Traceless).unwrap();
            let b = theta_bar(&j, &Budget::theta_default(4)).unwrap();
            assert!(b.lower >= n as f64 - tol::TOL_THETA, "lower = {}", b.lower);
            assert!(b.upper <= n as f64 + 1e-9);
        }
    }

    #[test]
    fn theta_d_base_case_matches() {
        let g = Graph::complete(2);
        let s = system_from_graph(&g);
        let b1 = theta_d(&s, 1, &Budget::theta_default(5)).unwrap();
        let b0 = theta_system(&s, &Budget::theta_default(5)).unwrap();
        assert!((b1.lower - b0.lower).abs() < 1e-9);
        assert!((b1.upper - b0.upper).abs() < 1e-9);
    }

    #[test]
    fn theta_bar_amplified_witness_embeds() {
        // θ̄_2 ≥ θ̄_1 certified via the E_{1,1} ⊗ T padding of the witness
        let j = traceless_from_graph(&Graph::complete(2));
        let b1 = theta_bar(&j, &Budget::theta_default(6)).unwrap();
        let amplified = amplify(&j, 2).unwrap();
        let padded = ComplexMatrix::unit(2, 0, 0).kron(&b1.witness);
        let lmax = validate_theta_witness(&padded, &amplified, None).unwrap();
        assert!(lmax >= b1.lower - 1e-9);
    }
}
