//! Dense interior-point solver for inequality-form semidefinite programs:
//! maximize c·x subject to F(x) = F0 + Σ x_k F_k ⪰ 0, by log-det barrier
//! path following with Newton steps.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::eig::lambda_min;
use crate::linalg::matrix::{hs_inner, ComplexMatrix};
use crate::tol;

/// Inequality-form SDP: maximize `objective · x` with `F0 + Σ x_k F_k ⪰ 0`.
#[derive(Debug, Clone)]
pub struct SdpProblem {
    pub objective: Vec<f64>,
    pub f0: ComplexMatrix,
    pub constraints: Vec<ComplexMatrix>,
}

impl SdpProblem {
    pub fn new(objective: Vec<f64>, f0: ComplexMatrix, constraints: Vec<ComplexMatrix>) -> Result<Self> {
        if objective.len() != constraints.len() {
            return Err(Error::DimensionMismatch(format!(
                "objective has {} entries but {} constraint matrices given",
                objective.len(),
                constraints.len()
            )));
        }
        if !f0.is_hermitian(tol::TOL_HERM) {
            return Err(Error::NotHermitian {
                defect: f0.hermitian_defect(),
            });
        }
        for f in &constraints {
            if f.dim() != f0.dim() {
                return Err(Error::DimensionMismatch(
                    "constraint matrix dimension differs from F0".into(),
                ));
            }
            if !f.is_hermitian(tol::TOL_HERM) {
                return Err(Error::NotHermitian {
                    defect: f.hermitian_defect(),
                });
            }
        }
        Ok(Self {
            objective,
            f0,
            constraints,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn eval(&self, x: &[f64]) -> ComplexMatrix {
        let mut f = self.f0.clone();
        for (fk, &xk) in self.constraints.iter().zip(x.iter()) {
            f.axpy(Complex64::new(xk, 0.0), fk);
        }
        f
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdpStatus {
    Optimal,
    MaxIter,
}

/// Primal point returned by the barrier method, together with the final
/// barrier parameter and the smallest eigenvalue of the slack matrix.
#[derive(Debug, Clone)]
pub struct SdpSolution {
    pub x: Vec<f64>,
    pub value: f64,
    pub barrier_mu: f64,
    pub min_eig: f64,
    pub status: SdpStatus,
}

const MU_INITIAL: f64 = 1.0;
const MU_SHRINK: f64 = 0.2;
const GAP_TARGET: f64 = 1e-8;
const NEWTON_TOL: f64 = 1e-9;
const MAX_NEWTON: usize = 60;

/// Solve the SDP. A strictly feasible `start` may be supplied; otherwise the
/// solver uses x = 0 when `F0 ≻ 0` and falls back to a phase-I eigenvalue
/// maximization.
pub fn solve_sdp(p: &SdpProblem, start: Option<&[f64]>) -> Result<SdpSolution> {
    let x0 = match start {
        Some(x) => {
            if x.len() != p.num_vars() {
                return Err(Error::DimensionMismatch("start vector length".into()));
            }
            if !strictly_feasible(p, x) {
                return Err(Error::Budget(
                    "supplied start point is not strictly feasible".into(),
                ));
            }
            x.to_vec()
        }
        None => {
            let zero = vec![0.0; p.num_vars()];
            if strictly_feasible(p, &zero) {
                zero
            } else {
                phase_one(p)?
            }
        }
    };
    barrier_solve(p, x0, MU_INITIAL)
}

/// Warm-started variant: shrinks the supplied point toward the analytic
/// interior and starts the barrier at a smaller mu.
pub fn solve_sdp_warm(p: &SdpProblem, warm: &[f64], shrink: f64, mu0: f64) -> Result<SdpSolution> {
    let x0: Vec<f64> = warm.iter().map(|&v| v * shrink).collect();
    if strictly_feasible(p, &x0) {
        barrier_solve(p, x0, mu0)
    } else {
        solve_sdp(p, None)
    }
}

fn strictly_feasible(p: &SdpProblem, x: &[f64]) -> bool {
    p.eval(x).cholesky(1e-12).is_some()
}

/// Phase-I: maximize s with F(x) − s·I ⪰ 0 and s ≤ 1, strictly feasible from
/// x = 0, s just below the smallest eigenvalue of F0.
fn phase_one(p: &SdpProblem) -> Result<Vec<f64>> {
    let n = p.f0.dim();
    let nn = n + 1;
    let lift = |m: &ComplexMatrix| -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(nn);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, m.get(i, j));
            }
        }
        out
    };
    let mut f0 = lift(&p.f0);
    f0.set(n, n, Complex64::ONE); // the 1 − s slack block
    let mut constraints: Vec<ComplexMatrix> = p.constraints.iter().map(&lift).collect();
    let mut s_mat = ComplexMatrix::zeros(nn);
    for i in 0..n {
        s_mat.set(i, i, -Complex64::ONE);
    }
    s_mat.set(n, n, -Complex64::ONE);
    constraints.push(s_mat);
    let mut objective = vec![0.0; p.num_vars()];
    objective.push(1.0);

    let aux = SdpProblem {
        objective,
        f0,
        constraints,
    };
    let lam0 = lambda_min(&p.f0)?;
    let mut x0 = vec![0.0; p.num_vars()];
    x0.push((lam0 - 1.0).min(0.0));
    let sol = barrier_solve(&aux, x0, MU_INITIAL)?;
    let s_opt = sol.value;
    if s_opt <= 1e-10 {
        return Err(Error::SdpInfeasible { value: s_opt });
    }
    let x: Vec<f64> = sol.x[..p.num_vars()].to_vec();
    if !strictly_feasible(p, &x) {
        return Err(Error::SdpInfeasible { value: s_opt });
    }
    Ok(x)
}

fn barrier_solve(p: &SdpProblem, mut x: Vec<f64>, mu0: f64) -> Result<SdpSolution> {
    let m = p.num_vars();
    let n = p.f0.dim();
    let nu = (m.max(n)) as f64;
    let mut mu = mu0;
    let mut status = SdpStatus::Optimal;

    if m == 0 {
        let f = p.eval(&x);
        return Ok(SdpSolution {
            x,
            value: 0.0,
            barrier_mu: 0.0,
            min_eig: lambda_min(&f)?,
            status,
        });
    }

    loop {
        let converged = newton_stage(p, &mut x, mu)?;
        if !converged {
            status = SdpStatus::MaxIter;
        }
        if nu * mu <= GAP_TARGET {
            break;
        }
        mu *= MU_SHRINK;
    }

    let f = p.eval(&x);
    let value = dot(&p.objective, &x);
    Ok(SdpSolution {
        x,
        value,
        barrier_mu: mu,
        min_eig: lambda_min(&f)?,
        status,
    })
}

/// Newton minimization of φ(x) = −c·x − μ log det F(x) at fixed μ.
/// Returns false if the decrement tolerance was not reached.
fn newton_stage(p: &SdpProblem, x: &mut Vec<f64>, mu: f64) -> Result<bool> {
    let m = p.num_vars();
    for _ in 0..MAX_NEWTON {
        let f = p.eval(x);
        let chol = f
            .cholesky(0.0)
            .ok_or_else(|| Error::MaxIter("barrier iterate left the cone".into()))?;
        let whitened: Vec<ComplexMatrix> = p.constraints.iter().map(|fk| chol.whiten(fk)).collect();
        let g: Vec<f64> = whitened.iter().map(|w| w.trace().re).collect();
        // H_kl = tr(W_k W_l), real symmetric positive definite
        let mut h = vec![0.0; m * m];
        for k in 0..m {
            for l in k..m {
                let v = hs_inner(&whitened[k], &whitened[l])?.re;
                h[k * m + l] = v;
                h[l * m + k] = v;
            }
        }
        // rhs of (μH) Δ = c + μ g
        let rhs: Vec<f64> = (0..m).map(|k| p.objective[k] + mu * g[k]).collect();
        let delta = solve_spd(&mut h, m, &rhs, mu)?;
        let decrement: f64 = delta.iter().zip(rhs.iter()).map(|(d, r)| d * r).sum();
        if decrement <= NEWTON_TOL {
            return Ok(true);
        }

        // line search: stay in the cone, then Armijo on the barrier objective
        let phi0 = barrier_value(p, x, mu, &chol);
        let mut t = 1.0f64;
        let mut accepted = false;
        for _ in 0..60 {
            let cand: Vec<f64> = x
                .iter()
                .zip(delta.iter())
                .map(|(xi, di)| xi + t * di)
                .collect();
            if let Some(cand_chol) = p.eval(&cand).cholesky(0.0) {
                let phi = barrier_value(p, &cand, mu, &cand_chol);
                if phi <= phi0 - 0.25 * t * decrement + 1e-14 * phi0.abs() {
                    *x = cand;
                    accepted = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if !accepted {
            // no further progress possible at this scale
            return Ok(decrement <= NEWTON_TOL * 100.0);
        }
    }
    Ok(false)
}

fn barrier_value(
    p: &SdpProblem,
    x: &[f64],
    mu: f64,
    chol: &crate::linalg::matrix::CholeskyFactor,
) -> f64 {
    -dot(&p.objective, x) - mu * chol.log_det()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// Dense SPD solve with scaled ridge regularization and Cholesky.
fn solve_spd(h: &mut [f64], m: usize, rhs: &[f64], mu: f64) -> Result<Vec<f64>> {
    // system matrix is μ·H
    let max_diag = (0..m).map(|k| h[k * m + k]).fold(0.0f64, f64::max).max(1e-300);
    let mut ridge = 1e-12 * max_diag;
    for _ in 0..8 {
        let mut a: Vec<f64> = (0..m * m).map(|idx| mu * h[idx]).collect();
        for k in 0..m {
            a[k * m + k] += mu * ridge;
        }
        if let Some(l) = real_cholesky(&mut a, m) {
            return Ok(real_chol_solve(&l, m, rhs));
        }
        ridge *= 100.0;
    }
    Err(Error::Singular("Newton system not positive definite".into()))
}

fn real_cholesky(a: &mut [f64], m: usize) -> Option<Vec<f64>> {
    let mut l = vec![0.0; m * m];
    for j in 0..m {
        let mut d = a[j * m + j];
        for k in 0..j {
            d -= l[j * m + k] * l[j * m + k];
        }
        if d <= 0.0 {
            return None;
        }
        let dj = d.sqrt();
        l[j * m + j] = dj;
        for i in (j + 1)..m {
            let mut s = a[i * m + j];
            for k in 0..j {
                s -= l[i * m + k] * l[j * m + k];
            }
            l[i * m + j] = s / dj;
        }
    }
    Some(l)
}

fn real_chol_solve(l: &[f64], m: usize, b: &[f64]) -> Vec<f64> {
    let mut y = b.to_vec();
    for i in 0..m {
        for k in 0..i {
            y[i] -= l[i * m + k] * y[k];
        }
        y[i] /= l[i * m + i];
    }
    for i in (0..m).rev() {
        for k in (i + 1)..m {
            y[i] -= l[k * m + i] * y[k];
        }
        y[i] /= l[i * m + i];
    }
    y
}
