use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::family::OrthonormalFamily;
use crate::linalg::matrix::ComplexMatrix;
use crate::linalg::vector::ComplexVector;
use crate::tol;

const MAX_SWEEPS: usize = 64;

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
///
/// Returns eigenvalues sorted descending together with the matching
/// orthonormal eigenvectors, so that `a = V diag(λ) V*`.
pub fn hermitian_eig(a: &ComplexMatrix) -> Result<(Vec<f64>, OrthonormalFamily)> {
    let defect = a.hermitian_defect();
    if defect > tol::TOL_HERM {
        return Err(Error::NotHermitian { defect });
    }
    let n = a.dim();
    // switch to the Hermitian average to kill rounding asymmetry
    let mut m = a.add(&a.adjoint()).scale(Complex64::new(0.5, 0.0));
    let mut v = ComplexMatrix::identity(n);
    let scale = m.hs_norm().max(1.0);
    let target = (tol::TOL_EIG * scale).powi(2) * 0.01;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = off_diagonal_sqr(&m);
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_sqr(&m) > target {
        return Err(Error::EigNoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (m.get(i, i).re, i)).collect();
    pairs.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
    let eigenvalues: Vec<f64> = pairs.iter().map(|(l, _)| *l).collect();
    let vectors: Vec<ComplexVector> = pairs
        .iter()
        .map(|&(_, col)| ComplexVector::new((0..n).map(|r| v.get(r, col)).collect()))
        .collect();
    let family = OrthonormalFamily::new(n, vectors)?;
    Ok((eigenvalues, family))
}

fn off_diagonal_sqr(m: &ComplexMatrix) -> f64 {
    let n = m.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m.get(i, j).norm_sqr();
            }
        }
    }
    s
}

/// One complex Jacobi rotation zeroing the (p,q) entry.
fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = m.get(p, q);
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let app = m.get(p, p).re;
    let aqq = m.get(q, q).re;
    let phase = apq / r;
    // zeroing condition: r(1 − t²) + t(aqq − app) = 0; pick the smaller-angle root
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        -1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = c * t;

    let n = m.dim();
    // columns p,q of the unitary U: U[p,p]=c, U[p,q]=-s·phase, U[q,p]=s·conj(phase), U[q,q]=c
    let upp = Complex64::new(c, 0.0);
    let upq = -phase * s;
    let uqp = phase.conj() * s;
    let uqq = Complex64::new(c, 0.0);

    // m ← U* m U
    for k in 0..n {
        let mkp = m.get(k, p);
        let mkq = m.get(k, q);
        m.set(k, p, mkp * upp + mkq * uqp);
        m.set(k, q, mkp * upq + mkq * uqq);
    }
    for k in 0..n {
        let mpk = m.get(p, k);
        let mqk = m.get(q, k);
        m.set(p, k, upp.conj() * mpk + uqp.conj() * mqk);
        m.set(q, k, upq.conj() * mpk + uqq.conj() * mqk);
    }
    // clean symmetric pair explicitly
    m.set(p, q, Complex64::ZERO);
    m.set(q, p, Complex64::ZERO);
    let dpp = m.get(p, p);
    let dqq = m.get(q, q);
    m.set(p, p, Complex64::new(dpp.re, 0.0));
    m.set(q, q, Complex64::new(dqq.re, 0.0));

    // v ← v U
    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * upp + vkq * uqp);
        v.set(k, q, vkp * upq + vkq * uqq);
    }
}

/// Largest eigenvalue of a Hermitian matrix.
pub fn lambda_max(a: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eig(a)?.0[0])
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn lambda_min(a: &ComplexMatrix) -> Result<f64> {
    let (vals, _) = hermitian_eig(a)?;
    Ok(*vals.last().expect("nonempty spectrum"))
}

/// Top eigenvector of a Hermitian matrix.
pub fn top_eigenvector(a: &ComplexMatrix) -> Result<ComplexVector> {
    let (_, fam) = hermitian_eig(a)?;
    Ok(fam.vectors()[0].clone())
}
