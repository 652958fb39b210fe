use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::matrix::{hs_inner, ComplexMatrix};
use crate::tol;

/// Flavour of a matrix subspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    /// Adjoint-closed and contains the identity (operator system).
    System,
    /// Adjoint-closed and every element has zero trace.
    Traceless,
    /// No structural promise.
    Plain,
}

impl SpaceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SpaceKind::System => "system",
            SpaceKind::Traceless => "traceless",
            SpaceKind::Plain => "plain",
        }
    }
}

/// A linear subspace of M_n stored as an HS-orthonormal basis.
#[derive(Debug, Clone)]
pub struct MatrixSubspace {
    ambient_dim: usize,
    kind: SpaceKind,
    basis: Vec<ComplexMatrix>,
}

impl MatrixSubspace {
    /// Orthonormalize `mats` by modified Gram-Schmidt under the HS inner
    /// product, dropping vectors whose residual falls below [`tol::TOL_RANK`]
    /// relative to the largest generator norm, then verify the `kind`
    /// invariants.
    pub fn span(mats: &[ComplexMatrix], kind: SpaceKind) -> Result<Self> {
        let ambient_dim = match mats.first() {
            Some(m) => m.dim(),
            None => {
                return Err(Error::DimensionMismatch(
                    "span requires at least one generator to fix the ambient dimension".into(),
                ))
            }
        };
        Self::span_in(ambient_dim, mats, kind)
    }

    /// Like [`MatrixSubspace::span`] with an explicit ambient dimension, so the
    /// zero subspace (empty generator list) is representable.
    pub fn span_in(ambient_dim: usize, mats: &[ComplexMatrix], kind: SpaceKind) -> Result<Self> {
        for m in mats {
            if m.dim() != ambient_dim {
                return Err(Error::DimensionMismatch(
                    "span generators have mixed dimensions".into(),
                ));
            }
            if !m.is_finite() {
                return Err(Error::InvariantViolation("generator not finite".into()));
            }
        }
        let max_norm = mats.iter().map(|m| m.hs_norm()).fold(0.0, f64::max);
        let drop_tol = tol::TOL_RANK * max_norm.max(1.0);

        let mut basis: Vec<ComplexMatrix> = Vec::new();
        for m in mats {
            let mut r = m.clone();
            // two MGS passes for re-orthogonalization
            for _ in 0..2 {
                for b in &basis {
                    let c = hs_inner(&r, b)?;
                    r.axpy(-c, b);
                }
            }
            let norm = r.hs_norm();
            if norm > drop_tol {
                basis.push(r.scale(Complex64::new(1.0 / norm, 0.0)));
            }
        }
        let space = Self {
            ambient_dim,
            kind,
            basis,
        };
        space.verify_kind()?;
        Ok(space)
    }

    /// The zero subspace of M_n.
    pub fn zero(ambient_dim: usize, kind: SpaceKind) -> Self {
        Self {
            ambient_dim,
            kind,
            basis: Vec::new(),
        }
    }

    /// Full matrix algebra M_n as an operator system.
    pub fn full(ambient_dim: usize) -> Self {
        let mats: Vec<ComplexMatrix> = (0..ambient_dim)
            .flat_map(|i| (0..ambient_dim).map(move |j| (i, j)))
            .map(|(i, j)| ComplexMatrix::unit(ambient_dim, i, j))
            .collect();
        Self::span_in(ambient_dim, &mats, SpaceKind::System).expect("full algebra is a system")
    }

    fn verify_kind(&self) -> Result<()> {
        match self.kind {
            SpaceKind::Plain => Ok(()),
            SpaceKind::System => {
                let id = ComplexMatrix::identity(self.ambient_dim);
                let res = self.membership_residual(&id)?;
                if res > tol::TOL_ORTH * (self.ambient_dim as f64).sqrt().max(1.0) {
                    return Err(Error::InvariantViolation(format!(
                        "kind=system but identity has projection residual {res:.3e}"
                    )));
                }
                self.verify_adjoint_closed()
            }
            SpaceKind::Traceless => {
                for b in &self.basis {
                    let t = b.trace().norm();
                    if t > tol::TOL_ORTH {
                        return Err(Error::InvariantViolation(format!(
                            "kind=traceless but a basis element has |trace| = {t:.3e}"
                        )));
                    }
                }
                self.verify_adjoint_closed()
            }
        }
    }

    fn verify_adjoint_closed(&self) -> Result<()> {
        for b in &self.basis {
            let res = self.membership_residual(&b.adjoint())?;
            if res > tol::TOL_ORTH {
                return Err(Error::InvariantViolation(format!(
                    "span not closed under adjoint (residual {res:.3e})"
                )));
            }
        }
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ComplexMatrix] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Reinterpret with a different kind tag, re-verifying the invariants.
    pub fn with_kind(&self, kind: SpaceKind) -> Result<Self> {
        let s = Self {
            ambient_dim: self.ambient_dim,
            kind,
            basis: self.basis.clone(),
        };
        s.verify_kind()?;
        Ok(s)
    }

    /// Orthogonal projection `Σ_k ⟨x, b_k⟩ b_k` of `x` onto the subspace.
    pub fn project(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "project: matrix dim {} vs ambient {}",
                x.dim(),
                self.ambient_dim
            )));
        }
        let mut out = ComplexMatrix::zeros(self.ambient_dim);
        for b in &self.basis {
            let c = hs_inner(x, b)?;
            out.axpy(c, b);
        }
        Ok(out)
    }

    /// `‖x − P(x)‖_HS`: how far x is from lying inside the subspace.
    pub fn membership_residual(&self, x: &ComplexMatrix) -> Result<f64> {
        let p = self.project(x)?;
        Ok(x.sub(&p).hs_norm())
    }

    /// `‖P(x)‖_HS`: how far x is from being orthogonal to the subspace.
    pub fn orthogonality_residual(&self, x: &ComplexMatrix) -> Result<f64> {
        Ok(self.project(x)?.hs_norm())
    }

    pub fn contains(&self, x: &ComplexMatrix, tol: f64) -> Result<bool> {
        Ok(self.membership_residual(x)? <= tol)
    }

    pub fn is_orthogonal_to(&self, x: &ComplexMatrix, tol: f64) -> Result<bool> {
        Ok(self.orthogonality_residual(x)? <= tol)
    }

    /// Orthogonal complement within M_n. The kind flips system ↔ traceless;
    /// plain stays plain.
    pub fn perp(&self) -> Result<MatrixSubspace> {
        let n = self.ambient_dim;
        let target_dim = n * n - self.dim();
        // residuals of all matrix units after projecting out self
        let mut candidates: Vec<ComplexMatrix> = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let u = ComplexMatrix::unit(n, i, j);
                let p = self.project(&u)?;
                candidates.push(u.sub(&p));
            }
        }
        // greedy pivoted Gram-Schmidt on the candidates
        let mut basis: Vec<ComplexMatrix> = Vec::with_capacity(target_dim);
        while basis.len() < target_dim {
            let (best_idx, best_norm) = candidates
                .iter()
                .enumerate()
                .map(|(k, c)| (k, c.hs_norm()))
                .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .expect("candidate list nonempty");
            if best_norm <= tol::TOL_RANK {
                break;
            }
            let b = candidates[best_idx].scale(Complex64::new(1.0 / best_norm, 0.0));
            for c in candidates.iter_mut() {
                let coeff = hs_inner(c, &b)?;
                c.axpy(-coeff, &b);
            }
            basis.push(b);
        }
        if basis.len() != target_dim {
            return Err(Error::InvariantViolation(format!(
                "perp rank defect: expected {} got {}",
                target_dim,
                basis.len()
            )));
        }
        let kind = match self.kind {
            SpaceKind::System => SpaceKind::Traceless,
            SpaceKind::Traceless => SpaceKind::System,
            SpaceKind::Plain => SpaceKind::Plain,
        };
        let out = Self {
            ambient_dim: n,
            kind,
            basis,
        };
        out.verify_kind()?;
        Ok(out)
    }

    /// Kronecker-product subspace: span of pairwise products of basis
    /// elements, re-orthonormalized.
    pub fn tensor(&self, other: &MatrixSubspace) -> Result<MatrixSubspace> {
        let kind = match (self.kind, other.kind) {
            (SpaceKind::Plain, _) | (_, SpaceKind::Plain) => SpaceKind::Plain,
            (SpaceKind::System, SpaceKind::System) => SpaceKind::System,
            _ => SpaceKind::Traceless,
        };
        let mut gens = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.basis {
            for b in &other.basis {
                gens.push(a.kron(b));
            }
        }
        Self::span_in(self.ambient_dim * other.ambient_dim, &gens, kind)
    }

    /// Subspace equality by mutual projection residuals.
    pub fn equals(&self, other: &MatrixSubspace, tol: f64) -> Result<bool> {
        if self.ambient_dim != other.ambient_dim || self.dim() != other.dim() {
            return Ok(false);
        }
        for b in &self.basis {
            if other.membership_residual(b)? > tol {
                return Ok(false);
            }
        }
        for b in &other.basis {
            if self.membership_residual(b)? > tol {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Real-orthonormal basis of the Hermitian part, built from
    /// `(b + b*)/√2` and `i(b − b*)/√2` over the complex basis. For an
    /// adjoint-closed subspace this has exactly `dim` elements and spans the
    /// same complex space over R ⊕ iR.
    pub fn hermitian_basis(&self) -> Vec<ComplexMatrix> {
        let mut candidates: Vec<ComplexMatrix> = Vec::with_capacity(2 * self.dim());
        let half = Complex64::new(0.5, 0.0);
        let half_i = Complex64::new(0.0, 0.5);
        for b in &self.basis {
            let adj = b.adjoint();
            candidates.push(b.add(&adj).scale(half));
            candidates.push(b.sub(&adj).scale(half_i));
        }
        let mut out: Vec<ComplexMatrix> = Vec::new();
        for c in candidates {
            let mut r = c;
            for _ in 0..2 {
                for h in &out {
                    // real Gram-Schmidt: Hermitian matrices have real HS inner products
                    let coeff = hs_inner(&r, h).expect("same ambient dimension").re;
                    r.axpy(Complex64::new(-coeff, 0.0), h);
                }
            }
            let norm = r.hs_norm();
            if norm > tol::TOL_RANK {
                out.push(r.scale(Complex64::new(1.0 / norm, 0.0)));
            }
        }
        out
    }

    /// Union span of two subspaces of the same ambient dimension.
    pub fn sum(&self, other: &MatrixSubspace, kind: SpaceKind) -> Result<MatrixSubspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch("sum of subspaces".into()));
        }
        let gens: Vec<ComplexMatrix> = self
            .basis
            .iter()
            .chain(other.basis.iter())
            .cloned()
            .collect();
        Self::span_in(self.ambient_dim, &gens, kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_drops_duplicates() {
        let e11 = ComplexMatrix::unit(2, 0, 0);
        let e22 = ComplexMatrix::unit(2, 1, 1);
        let s = MatrixSubspace::span(&[e11.clone(), e11, e22], SpaceKind::Plain).unwrap();
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn span_system_valid() {
        let s = MatrixSubspace::span(
            &[
                ComplexMatrix::identity(2),
                ComplexMatrix::unit(2, 0, 1),
                ComplexMatrix::unit(2, 1, 0),
            ],
            SpaceKind::System,
        )
        .unwrap();
        assert_eq!(s.dim(), 3);
    }

    #[test]
    fn span_traceless_rejects_non_adjoint_closed() {
        let err = MatrixSubspace::span(&[ComplexMatrix::unit(2, 0, 1)], SpaceKind::Traceless);
        assert!(err.is_err());
    }

    #[test]
    fn span_system_requires_identity() {
        let err = MatrixSubspace::span(&[ComplexMatrix::unit(2, 0, 0)], SpaceKind::System);
        assert!(err.is_err());
    }

    #[test]
    fn project_traceless_unit_onto_identity_span() {
        let s = MatrixSubspace::span(&[ComplexMatrix::identity(2)], SpaceKind::System).unwrap();
        let p = s.project(&ComplexMatrix::unit(2, 0, 1)).unwrap();
        assert!(p.hs_norm() < 1e-14);
    }

    #[test]
    fn project_is_idempotent_on_members() {
        let s = MatrixSubspace::span(&[ComplexMatrix::identity(2)], SpaceKind::System).unwrap();
        let p = s.project(&ComplexMatrix::identity(2)).unwrap();
        assert!(p.sub(&ComplexMatrix::identity(2)).hs_norm() < 1e-14);
    }

    #[test]
    fn project_unit_onto_scaled_identity() {
        // project(E_{1,1}, span{I_2/√2}) = I_2/2 by direct computation
        let s = MatrixSubspace::span(
            &[ComplexMatrix::identity(2).scale(Complex64::new(1.0 / 2f64.sqrt(), 0.0))],
            SpaceKind::Plain,
        )
        .unwrap();
        let p = s.project(&ComplexMatrix::unit(2, 0, 0)).unwrap();
        let expected = ComplexMatrix::identity(2).scale(Complex64::new(0.5, 0.0));
        assert!(p.sub(&expected).hs_norm() < 1e-14);
    }

    #[test]
    fn perp_of_identity_span_is_traceless() {
        for n in 1..=4 {
            let s =
                MatrixSubspace::span(&[ComplexMatrix::identity(n)], SpaceKind::System).unwrap();
            let p = s.perp().unwrap();
            assert_eq!(p.dim(), n * n - 1);
            assert_eq!(p.kind(), SpaceKind::Traceless);
        }
    }

    #[test]
    fn perp_dimension_count() {
        let s = MatrixSubspace::span(
            &[
                ComplexMatrix::identity(3),
                ComplexMatrix::unit(3, 0, 1),
                ComplexMatrix::unit(3, 1, 0),
            ],
            SpaceKind::System,
        )
        .unwrap();
        let p = s.perp().unwrap();
        assert_eq!(s.dim() + p.dim(), 9);
    }

    #[test]
    fn tensor_identity_spans() {
        let s = MatrixSubspace::span(&[ComplexMatrix::identity(2)], SpaceKind::System).unwrap();
        let t = s.tensor(&s).unwrap();
        assert_eq!(t.dim(), 1);
        assert!(t
            .contains(
                &ComplexMatrix::identity(4).scale(Complex64::new(0.5, 0.0)),
                1e-12
            )
            .unwrap());
    }

    #[test]
    fn sum_of_overlapping_spans() {
        let a = MatrixSubspace::span(&[ComplexMatrix::unit(2, 0, 0)], SpaceKind::Plain).unwrap();
        let b = MatrixSubspace::span(
            &[ComplexMatrix::unit(2, 0, 0), ComplexMatrix::unit(2, 1, 1)],
            SpaceKind::Plain,
        )
        .unwrap();
        let s = a.sum(&b, SpaceKind::Plain).unwrap();
        assert_eq!(s.dim(), 2);
    }
}
