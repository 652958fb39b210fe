use crate::error::{Error, Result};
use crate::linalg::vector::ComplexVector;
use crate::tol;

/// An ordered tuple of pairwise orthonormal vectors in C^n.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthonormalFamily {
    ambient_dim: usize,
    vectors: Vec<ComplexVector>,
}

impl OrthonormalFamily {
    /// Validates the Gram-matrix invariant entrywise against [`tol::TOL_ORTH`].
    pub fn new(ambient_dim: usize, vectors: Vec<ComplexVector>) -> Result<Self> {
        if vectors.len() > ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "{} vectors cannot be orthonormal in dimension {}",
                vectors.len(),
                ambient_dim
            )));
        }
        for v in &vectors {
            if v.dim() != ambient_dim {
                return Err(Error::DimensionMismatch(
                    "family vector has wrong length".into(),
                ));
            }
            if !v.is_finite() {
                return Err(Error::InvariantViolation("family vector not finite".into()));
            }
        }
        for i in 0..vectors.len() {
            for j in 0..=i {
                let g = vectors[i].inner(&vectors[j]);
                let expected = if i == j { 1.0 } else { 0.0 };
                if (g.re - expected).abs() > tol::TOL_ORTH || g.im.abs() > tol::TOL_ORTH {
                    return Err(Error::InvariantViolation(format!(
                        "Gram matrix defect {:.3e} at ({}, {})",
                        (g - num_complex::Complex64::new(expected, 0.0)).norm(),
                        i,
                        j
                    )));
                }
            }
        }
        Ok(Self {
            ambient_dim,
            vectors,
        })
    }

    /// The standard basis (e_1, ..., e_n).
    pub fn standard(n: usize) -> Self {
        Self {
            ambient_dim: n,
            vectors: (0..n).map(|i| ComplexVector::basis(n, i)).collect(),
        }
    }

    /// The Fourier basis v_k = (1, ζ^k, ζ^{2k}, ...)/√n with ζ = e^{2πi/n}.
    pub fn fourier(n: usize) -> Self {
        let scale = 1.0 / (n as f64).sqrt();
        let vectors = (0..n)
            .map(|k| {
                ComplexVector::new(
                    (0..n)
                        .map(|j| {
                            let angle = 2.0 * std::f64::consts::PI * (k * j % n) as f64 / n as f64;
                            num_complex::Complex64::from_polar(scale, angle)
                        })
                        .collect(),
                )
            })
            .collect();
        Self {
            ambient_dim: n,
            vectors,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// True when the family is a full basis of C^n.
    pub fn is_full(&self) -> bool {
        self.len() == self.ambient_dim
    }

    pub fn vectors(&self) -> &[ComplexVector] {
        &self.vectors
    }

    pub fn subfamily(&self, indices: &[usize]) -> Result<Self> {
        let vectors = indices
            .iter()
            .map(|&i| {
                self.vectors
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::DimensionMismatch("subfamily index out of range".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.ambient_dim, vectors)
    }
}
