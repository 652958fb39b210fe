use num_complex::Complex64;

use crate::linalg::matrix::ComplexMatrix;

/// A dense complex column vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    pub(crate) data: Vec<Complex64>,
}

impl ComplexVector {
    pub fn new(data: Vec<Complex64>) -> Self {
        Self { data }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            data: vec![Complex64::ZERO; dim],
        }
    }

    /// Standard basis vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index out of range");
        let mut v = Self::zeros(dim);
        v.data[i] = Complex64::ONE;
        v
    }

    pub fn from_real(reals: &[f64]) -> Self {
        Self {
            data: reals.iter().map(|&r| Complex64::new(r, 0.0)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn get(&self, i: usize) -> Complex64 {
        self.data[i]
    }

    pub fn set(&mut self, i: usize, z: Complex64) {
        self.data[i] = z;
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    /// Inner product `⟨self, other⟩ = Σ_i conj(self_i) · other_i`.
    pub fn inner(&self, other: &ComplexVector) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    /// `self += s · other`
    pub fn axpy(&mut self, s: Complex64, other: &ComplexVector) {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            *a += s * b;
        }
    }

    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm();
        if n <= 0.0 {
            return None;
        }
        Some(self.scale(Complex64::new(1.0 / n, 0.0)))
    }

    /// Rank-one matrix `self · other*` (outer product).
    pub fn outer(&self, other: &ComplexVector) -> ComplexMatrix {
        assert_eq!(self.dim(), other.dim(), "outer product dimension mismatch");
        let n = self.dim();
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.data[i] * other.data[j].conj());
            }
        }
        m
    }

    /// Kronecker product; index (i,k) maps to i·other.dim() + k.
    pub fn kron(&self, other: &ComplexVector) -> ComplexVector {
        let mut data = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.data {
            for b in &other.data {
                data.push(a * b);
            }
        }
        Self { data }
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}
