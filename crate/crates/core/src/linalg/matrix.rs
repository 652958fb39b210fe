use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::vector::ComplexVector;
use crate::tol;

/// Dense square complex matrix, the ambient object of all constructions.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>, // row-major, length n²
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        Self {
            n,
            data: vec![Complex64::ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    /// Matrix unit `E_{i,j}` (1 in row i, column j).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        assert!(i < n && j < n, "matrix unit index out of range");
        let mut m = Self::zeros(n);
        m.set(i, j, Complex64::ONE);
        m
    }

    pub fn diagonal(entries: &[f64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n);
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, Complex64::new(e, 0.0));
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(
                "matrix rows must form a square array".into(),
            ));
        }
        let data: Vec<Complex64> = rows.iter().flatten().copied().collect();
        let m = Self { n, data };
        if !m.is_finite() {
            return Err(Error::InvariantViolation("matrix entries must be finite".into()));
        }
        Ok(m)
    }

    pub(crate) fn from_raw(n: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), n * n);
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.data[i * self.n + j] = z;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn add(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a + b)
            .collect();
        Self { n: self.n, data }
    }

    pub fn sub(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a - b)
            .collect();
        Self { n: self.n, data }
    }

    pub fn scale(&self, s: Complex64) -> ComplexMatrix {
        Self {
            n: self.n,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    /// `self += s · other`
    pub fn axpy(&mut self, s: Complex64, other: &ComplexMatrix) {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            *a += s * b;
        }
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &ComplexVector) -> ComplexVector {
        assert_eq!(self.n, v.dim(), "matrix-vector dimension mismatch");
        let n = self.n;
        let mut out = ComplexVector::zeros(n);
        for i in 0..n {
            let mut acc = Complex64::ZERO;
            for j in 0..n {
                acc += self.get(i, j) * v.get(j);
            }
            out.set(i, acc);
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Hilbert-Schmidt norm `‖a‖_HS = sqrt(tr(a* a))`.
    pub fn hs_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Relative Hermiticity defect `‖a − a*‖_HS / ‖a‖_HS` (0 for the zero matrix).
    pub fn hermitian_defect(&self) -> f64 {
        let norm = self.hs_norm();
        if norm == 0.0 {
            return 0.0;
        }
        self.sub(&self.adjoint()).hs_norm() / norm
    }

    pub fn is_hermitian(&self, rel_tol: f64) -> bool {
        self.hermitian_defect() <= rel_tol
    }

    /// Kronecker product; row index (i,k) maps to i·m + k with m = other.dim().
    pub fn kron(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let n = self.n;
        let m = other.n;
        let mut out = Self::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a == Complex64::ZERO {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out.set(i * m + k, j * m + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Cholesky factorization `self = L L*` for Hermitian positive definite
    /// input; returns None if a pivot drops below `eps`.
    pub fn cholesky(&self, eps: f64) -> Option<CholeskyFactor> {
        let n = self.n;
        let mut l = vec![Complex64::ZERO; n * n];
        for j in 0..n {
            let mut d = self.get(j, j).re;
            for k in 0..j {
                d -= l[j * n + k].norm_sqr();
            }
            if d <= eps {
                return None;
            }
            let dj = d.sqrt();
            l[j * n + j] = Complex64::new(dj, 0.0);
            for i in (j + 1)..n {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s -= l[i * n + k] * l[j * n + k].conj();
                }
                l[i * n + j] = s / dj;
            }
        }
        Some(CholeskyFactor { n, l })
    }

    /// Determinant via LU decomposition with partial pivoting.
    pub fn det(&self) -> Complex64 {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = Complex64::ONE;
        for col in 0..n {
            let mut pivot = col;
            let mut best = a[col * n + col].norm();
            for r in (col + 1)..n {
                let v = a[r * n + col].norm();
                if v > best {
                    best = v;
                    pivot = r;
                }
            }
            if best == 0.0 {
                return Complex64::ZERO;
            }
            if pivot != col {
                for c in 0..n {
                    a.swap(col * n + c, pivot * n + c);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det *= p;
            for r in (col + 1)..n {
                let f = a[r * n + col] / p;
                if f == Complex64::ZERO {
                    continue;
                }
                for c in col..n {
                    let v = a[col * n + c];
                    a[r * n + c] -= f * v;
                }
            }
        }
        det
    }
}

/// Lower-triangular Cholesky factor of a Hermitian positive definite matrix.
pub struct CholeskyFactor {
    n: usize,
    l: Vec<Complex64>, // row-major lower triangle (upper part zero)
}

impl CholeskyFactor {
    /// Solve `L y = b` (forward substitution).
    pub fn solve_lower(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let mut y = b.to_vec();
        for i in 0..n {
            for k in 0..i {
                let lik = self.l[i * n + k];
                let yk = y[k];
                y[i] -= lik * yk;
            }
            y[i] /= self.l[i * n + i];
        }
        y
    }

    /// Solve `L* y = b` (back substitution against the adjoint).
    pub fn solve_upper(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let mut y = b.to_vec();
        for i in (0..n).rev() {
            for k in (i + 1)..n {
                let lki = self.l[k * n + i].conj();
                let yk = y[k];
                y[i] -= lki * yk;
            }
            y[i] /= self.l[i * n + i];
        }
        y
    }

    /// Solve `(L L*) x = b`.
    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        self.solve_upper(&self.solve_lower(b))
    }

    /// `W = L⁻¹ A L⁻*`; maps Hermitian A to Hermitian W with the same spectrum
    /// as `F⁻¹ A` up to similarity.
    pub fn whiten(&self, a: &ComplexMatrix) -> ComplexMatrix {
        let n = self.n;
        // columns of L⁻¹ A: solve L X = A columnwise
        let mut x = ComplexMatrix::zeros(n);
        for col in 0..n {
            let b: Vec<Complex64> = (0..n).map(|r| a.get(r, col)).collect();
            let y = self.solve_lower(&b);
            for r in 0..n {
                x.set(r, col, y[r]);
            }
        }
        // rows of X L⁻*: (X L⁻*)ᵀ = conj(L⁻¹) Xᵀ, do per-row solves instead:
        // (X L⁻*)(i,·)ᵀ satisfies L conj(row) = conj(X row)... simpler:
        // W* = L⁻¹ A* L⁻* computed the same way; use W = (L⁻¹ (L⁻¹ A*)*)
        let mut w = ComplexMatrix::zeros(n);
        for row in 0..n {
            let b: Vec<Complex64> = (0..n).map(|c| x.get(row, c).conj()).collect();
            let y = self.solve_lower(&b);
            for c in 0..n {
                w.set(row, c, y[c].conj());
            }
        }
        w
    }

    pub fn log_det(&self) -> f64 {
        (0..self.n)
            .map(|i| self.l[i * self.n + i].re.ln())
            .sum::<f64>()
            * 2.0
    }
}

/// Dense rectangular complex matrix (Kraus operators, isometries).
#[derive(Debug, Clone, PartialEq)]
pub struct RectMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>, // row-major
}

impl RectMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "rectangular dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn from_square(m: &ComplexMatrix) -> Self {
        Self {
            rows: m.dim(),
            cols: m.dim(),
            data: m.entries().to_vec(),
        }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        let c = rows[0].len();
        if c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.data[i * self.cols + j] = z;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn adjoint(&self) -> RectMatrix {
        let mut out = RectMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn mul(&self, other: &RectMatrix) -> RectMatrix {
        assert_eq!(self.cols, other.rows, "rectangular product mismatch");
        let mut out = RectMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &ComplexVector) -> ComplexVector {
        assert_eq!(self.cols, v.dim(), "rectangular matrix-vector mismatch");
        let mut out = ComplexVector::zeros(self.rows);
        for i in 0..self.rows {
            let mut acc = Complex64::ZERO;
            for j in 0..self.cols {
                acc += self.get(i, j) * v.get(j);
            }
            out.set(i, acc);
        }
        out
    }

    /// `self · m · self*` for square m of dimension `cols`.
    pub fn conjugate_square(&self, m: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, m.dim(), "conjugation dimension mismatch");
        let bm = self.mul(&RectMatrix::from_square(m));
        let out = bm.mul(&self.adjoint());
        out.to_square().expect("square by construction")
    }

    pub fn to_square(&self) -> Option<ComplexMatrix> {
        if self.rows != self.cols {
            return None;
        }
        Some(ComplexMatrix::from_raw(self.rows, self.data.clone()))
    }

    /// `‖self* self − I‖_HS`, the isometry defect.
    pub fn isometry_defect(&self) -> f64 {
        let g = self.adjoint().mul(self);
        let mut defect = 0.0f64;
        for i in 0..g.rows {
            for j in 0..g.cols {
                let expected = if i == j { Complex64::ONE } else { Complex64::ZERO };
                defect += (g.get(i, j) - expected).norm_sqr();
            }
        }
        defect.sqrt()
    }

    pub fn is_isometry(&self, tol: f64) -> bool {
        self.isometry_defect() <= tol
    }

    pub fn hs_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// Hilbert-Schmidt inner product `⟨a, b⟩ = tr(b* a)`; conjugate-symmetric,
/// linear in the first argument.
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Complex64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "hs_inner: {} vs {}",
            a.dim(),
            b.dim()
        )));
    }
    Ok(a
        .entries()
        .iter()
        .zip(b.entries().iter())
        .map(|(x, y)| y.conj() * x)
        .sum())
}

/// Unitarity defect `‖u*u − I‖_HS`.
pub fn unitary_defect(u: &ComplexMatrix) -> f64 {
    let g = u.adjoint().mul(u);
    g.sub(&ComplexMatrix::identity(u.dim())).hs_norm()
}

pub fn check_unitary(u: &ComplexMatrix) -> Result<()> {
    let defect = unitary_defect(u);
    if defect > tol::TOL_ORTH * (u.dim() as f64).max(1.0) {
        return Err(Error::NotUnitary { defect });
    }
    Ok(())
}
