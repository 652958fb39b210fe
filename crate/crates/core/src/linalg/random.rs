use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::family::OrthonormalFamily;
use crate::linalg::matrix::ComplexMatrix;
use crate::linalg::vector::ComplexVector;

/// Splittable sub-seed derivation: child streams depend only on the parent
/// seed and the stream index, so extending a budget never reshuffles the
/// streams that ran before.
pub fn sub_seed(seed: u64, stream: u64) -> u64 {
    splitmix64(splitmix64(seed.wrapping_add(0x9e37_79b9_7f4a_7c15)).wrapping_add(stream))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn standard_complex<R: Rng>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Complex Ginibre matrix: iid standard complex Gaussian entries.
pub fn gaussian_matrix<R: Rng>(n: usize, rng: &mut R) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, standard_complex(rng));
        }
    }
    m
}

/// Random Hermitian matrix `(G + G*)/2`.
pub fn gaussian_hermitian<R: Rng>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = gaussian_matrix(n, rng);
    g.add(&g.adjoint()).scale(Complex64::new(0.5, 0.0))
}

/// Uniform point on the complex unit sphere in C^n.
pub fn random_unit_vector<R: Rng>(n: usize, rng: &mut R) -> ComplexVector {
    loop {
        let v = ComplexVector::new((0..n).map(|_| standard_complex(rng)).collect());
        if let Some(u) = v.normalized() {
            return u;
        }
    }
}

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of
/// the R diagonal absorbed into Q. Deterministic given the seed.
pub fn random_unitary(n: usize, seed: u64) -> ComplexMatrix {
    assert!(n >= 1, "random_unitary requires n >= 1");
    let mut rng = rng_from_seed(seed);
    random_unitary_with(n, &mut rng)
}

pub fn random_unitary_with<R: Rng>(n: usize, rng: &mut R) -> ComplexMatrix {
    loop {
        let g = gaussian_matrix(n, rng);
        if let Some(q) = gram_schmidt_columns(&g) {
            return q;
        }
    }
}

/// Modified Gram-Schmidt on columns with phase fixing: the diagonal of R is
/// made real positive so the distribution is exactly Haar.
fn gram_schmidt_columns(g: &ComplexMatrix) -> Option<ComplexMatrix> {
    let n = g.dim();
    let mut cols: Vec<ComplexVector> =
        (0..n).map(|j| ComplexVector::new((0..n).map(|i| g.get(i, j)).collect())).collect();
    for j in 0..n {
        for _ in 0..2 {
            for k in 0..j {
                let coeff = cols[k].inner(&cols[j]);
                let prev = cols[k].clone();
                cols[j].axpy(-coeff, &prev);
            }
        }
        let norm = cols[j].norm();
        if norm < 1e-12 {
            return None; // numerically singular draw, resample
        }
        cols[j] = cols[j].scale(Complex64::new(1.0 / norm, 0.0));
    }
    let mut q = ComplexMatrix::zeros(n);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            q.set(i, j, col.get(i));
        }
    }
    Some(q)
}

/// The columns of a unitary as an ordered orthonormal basis.
pub fn unitary_columns(u: &ComplexMatrix) -> OrthonormalFamily {
    let n = u.dim();
    let vectors = (0..n)
        .map(|j| ComplexVector::new((0..n).map(|i| u.get(i, j)).collect()))
        .collect();
    OrthonormalFamily::new(n, vectors).expect("unitary columns are orthonormal")
}
