//! Independence sets, colourings, derived graphs of a basis, and certified
//! estimators for the independence, clique and chromatic-type parameters.

pub mod derived;
pub mod estimates;
pub mod search;
pub mod support;

use crate::error::{Error, Result};
use crate::linalg::family::OrthonormalFamily;
use crate::linalg::matrix::ComplexMatrix;
use crate::linalg::subspace::MatrixSubspace;
use crate::linalg::vector::ComplexVector;
use crate::tol;

pub use derived::{confusability_graph, derived_graphs, distinguishability_graph, DerivedGraphs};
pub use estimates::{
    alpha_estimate, chi0_estimate, chi_estimate, chi_omega_product_check, omega_estimate,
    sandwich_check, strong_chi_estimate, ChiOmegaReport, SandwichReport,
};
pub use support::support_permutation;

/// Which orthogonality discipline a colouring certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColouringMode {
    /// Same-part pairs i ≠ j orthogonal to the target space.
    Weak,
    /// All same-part pairs including i = j; basis orthonormal.
    Strong,
    /// Strong-style relations but the basis need only be linearly independent.
    Minimal,
}

/// A partition of a basis of C^n certifying a chromatic-type bound.
#[derive(Debug, Clone)]
pub struct Colouring {
    pub basis: Vec<ComplexVector>,
    pub parts: Vec<Vec<usize>>,
    pub mode: ColouringMode,
}

impl Colouring {
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Check every invariant against the target space: the partition is exact,
    /// the basis is orthonormal (weak/strong) or linearly independent
    /// (minimal), and all required rank-one products are orthogonal to the
    /// target within [`tol::TOL_ORTH`].
    pub fn validate(&self, target: &MatrixSubspace) -> Result<()> {
        let n = target.ambient_dim();
        if self.basis.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "colouring basis has {} vectors for ambient {}",
                self.basis.len(),
                n
            )));
        }
        for v in &self.basis {
            if v.dim() != n {
                return Err(Error::DimensionMismatch("colouring vector length".into()));
            }
        }
        let mut seen = vec![false; n];
        for part in &self.parts {
            if part.is_empty() {
                return Err(Error::InvariantViolation("empty colour class".into()));
            }
            for &i in part {
                if i >= n || seen[i] {
                    return Err(Error::InvariantViolation(
                        "parts must partition the index set".into(),
                    ));
                }
                seen[i] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::InvariantViolation(
                "parts must cover every basis index".into(),
            ));
        }

        match self.mode {
            ColouringMode::Weak | ColouringMode::Strong => {
                OrthonormalFamily::new(n, self.basis.clone())?;
            }
            ColouringMode::Minimal => {
                let mut m = ComplexMatrix::zeros(n);
                for (col, v) in self.basis.iter().enumerate() {
                    for row in 0..n {
                        m.set(row, col, v.get(row));
                    }
                }
                let d = m.det().norm();
                if d <= tol::TOL_DET {
                    return Err(Error::Singular(format!(
                        "minimal colouring basis is numerically dependent (|det| = {d:.3e})"
                    )));
                }
            }
        }

        let include_diagonal = !matches!(self.mode, ColouringMode::Weak);
        for part in &self.parts {
            for (a, &i) in part.iter().enumerate() {
                for &j in part.iter().skip(if include_diagonal { a } else { a + 1 }) {
                    if !include_diagonal && i == j {
                        continue;
                    }
                    let rank_one = self.basis[i].outer(&self.basis[j]);
                    let res = target.orthogonality_residual(&rank_one)?;
                    if res > tol::TOL_ORTH {
                        return Err(Error::InvariantViolation(format!(
                            "pair ({i}, {j}) violates orthogonality by {res:.3e}"
                        )));
                    }
                    if i != j {
                        let sym = self.basis[j].outer(&self.basis[i]);
                        let res = target.orthogonality_residual(&sym)?;
                        if res > tol::TOL_ORTH {
                            return Err(Error::InvariantViolation(format!(
                                "pair ({j}, {i}) violates orthogonality by {res:.3e}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Witness attached to a parameter estimate.
#[derive(Debug, Clone)]
pub enum Witness {
    /// An independent (or clique) family.
    Family(OrthonormalFamily),
    /// A colouring partition.
    Colouring(Colouring),
}

/// A certified parameter bracket. `upper = None` encodes infinity (no witness
/// of any finite value exists in the searched class).
#[derive(Debug, Clone)]
pub struct ParameterEstimate {
    pub lower: usize,
    pub upper: Option<usize>,
    pub exact: bool,
    pub witness: Option<Witness>,
    pub method: String,
}

impl ParameterEstimate {
    pub fn new(
        lower: usize,
        upper: Option<usize>,
        witness: Option<Witness>,
        method: String,
    ) -> Result<Self> {
        if let Some(u) = upper {
            if lower > u {
                return Err(Error::InvariantViolation(format!(
                    "estimate lower {lower} exceeds upper {u} ({method})"
                )));
            }
        }
        let exact = upper == Some(lower);
        Ok(Self {
            lower,
            upper,
            exact,
            witness,
            method,
        })
    }

    pub fn exact_value(&self) -> Option<usize> {
        if self.exact {
            Some(self.lower)
        } else {
            None
        }
    }
}

/// Report of an independence test: the verdict plus the largest violation.
#[derive(Debug, Clone, Copy)]
pub struct IndependenceReport {
    pub independent: bool,
    pub max_violation: f64,
}

/// Test whether the family is a (strong) independent set for `x`: every
/// required rank-one product `v_i v_j*` must be orthogonal to `x` within
/// [`tol::TOL_ORTH`]. Strong mode includes the diagonal pairs i = j.
pub fn is_independent_set(
    x: &MatrixSubspace,
    fam: &OrthonormalFamily,
    strong: bool,
) -> Result<IndependenceReport> {
    if fam.ambient_dim() != x.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "family ambient {} vs space ambient {}",
            fam.ambient_dim(),
            x.ambient_dim()
        )));
    }
    let vs = fam.vectors();
    let mut max_violation = 0.0f64;
    for i in 0..vs.len() {
        for j in 0..vs.len() {
            if i == j && !strong {
                continue;
            }
            let res = x.orthogonality_residual(&vs[i].outer(&vs[j]))?;
            max_violation = max_violation.max(res);
        }
    }
    Ok(IndependenceReport {
        independent: max_violation <= tol::TOL_ORTH,
        max_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;
    use crate::ncgraph::{system_from_graph, traceless_from_graph};

    #[test]
    fn standard_pair_independent_for_path_system() {
        // {e_1, e_3} is weakly independent for S_{P3}: E_{1,3} is not in the span
        let s = system_from_graph(&Graph::path(3));
        let fam = OrthonormalFamily::standard(3).subfamily(&[0, 2]).unwrap();
        let rep = is_independent_set(&s, &fam, false).unwrap();
        assert!(rep.independent, "violation {}", rep.max_violation);
    }

    #[test]
    fn adjacent_pair_not_independent() {
        let s = system_from_graph(&Graph::complete(2));
        let fam = OrthonormalFamily::standard(2);
        let rep = is_independent_set(&s, &fam, false).unwrap();
        assert!(!rep.independent);
        assert!(rep.max_violation > 0.5);
    }

    #[test]
    fn singleton_always_weakly_independent() {
        let j = traceless_from_graph(&Graph::complete(3));
        let fam = OrthonormalFamily::standard(3).subfamily(&[1]).unwrap();
        let rep = is_independent_set(&j, &fam, false).unwrap();
        assert!(rep.independent);
    }

    #[test]
    fn fourier_singletons_strong_for_traceless_diagonals() {
        // J = perp(span{I, E_{i,j} i≠j}) is the traceless diagonal space;
        // each Fourier vector has flat diagonal so v_k v_k* ⊥ J
        let n = 4;
        let mut gens = vec![ComplexMatrix::identity(n)];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    gens.push(ComplexMatrix::unit(n, i, j));
                }
            }
        }
        let s = MatrixSubspace::span(&gens, crate::linalg::subspace::SpaceKind::System).unwrap();
        let j = s.perp().unwrap();
        let fourier = OrthonormalFamily::fourier(n);
        for k in 0..n {
            let singleton = fourier.subfamily(&[k]).unwrap();
            let rep = is_independent_set(&j, &singleton, true).unwrap();
            assert!(rep.independent, "violation {}", rep.max_violation);
        }
    }

    #[test]
    fn colouring_validation_weak() {
        let g = Graph::cycle(5);
        let s = system_from_graph(&g);
        let (_, colours) = crate::graphs::chi_exact(&g).unwrap();
        let colouring = Colouring {
            basis: OrthonormalFamily::standard(5).vectors().to_vec(),
            parts: crate::graphs::colouring_to_parts(&colours),
            mode: ColouringMode::Weak,
        };
        colouring.validate(&s).unwrap();
    }

    #[test]
    fn colouring_validation_rejects_bad_partition() {
        let g = Graph::complete(2);
        let s = system_from_graph(&g);
        let colouring = Colouring {
            basis: OrthonormalFamily::standard(2).vectors().to_vec(),
            parts: vec![vec![0, 1]],
            mode: ColouringMode::Weak,
        };
        assert!(colouring.validate(&s).is_err());
    }

    #[test]
    fn strong_colouring_of_traceless_graph_space() {
        let g = Graph::cycle(5);
        let j = traceless_from_graph(&g);
        let (_, colours) = crate::graphs::chi_exact(&g).unwrap();
        let colouring = Colouring {
            basis: OrthonormalFamily::standard(5).vectors().to_vec(),
            parts: crate::graphs::colouring_to_parts(&colours),
            mode: ColouringMode::Strong,
        };
        colouring.validate(&j).unwrap();
    }

    #[test]
    fn minimal_colouring_accepts_skewed_basis() {
        // a linearly independent but non-orthogonal basis for the zero space
        let z = MatrixSubspace::zero(2, crate::linalg::subspace::SpaceKind::Traceless);
        let basis = vec![
            ComplexVector::from_real(&[1.0, 0.0]),
            ComplexVector::from_real(&[1.0, 1.0]),
        ];
        let colouring = Colouring {
            basis,
            parts: vec![vec![0, 1]],
            mode: ColouringMode::Minimal,
        };
        colouring.validate(&z).unwrap();
        // the same basis fails strong validation (not orthonormal)
        let strong = Colouring {
            basis: vec![
                ComplexVector::from_real(&[1.0, 0.0]),
                ComplexVector::from_real(&[1.0, 1.0]),
            ],
            parts: vec![vec![0, 1]],
            mode: ColouringMode::Strong,
        };
        assert!(strong.validate(&z).is_err());
    }
}
