//! Support permutations of a basis: a permutation σ with the σ(i)-th
//! component of v_i nonzero, which exists for every basis because some
//! determinant expansion term is nonzero.

use crate::error::{Error, Result};
use crate::linalg::matrix::ComplexMatrix;
use crate::linalg::vector::ComplexVector;
use crate::tol;

/// Find the lexicographically smallest support permutation by maximum
/// bipartite matching on the nonzero-entry pattern. If the pattern admits no
/// perfect matching at the default entry threshold the search retries with a
/// smaller one before giving up.
pub fn support_permutation(basis: &[ComplexVector]) -> Result<Vec<usize>> {
    let n = basis.len();
    if n == 0 {
        return Ok(vec![]);
    }
    for v in basis {
        if v.dim() != n {
            return Err(Error::DimensionMismatch(
                "support_permutation expects n vectors of length n".into(),
            ));
        }
    }
    let mut m = ComplexMatrix::zeros(n);
    for (col, v) in basis.iter().enumerate() {
        for row in 0..n {
            m.set(row, col, v.get(row));
        }
    }
    let d = m.det().norm();
    if d <= tol::TOL_RANK {
        return Err(Error::Singular(format!(
            "support_permutation needs a basis (|det| = {d:.3e})"
        )));
    }
    for tol_entry in [tol::TOL_ENTRY, 1e-12] {
        let pattern: Vec<Vec<bool>> = basis
            .iter()
            .map(|v| (0..n).map(|j| v.get(j).norm() > tol_entry).collect())
            .collect();
        if let Some(sigma) = lex_smallest_perfect_matching(&pattern) {
            return Ok(sigma);
        }
    }
    Err(Error::Singular(
        "no support permutation found at any entry threshold".into(),
    ))
}

/// Lexicographically smallest perfect matching: fix rows in order, always
/// trying the smallest feasible column.
fn lex_smallest_perfect_matching(pattern: &[Vec<bool>]) -> Option<Vec<usize>> {
    let n = pattern.len();
    let mut fixed: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for i in 0..n {
        let mut found = false;
        for j in 0..n {
            if used[j] || !pattern[i][j] {
                continue;
            }
            used[j] = true;
            if remainder_has_perfect_matching(pattern, i + 1, &used) {
                fixed.push(j);
                found = true;
                break;
            }
            used[j] = false;
        }
        if !found {
            return None;
        }
    }
    Some(fixed)
}

fn remainder_has_perfect_matching(pattern: &[Vec<bool>], from_row: usize, used: &[bool]) -> bool {
    let n = pattern.len();
    let mut matches: Vec<Option<usize>> = vec![None; n]; // column -> row
    for row in from_row..n {
        let mut seen = vec![false; n];
        if !augment(pattern, row, used, &mut seen, &mut matches) {
            return false;
        }
    }
    true
}

fn augment(
    pattern: &[Vec<bool>],
    row: usize,
    used: &[bool],
    seen: &mut [bool],
    matches: &mut [Option<usize>],
) -> bool {
    for col in 0..pattern.len() {
        if used[col] || seen[col] || !pattern[row][col] {
            continue;
        }
        seen[col] = true;
        if matches[col].is_none() || augment(pattern, matches[col].unwrap(), used, seen, matches) {
            matches[col] = Some(row);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random::{random_unitary, unitary_columns};

    #[test]
    fn standard_basis_gives_identity() {
        let basis: Vec<ComplexVector> = (0..4).map(|i| ComplexVector::basis(4, i)).collect();
        assert_eq!(support_permutation(&basis).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn swapped_basis_gives_transposition() {
        let basis = vec![ComplexVector::basis(2, 1), ComplexVector::basis(2, 0)];
        assert_eq!(support_permutation(&basis).unwrap(), vec![1, 0]);
    }

    #[test]
    fn dense_basis_ties_break_lexicographically() {
        let s = 1.0 / 2f64.sqrt();
        let basis = vec![
            ComplexVector::from_real(&[s, s]),
            ComplexVector::from_real(&[s, -s]),
        ];
        assert_eq!(support_permutation(&basis).unwrap(), vec![0, 1]);
    }

    #[test]
    fn rejects_dependent_vectors() {
        let v = ComplexVector::from_real(&[1.0, 1.0]);
        assert!(support_permutation(&[v.clone(), v]).is_err());
    }

    #[test]
    fn postcondition_on_random_bases() {
        for seed in 0..1000u64 {
            let n = 2 + (seed % 7) as usize; // dimensions 2..=8
            let u = random_unitary(n, 31_000 + seed);
            let basis = unitary_columns(&u).vectors().to_vec();
            let sigma = support_permutation(&basis).unwrap();
            let mut sorted = sigma.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..n).collect::<Vec<_>>());
            for (i, &si) in sigma.iter().enumerate() {
                assert!(basis[i].get(si).norm() > 1e-12, "seed {seed} entry zero");
            }
        }
    }
}
