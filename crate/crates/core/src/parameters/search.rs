//! Multistart basis search: canonical seeds (standard and Fourier bases)
//! followed by Haar-random unitaries, refined by Givens rotations with
//! phases. Moves are accepted on lexicographic improvement of
//! (objective, total orthogonality slack).

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::linalg::family::OrthonormalFamily;
use crate::linalg::random::{random_unitary, rng_from_seed, sub_seed, unitary_columns};
use crate::linalg::subspace::MatrixSubspace;
use crate::linalg::vector::ComplexVector;
use crate::tol;

/// Objective evaluation of a candidate basis: a value to maximize and a
/// slack tie-breaker to minimize. `None` marks an inadmissible basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Score {
    pub objective: i64,
    pub slack: f64,
}

impl Score {
    pub fn better_than(&self, other: &Score) -> bool {
        self.objective > other.objective
            || (self.objective == other.objective && self.slack < other.slack - 1e-12)
    }
}

/// The k-th seed basis for a search stream.
pub fn seed_basis(n: usize, start: usize, seed: u64) -> OrthonormalFamily {
    match start {
        0 => OrthonormalFamily::standard(n),
        1 => OrthonormalFamily::fourier(n),
        k => unitary_columns(&random_unitary(n, sub_seed(seed, k as u64))),
    }
}

pub fn start_rng(seed: u64, start: usize) -> ChaCha8Rng {
    rng_from_seed(sub_seed(seed ^ 0x5eed_5eed_5eed_5eed, start as u64))
}

/// One Givens move with phase: rotate the (a, b) pair of vectors.
fn givens_move(
    fam: &OrthonormalFamily,
    a: usize,
    b: usize,
    theta: f64,
    phi: f64,
) -> OrthonormalFamily {
    let mut vs: Vec<ComplexVector> = fam.vectors().to_vec();
    let (c, s) = (theta.cos(), theta.sin());
    let phase = Complex64::from_polar(1.0, phi);
    let va = vs[a].clone();
    let vb = vs[b].clone();
    let mut na = va.scale(Complex64::new(c, 0.0));
    na.axpy(phase * s, &vb);
    let mut nb = vb.scale(Complex64::new(c, 0.0));
    nb.axpy(-phase.conj() * s, &va);
    vs[a] = na;
    vs[b] = nb;
    OrthonormalFamily::new(fam.ambient_dim(), vs).expect("rotation preserves orthonormality")
}

const STEP_POOL: [f64; 4] = [0.4, 0.15, 0.05, 0.015];

/// Hill-climb from a seed basis, accepting lexicographic improvements.
/// Returns the refined basis with its score (None when even the seed is
/// inadmissible and no proposal fixed that).
pub fn refine_basis(
    seed: OrthonormalFamily,
    rng: &mut ChaCha8Rng,
    steps: usize,
    eval: &mut impl FnMut(&OrthonormalFamily) -> Option<Score>,
) -> (OrthonormalFamily, Option<Score>) {
    let n = seed.ambient_dim();
    let mut current = seed;
    let mut best = eval(&current);
    if n < 2 {
        return (current, best);
    }
    for step in 0..steps {
        let a = rng.random_range(0..n);
        let mut b = rng.random_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        let theta = STEP_POOL[step % STEP_POOL.len()] * rng.sample::<f64, _>(rand_distr::StandardNormal);
        let phi = rng.random_range(0.0..std::f64::consts::TAU);
        let cand = givens_move(&current, a, b, theta, phi);
        if let Some(score) = eval(&cand) {
            let improved = match &best {
                None => true,
                Some(b0) => score.better_than(b0),
            };
            if improved {
                current = cand;
                best = Some(score);
            }
        }
    }
    (current, best)
}

/// Largest diagonal violation `max_i ‖P_J(v_i v_i*)‖` of a basis against a
/// traceless space.
pub fn max_diagonal_residual(fam: &OrthonormalFamily, j: &MatrixSubspace) -> f64 {
    fam.vectors()
        .iter()
        .map(|v| {
            j.orthogonality_residual(&v.outer(v))
                .expect("ambient dimensions match")
        })
        .fold(0.0, f64::max)
}

/// Drive a basis toward strong admissibility (all diagonals orthogonal to
/// `j`) by hill climbing on the summed diagonal violations. Returns the
/// basis once the largest violation is below [`tol::TOL_ORTH`].
pub fn refine_toward_admissible(
    seed: OrthonormalFamily,
    j: &MatrixSubspace,
    rng: &mut ChaCha8Rng,
    steps: usize,
) -> Option<OrthonormalFamily> {
    let slack = |fam: &OrthonormalFamily| -> f64 {
        fam.vectors()
            .iter()
            .map(|v| {
                let r = j
                    .orthogonality_residual(&v.outer(v))
                    .expect("ambient dimensions match");
                r * r
            })
            .sum()
    };
    let mut current = seed;
    let mut current_slack = slack(&current);
    if max_diagonal_residual(&current, j) <= tol::TOL_ORTH {
        return Some(current);
    }
    let n = current.ambient_dim();
    if n < 2 {
        return None;
    }
    for step in 0..steps {
        let a = rng.random_range(0..n);
        let mut b = rng.random_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        let theta =
            STEP_POOL[step % STEP_POOL.len()] * rng.sample::<f64, _>(rand_distr::StandardNormal);
        let phi = rng.random_range(0.0..std::f64::consts::TAU);
        let cand = givens_move(&current, a, b, theta, phi);
        let s = slack(&cand);
        if s < current_slack {
            current = cand;
            current_slack = s;
            if max_diagonal_residual(&current, j) <= tol::TOL_ORTH {
                return Some(current);
            }
        }
    }
    None
}

/// Convenience: the deterministic seed/rng pair for a start index.
pub fn start_state(n: usize, start: usize, budget: &Budget) -> (OrthonormalFamily, ChaCha8Rng) {
    (
        seed_basis(n, start, budget.seed),
        start_rng(budget.seed, start),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn givens_move_preserves_orthonormality() {
        let fam = OrthonormalFamily::fourier(4);
        let moved = givens_move(&fam, 0, 2, 0.3, 1.1);
        assert!(OrthonormalFamily::new(4, moved.vectors().to_vec()).is_ok());
    }

    #[test]
    fn refinement_improves_a_simple_objective() {
        // maximize the weight of the first vector on coordinate 0
        let mut rng = start_rng(7, 3);
        let seed = seed_basis(3, 5, 7);
        let mut eval = |f: &OrthonormalFamily| {
            Some(Score {
                objective: 0,
                slack: 1.0 - f.vectors()[0].get(0).norm_sqr(),
            })
        };
        let before = 1.0 - seed.vectors()[0].get(0).norm_sqr();
        let (_, after) = refine_basis(seed, &mut rng, 200, &mut eval);
        assert!(after.unwrap().slack <= before);
    }

    #[test]
    fn admissibility_succeeds_on_already_admissible_seed() {
        use crate::graphs::Graph;
        use crate::ncgraph::traceless_from_graph;
        let j = traceless_from_graph(&Graph::cycle(4));
        let mut rng = start_rng(0, 0);
        let fam = OrthonormalFamily::standard(4);
        assert!(refine_toward_admissible(fam, &j, &mut rng, 10).is_some());
    }
}
