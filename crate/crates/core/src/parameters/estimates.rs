//! Certified estimators for α, ω, χ, χ̂ and χ₀ of matrix subspaces.
//!
//! Graph-derived spaces are detected first and handed to the exact classical
//! oracles, which is licensed by the faithfulness theorems. Everything else
//! gets a multistart basis search for the witnessed side of the bracket and
//! inequality-derived bounds for the other side; exactness is claimed only
//! when the two sides meet.

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graphs::{alpha_exact, chi_exact, colouring_to_parts, Graph};
use crate::linalg::family::OrthonormalFamily;
use crate::linalg::matrix::ComplexMatrix;
use crate::linalg::subspace::{MatrixSubspace, SpaceKind};
use crate::linalg::vector::ComplexVector;
use crate::ncgraph::{amplify, contains_all_offdiagonal_units, recognize_graph_space, Recognition};
use crate::parameters::search::{
    max_diagonal_residual, refine_basis, refine_toward_admissible, start_state, Score,
};
use crate::parameters::{is_independent_set, Colouring, ColouringMode, ParameterEstimate, Witness};
use crate::sdp::{theta_bar, theta_system, ThetaBracket};
use crate::tol;

/// Largest ambient dimension the estimators accept.
pub const ESTIMATE_AMBIENT_BUDGET: usize = 12;

/// Integer rounding guard when turning certified real lower bounds into
/// integer ones.
const ROUND_EPS: f64 = 1e-7;

fn check_ambient(x: &MatrixSubspace) -> Result<()> {
    if x.ambient_dim() > ESTIMATE_AMBIENT_BUDGET {
        return Err(Error::Budget(format!(
            "ambient dimension {} exceeds the estimator budget of {ESTIMATE_AMBIENT_BUDGET}",
            x.ambient_dim()
        )));
    }
    Ok(())
}

/// Cheap independence upper bound: exact for recognized graph spaces, 1 when
/// every off-diagonal unit is present, otherwise the ambient dimension.
fn alpha_upper_cheap(x: &MatrixSubspace) -> Result<usize> {
    match recognize_graph_space(x) {
        Recognition::System(g) | Recognition::Traceless(g) => Ok(alpha_exact(&g)?.0),
        Recognition::NotGraphDerived => {
            if contains_all_offdiagonal_units(x) {
                Ok(1)
            } else {
                Ok(x.ambient_dim())
            }
        }
    }
}

/// Orthogonality scan of all ordered pairs of a basis against a space.
struct PairScan {
    strict: Graph,
    loose: Graph,
    marginal: bool,
    slack: f64,
}

fn scan_orthogonality(x: &MatrixSubspace, fam: &OrthonormalFamily) -> PairScan {
    let n = fam.len();
    let vs = fam.vectors();
    let mut strict = Graph::empty(n);
    let mut loose = Graph::empty(n);
    let mut slack = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            let r1 = x
                .orthogonality_residual(&vs[i].outer(&vs[j]))
                .expect("ambient dimensions match");
            let r2 = x
                .orthogonality_residual(&vs[j].outer(&vs[i]))
                .expect("ambient dimensions match");
            let r = r1.max(r2);
            if r <= tol::TOL_ORTH {
                strict.add_edge(i, j).expect("in range");
            }
            if r <= tol::TOL_EDGE {
                loose.add_edge(i, j).expect("in range");
            }
            slack += r.min(1e-3);
        }
    }
    let marginal = strict != loose;
    PairScan {
        strict,
        loose,
        marginal,
    slack,
    }
}

// ---------------------------------------------------------------------------
// independence number
// ---------------------------------------------------------------------------

/// Bracket the independence number of a system or traceless space.
pub fn alpha_estimate(x: &MatrixSubspace, budget: &Budget) -> Result<ParameterEstimate> {
    check_ambient(x)?;
    let n = x.ambient_dim();

    match recognize_graph_space(x) {
        Recognition::System(g) | Recognition::Traceless(g) => {
            let (a, verts) = alpha_exact(&g)?;
            let fam = OrthonormalFamily::standard(n).subfamily(&verts)?;
            debug_assert!(is_independent_set(x, &fam, false)?.independent);
            return ParameterEstimate::new(
                a,
                Some(a),
                Some(Witness::Family(fam)),
                "graph-derived;oracle=alpha_exact".into(),
            );
        }
        Recognition::NotGraphDerived => {}
    }

    if contains_all_offdiagonal_units(x) {
        let fam = OrthonormalFamily::standard(n).subfamily(&[0])?;
        return ParameterEstimate::new(
            1,
            Some(1),
            Some(Witness::Family(fam)),
            "offdiagonal-units-full;alpha=1".into(),
        );
    }

    // multistart search maximizing the clique number of the
    // distinguishability graph
    let starts = budget.starts.max(1);
    let per_start: Vec<Option<(usize, OrthonormalFamily, bool)>> = (0..starts)
        .into_par_iter()
        .map(|start| {
            let (seed, mut rng) = start_state(n, start, budget);
            let mut eval = |fam: &OrthonormalFamily| {
                let scan = scan_orthogonality(x, fam);
                let comp = scan.loose.complement();
                let a = alpha_exact(&comp).ok()?.0;
                Some(Score {
                    objective: a as i64,
                    slack: scan.slack,
                })
            };
            let (fam, _) = refine_basis(seed, &mut rng, budget.refine_steps, &mut eval);
            // certify on the strict graph
            let scan = scan_orthogonality(x, &fam);
            let (a, verts) = alpha_exact(&scan.strict.complement()).ok()?;
            let witness = fam.subfamily(&verts).ok()?;
            Some((a, witness, scan.marginal))
        })
        .collect();

    let mut best_value = 1usize;
    let mut best_witness = OrthonormalFamily::standard(n).subfamily(&[0])?;
    let mut marginal = false;
    for item in per_start.into_iter().flatten() {
        if item.0 > best_value {
            best_value = item.0;
            best_witness = item.1;
            marginal = item.2;
        }
    }
    debug_assert!(is_independent_set(x, &best_witness, false)?.independent);
    let upper = n;
    ParameterEstimate::new(
        best_value,
        Some(upper),
        Some(Witness::Family(best_witness)),
        format!(
            "search(starts={starts});upper=ambient{}",
            if marginal { ";marginal" } else { "" }
        ),
    )
}

/// Clique number: the independence number of the orthogonal complement. The
/// witness family satisfies `v_i v_j* ∈ x` for i ≠ j.
pub fn omega_estimate(x: &MatrixSubspace, budget: &Budget) -> Result<ParameterEstimate> {
    check_ambient(x)?;
    let perp = x.perp()?;
    let mut est = alpha_estimate(&perp, budget)?;
    est.method = format!("omega=alpha(perp);{}", est.method);
    Ok(est)
}

// ---------------------------------------------------------------------------
// chromatic numbers
// ---------------------------------------------------------------------------

/// Bracket the (weak) chromatic number of a system or traceless space.
pub fn chi_estimate(x: &MatrixSubspace, budget: &Budget) -> Result<ParameterEstimate> {
    check_ambient(x)?;
    let n = x.ambient_dim();

    match recognize_graph_space(x) {
        Recognition::System(g) | Recognition::Traceless(g) => {
            let (k, colours) = chi_exact(&g)?;
            let colouring = Colouring {
                basis: OrthonormalFamily::standard(n).vectors().to_vec(),
                parts: colouring_to_parts(&colours),
                mode: ColouringMode::Weak,
            };
            colouring.validate(x)?;
            return ParameterEstimate::new(
                k.max(1),
                Some(k.max(1)),
                Some(Witness::Colouring(colouring)),
                "graph-derived;oracle=chi_exact".into(),
            );
        }
        Recognition::NotGraphDerived => {}
    }

    let alpha_ub = alpha_upper_cheap(x)?;
    let lower = (n + alpha_ub - 1) / alpha_ub;
    let lower = lower.max(1);

    let starts = budget.starts.max(1);
    let per_start: Vec<Option<(usize, Colouring, bool)>> = (0..starts)
        .into_par_iter()
        .map(|start| {
            let (seed, mut rng) = start_state(n, start, budget);
            let mut eval = |fam: &OrthonormalFamily| {
                let scan = scan_orthogonality(x, fam);
                let k = chi_exact(&scan.loose.complement()).ok()?.0;
                Some(Score {
                    objective: -(k as i64),
                    slack: scan.slack,
                })
            };
            let (fam, _) = refine_basis(seed, &mut rng, budget.refine_steps, &mut eval);
            let scan = scan_orthogonality(x, &fam);
            let (k, colours) = chi_exact(&scan.strict.complement()).ok()?;
            let colouring = Colouring {
                basis: fam.vectors().to_vec(),
                parts: colouring_to_parts(&colours),
                mode: ColouringMode::Weak,
            };
            Some((k.max(1), colouring, scan.marginal))
        })
        .collect();

    let mut best: Option<(usize, Colouring, bool)> = None;
    for item in per_start.into_iter().flatten() {
        let replace = match &best {
            None => true,
            Some(b) => item.0 < b.0,
        };
        if replace {
            best = Some(item);
        }
    }
    let (upper, colouring, marginal) =
        best.ok_or_else(|| Error::Budget("chi search produced no candidate".into()))?;
    colouring.validate(x)?;
    ParameterEstimate::new(
        lower.min(upper),
        Some(upper),
        Some(Witness::Colouring(colouring)),
        format!(
            "search(starts={starts});lower=ceil(n/alpha_ub){}",
            if marginal { ";marginal" } else { "" }
        ),
    )
}

/// Bracket the strong chromatic number of a traceless space. The upper side
/// searches only bases whose diagonals v_i v_i* are orthogonal to the space;
/// `upper = None` (infinity) when no admissible basis is found.
pub fn strong_chi_estimate(j: &MatrixSubspace, budget: &Budget) -> Result<ParameterEstimate> {
    check_ambient(j)?;
    if j.kind() != SpaceKind::Traceless {
        return Err(Error::InvariantViolation(
            "strong chromatic number is defined for traceless spaces".into(),
        ));
    }
    let n = j.ambient_dim();

    if let Recognition::Traceless(g) = recognize_graph_space(j) {
        let (k, colours) = chi_exact(&g)?;
        let colouring = Colouring {
            basis: OrthonormalFamily::standard(n).vectors().to_vec(),
            parts: colouring_to_parts(&colours),
            mode: ColouringMode::Strong,
        };
        colouring.validate(j)?;
        return ParameterEstimate::new(
            k.max(1),
            Some(k.max(1)),
            Some(Witness::Colouring(colouring)),
            "graph-derived;oracle=chi_exact".into(),
        );
    }

    // upper bound: admissible-basis search
    let starts = budget.starts.max(1);
    let per_start: Vec<Option<(usize, Colouring, bool)>> = (0..starts)
        .into_par_iter()
        .map(|start| {
            let (seed, mut rng) = start_state(n, start, budget);
            let admissible = refine_toward_admissible(seed, j, &mut rng, budget.refine_steps)?;
            let mut eval = |fam: &OrthonormalFamily| {
                if max_diagonal_residual(fam, j) > tol::TOL_ORTH {
                    return None;
                }
                let scan = scan_orthogonality(j, fam);
                let k = chi_exact(&scan.loose.complement()).ok()?.0;
                Some(Score {
                    objective: -(k as i64),
                    slack: scan.slack,
                })
            };
            let (fam, _) = refine_basis(admissible, &mut rng, budget.refine_steps, &mut eval);
            if max_diagonal_residual(&fam, j) > tol::TOL_ORTH {
                return None;
            }
            let scan = scan_orthogonality(j, &fam);
            let (k, colours) = chi_exact(&scan.strict.complement()).ok()?;
            let colouring = Colouring {
                basis: fam.vectors().to_vec(),
                parts: colouring_to_parts(&colours),
                mode: ColouringMode::Strong,
            };
            Some((k.max(1), colouring, scan.marginal))
        })
        .collect();

    let mut best: Option<(usize, Colouring, bool)> = None;
    for item in per_start.into_iter().flatten() {
        let replace = match &best {
            None => true,
            Some(b) => item.0 < b.0,
        };
        if replace {
            best = Some(item);
        }
    }

    // lower bound: the theta-bar chain and the clique-cover inequality
    let alpha_ub = alpha_upper_cheap(j)?; // equals an upper bound on ω(J^⊥)
    let mut lower = (n + alpha_ub - 1) / alpha_ub;
    lower = lower.max(1);
    let mut method_notes = String::new();
    if best.as_ref().map(|(k, _, _)| *k) != Some(lower) {
        // only pay for the SDP when the bracket is still open
        let tb = theta_bar(j, &Budget::theta_default(budget.seed).with_starts(budget.starts.min(50)))?;
        let from_theta = (tb.lower - ROUND_EPS).ceil().max(1.0) as usize;
        lower = lower.max(from_theta);
        method_notes = format!(";lower=max(ceil(theta_bar:{:.6}),ceil(n/alpha_ub))", tb.lower);
    }

    match best {
        Some((upper, colouring, marginal)) => {
            colouring.validate(j)?;
            if lower > upper {
                return Err(Error::InvariantViolation(format!(
                    "strong chi bracket inverted: lower {lower} > upper {upper}"
                )));
            }
            ParameterEstimate::new(
                lower,
                Some(upper),
                Some(Witness::Colouring(colouring)),
                format!(
                    "search(starts={starts}){method_notes}{}",
                    if marginal { ";marginal" } else { "" }
                ),
            )
        }
        None => ParameterEstimate::new(
            lower,
            None,
            None,
            format!("search(starts={starts});no-admissible-basis{method_notes}"),
        ),
    }
}

/// Bracket the minimal chromatic number of a traceless space: strong
/// witnesses seed the search (a strong colouring is a minimal one), followed
/// by part merges and coordinate-descent perturbation of the basis.
pub fn chi0_estimate(j: &MatrixSubspace, budget: &Budget) -> Result<ParameterEstimate> {
    check_ambient(j)?;
    if j.kind() != SpaceKind::Traceless {
        return Err(Error::InvariantViolation(
            "minimal chromatic number is defined for traceless spaces".into(),
        ));
    }
    let n = j.ambient_dim();

    if let Recognition::Traceless(g) = recognize_graph_space(j) {
        let (k, colours) = chi_exact(&g)?;
        let colouring = Colouring {
            basis: OrthonormalFamily::standard(n).vectors().to_vec(),
            parts: colouring_to_parts(&colours),
            mode: ColouringMode::Minimal,
        };
        colouring.validate(j)?;
        return ParameterEstimate::new(
            k.max(1),
            Some(k.max(1)),
            Some(Witness::Colouring(colouring)),
            "graph-derived;oracle=chi_exact".into(),
        );
    }

    let strong = strong_chi_estimate(j, budget)?;
    let Some(Witness::Colouring(strong_colouring)) = strong.witness else {
        return ParameterEstimate::new(
            1,
            None,
            None,
            format!("seeded-by-strong;{}", strong.method),
        );
    };
    let mut colouring = Colouring {
        basis: strong_colouring.basis,
        parts: strong_colouring.parts,
        mode: ColouringMode::Minimal,
    };
    chi0_refine(j, &mut colouring, budget)?;
    colouring.validate(j)?;
    let upper = colouring.num_parts();
    ParameterEstimate::new(
        1.min(upper).max(1),
        Some(upper),
        Some(Witness::Colouring(colouring)),
        format!("seeded-by-strong+merge-refine;starts={}", budget.starts),
    )
}

fn cross_residual(j: &MatrixSubspace, basis: &[ComplexVector], a: &[usize], b: &[usize]) -> f64 {
    let mut worst = 0.0f64;
    for &i in a {
        for &k in b {
            let r1 = j
                .orthogonality_residual(&basis[i].outer(&basis[k]))
                .expect("ambient dimensions match");
            let r2 = j
                .orthogonality_residual(&basis[k].outer(&basis[i]))
                .expect("ambient dimensions match");
            worst = worst.max(r1.max(r2));
        }
    }
    worst
}

/// Merge colour classes whenever all cross pairs are orthogonal, trying
/// small coordinate perturbations of the (merely linearly independent) basis
/// to open further merges.
fn chi0_refine(j: &MatrixSubspace, colouring: &mut Colouring, budget: &Budget) -> Result<()> {
    let mut rng = crate::linalg::random::rng_from_seed(crate::linalg::sub_seed(
        budget.seed ^ 0xc01_0u64,
        1,
    ));
    for _round in 0..4 {
        // direct merges
        let mut merged_any = true;
        while merged_any {
            merged_any = false;
            'outer: for s in 0..colouring.parts.len() {
                for t in (s + 1)..colouring.parts.len() {
                    let r = cross_residual(j, &colouring.basis, &colouring.parts[s], &colouring.parts[t]);
                    if r <= tol::TOL_ORTH {
                        let moved = colouring.parts.remove(t);
                        colouring.parts[s].extend(moved);
                        merged_any = true;
                        break 'outer;
                    }
                }
            }
        }
        if colouring.parts.len() <= 1 {
            break;
        }
        // coordinate descent toward the closest merge candidate
        let mut best_pair = (0usize, 1usize);
        let mut best_r = f64::INFINITY;
        for s in 0..colouring.parts.len() {
            for t in (s + 1)..colouring.parts.len() {
                let r = cross_residual(j, &colouring.basis, &colouring.parts[s], &colouring.parts[t]);
                if r < best_r {
                    best_r = r;
                    best_pair = (s, t);
                }
            }
        }
        let (s, t) = best_pair;
        let mut improved = false;
        for _ in 0..budget.refine_steps {
            let part = if rng.random_range(0..2) == 0 { s } else { t };
            let idx = colouring.parts[part][rng.random_range(0..colouring.parts[part].len())];
            let coord = rng.random_range(0..j.ambient_dim());
            let delta = Complex64::new(
                0.05 * rng.sample::<f64, _>(rand_distr::StandardNormal),
                0.05 * rng.sample::<f64, _>(rand_distr::StandardNormal),
            );
            let mut cand = colouring.basis.clone();
            let mut v = cand[idx].clone();
            v.set(coord, v.get(coord) + delta);
            cand[idx] = v;
            // linear independence and own-part relations must survive
            let trial = Colouring {
                basis: cand,
                parts: colouring.parts.clone(),
                mode: ColouringMode::Minimal,
            };
            if trial.validate(j).is_err() {
                continue;
            }
            let r = cross_residual(j, &trial.basis, &trial.parts[s], &trial.parts[t]);
            if r < best_r {
                best_r = r;
                colouring.basis = trial.basis;
                improved = true;
                if r <= tol::TOL_ORTH {
                    break;
                }
            }
        }
        if !improved {
            break;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// inequality harnesses
// ---------------------------------------------------------------------------

/// All six numbers of the sandwich chain α_d(S) ≤ θ_d(S) ≤ χ̂_d(S^⊥).
#[derive(Debug, Clone)]
pub struct SandwichReport {
    pub d: usize,
    pub ambient: usize,
    pub alpha: ParameterEstimate,
    pub theta: ThetaBracket,
    pub theta_upper_combined: f64,
    pub chihat: ParameterEstimate,
    pub pass: bool,
}

/// Check the generalized sandwich inequality on the amplification M_d(S).
pub fn sandwich_check(s: &MatrixSubspace, d: usize, budget: &Budget) -> Result<SandwichReport> {
    if s.kind() != SpaceKind::System {
        return Err(Error::InvariantViolation(
            "sandwich_check expects an operator system".into(),
        ));
    }
    if s.ambient_dim() * d > ESTIMATE_AMBIENT_BUDGET {
        return Err(Error::Budget(format!(
            "sandwich_check: amplified dimension {} exceeds {ESTIMATE_AMBIENT_BUDGET}",
            s.ambient_dim() * d
        )));
    }
    let amp = amplify(s, d)?;
    let alpha = alpha_estimate(&amp, budget)?;
    let theta = theta_system(&amp, &Budget::theta_default(budget.seed).with_starts(budget.starts.min(50)))?;
    let perp = amp.perp()?;
    let chihat = strong_chi_estimate(&perp, budget)?;
    let chihat_ub = chihat.upper.map(|u| u as f64).unwrap_or(f64::INFINITY);
    let theta_upper_combined = theta.upper.min(chihat_ub);
    let pass = (alpha.lower as f64) <= theta_upper_combined + tol::TOL_GAP
        && theta.lower <= chihat_ub + tol::TOL_GAP;
    Ok(SandwichReport {
        d,
        ambient: amp.ambient_dim(),
        alpha,
        theta,
        theta_upper_combined,
        chihat,
        pass,
    })
}

/// The product inequality χ̂(J) · ω(J^⊥) ≥ n.
#[derive(Debug, Clone)]
pub struct ChiOmegaReport {
    pub n: usize,
    pub chihat: ParameterEstimate,
    pub omega: ParameterEstimate,
    /// χ̂_ub · ω_ub ≥ n (vacuous when χ̂ is infinite).
    pub upper_product_ok: bool,
    /// χ̂ · ω ≥ n on exact values, when both are exact.
    pub exact_product_ok: Option<bool>,
}

pub fn chi_omega_product_check(j: &MatrixSubspace, budget: &Budget) -> Result<ChiOmegaReport> {
    if j.kind() != SpaceKind::Traceless {
        return Err(Error::InvariantViolation(
            "chi_omega_product_check expects a traceless space".into(),
        ));
    }
    let n = j.ambient_dim();
    let chihat = strong_chi_estimate(j, budget)?;
    let omega = omega_estimate(&j.perp()?, budget)?;
    let upper_product_ok = match (chihat.upper, omega.upper) {
        (Some(c), Some(w)) => c * w >= n,
        _ => true,
    };
    let exact_product_ok = match (chihat.exact_value(), omega.exact_value()) {
        (Some(c), Some(w)) => Some(c * w >= n),
        _ => None,
    };
    Ok(ChiOmegaReport {
        n,
        chihat,
        omega,
        upper_product_ok,
        exact_product_ok,
    })
}
