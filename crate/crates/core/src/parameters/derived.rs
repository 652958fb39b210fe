//! Classical graphs derived from a basis: the distinguishability graph G_v
//! (edges where `v_i v_j*` is orthogonal to the space) and the confusability
//! graph H_v (edges where `v_i v_j*` belongs to the space).
//!
//! Edges are decided at the loose tolerance with a guard band: a relation
//! whose residual falls between the strict and loose thresholds flips the
//! `marginal` flag, and exactness claims built on a marginal graph must be
//! downgraded.

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::linalg::family::OrthonormalFamily;
use crate::linalg::subspace::MatrixSubspace;
use crate::tol::{TOL_EDGE, TOL_ORTH};

/// A derived graph at both decision thresholds.
#[derive(Debug, Clone)]
pub struct DerivedGraphs {
    /// Edges with residual ≤ the strict tolerance (1e-9).
    pub strict: Graph,
    /// Edges with residual ≤ the loose tolerance (1e-7).
    pub loose: Graph,
    /// True when the two disagree, i.e. some residual fell in the guard band.
    pub marginal: bool,
}

impl DerivedGraphs {
    /// The decision graph (loose threshold per the edge-decision policy).
    pub fn graph(&self) -> &Graph {
        &self.loose
    }
}

fn build(residual: impl Fn(usize, usize) -> Result<f64>, n: usize) -> Result<DerivedGraphs> {
    let mut strict = Graph::empty(n);
    let mut loose = Graph::empty(n);
    for i in 0..n {
        for j in (i + 1)..n {
            // symmetric criterion under adjoint-closed spaces; evaluate both
            // orientations and use the worse one so asymmetry can never
            // create a spurious edge
            let r = residual(i, j)?.max(residual(j, i)?);
            if r <= TOL_ORTH {
                strict.add_edge(i, j)?;
            }
            if r <= TOL_EDGE {
                loose.add_edge(i, j)?;
            }
        }
    }
    let marginal = strict != loose;
    Ok(DerivedGraphs {
        strict,
        loose,
        marginal,
    })
}

/// Distinguishability graph G_v: i ∼ j iff `v_i v_j* ⊥ x`.
pub fn distinguishability_graph(
    x: &MatrixSubspace,
    v: &OrthonormalFamily,
) -> Result<DerivedGraphs> {
    check_full(x, v)?;
    let vs = v.vectors();
    build(
        |i, j| x.orthogonality_residual(&vs[i].outer(&vs[j])),
        v.len(),
    )
}

/// Confusability graph H_v: i ∼ j iff `v_i v_j* ∈ x`.
pub fn confusability_graph(x: &MatrixSubspace, v: &OrthonormalFamily) -> Result<DerivedGraphs> {
    check_full(x, v)?;
    let vs = v.vectors();
    build(
        |i, j| x.membership_residual(&vs[i].outer(&vs[j])),
        v.len(),
    )
}

/// Both derived graphs of a basis in one pass.
pub fn derived_graphs(
    x: &MatrixSubspace,
    v: &OrthonormalFamily,
) -> Result<(DerivedGraphs, DerivedGraphs)> {
    Ok((
        distinguishability_graph(x, v)?,
        confusability_graph(x, v)?,
    ))
}

fn check_full(x: &MatrixSubspace, v: &OrthonormalFamily) -> Result<()> {
    if v.ambient_dim() != x.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "basis ambient {} vs space ambient {}",
            v.ambient_dim(),
            x.ambient_dim()
        )));
    }
    if !v.is_full() {
        return Err(Error::DimensionMismatch(
            "derived graphs need a full orthonormal basis".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;
    use crate::linalg::random::{gaussian_matrix, random_unitary, rng_from_seed, unitary_columns};
    use crate::linalg::subspace::SpaceKind;
    use crate::ncgraph::{system_from_graph, traceless_from_graph};

    #[test]
    fn standard_basis_recovers_graph_from_system() {
        for g in graphs::all_graphs_up_to_iso(4) {
            let s = system_from_graph(&g);
            let e = OrthonormalFamily::standard(g.n());
            let (gv, hv) = derived_graphs(&s, &e).unwrap();
            assert!(!gv.marginal);
            assert!(!hv.marginal);
            assert_eq!(gv.strict, g.complement(), "distinguishability is the complement");
            assert_eq!(hv.strict, g, "confusability recovers the graph");
        }
    }

    #[test]
    fn standard_basis_confusability_of_traceless_is_graph() {
        let g = graphs::Graph::cycle(5);
        let j = traceless_from_graph(&g);
        let e = OrthonormalFamily::standard(5);
        let hv = confusability_graph(&j, &e).unwrap();
        assert_eq!(hv.strict, g);
    }

    #[test]
    fn duality_distinguishability_equals_confusability_of_perp() {
        let mut rng = rng_from_seed(17);
        for trial in 0..6 {
            // random adjoint-closed subspace of M_3
            let g1 = gaussian_matrix(3, &mut rng);
            let g2 = gaussian_matrix(3, &mut rng);
            let gens = vec![g1.clone(), g1.adjoint(), g2.clone(), g2.adjoint()];
            let s = MatrixSubspace::span(&gens, SpaceKind::Plain).unwrap();
            let sp = s.perp().unwrap();
            let v = unitary_columns(&random_unitary(3, 100 + trial));
            let gv = distinguishability_graph(&s, &v).unwrap();
            let hv_perp = confusability_graph(&sp, &v).unwrap();
            assert_eq!(gv.strict, hv_perp.strict);
            assert_eq!(gv.loose, hv_perp.loose);
        }
    }
}
