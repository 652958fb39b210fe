//! The two non-commutative representations of a graph and their algebra:
//! constructors, conjugation, amplification, and the Cartesian/categorical
//! products of traceless spaces.


use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::linalg::family::OrthonormalFamily;
use crate::linalg::matrix::{check_unitary, ComplexMatrix};
use crate::linalg::subspace::{MatrixSubspace, SpaceKind};

/// Operator system of a graph: span of the edge matrix units and the
/// diagonal. Dimension n + 2|E|.
pub fn system_from_graph(g: &Graph) -> MatrixSubspace {
    let n = g.n();
    let mut gens: Vec<ComplexMatrix> = (0..n).map(|i| ComplexMatrix::unit(n, i, i)).collect();
    for (i, j) in g.edges() {
        gens.push(ComplexMatrix::unit(n, i, j));
        gens.push(ComplexMatrix::unit(n, j, i));
    }
    MatrixSubspace::span_in(n, &gens, SpaceKind::System)
        .expect("matrix units of a graph form an operator system")
}

/// Traceless self-adjoint space of a graph: span of the edge matrix units.
/// Dimension 2|E|; the zero space for edgeless graphs.
pub fn traceless_from_graph(g: &Graph) -> MatrixSubspace {
    let n = g.n();
    let mut gens: Vec<ComplexMatrix> = Vec::with_capacity(2 * g.edge_count());
    for (i, j) in g.edges() {
        gens.push(ComplexMatrix::unit(n, i, j));
        gens.push(ComplexMatrix::unit(n, j, i));
    }
    MatrixSubspace::span_in(n, &gens, SpaceKind::Traceless)
        .expect("edge matrix units form a traceless self-adjoint space")
}

/// Conjugated subspace `span{u b u* : b basis}`; preserves kind and dimension.
pub fn conjugate(v: &MatrixSubspace, u: &ComplexMatrix) -> Result<MatrixSubspace> {
    if u.dim() != v.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "conjugate: unitary dim {} vs ambient {}",
            u.dim(),
            v.ambient_dim()
        )));
    }
    check_unitary(u)?;
    let ustar = u.adjoint();
    let gens: Vec<ComplexMatrix> = v.basis().iter().map(|b| u.mul(b).mul(&ustar)).collect();
    let out = MatrixSubspace::span_in(v.ambient_dim(), &gens, v.kind())?;
    if out.dim() != v.dim() {
        return Err(Error::InvariantViolation(
            "conjugation changed the dimension".into(),
        ));
    }
    Ok(out)
}

/// Full amplification M_d(X): span of `E_{k,l} ⊗ b` over k,l ∈ [d] and basis
/// elements b. Ambient dimension d·n; the kind is preserved.
pub fn amplify(v: &MatrixSubspace, d: usize) -> Result<MatrixSubspace> {
    if d < 1 {
        return Err(Error::Budget("amplify requires d >= 1".into()));
    }
    if d == 1 {
        return Ok(v.clone());
    }
    let n = v.ambient_dim();
    let mut gens = Vec::with_capacity(d * d * v.dim());
    for k in 0..d {
        for l in 0..d {
            let unit = ComplexMatrix::unit(d, k, l);
            for b in v.basis() {
                gens.push(unit.kron(b));
            }
        }
    }
    MatrixSubspace::span_in(d * n, &gens, v.kind())
}

/// Diagonal span of a full orthonormal basis: `D_x = span{x_i x_i*}`.
/// Contains the identity and is adjoint-closed, so it is an operator system.
pub fn diagonal_span(x: &OrthonormalFamily) -> Result<MatrixSubspace> {
    if !x.is_full() {
        return Err(Error::DimensionMismatch(format!(
            "diagonal_span needs a full basis ({} of {} vectors)",
            x.len(),
            x.ambient_dim()
        )));
    }
    let gens: Vec<ComplexMatrix> = x.vectors().iter().map(|v| v.outer(v)).collect();
    MatrixSubspace::span_in(x.ambient_dim(), &gens, SpaceKind::System)
}

/// Cartesian product of traceless spaces relative to bases (v, w):
/// `(J □ K)_{v,w} = J ⊗ D_w + D_v ⊗ K`, re-orthonormalized.
pub fn box_product(
    j: &MatrixSubspace,
    k: &MatrixSubspace,
    v: &OrthonormalFamily,
    w: &OrthonormalFamily,
) -> Result<MatrixSubspace> {
    if j.kind() != SpaceKind::Traceless || k.kind() != SpaceKind::Traceless {
        return Err(Error::InvariantViolation(
            "box_product is defined for traceless spaces".into(),
        ));
    }
    if v.ambient_dim() != j.ambient_dim() || w.ambient_dim() != k.ambient_dim() {
        return Err(Error::DimensionMismatch(
            "box_product bases must match the ambient spaces".into(),
        ));
    }
    if !v.is_full() || !w.is_full() {
        return Err(Error::DimensionMismatch(
            "box_product requires full orthonormal bases".into(),
        ));
    }
    let dw = diagonal_span(w)?;
    let dv = diagonal_span(v)?;
    let mut gens: Vec<ComplexMatrix> = Vec::new();
    for a in j.basis() {
        for b in dw.basis() {
            gens.push(a.kron(b));
        }
    }
    for a in dv.basis() {
        for b in k.basis() {
            gens.push(a.kron(b));
        }
    }
    MatrixSubspace::span_in(
        j.ambient_dim() * k.ambient_dim(),
        &gens,
        SpaceKind::Traceless,
    )
}

/// Outcome of testing whether a subspace is graph-derived under the standard
/// matrix-unit basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    /// x equals S_G for this graph.
    System(Graph),
    /// x equals J_G for this graph.
    Traceless(Graph),
    /// Not graph-derived (or ambiguous at the guard band).
    NotGraphDerived,
}

/// Classify every matrix unit as inside or orthogonal to `x`. Recognition
/// fires only when each unit classifies cleanly at the strict tolerance and
/// nothing lands in the marginal band, so exactness claims cannot flip on
/// rounding.
pub fn recognize_graph_space(x: &MatrixSubspace) -> Recognition {
    use crate::tol::{TOL_EDGE, TOL_ORTH};
    let n = x.ambient_dim();
    let mut member = vec![vec![false; n]; n];
    let mut in_count = 0usize;
    for i in 0..n {
        for j in 0..n {
            let u = ComplexMatrix::unit(n, i, j);
            let mem = x.membership_residual(&u).expect("ambient dims match");
            let orth = x.orthogonality_residual(&u).expect("ambient dims match");
            if mem <= TOL_ORTH && orth > TOL_EDGE {
                member[i][j] = true;
                in_count += 1;
            } else if orth <= TOL_ORTH && mem > TOL_EDGE {
                member[i][j] = false;
            } else {
                return Recognition::NotGraphDerived;
            }
        }
    }
    if x.dim() != in_count {
        return Recognition::NotGraphDerived;
    }
    // symmetric off-diagonal pattern
    for i in 0..n {
        for j in 0..n {
            if member[i][j] != member[j][i] {
                return Recognition::NotGraphDerived;
            }
        }
    }
    let diag_in = (0..n).filter(|&i| member[i][i]).count();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if member[i][j] {
                g.add_edge(i, j).expect("indices in range");
            }
        }
    }
    if diag_in == n {
        Recognition::System(g)
    } else if diag_in == 0 {
        Recognition::Traceless(g)
    } else {
        Recognition::NotGraphDerived
    }
}

/// True when every off-diagonal matrix unit lies in `x`. Any two orthonormal
/// vectors then have a rank-one product that is not orthogonal to `x` (some
/// cross entry is nonzero), so the independence number is 1.
pub fn contains_all_offdiagonal_units(x: &MatrixSubspace) -> bool {
    let n = x.ambient_dim();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let u = ComplexMatrix::unit(n, i, j);
            if x.membership_residual(&u).expect("ambient dims match") > crate::tol::TOL_ORTH {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;
    use crate::linalg::random::random_unitary;
    use crate::tol;
    use num_complex::Complex64;

    #[test]
    fn system_of_k2_is_full_algebra() {
        let s = system_from_graph(&Graph::complete(2));
        assert_eq!(s.dim(), 4);
    }

    #[test]
    fn system_of_edgeless_is_diagonal() {
        for n in 1..=4 {
            let s = system_from_graph(&Graph::empty(n));
            assert_eq!(s.dim(), n);
        }
    }

    #[test]
    fn system_of_p3_dimension() {
        let s = system_from_graph(&Graph::path(3));
        assert_eq!(s.dim(), 3 + 4);
    }

    #[test]
    fn traceless_of_k2() {
        let j = traceless_from_graph(&Graph::complete(2));
        assert_eq!(j.dim(), 2);
        assert_eq!(j.kind(), SpaceKind::Traceless);
    }

    #[test]
    fn traceless_of_edgeless_is_zero() {
        let j = traceless_from_graph(&Graph::empty(3));
        assert!(j.is_zero());
    }

    #[test]
    fn perp_duality_for_graphs() {
        for g in graphs::all_graphs_up_to_iso(4) {
            let s = system_from_graph(&g);
            let j_comp = traceless_from_graph(&g.complement());
            assert!(s.perp().unwrap().equals(&j_comp, tol::TOL_SUBSPACE_EQ).unwrap());
            let j = traceless_from_graph(&g);
            let s_comp = system_from_graph(&g.complement());
            assert!(j.perp().unwrap().equals(&s_comp, tol::TOL_SUBSPACE_EQ).unwrap());
        }
    }

    #[test]
    fn perp_is_involution_on_random_subspaces() {
        use crate::linalg::random::{gaussian_matrix, rng_from_seed};
        let mut rng = rng_from_seed(11);
        for _ in 0..10 {
            let gens: Vec<ComplexMatrix> = (0..4).map(|_| gaussian_matrix(3, &mut rng)).collect();
            let v = MatrixSubspace::span(&gens, SpaceKind::Plain).unwrap();
            let vpp = v.perp().unwrap().perp().unwrap();
            assert!(v.equals(&vpp, 1e-8).unwrap());
        }
    }

    #[test]
    fn conjugate_by_identity() {
        let j = traceless_from_graph(&Graph::cycle(4));
        let c = conjugate(&j, &ComplexMatrix::identity(4)).unwrap();
        assert!(c.equals(&j, 1e-10).unwrap());
    }

    #[test]
    fn conjugate_by_permutation_relabels() {
        let g = Graph::path(3);
        let sigma = vec![2usize, 0, 1];
        let mut u = ComplexMatrix::zeros(3);
        for (v, &sv) in sigma.iter().enumerate() {
            u.set(sv, v, Complex64::ONE);
        }
        let lhs = conjugate(&traceless_from_graph(&g), &u).unwrap();
        let rhs = traceless_from_graph(&g.relabel(&sigma));
        assert!(lhs.equals(&rhs, 1e-10).unwrap());
    }

    #[test]
    fn conjugate_preserves_dimension() {
        let u = random_unitary(4, 5);
        let j = traceless_from_graph(&Graph::cycle(4));
        let c = conjugate(&j, &u).unwrap();
        assert_eq!(c.dim(), j.dim());
        // inverse conjugation recovers the original
        let back = conjugate(&c, &u.adjoint()).unwrap();
        assert!(back.equals(&j, 1e-8).unwrap());
    }

    #[test]
    fn conjugate_rejects_non_unitary() {
        let j = traceless_from_graph(&Graph::complete(2));
        let m = ComplexMatrix::diagonal(&[2.0, 1.0]);
        assert!(conjugate(&j, &m).is_err());
    }

    #[test]
    fn amplify_identity_cases() {
        let j = traceless_from_graph(&Graph::complete(2));
        let a1 = amplify(&j, 1).unwrap();
        assert!(a1.equals(&j, 1e-12).unwrap());
        let a3 = amplify(&j, 3).unwrap();
        assert_eq!(a3.dim(), 9 * j.dim());
        assert_eq!(a3.ambient_dim(), 6);
        assert_eq!(a3.kind(), SpaceKind::Traceless);
    }

    #[test]
    fn amplify_identity_span() {
        let s = MatrixSubspace::span(&[ComplexMatrix::identity(2)], SpaceKind::System).unwrap();
        let a = amplify(&s, 2).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.kind(), SpaceKind::System);
    }

    #[test]
    fn amplified_system_matches_amplified_graph() {
        let g = Graph::path(3);
        let s = system_from_graph(&g);
        let a = amplify(&s, 2).unwrap();
        let blown = system_from_graph(&g.amplified(2));
        assert!(a.equals(&blown, 1e-9).unwrap());
    }

    #[test]
    fn diagonal_span_standard_basis() {
        let d = diagonal_span(&OrthonormalFamily::standard(3)).unwrap();
        assert_eq!(d.dim(), 3);
        assert!(d
            .contains(&ComplexMatrix::identity(3), tol::TOL_ORTH * 10.0)
            .unwrap());
    }

    #[test]
    fn diagonal_span_fourier_contains_identity() {
        for n in 2..=5 {
            let d = diagonal_span(&OrthonormalFamily::fourier(n)).unwrap();
            assert_eq!(d.dim(), n);
            assert!(d.contains(&ComplexMatrix::identity(n), 1e-8).unwrap());
        }
    }

    #[test]
    fn diagonal_span_rejects_partial_family() {
        let partial = OrthonormalFamily::standard(3).subfamily(&[0, 1]).unwrap();
        assert!(diagonal_span(&partial).is_err());
    }

    #[test]
    fn box_product_of_graphs_is_cartesian_product() {
        let g = Graph::complete(2);
        let h = Graph::complete(2);
        let jg = traceless_from_graph(&g);
        let jh = traceless_from_graph(&h);
        let e = OrthonormalFamily::standard(2);
        let boxed = box_product(&jg, &jh, &e, &e).unwrap();
        let expected = traceless_from_graph(&g.cartesian_product(&h));
        assert!(boxed.equals(&expected, tol::TOL_SUBSPACE_EQ).unwrap());
        assert_eq!(boxed.dim(), 2 * 1 * 2 + 2 * 2 * 1);
    }

    #[test]
    fn box_product_of_zero_spaces_is_zero() {
        let z2 = MatrixSubspace::zero(2, SpaceKind::Traceless);
        let e = OrthonormalFamily::standard(2);
        let boxed = box_product(&z2, &z2, &e, &e).unwrap();
        assert!(boxed.is_zero());
    }

    #[test]
    fn recognizes_graph_derived_spaces() {
        let g = Graph::cycle(5);
        assert_eq!(
            recognize_graph_space(&system_from_graph(&g)),
            Recognition::System(g.clone())
        );
        assert_eq!(
            recognize_graph_space(&traceless_from_graph(&g)),
            Recognition::Traceless(g.clone())
        );
        // perp of a system is the traceless space of the complement
        assert_eq!(
            recognize_graph_space(&system_from_graph(&g).perp().unwrap()),
            Recognition::Traceless(g.complement())
        );
    }

    #[test]
    fn does_not_recognize_skew_spaces() {
        // span{I, E_{i,j} : i ≠ j}: diagonal units are neither in nor out
        let n = 3;
        let mut gens = vec![ComplexMatrix::identity(n)];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    gens.push(ComplexMatrix::unit(n, i, j));
                }
            }
        }
        let s = MatrixSubspace::span(&gens, SpaceKind::System).unwrap();
        assert_eq!(recognize_graph_space(&s), Recognition::NotGraphDerived);
        assert!(contains_all_offdiagonal_units(&s));
        assert!(!contains_all_offdiagonal_units(&system_from_graph(&Graph::path(3))));
    }

    #[test]
    fn tensor_of_traceless_matches_categorical_product() {
        let pool = [Graph::complete(2), Graph::path(3), Graph::cycle(4)];
        for g in &pool {
            for h in &pool {
                let lhs = traceless_from_graph(g).tensor(&traceless_from_graph(h)).unwrap();
                let rhs = traceless_from_graph(&g.categorical_product(h));
                assert!(lhs.equals(&rhs, tol::TOL_SUBSPACE_EQ).unwrap());
            }
        }
    }
}
