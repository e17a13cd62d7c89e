use num_rational::BigRational;
use proptest::prelude::*;

use subdivision_spectra::closed_form::{lspec_merged, star_spectra, MergedVariant, RegularPairContext};
use subdivision_spectra::commuting::common_eigenbasis;
use subdivision_spectra::constructions::{merged_laplacian_blocks, merged_subdivision, MergedTriple};
use subdivision_spectra::exact::{
    char_poly, coronal, kirchhoff_exact, q, spanning_tree_count, ExactPolynomial, RationalFunction,
};
use subdivision_spectra::invariants::{kf_closed_exact, tau_closed_exact};
use subdivision_spectra::numeric::{compare_spectra, eigen_symmetric, eigenvalues_of, SymMatrix};
use subdivision_spectra::{Family, Graph, IntMatrix, MatrixKind};

fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, pairs.zip(bits).filter(|p| p.1).map(|p| p.0)).unwrap()
    })
}

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..=7).prop_flat_map(graph_on)
}

/// `(G, H1, H2)` with `G` nonempty.
fn triple() -> impl Strategy<Value = MergedTriple> {
    graph()
        .prop_filter("G needs an edge", |g| g.size() > 0)
        .prop_flat_map(|g| {
            let (n, m) = (g.order(), g.size());
            (Just(g), graph_on(n), graph_on(m))
        })
        .prop_map(|(g, h1, h2)| MergedTriple::new(g, h1, h2).unwrap())
}

fn symmetric(max: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(-2i64..=2, n * (n + 1) / 2).prop_map(move |upper| {
            let mut it = upper.into_iter();
            let mut rows = vec![vec![0; n]; n];
            for i in 0..n {
                for j in i..n {
                    let x = it.next().unwrap();
                    rows[i][j] = x;
                    rows[j][i] = x;
                }
            }
            IntMatrix::from_rows(&rows).unwrap()
        })
    })
}

/// Two circulant powers on the same cycle, so they commute.
fn circulant_pair() -> impl Strategy<Value = (Graph, Graph)> {
    (5usize..=9)
        .prop_flat_map(|n| (Just(n), 1..=(n - 1) / 2, 1..=(n - 1) / 2))
        .prop_map(|(n, a, b)| {
            let c = |k| Family::CirculantPower { n, k }.build().unwrap();
            (c(a), c(b))
        })
}

fn close(a: &[f64], b: &[f64]) -> bool {
    compare_spectra(a, b, 1e-8).unwrap().matched
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn construction_law(t in triple()) {
        let built = merged_subdivision(&t).unwrap();
        let (n, m) = (t.g.order(), t.g.size());
        prop_assert_eq!(built.order(), n + m);
        prop_assert_eq!(built.size(), 2 * m + t.h1.size() + t.h2.size());
        prop_assert_eq!(merged_laplacian_blocks(&t).unwrap().assemble(), built.laplacian());
    }

    #[test]
    fn laplacian_trace_and_kernel(t in triple()) {
        let built = merged_subdivision(&t).unwrap();
        let mu = eigenvalues_of(&built, MatrixKind::Laplacian);
        let sum: f64 = mu.iter().sum();
        prop_assert!((sum - 2.0 * built.size() as f64).abs() < 1e-8);
        prop_assert!(mu[0].abs() < 1e-8);
    }

    #[test]
    fn subdivision_spectrum_is_symmetric(g in graph().prop_filter("edge", |g| g.size() > 0)) {
        let t = MergedTriple::new(g.clone(), Graph::empty(g.order()).unwrap(), Graph::empty(g.size()).unwrap()).unwrap();
        let lambda = eigenvalues_of(&merged_subdivision(&t).unwrap(), MatrixKind::Adjacency);
        let negated: Vec<f64> = lambda.iter().map(|x| -x).collect();
        prop_assert!(close(&lambda, &negated));
    }

    #[test]
    fn char_poly_matches_eigenvalues(m in symmetric(6)) {
        let p = char_poly(&m).unwrap();
        prop_assert_eq!(p.degree(), Some(m.rows()));
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.coeff(m.rows() - 1), -q(m.trace()));
        let roots = p.real_roots().unwrap();
        prop_assert!(close(&roots, &eigen_symmetric(&SymMatrix::from_int(&m).unwrap()).values));
    }

    #[test]
    fn coronal_identity(m in symmetric(6), alpha in prop::sample::select(vec![1i64, -1, 2])) {
        let n = m.rows();
        let lhs = RationalFunction::from_poly(char_poly(&m.add(&IntMatrix::ones(n, n).scale(alpha)).unwrap()).unwrap());
        let rhs = RationalFunction::from_poly(ExactPolynomial::one())
            .sub(&coronal(&m).unwrap().scale(&q(alpha)))
            .mul(&RationalFunction::from_poly(char_poly(&m).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_is_consistent((g, h) in circulant_pair()) {
        let paired = common_eigenbasis(&g, &h, MatrixKind::Laplacian).unwrap();
        let firsts: Vec<f64> = paired.pairs.iter().map(|p| p.0).collect();
        let seconds: Vec<f64> = paired.pairs.iter().map(|p| p.1).collect();
        prop_assert!(close(&firsts, &eigenvalues_of(&g, MatrixKind::Laplacian)));
        prop_assert!(close(&seconds, &eigenvalues_of(&h, MatrixKind::Laplacian)));
        prop_assert!(paired.orthonormality_defect() < 1e-8);
    }

    #[test]
    fn star_laplacian_any_h(h in (1usize..=6).prop_flat_map(graph_on)) {
        let m = h.order();
        let t = MergedTriple::new(Family::Star(m).build().unwrap(), Graph::empty(m + 1).unwrap(), h.clone()).unwrap();
        let oracle = eigenvalues_of(&merged_subdivision(&t).unwrap(), MatrixKind::Laplacian);
        prop_assert!(close(&star_spectra(m, &h, MatrixKind::Laplacian).unwrap(), &oracle));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn merged_closed_forms((g, h) in circulant_pair()) {
        let ctx = RegularPairContext::new(&g, &h).unwrap();
        for v in MergedVariant::ALL {
            let built = v.construct(&g, &h).unwrap();
            prop_assert!(close(&lspec_merged(&ctx, v).unwrap(), &eigenvalues_of(&built, MatrixKind::Laplacian)));
            if v != MergedVariant::Line {
                let tau = BigRational::from_integer(spanning_tree_count(&built).unwrap());
                prop_assert_eq!(tau_closed_exact(&ctx, v).unwrap(), tau);
                prop_assert_eq!(kf_closed_exact(&ctx, v).unwrap(), kirchhoff_exact(&built).unwrap());
            }
        }
    }
}
