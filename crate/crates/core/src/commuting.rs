//! Common eigenbases of commuting graphs and the aligned eigenvalue pairs
//! `(mu_i(G), mu_i(H))` that the closed forms consume.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, MatrixKind};
use crate::numeric::{dot, eigen_symmetric, SymMatrix, CLUSTER_TOL};

/// Exact test `A(G) A(H) = A(H) A(G)`.
pub fn commutes(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() {
        return Err(Error::OrderMismatch {
            what: "commuting pair",
            expected: g.order(),
            found: h.order(),
        });
    }
    let (a, b) = (g.adjacency(), h.adjacency());
    Ok(a.mul(&b)? == b.mul(&a)?)
}

/// Eigenvalue pairs of two commuting graph matrices aligned by a shared
/// orthonormal eigenbasis. Anchor vectors come first, in the order given;
/// when both graphs are regular the normalized all-ones vector is pair 0.
#[derive(Clone, Debug, Serialize)]
pub struct PairedSpectrum {
    pub kind: MatrixKind,
    /// `(eigenvalue for G, eigenvalue for H)` per basis vector.
    pub pairs: Vec<(f64, f64)>,
    #[serde(skip)]
    pub vectors: Vec<Vec<f64>>,
    /// Number of leading pairs pinned to anchor vectors.
    pub anchored: usize,
}

impl PairedSpectrum {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn first(&self) -> Vec<f64> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn second(&self) -> Vec<f64> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    /// Largest `|<v_i, v_j> - delta_ij|`.
    pub fn orthonormality_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in self.vectors.iter().enumerate() {
            for (j, b) in self.vectors.iter().enumerate().skip(i) {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot(a, b) - target).abs());
            }
        }
        worst
    }
}

pub fn common_eigenbasis(g: &Graph, h: &Graph, kind: MatrixKind) -> Result<PairedSpectrum> {
    common_eigenbasis_anchored(g, h, kind, &[])
}

/// Like [`common_eigenbasis`] with extra anchor vectors pinned right after
/// the all-ones vector. Each anchor must be a common eigenvector.
pub fn common_eigenbasis_anchored(
    g: &Graph,
    h: &Graph,
    kind: MatrixKind,
    anchors: &[Vec<f64>],
) -> Result<PairedSpectrum> {
    if !commutes(g, h)? {
        return Err(Error::NonCommuting);
    }
    let n = g.order();
    let both_regular = g.is_regular().is_some() && h.is_regular().is_some();
    if kind != MatrixKind::Adjacency && !both_regular {
        let which = if g.is_regular().is_none() { "G" } else { "H" };
        return Err(Error::NotRegular(which));
    }
    let m1 = SymMatrix::from_int(&g.matrix(kind))?;
    let m2 = SymMatrix::from_int(&h.matrix(kind))?;
    let scale1 = m1.norm_inf().max(1.0);
    let scale2 = m2.norm_inf().max(1.0);

    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut seeds: Vec<Vec<f64>> = Vec::new();
    if both_regular {
        seeds.push(vec![1.0; n]);
    }
    seeds.extend(anchors.iter().cloned());
    for (idx, seed) in seeds.into_iter().enumerate() {
        if seed.len() != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: seed.len(),
            });
        }
        let mut v = seed;
        for b in &basis {
            let c = dot(&v, b);
            v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
        }
        let norm = dot(&v, &v).sqrt();
        if norm < 1e-8 {
            return Err(Error::BadAnchor(idx));
        }
        v.iter_mut().for_each(|x| *x /= norm);
        for (m, scale) in [(&m1, scale1), (&m2, scale2)] {
            if m.residual(&v, m.rayleigh(&v)) > 1e-8 * scale {
                return Err(Error::BadAnchor(idx));
            }
        }
        basis.push(v);
    }
    let anchored = basis.len();

    // orthonormal basis of the complement of the anchors
    let complement: Vec<Vec<f64>> = if anchored == 0 {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect()
    } else {
        let proj = SymMatrix::from_fn(n, |i, j| {
            let id = if i == j { 1.0 } else { 0.0 };
            id - basis.iter().map(|b| b[i] * b[j]).sum::<f64>()
        })?;
        let e = eigen_symmetric(&proj);
        e.values
            .iter()
            .zip(e.vectors)
            .filter(|(val, _)| **val > 0.5)
            .map(|(_, v)| v)
            .collect()
    };
    if complement.len() + anchored != n {
        return Err(Error::Internal("anchor complement has the wrong dimension".into()));
    }

    // diagonalize the first matrix on the complement, then the second inside
    // each eigenvalue cluster of the first
    let first = eigen_symmetric(&m1.project(&complement));
    let lift = |coeffs: &[f64], cols: &[Vec<f64>]| -> Vec<f64> {
        let mut out = vec![0.0; n];
        for (c, col) in coeffs.iter().zip(cols) {
            out.iter_mut().zip(col).for_each(|(o, x)| *o += c * x);
        }
        out
    };
    let lifted: Vec<Vec<f64>> = first.vectors.iter().map(|w| lift(w, &complement)).collect();
    let tol = CLUSTER_TOL * scale1;
    let mut rest: Vec<Vec<f64>> = Vec::new();
    let mut start = 0;
    while start < lifted.len() {
        let mut end = start + 1;
        while end < lifted.len() && first.values[end] - first.values[end - 1] <= tol {
            end += 1;
        }
        let cluster = &lifted[start..end];
        if cluster.len() == 1 {
            rest.push(cluster[0].clone());
        } else {
            let inner = eigen_symmetric(&m2.project(cluster));
            rest.extend(inner.vectors.iter().map(|u| lift(u, cluster)));
        }
        start = end;
    }

    let mut tail: Vec<((f64, f64), Vec<f64>)> = rest
        .into_iter()
        .map(|v| ((m1.rayleigh(&v), m2.rayleigh(&v)), v))
        .collect();
    tail.sort_by(|a, b| a.0 .0.total_cmp(&b.0 .0).then(a.0 .1.total_cmp(&b.0 .1)));

    let mut pairs: Vec<(f64, f64)> = basis
        .iter()
        .map(|v| (m1.rayleigh(v), m2.rayleigh(v)))
        .collect();
    let mut vectors = basis;
    for (p, v) in tail {
        pairs.push(p);
        vectors.push(v);
    }
    for (p, v) in pairs.iter().zip(&vectors) {
        if m1.residual(v, p.0) > 1e-8 * scale1 || m2.residual(v, p.1) > 1e-8 * scale2 {
            return Err(Error::Internal("common eigenbasis residual too large".into()));
        }
    }
    Ok(PairedSpectrum {
        kind,
        pairs,
        vectors,
        anchored,
    })
}

/// `[1_p; -1_p]`, the second anchor for pairs inside `K_{p,p}`.
pub fn bipartition_sign_vector(p: usize) -> Vec<f64> {
    (0..2 * p).map(|i| if i < p { 1.0 } else { -1.0 }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_family;
    use crate::numeric::{compare_spectra, eigenvalues_of};

    fn fam(s: &str) -> Graph {
        make_family(s).unwrap()
    }

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9
    }

    #[test]
    fn commuting_examples() {
        assert!(commutes(&fam("complete:4"), &fam("cycle:4")).unwrap());
        assert!(commutes(&fam("complete_bipartite:3,3"), &fam("matching:3")).unwrap());
        assert!(!commutes(&fam("path:4"), &fam("cycle:4")).unwrap());
        assert!(commutes(&fam("path:4"), &fam("cycle:5")).is_err());
    }

    #[test]
    fn cycle_with_complete() {
        let p = common_eigenbasis(&fam("cycle:4"), &fam("complete:4"), MatrixKind::Laplacian).unwrap();
        let expect = [(0.0, 0.0), (2.0, 4.0), (2.0, 4.0), (4.0, 4.0)];
        assert_eq!(p.len(), 4);
        for (a, b) in p.pairs.iter().zip(expect) {
            assert!(close(*a, b), "{a:?} vs {b:?}");
        }
        assert!(p.orthonormality_defect() < 1e-10);
    }

    #[test]
    fn complement_pairs() {
        let c5 = fam("cycle:5");
        let p = common_eigenbasis(&c5, &c5.complement(), MatrixKind::Laplacian).unwrap();
        assert!(close(p.pairs[0], (0.0, 0.0)));
        for &(a, b) in &p.pairs[1..] {
            assert!((a + b - 5.0).abs() < 1e-9);
        }
    }

    #[test]
    fn anchored_kpp() {
        let p = common_eigenbasis_anchored(
            &fam("complete_bipartite:2,2"),
            &fam("matching:2"),
            MatrixKind::Laplacian,
            &[bipartition_sign_vector(2)],
        )
        .unwrap();
        assert_eq!(p.anchored, 2);
        assert!(close(p.pairs[0], (0.0, 0.0)));
        assert!(close(p.pairs[1], (4.0, 2.0)));
    }

    #[test]
    fn multisets_match_individual_spectra() {
        let g = fam("petersen");
        let h = g.complement();
        for kind in [MatrixKind::Adjacency, MatrixKind::Laplacian] {
            let p = common_eigenbasis(&g, &h, kind).unwrap();
            let a = compare_spectra(&p.first(), &eigenvalues_of(&g, kind), 1e-8).unwrap();
            let b = compare_spectra(&p.second(), &eigenvalues_of(&h, kind), 1e-8).unwrap();
            assert!(a.matched && b.matched);
            assert!(p.orthonormality_defect() < 1e-8);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            common_eigenbasis(&fam("path:4"), &fam("cycle:4"), MatrixKind::Adjacency),
            Err(Error::NonCommuting)
        ));
        // K_{1,3} commutes with itself but is not regular
        let s = fam("star:3");
        assert!(matches!(
            common_eigenbasis(&s, &s, MatrixKind::Laplacian),
            Err(Error::NotRegular(_))
        ));
        assert!(common_eigenbasis(&s, &s, MatrixKind::Adjacency).is_ok());
        // not a common eigenvector of C_4 and K_4
        assert!(matches!(
            common_eigenbasis_anchored(
                &fam("cycle:4"),
                &fam("complete:4"),
                MatrixKind::Laplacian,
                &[vec![1.0, 0.0, 0.0, 0.0]]
            ),
            Err(Error::BadAnchor(1))
        ));
    }
}
