//! Floating-point symmetric eigensolver and tolerance-aware spectra.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MatrixKind};
use crate::matrix::IntMatrix;

/// Relative clustering tolerance shared by spectra and eigenbasis pairing.
pub const CLUSTER_TOL: f64 = 1e-8;

/// Dense symmetric real matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::LengthMismatch {
                left: n * n,
                right: data.len(),
            });
        }
        let m = Self { n, data };
        let scale = m.norm_inf().max(1.0);
        for i in 0..n {
            for j in 0..i {
                if (m.get(i, j) - m.get(j, i)).abs() > 1e-12 * scale {
                    return Err(Error::Asymmetric);
                }
            }
        }
        Ok(m)
    }

    pub fn from_int(m: &IntMatrix) -> Result<Self> {
        let n = m.ensure_square()?;
        if !m.is_symmetric() {
            return Err(Error::Asymmetric);
        }
        Ok(Self { n, data: m.to_f64() })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Result<Self> {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self::new(n, data)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// `W^T M W` for a matrix `W` given by its columns.
    pub fn project(&self, cols: &[Vec<f64>]) -> SymMatrix {
        let k = cols.len();
        let mw: Vec<Vec<f64>> = cols.iter().map(|c| self.mul_vec(c)).collect();
        let mut data = vec![0.0; k * k];
        for a in 0..k {
            for b in a..k {
                let v = dot(&cols[a], &mw[b]);
                data[a * k + b] = v;
                data[b * k + a] = v;
            }
        }
        SymMatrix { n: k, data }
    }

    /// `||M v - lambda v||_2`.
    pub fn residual(&self, v: &[f64], lambda: f64) -> f64 {
        let mv = self.mul_vec(v);
        mv.iter()
            .zip(v)
            .map(|(a, b)| (a - lambda * b).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    pub fn rayleigh(&self, v: &[f64]) -> f64 {
        dot(v, &self.mul_vec(v)) / dot(v, v)
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Eigenvalues ascending with matching orthonormal eigenvectors.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    /// `vectors[k]` belongs to `values[k]`.
    pub vectors: Vec<Vec<f64>>,
}

/// Symmetric eigendecomposition, ascending.
pub fn eigen_symmetric(m: &SymMatrix) -> Eigen {
    let n = m.n;
    if n == 0 {
        return Eigen {
            values: Vec::new(),
            vectors: Vec::new(),
        };
    }
    let e = DMatrix::from_row_slice(n, n, &m.data).symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| e.eigenvalues[i].total_cmp(&e.eigenvalues[j]));
    Eigen {
        values: order.iter().map(|&i| e.eigenvalues[i]).collect(),
        vectors: order
            .iter()
            .map(|&j| e.eigenvectors.column(j).iter().copied().collect())
            .collect(),
    }
}

/// Eigendecomposition of an integer matrix, rejecting asymmetric input.
pub fn eigen_int(m: &IntMatrix) -> Result<Eigen> {
    Ok(eigen_symmetric(&SymMatrix::from_int(m)?))
}

/// Sorted distinct eigenvalues with multiplicities.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub mult: usize,
}

impl Spectrum {
    /// Groups sorted values whose consecutive gap is within
    /// `CLUSTER_TOL * max(1, spectral radius)`; a cluster reports its mean.
    pub fn from_values(values: &[f64]) -> Self {
        let radius = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        Self::cluster(values, CLUSTER_TOL * radius.max(1.0))
    }

    pub fn cluster(values: &[f64], tol: f64) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let mut entries: Vec<SpectrumEntry> = Vec::new();
        let mut sum = 0.0;
        let mut last = f64::NEG_INFINITY;
        for v in sorted {
            match entries.last_mut() {
                Some(e) if v - last <= tol => {
                    e.mult += 1;
                    sum += v;
                    e.value = sum / e.mult as f64;
                }
                _ => {
                    entries.push(SpectrumEntry { value: v, mult: 1 });
                    sum = v;
                }
            }
            last = v;
        }
        Self { entries }
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.mult).sum()
    }

    pub fn expanded(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat(e.value).take(e.mult))
            .collect()
    }

    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.entries
            .iter()
            .filter(|e| (e.value - value).abs() <= tol)
            .map(|e| e.mult)
            .sum()
    }
}

pub fn spectrum_of(g: &Graph, kind: MatrixKind) -> Spectrum {
    let e = eigen_int(&g.matrix(kind)).expect("graph matrices are symmetric");
    Spectrum::from_values(&e.values)
}

/// Raw ascending eigenvalues of a graph matrix.
pub fn eigenvalues_of(g: &Graph, kind: MatrixKind) -> Vec<f64> {
    eigen_int(&g.matrix(kind))
        .expect("graph matrices are symmetric")
        .values
}

/// Outcome of comparing a closed form against an oracle, entry by entry
/// after sorting both multisets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub matched: bool,
    pub max_abs_residual: f64,
    pub tolerance: f64,
    /// `(closed form, oracle)` pairs in ascending order.
    pub pairs: Vec<(f64, f64)>,
}

/// Multiset comparison: matched iff every sorted pair satisfies
/// `|a - b| <= tol * max(1, |a|)`.
pub fn compare_spectra(a: &[f64], b: &[f64], tol: f64) -> Result<VerificationReport> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let mut matched = a.iter().chain(&b).all(|x| x.is_finite());
    let mut max_abs_residual: f64 = 0.0;
    for (x, y) in a.iter().zip(&b) {
        let r = (x - y).abs();
        max_abs_residual = max_abs_residual.max(r);
        if r > tol * x.abs().max(1.0) {
            matched = false;
        }
    }
    Ok(VerificationReport {
        matched,
        max_abs_residual,
        tolerance: tol,
        pairs: a.into_iter().zip(b).collect(),
    })
}

pub fn compare_spectrum(a: &Spectrum, b: &Spectrum, tol: f64) -> Result<VerificationReport> {
    compare_spectra(&a.expanded(), &b.expanded(), tol)
}
