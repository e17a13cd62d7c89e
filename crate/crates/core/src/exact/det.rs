//! Exact determinants: fraction-free Bareiss over the integers and Gaussian
//! elimination over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Determinant of a square integer matrix by Bareiss elimination.
/// The empty matrix has determinant 1.
pub fn bareiss_det(m: &IntMatrix) -> Result<BigInt> {
    let n = m.ensure_square()?;
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(if n == 0 { sign } else { sign * prev })
}

/// Dense square matrix of exact rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    n: usize,
    data: Vec<BigRational>,
}

impl QMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![BigRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_int(m: &IntMatrix) -> Result<Self> {
        let n = m.ensure_square()?;
        Ok(Self {
            n,
            data: m
                .entries()
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.n + j] = v;
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        QMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        QMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> QMatrix {
        QMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        let n = self.n;
        let mut out = QMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = a * other.get(k, j);
                    out.data[i * n + j] += v;
                }
            }
        }
        out
    }

    pub fn det(&self) -> BigRational {
        let n = self.n;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| self.data[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut det = BigRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return BigRational::zero();
            };
            if p != k {
                a.swap(k, p);
                det = -det;
            }
            let pivot = a[k][k].clone();
            det *= &pivot;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &pivot;
                for j in k..n {
                    let v = &f * &a[k][j];
                    a[i][j] -= v;
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<QMatrix> {
        let n = self.n;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| self.data[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut inv: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        for k in 0..n {
            let p = (k..n)
                .find(|&i| !a[i][k].is_zero())
                .ok_or_else(|| Error::Internal("singular matrix".into()))?;
            a.swap(k, p);
            inv.swap(k, p);
            let pivot_inv = a[k][k].recip();
            for j in 0..n {
                a[k][j] *= &pivot_inv;
                inv[k][j] *= &pivot_inv;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..n {
                    let (va, vi) = (&f * &a[k][j], &f * &inv[k][j]);
                    a[i][j] -= va;
                    inv[i][j] -= vi;
                }
            }
        }
        Ok(QMatrix {
            n,
            data: inv.into_iter().flatten().collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::{q, q_frac};

    #[test]
    fn bareiss_small() {
        let m = IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).unwrap();
        assert_eq!(bareiss_det(&m).unwrap(), BigInt::from(4));
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(bareiss_det(&swap).unwrap(), BigInt::from(-1));
        assert_eq!(bareiss_det(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::one());
        let singular = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(bareiss_det(&singular).unwrap().is_zero());
    }

    #[test]
    fn rational_det_and_inverse_agree_with_bareiss() {
        let m = IntMatrix::from_rows(&[vec![3, 1, 4], vec![1, 5, 9], vec![2, 6, 5]]).unwrap();
        let qm = QMatrix::from_int(&m).unwrap();
        assert_eq!(qm.det(), BigRational::from_integer(bareiss_det(&m).unwrap()));
        let inv = qm.inverse().unwrap();
        assert_eq!(qm.mul(&inv), QMatrix::identity(3));
        let half = qm.scale(&q_frac(1, 2));
        assert_eq!(half.det(), qm.det() * q_frac(1, 8));
        assert_eq!(QMatrix::identity(2).scale(&q(3)).det(), q(9));
    }
}
