//! Exact oracles: characteristic polynomials, coronals, spanning-tree counts
//! and resistance distances, all in arbitrary-precision arithmetic.

pub mod det;
pub mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use det::{bareiss_det, QMatrix};
pub use poly::{q, q_frac, q_to_f64, ExactPolynomial, RationalFunction};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::IntMatrix;

/// `det(xI - M)` by the Faddeev-LeVerrier recursion.
///
/// For integer `M` every intermediate matrix is integral and each division by
/// `k` is exact, so the recursion runs in big integers.
pub fn char_poly(m: &IntMatrix) -> Result<ExactPolynomial> {
    let n = m.ensure_square()?;
    let a: Vec<BigInt> = m.entries().iter().map(|&x| BigInt::from(x)).collect();
    // coefficients c[k] of x^k; c[n] = 1
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut prev = vec![BigInt::zero(); n * n]; // M_{k-1}, starts at 0
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut cur = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let ail = &a[i * n + l];
                if ail.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let p = &prev[l * n + j];
                    if !p.is_zero() {
                        cur[i * n + j] += ail * p;
                    }
                }
            }
            cur[i * n + i] += &c[n - k + 1];
        }
        // c_{n-k} = -tr(A M_k) / k
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i * n + l] * &cur[l * n + i];
            }
        }
        let kk = BigInt::from(k);
        if !(&tr % &kk).is_zero() {
            return Err(Error::Internal("non-integral Faddeev-LeVerrier step".into()));
        }
        c[n - k] = -(tr / kk);
        prev = cur;
    }
    Ok(ExactPolynomial::from_bigints(c))
}

/// `det(xI - M)` at a single rational point.
pub fn char_poly_at(m: &QMatrix, x: &BigRational) -> BigRational {
    QMatrix::identity(m.order()).scale(x).sub(m).det()
}

/// Coronal `1^T (xI - M)^{-1} 1` as a reduced rational function, obtained from
/// `det(xI - M - J) = (1 - coronal) det(xI - M)`.
pub fn coronal(m: &IntMatrix) -> Result<RationalFunction> {
    let n = m.ensure_square()?;
    let p = char_poly(m)?;
    let shifted = m.add(&IntMatrix::ones(n, n))?;
    let p_shifted = char_poly(&shifted)?;
    RationalFunction::new(&p - &p_shifted, p)
}

/// Number of spanning trees: any cofactor of the Laplacian.
pub fn spanning_tree_count(g: &Graph) -> Result<BigInt> {
    g.ensure_connected()?;
    bareiss_det(&g.laplacian().delete_rows_cols(&[0]))
}

/// Effective resistance between `i` and `j` with unit resistors, as the
/// ratio of Laplacian minors `det L[-{i,j}] / det L[-{i}]`.
pub fn resistance_distance(g: &Graph, i: usize, j: usize) -> Result<BigRational> {
    let n = g.order();
    if i >= n || j >= n {
        return Err(Error::ParameterOutOfRange(format!(
            "vertex pair ({i},{j}) outside 0..{n}"
        )));
    }
    if i == j {
        return Err(Error::SameVertex(i));
    }
    g.ensure_connected()?;
    let l = g.laplacian();
    let num = bareiss_det(&l.delete_rows_cols(&[i, j]))?;
    let den = bareiss_det(&l.delete_rows_cols(&[i]))?;
    Ok(BigRational::new(num, den))
}

/// Kirchhoff index `sum_{i<j} r_ij`, exact.
///
/// Uses the inverse `X` of the Laplacian grounded at vertex 0:
/// `r_0j = X_jj` and `r_ij = X_ii + X_jj - 2 X_ij`. By Cramer's rule these are
/// the same minor ratios as [`resistance_distance`].
pub fn kirchhoff_exact(g: &Graph) -> Result<BigRational> {
    g.ensure_connected()?;
    let n = g.order();
    if n == 1 {
        return Ok(BigRational::zero());
    }
    let grounded = QMatrix::from_int(&g.laplacian().delete_rows_cols(&[0]))?;
    let x = grounded.inverse()?;
    let k = n - 1;
    // sum_{i<j} (X_ii + X_jj - 2X_ij) over the grounded block plus sum_j X_jj
    let trace: BigRational = (0..k).map(|i| x.get(i, i).clone()).sum();
    let total: BigRational = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .map(|(i, j)| x.get(i, j).clone())
        .sum();
    // sum_{i<j} (X_ii + X_jj) = (k-1) trace; sum_{i<j} 2X_ij = total - trace
    let pairs = trace.clone() * q(k as i64 - 1) - (total - trace.clone());
    Ok(pairs + trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_family;

    fn fam(s: &str) -> Graph {
        make_family(s).unwrap()
    }

    #[test]
    fn char_poly_small() {
        assert_eq!(
            char_poly(&fam("complete:2").adjacency()).unwrap(),
            ExactPolynomial::from_ints(&[-1, 0, 1])
        );
        // x (x-2)^2 (x-4) = x^4 - 8x^3 + 20x^2 - 16x
        assert_eq!(
            char_poly(&fam("cycle:4").laplacian()).unwrap(),
            ExactPolynomial::from_ints(&[0, -16, 20, -8, 1])
        );
        assert!(char_poly(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn char_poly_matches_pointwise_determinant() {
        let m = fam("petersen").signless_laplacian();
        let p = char_poly(&m).unwrap();
        let qm = QMatrix::from_int(&m).unwrap();
        for x in [-3, 0, 1, 7] {
            assert_eq!(p.eval(&q(x)), char_poly_at(&qm, &q(x)));
        }
        assert_eq!(p.eval(&q_frac(1, 3)), char_poly_at(&qm, &q_frac(1, 3)));
    }

    #[test]
    fn coronal_regular_and_trivial() {
        let c4 = coronal(&fam("cycle:4").adjacency()).unwrap();
        assert_eq!(c4.numerator(), &ExactPolynomial::from_ints(&[4]));
        assert_eq!(c4.denominator(), &ExactPolynomial::from_ints(&[-2, 1]));
        let z = coronal(&IntMatrix::zeros(1, 1)).unwrap();
        assert_eq!(z.numerator(), &ExactPolynomial::from_ints(&[1]));
        assert_eq!(z.denominator(), &ExactPolynomial::x());
    }

    #[test]
    fn spanning_trees() {
        assert_eq!(spanning_tree_count(&fam("cycle:8")).unwrap(), BigInt::from(8));
        assert_eq!(spanning_tree_count(&fam("complete:4")).unwrap(), BigInt::from(16));
        assert!(matches!(
            spanning_tree_count(&fam("t_copies_of_star:2")),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn resistances() {
        assert_eq!(resistance_distance(&fam("complete:2"), 0, 1).unwrap(), q(1));
        assert_eq!(resistance_distance(&fam("path:3"), 0, 2).unwrap(), q(2));
        assert_eq!(resistance_distance(&fam("cycle:4"), 0, 2).unwrap(), q(1));
        assert!(matches!(
            resistance_distance(&fam("path:3"), 1, 1),
            Err(Error::SameVertex(1))
        ));
        assert_eq!(kirchhoff_exact(&fam("path:5")).unwrap(), q(20));
    }

    #[test]
    fn kirchhoff_equals_sum_of_minor_ratios() {
        for g in [fam("petersen"), fam("complete_bipartite:2,3"), fam("cycle:5")] {
            let n = g.order();
            let mut s = BigRational::zero();
            for i in 0..n {
                for j in i + 1..n {
                    let r = resistance_distance(&g, i, j).unwrap();
                    assert_eq!(r, resistance_distance(&g, j, i).unwrap());
                    s += r;
                }
            }
            assert_eq!(s, kirchhoff_exact(&g).unwrap());
        }
    }
}
