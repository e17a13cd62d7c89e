//! Spectra of `[S(K_{1,m})]_H` and of `[S(P_n)]_H` with `H` a polynomial in
//! the adjacency matrix of `P_{n-1}`.

use num_rational::BigRational;

use super::{qi, quad, quad_exact, remove_closest};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph, MatrixKind};
use crate::matrix::IntMatrix;
use crate::numeric::eigenvalues_of;

/// Spectrum of `[S(K_{1,m})]_H` where `H` lives on the `m` subdivision
/// vertices.
///
/// The adjacency form needs `H` regular; the Laplacian form takes any `H`.
pub fn star_spectra(m: usize, h: &Graph, kind: MatrixKind) -> Result<Vec<f64>> {
    if m == 0 {
        return Err(Error::ParameterOutOfRange("star needs m >= 1".into()));
    }
    if h.order() != m {
        return Err(Error::OrderMismatch {
            what: "H vs edges of K_{1,m}",
            expected: m,
            found: h.order(),
        });
    }
    let mut out = vec![0.0];
    match kind {
        MatrixKind::Adjacency => {
            let r = h.is_regular().ok_or(Error::NotRegular("H"))?;
            let rq = qi(r);
            out.extend(quad_exact(&rq, &(&rq * &rq + qi(4 * m + 4)))?);
            let mut lambdas = eigenvalues_of(h, kind);
            remove_closest(&mut lambdas, r as f64)?;
            for l in lambdas {
                out.extend(quad(l, l * l + 4.0)?);
            }
        }
        MatrixKind::Laplacian => {
            let d: BigRational = qi(m) - qi(1);
            out.extend(quad_exact(&qi(m + 3), &(&d * &d + qi(4)))?);
            let mut mus = eigenvalues_of(h, kind);
            remove_closest(&mut mus, 0.0)?;
            for mu in mus {
                out.extend(quad(mu + 3.0, (mu + 1.0).powi(2) + 4.0)?);
            }
        }
        MatrixKind::Signless => {
            return Err(Error::ParameterOutOfRange(
                "star spectra cover the adjacency and Laplacian matrices".into(),
            ))
        }
    }
    Ok(out)
}

fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1u64, |acc, j| acc * (n - j) / (j + 1)) as i64
}

/// `sum_k (-1)^k C(2i+1-k, k) x^{2i+1-2k}` as ascending integer coefficients.
fn path_poly_coeffs(i: usize) -> Vec<i64> {
    let deg = 2 * i + 1;
    let mut c = vec![0i64; deg + 1];
    for k in 0..=i {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        c[deg - 2 * k] = sign * binomial((deg - k) as u64, k as u64);
    }
    c
}

fn check_path_index(n: usize, i: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::ParameterOutOfRange(format!("need n >= 3, got {n}")));
    }
    let top = (n - 1) / 2 - 1;
    if i > top {
        return Err(Error::ParameterOutOfRange(format!(
            "index i = {i} outside 0..={top} for n = {n}"
        )));
    }
    Ok(())
}

/// `P_{2i+1}` evaluated at `A(P_{n-1})`, checked to be a graph adjacency
/// matrix.
pub fn path_poly_adjacency(n: usize, i: usize) -> Result<IntMatrix> {
    check_path_index(n, i)?;
    let a = Family::Path(n - 1).build()?.adjacency();
    let k = n - 1;
    let mut out = IntMatrix::zeros(k, k);
    let mut power = IntMatrix::identity(k);
    for c in path_poly_coeffs(i) {
        out = out.add(&power.scale(c))?;
        power = power.mul(&a)?;
    }
    let ok = out.is_symmetric()
        && (0..k).all(|v| out[(v, v)] == 0)
        && out.entries().iter().all(|&x| x == 0 || x == 1);
    if !ok {
        return Err(Error::Internal(format!(
            "path polynomial of index {i} is not an adjacency matrix for n = {n}"
        )));
    }
    Ok(out)
}

/// The graph with adjacency [`path_poly_adjacency`].
pub fn path_poly_graph(n: usize, i: usize) -> Result<Graph> {
    Graph::from_adjacency(&path_poly_adjacency(n, i)?)
}

/// Adjacency spectrum of `[S(P_n)]_H` with `H` from [`path_poly_graph`]:
/// `0` and one pair per eigenvalue `2cos(pi j / n)` of `P_{n-1}`.
pub fn path_polynomial_spectrum(n: usize, i: usize) -> Result<Vec<f64>> {
    check_path_index(n, i)?;
    let coeffs = path_poly_coeffs(i);
    let mut out = vec![0.0];
    for j in 1..n {
        let cos = (std::f64::consts::PI * j as f64 / n as f64).cos();
        let x = 2.0 * cos;
        let c = coeffs.iter().rev().fold(0.0, |acc, &k| acc * x + k as f64);
        out.extend(quad(c, c * c + 8.0 * (cos + 1.0))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_polynomials() {
        assert_eq!(path_poly_coeffs(0), vec![0, 1]);
        // x^3 - 2x
        assert_eq!(path_poly_coeffs(1), vec![0, -2, 0, 1]);
        // x^5 - 4x^3 + 3x
        assert_eq!(path_poly_coeffs(2), vec![0, 3, 0, -4, 0, 1]);
    }

    #[test]
    fn index_range() {
        assert!(path_poly_adjacency(3, 0).is_ok());
        assert!(path_poly_adjacency(4, 1).is_err());
        assert!(path_poly_adjacency(5, 1).is_ok());
        assert!(path_poly_adjacency(2, 0).is_err());
        // i = 0 gives the path itself
        assert_eq!(
            path_poly_adjacency(6, 0).unwrap(),
            Family::Path(5).build().unwrap().adjacency()
        );
    }

    #[test]
    fn star_errors() {
        let p3 = Family::Path(3).build().unwrap();
        assert!(matches!(
            star_spectra(3, &p3, MatrixKind::Adjacency),
            Err(Error::NotRegular(_))
        ));
        assert!(star_spectra(3, &p3, MatrixKind::Laplacian).is_ok());
        assert!(star_spectra(4, &p3, MatrixKind::Laplacian).is_err());
    }
}
