//! Adjacency characteristic polynomials and spectra of the Q-complemented
//! graph `[S(G)]^{}_{complement of L(G)}` and the complete subdivision graph
//! `[S(G)]^{}_{K_m}`, built from the coronal of the line graph.

use super::{qi, quad, quad_exact, remove_closest, repeat};
use crate::error::{Error, Result};
use crate::exact::{char_poly, coronal, q, ExactPolynomial, RationalFunction};
use crate::graph::{Graph, MatrixKind};
use crate::numeric::eigenvalues_of;

fn poly(c: &[i64]) -> ExactPolynomial {
    ExactPolynomial::from_ints(c)
}

fn rf(p: ExactPolynomial) -> RationalFunction {
    RationalFunction::from_poly(p)
}

fn line_coronal(g: &Graph) -> Result<RationalFunction> {
    coronal(&g.line_graph()?.adjacency())
}

fn into_polynomial(f: RationalFunction, degree: usize) -> Result<ExactPolynomial> {
    let p = f
        .as_polynomial()
        .ok_or_else(|| Error::Internal("characteristic function did not reduce".into()))?;
    if p.degree() != Some(degree) || !p.is_monic() {
        return Err(Error::Internal(format!(
            "characteristic polynomial should be monic of degree {degree}, got {p}"
        )));
    }
    Ok(p)
}

/// `(-1)^n (x-1)^m (1 - x/(1-x) chi((x^2+x-2)/(1-x))) Q_G(-x)` where `chi` is
/// the coronal of the line graph and `Q_G` the signless Laplacian
/// characteristic polynomial.
pub fn q_complemented_charpoly(g: &Graph) -> Result<ExactPolynomial> {
    let (n, m) = (g.order(), g.size());
    let chi = line_coronal(g)?;
    let one_minus_x = poly(&[1, -1]);
    let inner = RationalFunction::new(poly(&[-2, 1, 1]), one_minus_x.clone())?;
    let weight = RationalFunction::new(ExactPolynomial::x(), one_minus_x)?;
    let term = rf(ExactPolynomial::one()).sub(&weight.mul(&chi.compose(&inner)?));
    let qg = char_poly(&g.signless_laplacian())?.compose(&poly(&[0, -1]));
    let sign = if n % 2 == 0 { q(1) } else { q(-1) };
    let f = rf(poly(&[-1, 1]).pow(m)).mul(&term).mul(&rf(qg)).scale(&sign);
    into_polynomial(f, n + m)
}

fn line_degree(g: &Graph, min: usize) -> Result<usize> {
    let r = g
        .line_graph()?
        .is_regular()
        .ok_or_else(|| Error::hypothesis("the line graph of G must be regular"))?;
    if r < min {
        return Err(Error::hypothesis(format!(
            "the line graph of G must have degree >= {min}, got {r}"
        )));
    }
    Ok(r)
}

/// Adjacency spectrum of the Q-complemented graph when `L(G)` is `r`-regular
/// with `r >= 1`: `1^{m-1}`, `-nu_i` over the signless Laplacian eigenvalues
/// of `G` with one `r + 2` removed, and an exact pair.
pub fn q_complemented_aspec_line_regular(g: &Graph) -> Result<Vec<f64>> {
    let r = line_degree(g, 1)?;
    let m = g.size();
    let mut out = Vec::new();
    repeat(&mut out, 1.0, m - 1);
    let mut nus = eigenvalues_of(g, MatrixKind::Signless);
    remove_closest(&mut nus, (r + 2) as f64)?;
    out.extend(nus.iter().map(|nu| -nu));
    let a = q(m as i64 - r as i64 - 1);
    out.extend(quad_exact(&a, &(&a * &a + qi(4 * r + 8)))?);
    Ok(out)
}

/// Adjacency spectrum of the Q-complemented graph of `K_{p,q}`.
pub fn q_complemented_kpq(p: usize, qq: usize) -> Result<Vec<f64>> {
    if p == 0 || qq == 0 {
        return Err(Error::ParameterOutOfRange("K_{p,q} needs p, q >= 1".into()));
    }
    let mut out = vec![0.0];
    repeat(&mut out, 1.0, p * qq - 1);
    repeat(&mut out, -(p as f64), qq - 1);
    repeat(&mut out, -(qq as f64), p - 1);
    let a = qi((p - 1) * (qq - 1));
    out.extend(quad_exact(&a, &(&a * &a + qi(4 * (p + qq))))?);
    Ok(out)
}

/// `(x+1)^{m-n} (1 - x chi(x^2+x-2)) Q_G(x^2+x)`, with the power allowed to
/// be negative.
pub fn complete_subdivision_charpoly(g: &Graph) -> Result<ExactPolynomial> {
    let (n, m) = (g.order(), g.size());
    let chi = line_coronal(g)?;
    let shifted = chi.compose(&rf(poly(&[-2, 1, 1])))?;
    let term = rf(ExactPolynomial::one()).sub(&rf(ExactPolynomial::x()).mul(&shifted));
    let qg = char_poly(&g.signless_laplacian())?.compose(&poly(&[0, 1, 1]));
    let x1 = poly(&[1, 1]);
    let power = if m >= n {
        rf(x1.pow(m - n))
    } else {
        RationalFunction::new(ExactPolynomial::one(), x1.pow(n - m))?
    };
    into_polynomial(power.mul(&term).mul(&rf(qg)), n + m)
}

/// Adjacency spectrum of the complete subdivision graph of `t` disjoint
/// copies of `K_{1,2}`.
pub fn complete_subdivision_tstars(t: usize) -> Result<Vec<f64>> {
    if t == 0 {
        return Err(Error::ParameterOutOfRange("need t >= 1".into()));
    }
    let mut out = Vec::new();
    repeat(&mut out, 0.0, t);
    for (disc, times) in [(5, t), (13, t - 1)] {
        let [a, b] = quad_exact(&q(-1), &q(disc))?;
        repeat(&mut out, a, times);
        repeat(&mut out, b, times);
    }
    let s = q(2 * t as i64 - 1);
    out.extend(quad_exact(&s, &(&s * &s + q(12)))?);
    Ok(out)
}

/// Adjacency spectrum of the complete subdivision graph when `L(G)` is
/// `r`-regular with `r >= 2` and `m >= n`.
pub fn complete_subdivision_line_regular(g: &Graph) -> Result<Vec<f64>> {
    let r = line_degree(g, 2)?;
    let (n, m) = (g.order(), g.size());
    if m < n {
        return Err(Error::hypothesis(format!("need m >= n, got m = {m}, n = {n}")));
    }
    let mut out = Vec::new();
    repeat(&mut out, -1.0, m - n);
    let s = q(m as i64 - 1);
    out.extend(quad_exact(&s, &(&s * &s + qi(4 * r + 8)))?);
    let mut nus = eigenvalues_of(g, MatrixKind::Signless);
    remove_closest(&mut nus, (r + 2) as f64)?;
    for nu in nus {
        out.extend(quad(-1.0, 4.0 * nu + 1.0)?);
    }
    Ok(out)
}

/// Adjacency spectrum of the complete subdivision graph of `K_{p,q}`,
/// excluding `K_{1,2}` and `K_{2,1}`.
pub fn complete_subdivision_kpq(p: usize, qq: usize) -> Result<Vec<f64>> {
    if p == 0 || qq == 0 {
        return Err(Error::ParameterOutOfRange("K_{p,q} needs p, q >= 1".into()));
    }
    if (p, qq) == (1, 2) || (p, qq) == (2, 1) {
        return Err(Error::hypothesis("K_{1,2} is excluded"));
    }
    let mut out = vec![0.0];
    repeat(&mut out, -1.0, (p - 1) * (qq - 1));
    for (deg, times) in [(p, qq - 1), (qq, p - 1)] {
        let [a, b] = quad_exact(&q(-1), &qi(4 * deg + 1))?;
        repeat(&mut out, a, times);
        repeat(&mut out, b, times);
    }
    let s = q(p as i64 * qq as i64 - 1);
    out.extend(quad_exact(&s, &(&s * &s + qi(4 * (p + qq))))?);
    Ok(out)
}
