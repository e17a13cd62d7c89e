//! Laplacian spectra of `[S(G)]^{H}_{H2}` for commuting regular `G`, `H`,
//! including the `K_{p,p}` family.

use num_rational::BigRational;

use super::{qi, quad, quad_exact, repeat, MergedVariant, ParamTriple, RegularPairContext};
use crate::commuting::{bipartition_sign_vector, common_eigenbasis_anchored};
use crate::error::{Error, Result};
use crate::exact::{q_to_f64, QMatrix};
use crate::graph::{Family, Graph, MatrixKind};
use crate::matrix::IntMatrix;

/// Eigenvalues of `[[L(H) + rI, B], [B^T, t1 I + t2 J + t3 B^T B]]`:
/// `t1` with multiplicity `m - n`, an exact pair from the all-ones vector and
/// one pair per remaining `(mu_i(G), mu_i(H))`.
pub fn block_eigenvalues(ctx: &RegularPairContext, t: &ParamTriple) -> Result<Vec<f64>> {
    let (n, m) = (ctx.n, ctx.m);
    let r = qi(ctx.r);
    let mut out = Vec::with_capacity(n + m);
    repeat(&mut out, q_to_f64(&t.t1), m - n);

    let c: BigRational = &t.t1 + &r * &t.t3 * qi(2) + qi(m) * &t.t2;
    let gap = &r - &c;
    out.extend(quad_exact(&(&r + &c), &(&gap * &gap + &r * qi(8)))?);

    let (rf, t1, t3) = (ctx.r as f64, q_to_f64(&t.t1), q_to_f64(&t.t3));
    for &(mu_g, mu_h) in ctx.tail() {
        let a = t1 + 2.0 * rf * t3 - t3 * mu_g;
        let d = rf + mu_h - a;
        out.extend(quad(rf + mu_h + a, d * d + 4.0 * (2.0 * rf - mu_g))?);
    }
    Ok(out)
}

/// Laplacian spectrum of `[S(G)]^{H}_{H2}` with `H2` chosen by `variant`.
pub fn lspec_merged(ctx: &RegularPairContext, variant: MergedVariant) -> Result<Vec<f64>> {
    block_eigenvalues(ctx, &variant.params(ctx.m, ctx.r))
}

/// Where `K_{p,p}` sits in the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KppRole {
    /// `G = K_{p,p}` and `H1 = H`.
    Base,
    /// `G = H` and `H1 = K_{p,p}`.
    Overlay,
}

impl KppRole {
    pub fn name(self) -> &'static str {
        match self {
            KppRole::Base => "base",
            KppRole::Overlay => "overlay",
        }
    }
}

fn kpp_variant_ok(variant: MergedVariant) -> Result<()> {
    if variant == MergedVariant::Line {
        return Err(Error::ParameterOutOfRange(
            "the K_{p,p} family covers plain, complete-km and line-complement".into(),
        ));
    }
    Ok(())
}

/// The `K_{p,p}` spectra written out in terms of `p`, the degree `r` of `H`
/// and `tail = (mu_3(H), ..., mu_2p(H))`, the Laplacian eigenvalues of `H`
/// left after removing `0` and `2r`.
pub fn kpp_displayed(
    p: usize,
    r: usize,
    tail: &[f64],
    variant: MergedVariant,
    role: KppRole,
) -> Result<Vec<f64>> {
    kpp_variant_ok(variant)?;
    if p < 2 || tail.len() != 2 * p - 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "need p >= 2 and 2p - 2 tail values, got p = {p} and {}",
            tail.len()
        )));
    }
    let (pf, rf) = (p as f64, r as f64);
    // the base graph degree and size
    let (deg, m) = match role {
        KppRole::Base => (p, p * p),
        KppRole::Overlay => {
            if r < 2 {
                return Err(Error::hypothesis(format!("H must have degree >= 2, got {r}")));
            }
            (r, p * r)
        }
    };
    let mf = m as f64;
    let mut out = Vec::new();
    let t1 = match variant {
        MergedVariant::Plain => 2,
        MergedVariant::CompleteKm => m + 2,
        _ => m + 2 - 2 * deg,
    };
    repeat(&mut out, t1 as f64, m - 2 * p);
    out.extend(quad_exact(&qi(deg + 2), &qi((deg + 2) * (deg + 2)))?);
    out.push(t1 as f64);
    out.push(match role {
        KppRole::Base => (p + 2 * r) as f64,
        KppRole::Overlay => (r + 2 * p) as f64,
    });
    for &mu in tail {
        let (s, d) = match (role, variant) {
            (KppRole::Base, MergedVariant::Plain) => (pf + mu + 2.0, (pf + mu - 2.0).powi(2) + 4.0 * pf),
            (KppRole::Base, MergedVariant::CompleteKm) => {
                (pf + mu + mf + 2.0, (pf + mu - mf - 2.0).powi(2) + 4.0 * pf)
            }
            (KppRole::Base, _) => (mu + mf + 2.0, (2.0 * pf + mu - mf - 2.0).powi(2) + 4.0 * pf),
            (KppRole::Overlay, MergedVariant::Plain) => {
                (rf + pf + 2.0, (rf + pf - 2.0).powi(2) + 4.0 * (2.0 * rf - mu))
            }
            (KppRole::Overlay, MergedVariant::CompleteKm) => {
                (rf + pf + mf + 2.0, (rf + pf - mf - 2.0).powi(2) + 4.0 * (2.0 * rf - mu))
            }
            (KppRole::Overlay, _) => (
                rf + pf + mf + 2.0 - mu,
                (rf + pf - mf - 2.0 + mu).powi(2) + 4.0 * (2.0 * rf - mu),
            ),
        };
        out.extend(quad(s, d)?);
    }
    Ok(out)
}

/// Checks that `h` is a spanning regular subgraph of `K_{p,p}` (parts
/// `0..p`, `p..2p`) and returns its degree.
fn kpp_subgraph_degree(p: usize, h: &Graph) -> Result<usize> {
    if h.order() != 2 * p {
        return Err(Error::OrderMismatch {
            what: "H vs vertices of K_{p,p}",
            expected: 2 * p,
            found: h.order(),
        });
    }
    if h.edges().iter().any(|&(u, v)| (u < p) == (v < p)) {
        return Err(Error::hypothesis("H has an edge inside one part of K_{p,p}"));
    }
    h.is_regular()
        .ok_or_else(|| Error::hypothesis("H must be regular"))
}

/// Laplacian spectrum for the `K_{p,p}` family. `Base` uses the displayed
/// formulas directly; `Overlay` goes through [`lspec_merged`] with the
/// pairs anchored on `1` and `[1_p; -1_p]`.
pub fn lspec_kpp_family(
    p: usize,
    h: &Graph,
    variant: MergedVariant,
    role: KppRole,
) -> Result<Vec<f64>> {
    kpp_variant_ok(variant)?;
    if p < 2 {
        return Err(Error::ParameterOutOfRange(format!("need p >= 2, got {p}")));
    }
    let r = kpp_subgraph_degree(p, h)?;
    let kpp = Family::CompleteBipartite(p, p).build()?;
    let anchors = [bipartition_sign_vector(p)];
    match role {
        KppRole::Base => {
            let paired = common_eigenbasis_anchored(&kpp, h, MatrixKind::Laplacian, &anchors)?;
            let tail: Vec<f64> = paired.pairs[2..].iter().map(|pr| pr.1).collect();
            kpp_displayed(p, r, &tail, variant, role)
        }
        KppRole::Overlay => {
            if r < 2 {
                return Err(Error::hypothesis(format!("H must have degree >= 2, got {r}")));
            }
            let ctx = RegularPairContext::with_anchors(h, &kpp, &anchors)?;
            lspec_merged(&ctx, variant)
        }
    }
}

/// `det(xI - M)` for `M = [[A, B], [B^T, t1 I + t2 J + t3 B^T B]]` at a point,
/// through the order-`n` determinant
/// `(x - t1)^{m-n} det(((x - t1)I - t3 BB^T - (t2 r / 2) J)(xI - A) - BB^T)`.
///
/// `B` must have constant row sum `r` and column sums `2`, as an incidence
/// matrix does, and at least as many columns as rows.
pub fn partitioned_char_poly_at(
    a: &IntMatrix,
    b: &IntMatrix,
    t: &ParamTriple,
    x: &BigRational,
) -> Result<BigRational> {
    let n = a.ensure_square()?;
    if b.rows() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: b.rows(),
        });
    }
    let m = b.cols();
    let rows = b.row_sums();
    let r = rows.first().copied().unwrap_or(0);
    if rows.iter().any(|&s| s != r) || b.col_sums().iter().any(|&s| s != 2) || m < n {
        return Err(Error::hypothesis(
            "B needs constant row sums, column sums 2 and at least as many columns as rows",
        ));
    }
    let s = x - &t.t1;
    let bbt = QMatrix::from_int(&b.mul(&b.transpose())?)?;
    let jn = QMatrix::from_int(&IntMatrix::ones(n, n))?;
    let k = QMatrix::identity(n)
        .scale(&s)
        .sub(&bbt.scale(&t.t3))
        .sub(&jn.scale(&(&t.t2 * BigRational::from_integer(r.into()) / qi(2))));
    let xa = QMatrix::identity(n).scale(x).sub(&QMatrix::from_int(a)?);
    let inner = k.mul(&xa).sub(&bbt).det();
    Ok(num_traits::pow(s, m - n) * inner)
}
