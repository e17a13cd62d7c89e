//! Spanning-tree counts and Kirchhoff indices of merged subdivision graphs
//! from the eigenvalue pairs of `(G, H)`.
//!
//! Each closed form is a product or sum over `i = 2..n` of a polynomial
//! `f(mu_i(G), mu_i(H))`. Besides the floating evaluation over the paired
//! spectrum, it is evaluated exactly through the matrix `F = f(L(G), L(H))`:
//! `F + J` has eigenvalue `f(0, 0) + n` on the all-ones vector and
//! `f(mu_i(G), mu_i(H))` on the rest of the common eigenbasis.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::closed_form::{MergedVariant, RegularPairContext};
use crate::constructions::{merged_subdivision, MergedTriple};
use crate::error::{Error, Result};
use crate::exact::{bareiss_det, kirchhoff_exact, q, q_to_f64, spanning_tree_count, QMatrix};
use crate::graph::{Family, Graph, MatrixKind};
use crate::matrix::IntMatrix;
use crate::numeric::eigenvalues_of;

/// `c + g mu_G + h mu_H + gh mu_G mu_H`.
#[derive(Clone, Copy, Debug)]
struct Bilinear {
    c: i64,
    g: i64,
    h: i64,
    gh: i64,
}

impl Bilinear {
    fn eval(self, mu_g: f64, mu_h: f64) -> f64 {
        self.c as f64 + self.g as f64 * mu_g + self.h as f64 * mu_h + self.gh as f64 * mu_g * mu_h
    }

    fn matrix(self, lg: &IntMatrix, lh: &IntMatrix) -> Result<IntMatrix> {
        let n = lg.rows();
        IntMatrix::identity(n)
            .scale(self.c)
            .add(&lg.scale(self.g))?
            .add(&lh.scale(self.h))?
            .add(&lg.mul(lh)?.scale(self.gh))
    }
}

fn no_line(variant: MergedVariant) -> Result<()> {
    if variant == MergedVariant::Line {
        return Err(Error::ParameterOutOfRange(
            "closed forms cover plain, complete-km and line-complement".into(),
        ));
    }
    Ok(())
}

/// Per-index factor of the spanning-tree product, which is also the
/// denominator of the Kirchhoff sum.
fn tau_factor(ctx: &RegularPairContext, variant: MergedVariant) -> Bilinear {
    let (m, r) = (ctx.m as i64, ctx.r as i64);
    match variant {
        MergedVariant::Plain => Bilinear { c: 0, g: 1, h: 2, gh: 0 },
        MergedVariant::CompleteKm => Bilinear { c: m * r, g: 1, h: m + 2, gh: 0 },
        _ => Bilinear { c: m * r, g: 1 - r, h: m + 2, gh: -1 },
    }
}

fn kf_numerator(ctx: &RegularPairContext, variant: MergedVariant) -> Bilinear {
    let (m, r) = (ctx.m as i64, ctx.r as i64);
    match variant {
        MergedVariant::Plain => Bilinear { c: r + 2, g: 0, h: 1, gh: 0 },
        MergedVariant::CompleteKm => Bilinear { c: m + r + 2, g: 0, h: 1, gh: 0 },
        _ => Bilinear { c: m + r + 2, g: -1, h: 1, gh: 0 },
    }
}

/// `(base, exponent, numerator)` of the prefactor `base^exponent * numerator / n`.
fn tau_prefactor(ctx: &RegularPairContext, variant: MergedVariant) -> (i64, usize, i64) {
    let (n, m, r) = (ctx.n, ctx.m, ctx.r as i64);
    match variant {
        MergedVariant::Plain => (2, m - n + 1, 1),
        MergedVariant::CompleteKm => (m as i64 + 2, m - n, 2),
        _ => (m as i64 - 2 * r + 2, m - n, 2),
    }
}

/// `n/2 + (m^2 - n^2)/k + (m + n) * sum`.
fn kf_constant(ctx: &RegularPairContext, variant: MergedVariant) -> (BigRational, BigRational) {
    let (n, m, r) = (ctx.n as i64, ctx.m as i64, ctx.r as i64);
    let k = match variant {
        MergedVariant::Plain => 2,
        MergedVariant::CompleteKm => m + 2,
        _ => m - 2 * r + 2,
    };
    (q(n) / q(2) + q(m * m - n * n) / q(k), q(m + n))
}

fn checked_product(values: impl Iterator<Item = f64>) -> Result<f64> {
    let mut prod = 1.0;
    for v in values {
        if v <= 0.0 {
            return Err(Error::hypothesis(format!(
                "nonpositive factor {v}; the construction is not connected"
            )));
        }
        prod *= v;
    }
    Ok(prod)
}

fn tau_from(ctx: &RegularPairContext, variant: MergedVariant, start: usize) -> Result<f64> {
    no_line(variant)?;
    let f = tau_factor(ctx, variant);
    let (base, exp, num) = tau_prefactor(ctx, variant);
    let prod = checked_product(ctx.paired.pairs[start..].iter().map(|&(g, h)| f.eval(g, h)))?;
    Ok((base as f64).powi(exp as i32) * num as f64 / ctx.n as f64 * prod)
}

/// Number of spanning trees of `[S(G)]^{H}_{H2}` from the eigenvalue pairs,
/// with the product over `i = 2..n`.
pub fn tau_closed(ctx: &RegularPairContext, variant: MergedVariant) -> Result<f64> {
    tau_from(ctx, variant, 1)
}

/// The same product taken over `i = 1..n`. The first pair is `(0, 0)`, so
/// this differs from [`tau_closed`] by the factor `f(0, 0)`: zero for the
/// plain variant and `mr` otherwise.
pub fn tau_closed_as_printed(ctx: &RegularPairContext, variant: MergedVariant) -> Result<f64> {
    no_line(variant)?;
    let f = tau_factor(ctx, variant);
    let (base, exp, num) = tau_prefactor(ctx, variant);
    let prod: f64 = ctx.paired.pairs.iter().map(|&(g, h)| f.eval(g, h)).product();
    Ok((base as f64).powi(exp as i32) * num as f64 / ctx.n as f64 * prod)
}

/// `prod_{i>=2} f(mu_i(G), mu_i(H))` exactly, as `det(F + J) / (f(0,0) + n)`.
fn exact_tail_product(ctx: &RegularPairContext, f: Bilinear) -> Result<BigInt> {
    let n = ctx.n;
    let fm = f.matrix(&ctx.g.laplacian(), &ctx.h.laplacian())?;
    let det = bareiss_det(&fm.add(&IntMatrix::ones(n, n))?)?;
    let first = BigInt::from(f.c + n as i64);
    if !(&det % &first).is_zero() {
        return Err(Error::Internal("exact product is not integral".into()));
    }
    Ok(det / first)
}

/// [`tau_closed`] evaluated in exact arithmetic.
pub fn tau_closed_exact(ctx: &RegularPairContext, variant: MergedVariant) -> Result<BigRational> {
    no_line(variant)?;
    let prod = exact_tail_product(ctx, tau_factor(ctx, variant))?;
    if !prod.is_positive() {
        return Err(Error::hypothesis("nonpositive product; the construction is not connected"));
    }
    let (base, exp, num) = tau_prefactor(ctx, variant);
    let pre = BigRational::new(BigInt::from(base).pow(exp as u32) * num, BigInt::from(ctx.n));
    Ok(pre * BigRational::from_integer(prod))
}

/// Kirchhoff index of `[S(G)]^{H}_{H2}` from the eigenvalue pairs.
pub fn kf_closed(ctx: &RegularPairContext, variant: MergedVariant) -> Result<f64> {
    no_line(variant)?;
    let (num, den) = (kf_numerator(ctx, variant), tau_factor(ctx, variant));
    let mut sum = 0.0;
    for &(g, h) in ctx.tail() {
        let d = den.eval(g, h);
        if d <= 0.0 {
            return Err(Error::hypothesis("nonpositive denominator; the construction is not connected"));
        }
        sum += num.eval(g, h) / d;
    }
    let (c, k1) = kf_constant(ctx, variant);
    Ok(q_to_f64(&c) + q_to_f64(&k1) * sum)
}

/// [`kf_closed`] in exact arithmetic: the sum over `i >= 2` of `N_i / D_i`
/// is `tr(N (D + J)^{-1}) - N(0,0) / (D(0,0) + n)`.
pub fn kf_closed_exact(ctx: &RegularPairContext, variant: MergedVariant) -> Result<BigRational> {
    no_line(variant)?;
    let n = ctx.n;
    let (lg, lh) = (ctx.g.laplacian(), ctx.h.laplacian());
    let (num, den) = (kf_numerator(ctx, variant), tau_factor(ctx, variant));
    let nm = QMatrix::from_int(&num.matrix(&lg, &lh)?)?;
    let dm = QMatrix::from_int(&den.matrix(&lg, &lh)?.add(&IntMatrix::ones(n, n))?)?;
    let prod = nm.mul(&dm.inverse().map_err(|_| {
        Error::hypothesis("zero denominator; the construction is not connected")
    })?);
    let trace: BigRational = (0..n).map(|i| prod.get(i, i).clone()).sum();
    let sum = trace - q(num.c) / q(den.c + n as i64);
    let (c, k1) = kf_constant(ctx, variant);
    Ok(c + k1 * sum)
}

fn star_laplacian_tail(h: &Graph) -> Result<Vec<f64>> {
    if h.order() == 0 {
        return Err(Error::ParameterOutOfRange("H must be nonempty".into()));
    }
    let mut mus = eigenvalues_of(h, MatrixKind::Laplacian);
    mus.remove(0);
    Ok(mus)
}

/// Spanning trees of `[S(K_{1,m})]_H`, `m = |H|`: `prod_{i>=2} (mu_i(H) + 1)`
/// computed exactly as `det(L(H) + I)`.
pub fn tau_star(h: &Graph) -> Result<BigInt> {
    let m = h.order();
    bareiss_det(&h.laplacian().add(&IntMatrix::identity(m))?)
}

/// The same product over the floating Laplacian spectrum of `H`.
pub fn tau_star_real(h: &Graph) -> Result<f64> {
    Ok(star_laplacian_tail(h)?.iter().map(|mu| mu + 1.0).product())
}

/// Kirchhoff index of `[S(K_{1,m})]_H`:
/// `m + 3 + (2m + 1) sum_{i>=2} (mu_i + 3) / (mu_i + 1)`.
pub fn kf_star(h: &Graph) -> Result<f64> {
    let m = h.order() as f64;
    let sum: f64 = star_laplacian_tail(h)?.iter().map(|mu| (mu + 3.0) / (mu + 1.0)).sum();
    Ok(m + 3.0 + (2.0 * m + 1.0) * sum)
}

/// [`kf_star`] exactly, with the sum as `tr((L + 3I)(L + I)^{-1}) - 3`.
pub fn kf_star_exact(h: &Graph) -> Result<BigRational> {
    let m = h.order();
    if m == 0 {
        return Err(Error::ParameterOutOfRange("H must be nonempty".into()));
    }
    let l = h.laplacian();
    let num = QMatrix::from_int(&l.add(&IntMatrix::identity(m).scale(3))?)?;
    let den = QMatrix::from_int(&l.add(&IntMatrix::identity(m))?)?;
    let prod = num.mul(&den.inverse()?);
    let trace: BigRational = (0..m).map(|i| prod.get(i, i).clone()).sum();
    let m = m as i64;
    Ok(q(m + 3) + q(2 * m + 1) * (trace - q(3)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    Tau,
    Kirchhoff,
}

/// Which construction an invariant is taken of.
#[derive(Clone, Debug)]
pub enum InvariantForm {
    /// `[S(G)]^{H}_{H2}` with `H2` given by the variant.
    Merged {
        variant: MergedVariant,
        g: Graph,
        h: Graph,
    },
    /// `[S(K_{1,m})]_H`.
    Star { h: Graph },
}

impl InvariantForm {
    pub fn construct(&self) -> Result<Graph> {
        match self {
            InvariantForm::Merged { variant, g, h } => variant.construct(g, h),
            InvariantForm::Star { h } => {
                let m = h.order();
                let t = MergedTriple::new(Family::Star(m).build()?, Graph::empty(m + 1)?, h.clone())?;
                merged_subdivision(&t)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantResult {
    pub quantity: Quantity,
    pub closed_form_value: f64,
    #[serde(serialize_with = "crate::io::ser_rational")]
    pub closed_form_exact: BigRational,
    /// `|x - round(x)| / max(1, |x|)` of the floating spanning-tree count.
    pub rounding_error: Option<f64>,
    #[serde(serialize_with = "crate::io::ser_rational")]
    pub oracle_value: BigRational,
    pub agrees: bool,
}

/// Relative tolerance on the floating closed form.
pub fn tolerance(quantity: Quantity) -> f64 {
    match quantity {
        Quantity::Tau => 1e-6,
        Quantity::Kirchhoff => 1e-9,
    }
}

/// Closed form against the exact oracle on the constructed graph:
/// matrix-tree cofactor for `Tau`, grounded-Laplacian resistances for
/// `Kirchhoff`. Agreement needs the exact closed form to equal the oracle
/// and the floating one to be within [`tolerance`].
pub fn verify_invariants(quantity: Quantity, form: &InvariantForm) -> Result<InvariantResult> {
    let built = form.construct()?;
    let oracle = match quantity {
        Quantity::Tau => BigRational::from_integer(spanning_tree_count(&built)?),
        Quantity::Kirchhoff => kirchhoff_exact(&built)?,
    };
    let (approx, exact) = match (quantity, form) {
        (Quantity::Tau, InvariantForm::Merged { variant, g, h }) => {
            let ctx = RegularPairContext::new(g, h)?;
            (tau_closed(&ctx, *variant)?, tau_closed_exact(&ctx, *variant)?)
        }
        (Quantity::Kirchhoff, InvariantForm::Merged { variant, g, h }) => {
            let ctx = RegularPairContext::new(g, h)?;
            (kf_closed(&ctx, *variant)?, kf_closed_exact(&ctx, *variant)?)
        }
        (Quantity::Tau, InvariantForm::Star { h }) => {
            (tau_star_real(h)?, BigRational::from_integer(tau_star(h)?))
        }
        (Quantity::Kirchhoff, InvariantForm::Star { h }) => (kf_star(h)?, kf_star_exact(h)?),
    };
    let rounding_error =
        (quantity == Quantity::Tau).then(|| (approx - approx.round()).abs() / approx.abs().max(1.0));
    let target = oracle.to_f64().unwrap_or(f64::INFINITY);
    let tol = tolerance(quantity);
    let agrees = exact == oracle
        && (approx - target).abs() <= tol * target.abs().max(1.0)
        && rounding_error.map_or(true, |e| e <= tol);
    Ok(InvariantResult {
        quantity,
        closed_form_value: approx,
        closed_form_exact: exact,
        rounding_error,
        oracle_value: oracle,
        agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_family;

    fn fam(s: &str) -> Graph {
        make_family(s).unwrap()
    }

    #[test]
    fn spot_values() {
        let ctx = RegularPairContext::new(&fam("cycle:4"), &fam("empty:4")).unwrap();
        assert!((tau_closed(&ctx, MergedVariant::Plain).unwrap() - 8.0).abs() < 1e-9);
        assert_eq!(tau_closed_exact(&ctx, MergedVariant::Plain).unwrap(), q(8));
        assert_eq!(tau_closed_as_printed(&ctx, MergedVariant::Plain).unwrap(), 0.0);

        let ctx = RegularPairContext::new(&fam("cycle:3"), &fam("empty:3")).unwrap();
        assert_eq!(tau_closed_exact(&ctx, MergedVariant::CompleteKm).unwrap(), q(54));
        let printed = tau_closed_as_printed(&ctx, MergedVariant::CompleteKm).unwrap();
        assert!((printed - 324.0).abs() < 1e-6);

        assert_eq!(tau_star(&fam("complete:2")).unwrap(), BigInt::from(3));
        assert!((kf_star(&fam("empty:2")).unwrap() - 20.0).abs() < 1e-9);
        assert_eq!(kf_star_exact(&fam("empty:2")).unwrap(), q(20));
    }

    #[test]
    fn line_variant_rejected() {
        let ctx = RegularPairContext::new(&fam("cycle:4"), &fam("empty:4")).unwrap();
        assert!(tau_closed(&ctx, MergedVariant::Line).is_err());
        assert!(kf_closed_exact(&ctx, MergedVariant::Line).is_err());
    }

    #[test]
    fn verify_agrees() {
        let form = InvariantForm::Merged {
            variant: MergedVariant::LineComplement,
            g: fam("petersen"),
            h: fam("petersen").complement(),
        };
        for quantity in [Quantity::Tau, Quantity::Kirchhoff] {
            let res = verify_invariants(quantity, &form).unwrap();
            assert!(res.agrees, "{res:?}");
        }
        let star = InvariantForm::Star { h: fam("path:4") };
        assert!(verify_invariants(Quantity::Kirchhoff, &star).unwrap().agrees);
    }
}
