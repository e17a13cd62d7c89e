//! Closed-form spectra of merged subdivision graphs.
//!
//! Quadratic pairs `(s ± sqrt(d)) / 2` are evaluated exactly when every input
//! is rational and in `f64` when they consume numerically computed
//! eigenvalues.

mod coronal_family;
mod merged;
mod star_path;

pub use coronal_family::{
    complete_subdivision_charpoly, complete_subdivision_kpq, complete_subdivision_line_regular,
    complete_subdivision_tstars, q_complemented_aspec_line_regular, q_complemented_charpoly,
    q_complemented_kpq,
};
pub use merged::{
    kpp_displayed, lspec_kpp_family, lspec_merged, partitioned_char_poly_at, block_eigenvalues,
    KppRole,
};
pub use star_path::{path_poly_adjacency, path_poly_graph, path_polynomial_spectrum, star_spectra};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::commuting::{common_eigenbasis_anchored, PairedSpectrum};
use crate::constructions::{merged_subdivision, MergedTriple, Part};
use crate::error::{Error, Result};
use crate::exact::{q, q_to_f64};
use crate::graph::{Graph, MatrixKind};

/// Parameters of the lower-right block `t1 I + t2 J + t3 B^T B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamTriple {
    pub t1: BigRational,
    pub t2: BigRational,
    pub t3: BigRational,
}

impl ParamTriple {
    pub fn new(t1: BigRational, t2: BigRational, t3: BigRational) -> Self {
        Self { t1, t2, t3 }
    }

    pub fn from_ints(t1: i64, t2: i64, t3: i64) -> Self {
        Self::new(q(t1), q(t2), q(t3))
    }
}

/// The four choices of `H2` that turn the block family into a merged
/// Laplacian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MergedVariant {
    /// `H2` edgeless.
    Plain,
    /// `H2 = K_m`.
    CompleteKm,
    /// `H2` the line graph of `G`.
    Line,
    /// `H2` the complement of the line graph.
    LineComplement,
}

impl MergedVariant {
    pub const ALL: [MergedVariant; 4] = [
        MergedVariant::Plain,
        MergedVariant::CompleteKm,
        MergedVariant::Line,
        MergedVariant::LineComplement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MergedVariant::Plain => "plain",
            MergedVariant::CompleteKm => "complete-km",
            MergedVariant::Line => "line",
            MergedVariant::LineComplement => "line-complement",
        }
    }

    pub fn h2_part(self) -> Part {
        match self {
            MergedVariant::Plain => Part::Empty,
            MergedVariant::CompleteKm => Part::Complete,
            MergedVariant::Line => Part::Line,
            MergedVariant::LineComplement => Part::LineComplement,
        }
    }

    /// Block parameters for an `r`-regular `G` with `m` edges.
    pub fn params(self, m: usize, r: usize) -> ParamTriple {
        let (m, r) = (m as i64, r as i64);
        match self {
            MergedVariant::Plain => ParamTriple::from_ints(2, 0, 0),
            MergedVariant::CompleteKm => ParamTriple::from_ints(m + 2, -1, 0),
            MergedVariant::Line => ParamTriple::from_ints(2 * r + 2, 0, -1),
            MergedVariant::LineComplement => ParamTriple::from_ints(m - 2 * r + 2, -1, 1),
        }
    }

    pub fn triple(self, g: &Graph, h1: &Graph) -> Result<MergedTriple> {
        if g.size() == 0 {
            return Err(Error::EmptyEdgeSet);
        }
        let h2 = self.h2_part().resolve(g, g.size(), None)?;
        MergedTriple::new(g.clone(), h1.clone(), h2)
    }

    /// `[S(G)]^{H1}_{H2}` for this choice of `H2`.
    pub fn construct(self, g: &Graph, h1: &Graph) -> Result<Graph> {
        merged_subdivision(&self.triple(g, h1)?)
    }
}

impl fmt::Display for MergedVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MergedVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MergedVariant::ALL
            .iter()
            .copied()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "variant",
                name: s.into(),
                valid: MergedVariant::ALL.iter().map(|v| v.name().to_string()).collect(),
            })
    }
}

/// `G` `r`-regular with `r >= 2`, `H` regular on the same vertex set and
/// commuting with `G`, plus their Laplacian eigenvalue pairs with the
/// all-ones vector first.
#[derive(Clone, Debug)]
pub struct RegularPairContext {
    pub g: Graph,
    pub h: Graph,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub paired: PairedSpectrum,
}

impl RegularPairContext {
    pub fn new(g: &Graph, h: &Graph) -> Result<Self> {
        Self::with_anchors(g, h, &[])
    }

    /// Extra anchors pin further common eigenvectors right after the
    /// all-ones vector, fixing the order of the leading pairs.
    pub fn with_anchors(g: &Graph, h: &Graph, anchors: &[Vec<f64>]) -> Result<Self> {
        let r = g
            .is_regular()
            .ok_or_else(|| Error::hypothesis("G must be regular"))?;
        if r < 2 {
            return Err(Error::hypothesis(format!("G must be r-regular with r >= 2, got r = {r}")));
        }
        if h.order() != g.order() {
            return Err(Error::OrderMismatch {
                what: "H vs vertices of G",
                expected: g.order(),
                found: h.order(),
            });
        }
        if h.is_regular().is_none() {
            return Err(Error::NotRegular("H"));
        }
        let paired = common_eigenbasis_anchored(g, h, MatrixKind::Laplacian, anchors)?;
        Ok(Self {
            g: g.clone(),
            h: h.clone(),
            n: g.order(),
            m: g.size(),
            r,
            paired,
        })
    }

    /// Degree of `H`.
    pub fn h_degree(&self) -> usize {
        self.h.is_regular().unwrap_or(0)
    }

    /// Pairs `(mu_i(G), mu_i(H))` for `i = 2..n`.
    pub fn tail(&self) -> &[(f64, f64)] {
        &self.paired.pairs[1..]
    }
}

fn exact_sqrt(x: &BigRational) -> Option<BigRational> {
    let (n, d) = (x.numer(), x.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| BigRational::new(sn, sd))
}

/// Roots `(s - sqrt(d)) / 2 <= (s + sqrt(d)) / 2` with exact rational input.
pub(crate) fn quad_exact(sum: &BigRational, disc: &BigRational) -> Result<[f64; 2]> {
    if disc.is_negative() {
        return Err(Error::NegativeDiscriminant(q_to_f64(disc)));
    }
    let two = q(2);
    if let Some(root) = exact_sqrt(disc) {
        return Ok([
            q_to_f64(&((sum - &root) / &two)),
            q_to_f64(&((sum + &root) / &two)),
        ]);
    }
    let s = q_to_f64(sum);
    let root = q_to_f64(disc).sqrt();
    Ok([(s - root) / 2.0, (s + root) / 2.0])
}

/// Same as [`quad_exact`] for floating inputs. Discriminants that are
/// negative only by rounding are clamped to zero.
pub(crate) fn quad(sum: f64, disc: f64) -> Result<[f64; 2]> {
    let disc = if disc < 0.0 {
        if disc < -1e-9 * sum.abs().max(1.0).powi(2) {
            return Err(Error::NegativeDiscriminant(disc));
        }
        0.0
    } else {
        disc
    };
    let root = disc.sqrt();
    Ok([(sum - root) / 2.0, (sum + root) / 2.0])
}

pub(crate) fn qi(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Drop the value closest to `target`, used to remove the eigenvalue that
/// belongs to the all-ones eigenvector.
pub(crate) fn remove_closest(values: &mut Vec<f64>, target: f64) -> Result<()> {
    let idx = values
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - target).abs().total_cmp(&(b.1 - target).abs()))
        .map(|(i, _)| i)
        .ok_or_else(|| Error::Internal("empty spectrum".into()))?;
    if (values[idx] - target).abs() > 1e-6 * target.abs().max(1.0) {
        return Err(Error::Internal(format!("expected eigenvalue {target} not found")));
    }
    values.remove(idx);
    Ok(())
}

pub(crate) fn repeat(out: &mut Vec<f64>, value: f64, times: usize) {
    out.extend(std::iter::repeat(value).take(times));
}
