//! Named closed forms, their oracles, and batch verification.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_form::{
    complete_subdivision_charpoly, complete_subdivision_kpq, complete_subdivision_line_regular,
    complete_subdivision_tstars, lspec_kpp_family, lspec_merged, path_poly_graph,
    path_polynomial_spectrum, q_complemented_aspec_line_regular, q_complemented_charpoly,
    q_complemented_kpq, star_spectra, block_eigenvalues, KppRole, MergedVariant, ParamTriple,
    RegularPairContext,
};
use crate::constructions::{merged_subdivision, MergedTriple, NamedOp};
use crate::error::{Error, Result};
use crate::exact::{char_poly, q_to_f64, ExactPolynomial};
use crate::graph::{Family, Graph, MatrixKind};
use crate::invariants::{verify_invariants, InvariantForm, InvariantResult, Quantity};
use crate::io::graph_arg;
use crate::numeric::{compare_spectra, eigen_symmetric, eigenvalues_of, SymMatrix};

/// Subject of a spanning-tree or Kirchhoff closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantTarget {
    Merged(MergedVariant),
    Star,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formula {
    /// Eigenvalues of the parametric block matrix (`g`, `h`, `t1..t3`).
    ParamBlock,
    /// Laplacian spectrum of `[S(G)]^H_{H2}` (`g`, `h`).
    MergedL(MergedVariant),
    /// Laplacian spectra of the `K_{p,p}` family (`p`, `h`).
    Kpp(KppRole, MergedVariant),
    /// `[S(K_{1,m})]_H` (`h`).
    StarA,
    StarL,
    /// `[S(P_n)]_H` with `H` a path polynomial (`n`, `i`).
    PathA,
    QComplementedPoly,
    QComplementedLineRegular,
    QComplementedKpq,
    CompleteSubdivisionPoly,
    CompleteSubdivisionStarCopies,
    CompleteSubdivisionLineRegular,
    CompleteSubdivisionKpq,
    Tau(InvariantTarget),
    Kf(InvariantTarget),
}

const KPP_VARIANTS: [MergedVariant; 3] = [
    MergedVariant::Plain,
    MergedVariant::CompleteKm,
    MergedVariant::LineComplement,
];

impl Formula {
    pub fn all() -> Vec<Formula> {
        let mut out = vec![Formula::ParamBlock];
        out.extend(MergedVariant::ALL.iter().map(|&v| Formula::MergedL(v)));
        for role in [KppRole::Base, KppRole::Overlay] {
            out.extend(KPP_VARIANTS.iter().map(|&v| Formula::Kpp(role, v)));
        }
        out.extend([
            Formula::StarA,
            Formula::StarL,
            Formula::PathA,
            Formula::QComplementedPoly,
            Formula::QComplementedLineRegular,
            Formula::QComplementedKpq,
            Formula::CompleteSubdivisionPoly,
            Formula::CompleteSubdivisionStarCopies,
            Formula::CompleteSubdivisionLineRegular,
            Formula::CompleteSubdivisionKpq,
        ]);
        let targets = KPP_VARIANTS
            .iter()
            .map(|&v| InvariantTarget::Merged(v))
            .chain([InvariantTarget::Star]);
        for t in targets {
            out.push(Formula::Tau(t));
            out.push(Formula::Kf(t));
        }
        out
    }

    pub fn id(&self) -> String {
        let target = |t: &InvariantTarget| match t {
            InvariantTarget::Merged(v) => v.name().to_string(),
            InvariantTarget::Star => "star".to_string(),
        };
        match self {
            Formula::ParamBlock => "param-block".into(),
            Formula::MergedL(v) => format!("merged-l:{v}"),
            Formula::Kpp(role, v) => format!("kpp-{}-l:{v}", role.name()),
            Formula::StarA => "star-a".into(),
            Formula::StarL => "star-l".into(),
            Formula::PathA => "path-a".into(),
            Formula::QComplementedPoly => "q-complemented-poly".into(),
            Formula::QComplementedLineRegular => "q-complemented-line-regular".into(),
            Formula::QComplementedKpq => "q-complemented-kpq".into(),
            Formula::CompleteSubdivisionPoly => "complete-subdivision-poly".into(),
            Formula::CompleteSubdivisionStarCopies => "complete-subdivision-star-copies".into(),
            Formula::CompleteSubdivisionLineRegular => "complete-subdivision-line-regular".into(),
            Formula::CompleteSubdivisionKpq => "complete-subdivision-kpq".into(),
            Formula::Tau(t) => format!("tau:{}", target(t)),
            Formula::Kf(t) => format!("kf:{}", target(t)),
        }
    }

    /// Matrix whose spectrum or characteristic polynomial the formula gives.
    pub fn matrix_kind(&self) -> Option<MatrixKind> {
        match self {
            Formula::ParamBlock | Formula::MergedL(_) | Formula::Kpp(..) | Formula::StarL => {
                Some(MatrixKind::Laplacian)
            }
            Formula::Tau(_) | Formula::Kf(_) => None,
            _ => Some(MatrixKind::Adjacency),
        }
    }

    /// The closed-form value.
    pub fn evaluate(&self, p: &CaseParams) -> Result<FormulaValue> {
        use FormulaValue::{Polynomial, Spectrum};
        Ok(match *self {
            Formula::ParamBlock => {
                let ctx = RegularPairContext::new(&p.graph("g")?, &p.graph("h")?)?;
                Spectrum(block_eigenvalues(&ctx, &p.params()?)?)
            }
            Formula::MergedL(v) => {
                let ctx = RegularPairContext::new(&p.graph("g")?, &p.graph("h")?)?;
                Spectrum(lspec_merged(&ctx, v)?)
            }
            Formula::Kpp(role, v) => Spectrum(lspec_kpp_family(p.num("p")?, &p.graph("h")?, v, role)?),
            Formula::StarA | Formula::StarL => {
                let h = p.graph("h")?;
                Spectrum(star_spectra(h.order(), &h, self.matrix_kind().expect("spectral"))?)
            }
            Formula::PathA => Spectrum(path_polynomial_spectrum(p.num("n")?, p.num("i")?)?),
            Formula::QComplementedPoly => Polynomial(q_complemented_charpoly(&p.graph("g")?)?),
            Formula::QComplementedLineRegular => {
                Spectrum(q_complemented_aspec_line_regular(&p.graph("g")?)?)
            }
            Formula::QComplementedKpq => Spectrum(q_complemented_kpq(p.num("p")?, p.num("q")?)?),
            Formula::CompleteSubdivisionPoly => {
                Polynomial(complete_subdivision_charpoly(&p.graph("g")?)?)
            }
            Formula::CompleteSubdivisionStarCopies => {
                Spectrum(complete_subdivision_tstars(p.num("t")?)?)
            }
            Formula::CompleteSubdivisionLineRegular => {
                Spectrum(complete_subdivision_line_regular(&p.graph("g")?)?)
            }
            Formula::CompleteSubdivisionKpq => {
                Spectrum(complete_subdivision_kpq(p.num("p")?, p.num("q")?)?)
            }
            Formula::Tau(t) => FormulaValue::Invariant(verify_invariants(Quantity::Tau, &p.invariant_form(t)?)?),
            Formula::Kf(t) => {
                FormulaValue::Invariant(verify_invariants(Quantity::Kirchhoff, &p.invariant_form(t)?)?)
            }
        })
    }

    /// The graph the formula describes, built explicitly.
    pub fn construction(&self, p: &CaseParams) -> Result<Graph> {
        match *self {
            Formula::ParamBlock => Err(Error::ParameterOutOfRange(
                "the parametric block matrix is not a graph matrix in general".into(),
            )),
            Formula::MergedL(v) => v.construct(&p.graph("g")?, &p.graph("h")?),
            Formula::Kpp(role, v) => {
                let kpp = Family::CompleteBipartite(p.num("p")?, p.num("p")?).build()?;
                let h = p.graph("h")?;
                match role {
                    KppRole::Base => v.construct(&kpp, &h),
                    KppRole::Overlay => v.construct(&h, &kpp),
                }
            }
            Formula::StarA | Formula::StarL => InvariantForm::Star { h: p.graph("h")? }.construct(),
            Formula::PathA => {
                let (n, i) = (p.num("n")?, p.num("i")?);
                let t = MergedTriple::new(Family::Path(n).build()?, Graph::empty(n)?, path_poly_graph(n, i)?)?;
                merged_subdivision(&t)
            }
            Formula::QComplementedPoly | Formula::QComplementedLineRegular => {
                NamedOp::QComplemented.apply(&p.graph("g")?, None)
            }
            Formula::QComplementedKpq => {
                NamedOp::QComplemented.apply(&Family::CompleteBipartite(p.num("p")?, p.num("q")?).build()?, None)
            }
            Formula::CompleteSubdivisionPoly | Formula::CompleteSubdivisionLineRegular => {
                NamedOp::CompleteSubdivision.apply(&p.graph("g")?, None)
            }
            Formula::CompleteSubdivisionStarCopies => {
                let g = Family::StarCopies { copies: p.num("t")?, leaves: 2 }.build()?;
                NamedOp::CompleteSubdivision.apply(&g, None)
            }
            Formula::CompleteSubdivisionKpq => NamedOp::CompleteSubdivision
                .apply(&Family::CompleteBipartite(p.num("p")?, p.num("q")?).build()?, None),
            Formula::Tau(t) | Formula::Kf(t) => p.invariant_form(t)?.construct(),
        }
    }

    /// Independent value: spectrum or characteristic polynomial of the
    /// explicit construction (the block matrix itself for `param-block`).
    pub fn oracle(&self, p: &CaseParams) -> Result<FormulaValue> {
        match self {
            Formula::ParamBlock => {
                let m = param_block_matrix(&p.graph("g")?, &p.graph("h")?, &p.params()?)?;
                Ok(FormulaValue::Spectrum(eigen_symmetric(&m).values))
            }
            Formula::QComplementedPoly | Formula::CompleteSubdivisionPoly => Ok(
                FormulaValue::Polynomial(char_poly(&self.construction(p)?.adjacency())?),
            ),
            Formula::Tau(_) | Formula::Kf(_) => self.evaluate(p),
            _ => {
                let kind = self.matrix_kind().expect("spectral formula");
                Ok(FormulaValue::Spectrum(eigenvalues_of(&self.construction(p)?, kind)))
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for Formula {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let all = Formula::all();
        all.iter().copied().find(|f| f.id() == s).ok_or_else(|| Error::UnknownName {
            kind: "formula",
            name: s.into(),
            valid: all.iter().map(Formula::id).collect(),
        })
    }
}

/// `[[L(H) + rI, B], [B^T, t1 I + t2 J + t3 B^T B]]` in floating point.
pub fn param_block_matrix(g: &Graph, h: &Graph, t: &ParamTriple) -> Result<SymMatrix> {
    let r = g.is_regular().ok_or(Error::NotRegular("G"))? as f64;
    let (n, m) = (g.order(), g.size());
    let lh = h.laplacian();
    let b = g.incidence();
    let btb = b.transpose().mul(&b)?;
    let (t1, t2, t3) = (q_to_f64(&t.t1), q_to_f64(&t.t2), q_to_f64(&t.t3));
    SymMatrix::from_fn(n + m, |i, j| match (i < n, j < n) {
        (true, true) => lh[(i, j)] as f64 + if i == j { r } else { 0.0 },
        (true, false) => b[(i, j - n)] as f64,
        (false, true) => b[(j, i - n)] as f64,
        (false, false) => {
            let (i, j) = (i - n, j - n);
            (if i == j { t1 } else { 0.0 }) + t2 + t3 * btb[(i, j)] as f64
        }
    })
}

#[derive(Clone, Debug)]
pub enum FormulaValue {
    Spectrum(Vec<f64>),
    Polynomial(ExactPolynomial),
    Invariant(InvariantResult),
}

/// Named inputs of a formula. Graphs are family specs or file paths.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    /// Rationals such as `"3/2"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t3: Option<String>,
}

fn missing(name: &str) -> Error {
    Error::ParameterOutOfRange(format!("missing parameter `{name}`"))
}

impl CaseParams {
    pub fn graph(&self, name: &str) -> Result<Graph> {
        let spec = match name {
            "g" => &self.g,
            "h" => &self.h,
            _ => &None,
        };
        graph_arg(spec.as_deref().ok_or_else(|| missing(name))?)
    }

    pub fn num(&self, name: &str) -> Result<usize> {
        match name {
            "p" => self.p,
            "q" => self.q,
            "n" => self.n,
            "i" => self.i,
            "t" => self.t,
            _ => None,
        }
        .ok_or_else(|| missing(name))
    }

    pub fn params(&self) -> Result<ParamTriple> {
        let parse = |name: &str, v: &Option<String>| -> Result<BigRational> {
            let s = v.as_deref().ok_or_else(|| missing(name))?;
            s.trim()
                .parse::<BigRational>()
                .map_err(|_| Error::ParameterOutOfRange(format!("`{name}` is not a rational: {s}")))
        };
        Ok(ParamTriple::new(
            parse("t1", &self.t1)?,
            parse("t2", &self.t2)?,
            parse("t3", &self.t3)?,
        ))
    }

    fn invariant_form(&self, target: InvariantTarget) -> Result<InvariantForm> {
        Ok(match target {
            InvariantTarget::Merged(variant) => InvariantForm::Merged {
                variant,
                g: self.graph("g")?,
                h: self.graph("h")?,
            },
            InvariantTarget::Star => InvariantForm::Star { h: self.graph("h")? },
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    #[default]
    Pass,
    HypothesisError,
}

pub const DEFAULT_TOL: f64 = 1e-8;

fn default_tol() -> f64 {
    DEFAULT_TOL
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteCase {
    pub id: String,
    pub formula: String,
    #[serde(default)]
    pub params: CaseParams,
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[serde(default)]
    pub expect: Expectation,
}

impl SuiteCase {
    pub fn new(id: impl Into<String>, formula: Formula, params: CaseParams) -> Self {
        Self {
            id: id.into(),
            formula: formula.id(),
            params,
            tol: DEFAULT_TOL,
            expect: Expectation::Pass,
        }
    }

    pub fn expecting_error(mut self) -> Self {
        self.expect = Expectation::HypothesisError;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The formula refused the input as outside its hypotheses.
    HypothesisError,
    /// Bad case definition or internal failure.
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseOutcome {
    pub id: String,
    pub formula: String,
    pub status: Status,
    pub expected: Expectation,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

fn is_hypothesis(e: &Error) -> bool {
    matches!(e, Error::Hypothesis(_) | Error::NotRegular(_))
}

fn check(formula: Formula, case: &SuiteCase, tol: f64) -> Result<(bool, Option<f64>, Option<String>)> {
    let closed = formula.evaluate(&case.params)?;
    Ok(match closed {
        FormulaValue::Invariant(res) => {
            let err = (res.closed_form_value - q_to_f64(&res.oracle_value)).abs();
            let msg = (!res.agrees).then(|| {
                format!(
                    "closed form {} vs oracle {}",
                    res.closed_form_exact, res.oracle_value
                )
            });
            (res.agrees, Some(err), msg)
        }
        FormulaValue::Polynomial(p) => {
            let FormulaValue::Polynomial(o) = formula.oracle(&case.params)? else {
                return Err(Error::Internal("oracle kind mismatch".into()));
            };
            let same = p == o;
            (same, None, (!same).then(|| format!("closed form {p} vs oracle {o}")))
        }
        FormulaValue::Spectrum(s) => {
            let FormulaValue::Spectrum(o) = formula.oracle(&case.params)? else {
                return Err(Error::Internal("oracle kind mismatch".into()));
            };
            match compare_spectra(&s, &o, tol) {
                Ok(rep) => (rep.matched, Some(rep.max_abs_residual), None),
                Err(Error::LengthMismatch { left, right }) => (
                    false,
                    None,
                    Some(format!("closed form has {left} eigenvalues, oracle {right}")),
                ),
                Err(e) => return Err(e),
            }
        }
    })
}

pub fn run_case(case: &SuiteCase, tol_override: Option<f64>) -> CaseOutcome {
    let tol = tol_override.unwrap_or(case.tol);
    let outcome = |status, ok, max_residual, message| CaseOutcome {
        id: case.id.clone(),
        formula: case.formula.clone(),
        status,
        expected: case.expect,
        ok,
        max_residual,
        message,
    };
    let formula = match case.formula.parse::<Formula>() {
        Ok(f) => f,
        Err(e) => return outcome(Status::Error, false, None, Some(e.to_string())),
    };
    let want_pass = case.expect == Expectation::Pass;
    match check(formula, case, tol) {
        Ok((matched, res, msg)) => {
            let status = if matched { Status::Pass } else { Status::Fail };
            outcome(status, matched && want_pass, res, msg)
        }
        Err(e) if is_hypothesis(&e) => {
            outcome(Status::HypothesisError, !want_pass, None, Some(e.to_string()))
        }
        Err(e) => outcome(Status::Error, false, None, Some(e.to_string())),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub passed: usize,
    pub failed: usize,
    pub all_passed: bool,
    pub cases: Vec<CaseOutcome>,
}

/// Runs every case in parallel; the report keeps the input order.
pub fn run_suite(cases: &[SuiteCase], tol_override: Option<f64>) -> SuiteReport {
    let outcomes: Vec<CaseOutcome> = cases.par_iter().map(|c| run_case(c, tol_override)).collect();
    let passed = outcomes.iter().filter(|o| o.ok).count();
    SuiteReport {
        passed,
        failed: outcomes.len() - passed,
        all_passed: passed == outcomes.len(),
        cases: outcomes,
    }
}

pub fn parse_suite(text: &str) -> Result<Vec<SuiteCase>> {
    serde_json::from_str(text).map_err(|source| Error::Json {
        context: "suite file".into(),
        source,
    })
}

fn gh(g: &str, h: &str) -> CaseParams {
    CaseParams {
        g: Some(g.into()),
        h: Some(h.into()),
        ..Default::default()
    }
}

fn only_g(g: &str) -> CaseParams {
    CaseParams {
        g: Some(g.into()),
        ..Default::default()
    }
}

fn only_h(h: &str) -> CaseParams {
    CaseParams {
        h: Some(h.into()),
        ..Default::default()
    }
}

fn pq(p: usize, q: usize) -> CaseParams {
    CaseParams {
        p: Some(p),
        q: Some(q),
        ..Default::default()
    }
}

/// `(G, H)` commuting regular pairs used throughout the built-in suite.
pub fn regular_pair_catalog() -> Vec<(String, String)> {
    let mut out = Vec::new();
    let bases = [
        ("cycle:4", 4),
        ("cycle:6", 6),
        ("complete:4", 4),
        ("complete:5", 5),
        ("complete_bipartite:3,3", 6),
        ("petersen", 10),
    ];
    for (g, n) in bases {
        let mut hs = vec![
            format!("empty:{n}"),
            format!("complete:{n}"),
            g.to_string(),
            format!("complement:{g}"),
        ];
        if g.starts_with("cycle") {
            hs.extend((2..n / 2 + usize::from(n % 2 == 1)).map(|k| format!("circulant_power:{n},{k}")));
        }
        if g.starts_with("complete_bipartite") {
            hs.push("matching:3".into());
        }
        out.extend(hs.into_iter().map(|h| (g.to_string(), h)));
    }
    out
}

/// The built-in `paper-core` suite.
pub fn paper_core() -> Vec<SuiteCase> {
    let mut cases = Vec::new();
    for (g, h) in regular_pair_catalog() {
        for v in MergedVariant::ALL {
            let f = Formula::MergedL(v);
            cases.push(SuiteCase::new(format!("{f} {g} / {h}"), f, gh(&g, &h)));
        }
        for v in KPP_VARIANTS {
            for f in [Formula::Tau(InvariantTarget::Merged(v)), Formula::Kf(InvariantTarget::Merged(v))] {
                cases.push(SuiteCase::new(format!("{f} {g} / {h}"), f, gh(&g, &h)));
            }
        }
    }
    let mut block = gh("cycle:6", "circulant_power:6,2");
    block.t1 = Some("3/2".into());
    block.t2 = Some("-1/3".into());
    block.t3 = Some("1/4".into());
    cases.push(SuiteCase::new("param-block cycle:6", Formula::ParamBlock, block));
    for p in [2usize, 3, 4] {
        let hs = [format!("matching:{p}"), format!("crown:{p}"), format!("complete_bipartite:{p},{p}")];
        for h in hs {
            let r = match h.split(':').next() {
                Some("matching") => 1,
                Some("crown") => p - 1,
                _ => p,
            };
            for role in [KppRole::Base, KppRole::Overlay] {
                for v in KPP_VARIANTS {
                    let f = Formula::Kpp(role, v);
                    let params = CaseParams {
                        p: Some(p),
                        h: Some(h.clone()),
                        ..Default::default()
                    };
                    let case = SuiteCase::new(format!("{f} p={p} {h}"), f, params);
                    cases.push(if role == KppRole::Overlay && r < 2 { case.expecting_error() } else { case });
                }
            }
        }
    }
    for m in 2..=8usize {
        let mut hs = vec![format!("empty:{m}"), format!("complete:{m}")];
        if m >= 3 {
            hs.push(format!("cycle:{m}"));
        }
        for h in hs {
            for f in [Formula::StarA, Formula::StarL, Formula::Tau(InvariantTarget::Star), Formula::Kf(InvariantTarget::Star)] {
                cases.push(SuiteCase::new(format!("{f} {h}"), f, only_h(&h)));
            }
        }
    }
    cases.push(SuiteCase::new("star-a path:4", Formula::StarA, only_h("path:4")).expecting_error());
    for n in 3..=10usize {
        for i in 0..(n - 1) / 2 {
            let params = CaseParams {
                n: Some(n),
                i: Some(i),
                ..Default::default()
            };
            cases.push(SuiteCase::new(format!("path-a n={n} i={i}"), Formula::PathA, params));
        }
    }
    for g in ["cycle:4", "cycle:5", "complete:4", "complete_bipartite:2,3"] {
        for f in [
            Formula::QComplementedPoly,
            Formula::QComplementedLineRegular,
            Formula::CompleteSubdivisionPoly,
            Formula::CompleteSubdivisionLineRegular,
        ] {
            cases.push(SuiteCase::new(format!("{f} {g}"), f, only_g(g)));
        }
    }
    for (p, q) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
        let f = Formula::QComplementedKpq;
        cases.push(SuiteCase::new(format!("{f} {p},{q}"), f, pq(p, q)));
    }
    for (p, q) in [(2, 2), (2, 3), (3, 3)] {
        let f = Formula::CompleteSubdivisionKpq;
        cases.push(SuiteCase::new(format!("{f} {p},{q}"), f, pq(p, q)));
    }
    cases.push(
        SuiteCase::new("complete-subdivision-kpq 1,2", Formula::CompleteSubdivisionKpq, pq(1, 2))
            .expecting_error(),
    );
    for t in 1..=4usize {
        let f = Formula::CompleteSubdivisionStarCopies;
        let params = CaseParams {
            t: Some(t),
            ..Default::default()
        };
        cases.push(SuiteCase::new(format!("{f} t={t}"), f, params));
    }
    cases
}

/// Built-in suites by name.
pub fn builtin_suite(name: &str) -> Result<Vec<SuiteCase>> {
    match name {
        "paper-core" => Ok(paper_core()),
        _ => Err(Error::UnknownName {
            kind: "suite",
            name: name.into(),
            valid: vec!["paper-core".into()],
        }),
    }
}
